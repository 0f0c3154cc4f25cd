// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/boundary.hpp"

#include "owlab/errors.hpp"

namespace owlab {

  Rational CountRatio::value() const {
    Rational q(BigInt(static_cast<unsigned long>(numerator)),
               BigInt(static_cast<unsigned long>(denominator)));
    q.canonicalize();
    return q;
  }

  std::string CountRatio::to_string() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator);
  }

  FinSubset interior(Semigroup const& sg, FinSubset const& A, FinSubset const& K) {
    sg.validate(A);
    sg.validate(K);
    std::vector<Element> out;
    for (auto const& s : A) {
      bool inside = true;
      for (auto const& k : K) {
        if (!A.contains(sg.mul(k, s))) {
          inside = false;
          break;
        }
      }
      if (inside) {
        out.push_back(s);
      }
    }
    return FinSubset::from_sorted(std::move(out));
  }

  FinSubset boundary(Semigroup const& sg, FinSubset const& A, FinSubset const& K) {
    return set_difference(A, interior(sg, A, K));
  }

  AmenabilityConstant alpha(Semigroup const& sg, FinSubset const& A, FinSubset const& K) {
    if (A.empty()) {
      throw DomainError("alpha: the set A must be non-empty");
    }
    return {A.size() - interior(sg, A, K).size(), A.size()};
  }

  BigInt translate_sum(Semigroup const& sg, FinSubset const& A, FinSubset const& B) {
    sg.validate(A);
    sg.validate(B);
    FinSubset support;
    if (sg.is_finite()) {
      support = sg.all_elements();
    } else {
      std::vector<Element> candidates;
      for (auto const& a : A) {
        for (auto const& b : B) {
          if (auto s = sg.left_divide(a, b)) {
            candidates.push_back(std::move(*s));
          }
        }
      }
      support = FinSubset(std::move(candidates));
    }
    BigInt total = 0;
    for (auto const& s : support) {
      total += static_cast<unsigned long>(
          set_intersection(right_translate(sg, A, s), B).size());
    }
    return total;
  }

}  // namespace owlab
