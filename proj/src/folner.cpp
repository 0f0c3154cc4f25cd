// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/folner.hpp"

#include "owlab/errors.hpp"
#include "owlab/parallel.hpp"

namespace owlab {

  FinSubset FolnerSequence::operator()(std::size_t n) const {
    if (n == 0) {
      throw DomainError("Følner sequences are indexed from 1");
    }
    return generator(n);
  }

  FinSubset box(std::vector<BigInt> const& lo, std::vector<BigInt> const& hi) {
    if (lo.size() != hi.size() || lo.empty()) {
      throw DomainError("box: corners must have the same positive dimension");
    }
    std::size_t const d = lo.size();
    for (std::size_t i = 0; i < d; ++i) {
      if (hi[i] <= lo[i]) {
        return {};
      }
    }
    // Odometer over the box in lexicographic order, so the output is sorted.
    std::vector<Element> out;
    std::vector<BigInt>  cur = lo;
    while (true) {
      out.emplace_back(cur);
      std::size_t i = d;
      while (i > 0) {
        --i;
        ++cur[i];
        if (cur[i] < hi[i]) {
          break;
        }
        cur[i] = lo[i];
        if (i == 0) {
          return FinSubset::from_sorted(std::move(out));
        }
      }
    }
  }

  FinSubset box(std::vector<long> const& lo, std::vector<long> const& hi) {
    std::vector<BigInt> l(lo.begin(), lo.end()), h(hi.begin(), hi.end());
    return box(l, h);
  }

  FolnerSequence builtin_folner(Semigroup const& sg, std::string const& kind) {
    bool const lattice = sg.family() == Family::int_lattice || sg.family() == Family::nat_monoid;
    std::size_t const d = sg.dimension();
    if (lattice && kind == "boxes") {
      return {sg, "[0,n)^" + std::to_string(d), [d](std::size_t n) {
                return box(std::vector<BigInt>(d, 0),
                           std::vector<BigInt>(d, static_cast<unsigned long>(n)));
              }};
    }
    if (lattice && kind == "shifted_boxes") {
      return {sg, "[n,3n)^" + std::to_string(d), [d](std::size_t n) {
                return box(std::vector<BigInt>(d, static_cast<unsigned long>(n)),
                           std::vector<BigInt>(d, static_cast<unsigned long>(3 * n)));
              }};
    }
    if (sg.family() == Family::heisenberg && kind == "heis_boxes") {
      return {sg, "{(a,b,c) : 0<=a,b<n, 0<=c<n^2}", [](std::size_t n) {
                BigInt const m = static_cast<unsigned long>(n);
                return box({0, 0, 0}, {m, m, m * m});
              }};
    }
    throw DomainError("builtin_folner: unsupported kind '" + kind + "' for semigroup "
                      + sg.name());
  }

  CountRatio defect(Semigroup const& sg, FinSubset const& F, Element const& s) {
    if (F.empty()) {
      throw DomainError("defect: the set F must be non-empty");
    }
    std::size_t escaped = 0;
    for (auto const& x : left_translate(sg, s, F)) {
      escaped += F.contains(x) ? 0 : 1;
    }
    return {escaped, F.size()};
  }

  std::vector<FolnerRow> folner_report(FolnerSequence const&           seq,
                                       FinSubset const&                K,
                                       std::vector<std::size_t> const& indices,
                                       unsigned                        jobs) {
    if (indices.empty()) {
      throw DomainError("folner_report: at least one index is required");
    }
    std::vector<FolnerRow> rows(indices.size());
    detail::parallel_for(indices.size(), jobs, [&](std::size_t r) {
      FinSubset const F = seq(indices[r]);
      CountRatio      worst{0, F.size()};
      for (auto const& k : K) {
        CountRatio const d = defect(seq.domain, F, k);
        if (d.value() > worst.value()) {
          worst = d;
        }
      }
      rows[r] = {indices[r], F.size(), alpha(seq.domain, F, K), worst};
    });
    return rows;
  }

  bool fc_witness_check(Semigroup const& sg,
                        FinSubset const& F,
                        FinSubset const& K,
                        Rational const&  eps) {
    if (F.empty()) {
      throw DomainError("fc_witness_check: the set F must be non-empty");
    }
    if (sgn(eps) <= 0) {
      throw DomainError("fc_witness_check: eps must be positive");
    }
    for (auto const& k : K) {
      if (defect(sg, F, k).value() > eps) {
        return false;
      }
    }
    return true;
  }

}  // namespace owlab
