// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Right K-interiors, right K-boundaries and amenability constants.

#ifndef OWLAB_BOUNDARY_HPP_
#define OWLAB_BOUNDARY_HPP_

#include <cstddef>
#include <string>

#include "owlab/semigroup.hpp"

namespace owlab {

  //! An exact ratio of two cardinalities, kept unreduced.
  //!
  //! The numerator and denominator are the counted set sizes, so 36/100 is
  //! not normalised to 9/25; value() returns the reduced rational.
  struct CountRatio {
    std::size_t numerator   = 0;
    std::size_t denominator = 1;

    [[nodiscard]] Rational value() const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(CountRatio const& x, CountRatio const& y) {
      return x.numerator == y.numerator && x.denominator == y.denominator;
    }
  };

  //! alpha(A, K) = |boundary_K(A)| / |A|.
  using AmenabilityConstant = CountRatio;

  //! int_K(A) = {s in A : Ks is contained in A}. Equal to A when K is empty.
  FinSubset interior(Semigroup const& sg, FinSubset const& A, FinSubset const& K);

  //! boundary_K(A) = A \ int_K(A).
  FinSubset boundary(Semigroup const& sg, FinSubset const& A, FinSubset const& K);

  //! Throws DomainError when A is empty.
  AmenabilityConstant alpha(Semigroup const& sg, FinSubset const& A, FinSubset const& K);

  //! The sum over s in S of |As ∩ B|.
  //!
  //! For infinite semigroups only the s solving a*s = b for some (a, b) in
  //! A x B can contribute, and those are found by left division; for a
  //! finite table every s is visited.
  BigInt translate_sum(Semigroup const& sg, FinSubset const& A, FinSubset const& B);

}  // namespace owlab

#endif  // OWLAB_BOUNDARY_HPP_
