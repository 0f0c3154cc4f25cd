// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Builtin Følner sequences and quantitative Følner diagnostics.

#ifndef OWLAB_FOLNER_HPP_
#define OWLAB_FOLNER_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "owlab/boundary.hpp"
#include "owlab/semigroup.hpp"

namespace owlab {

  //! An index n >= 1 mapped to a non-empty finite set F_n.
  struct FolnerSequence {
    Semigroup                               domain;
    std::string                             description;
    std::function<FinSubset(std::size_t n)> generator;

    [[nodiscard]] FinSubset operator()(std::size_t n) const;
  };

  //! The half-open box [lo, hi) in Z^d (or N^d), lo and hi given coordinatewise.
  FinSubset box(std::vector<long> const& lo, std::vector<long> const& hi);
  FinSubset box(std::vector<BigInt> const& lo, std::vector<BigInt> const& hi);

  //! Standard sequences:
  //!   "boxes"         F_n = [0,n)^d        on zd:d and nat:d,
  //!   "shifted_boxes" F_n = [n,3n)^d       on zd:d and nat:d,
  //!   "heis_boxes"    F_n = {(a,b,c) : 0 <= a,b < n, 0 <= c < n^2} on heis.
  //! Throws DomainError for any other (semigroup, kind) pair.
  FolnerSequence builtin_folner(Semigroup const& sg, std::string const& kind);

  //! |sF \ F| / |F|.
  CountRatio defect(Semigroup const& sg, FinSubset const& F, Element const& s);

  struct FolnerRow {
    std::size_t         index;
    std::size_t         cardinality;
    AmenabilityConstant alpha;
    //! Largest defect over K; 0/|F| when K is empty.
    CountRatio max_defect;
  };

  std::vector<FolnerRow> folner_report(FolnerSequence const&          seq,
                                       FinSubset const&               K,
                                       std::vector<std::size_t> const& indices,
                                       unsigned                       jobs = 1);

  //! True iff |kF \ F| <= eps |F| for every k in K.
  bool fc_witness_check(Semigroup const& sg,
                        FinSubset const& F,
                        FinSubset const& K,
                        Rational const&  eps);

}  // namespace owlab

#endif  // OWLAB_FOLNER_HPP_
