// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Epsilon-disjoint families, greedy filling patterns and the iterative
// filling process that quasi-tiles a finite set by translates of tiles.

#ifndef OWLAB_FILLING_HPP_
#define OWLAB_FILLING_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "owlab/boundary.hpp"
#include "owlab/semigroup.hpp"

namespace owlab {

  //! A family (A_j) together with candidate disjoint witnesses B_j.
  struct WitnessedFamily {
    struct Member {
      FinSubset set;      // A_j
      FinSubset witness;  // B_j
    };
    std::vector<Member> members;
    Rational            eps;
  };

  //! True iff every B_j is inside A_j, the B_j are pairwise disjoint and
  //! |B_j| >= (1 - eps)|A_j|; additionally confirms the union bound
  //! (1 - eps) sum |A_j| <= |union A_j|.
  bool eps_disjoint_verify(WitnessedFamily const& family);

  //! An (eps, K)-filling pattern P for Omega with its witnesses.
  struct FillingPattern {
    FinSubset       pattern;  // P
    FinSubset       tile;     // K
    FinSubset       omega;
    WitnessedFamily witnesses;  // members are (Ks, Ks minus earlier coverage), s in P
    FinSubset       coverage;   // KP
  };

  //! One ascending pass over int_K(Omega) admitting s whenever
  //! |Ks \ KP| >= (1 - eps)|Ks|. The result is maximal and satisfies
  //! |KP| >= eps (1 - alpha(Omega, K)) |Omega|.
  //!
  //! Requires Omega and K non-empty, 0 < eps <= 1 and a cancellative
  //! semigroup; throws DomainError otherwise.
  FillingPattern greedy_filling(Semigroup const& sg,
                                FinSubset const& omega,
                                FinSubset const& K,
                                Rational const&  eps);

  //! The least r >= 1 with (2r+1) eps^(r+1) <= 1/2 and (1 - eps/2)^r <= eps.
  //! Both sides decrease in r for eps in (0, 1/2], so every larger r works too.
  std::size_t compute_n0(Rational const& eps);

  enum class TilingMode { strict, best_effort };

  //! One hypothesis of the filling process: alpha(lhs, rhs) <= bound.
  struct HypothesisCheck {
    std::string         label;  // "alpha(K_k,K_j)" style, 1-based indices
    std::size_t         row;    // k (or 0 for D)
    std::size_t         column; // j
    AmenabilityConstant value;
    Rational            bound;
    bool                holds;
  };

  struct TilingStep {
    std::size_t tile_index;  // j = n - k + 1 (1-based)
    FinSubset   remaining;   // D_k
  };

  struct TilingResult {
    //! patterns[j-1] holds the filling of tile K_j; empty if never reached.
    std::vector<FillingPattern>  patterns;
    FinSubset                    domain;    // D
    FinSubset                    residual;  // D' = D \ union K_j P_j
    std::vector<TilingStep>      transcript;
    std::vector<HypothesisCheck> hypothesis_report;
    TilingMode                   mode;
    Rational                     eps;
    std::size_t                  n0;
    //! |D'| / |D|.
    CountRatio achieved;
    bool       stopped_early;

    [[nodiscard]] bool residual_within_eps() const;
  };

  //! Runs the filling process D_0 = D, P_{n-k+1} = greedy_filling(D_{k-1},
  //! K_{n-k+1}), D_k = D_{k-1} \ K_{n-k+1}P_{n-k+1}, stopping once
  //! |D_k| <= eps |D_{k-1}|.
  //!
  //! In strict mode the run is refused (HypothesisViolation) unless
  //! n >= n0(eps), alpha(K_k, K_j) <= eps^(2n)/|K_j| for j < k and
  //! alpha(D, K_j) <= eps^(2n) for all j. best_effort records the same
  //! report but runs regardless.
  TilingResult filling_theorem_run(Semigroup const&              sg,
                                   FinSubset const&              D,
                                   std::vector<FinSubset> const& tiles,
                                   Rational const&               eps,
                                   TilingMode                    mode);

  std::string to_string(TilingMode mode);
  TilingMode  tiling_mode_from_string(std::string const& text);

}  // namespace owlab

#endif  // OWLAB_FILLING_HPP_
