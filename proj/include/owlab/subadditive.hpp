// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Subadditive right-subinvariant set functions and their Ornstein-Weiss
// limits along Følner sequences.

#ifndef OWLAB_SUBADDITIVE_HPP_
#define OWLAB_SUBADDITIVE_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "owlab/filling.hpp"
#include "owlab/folner.hpp"
#include "owlab/semigroup.hpp"

namespace owlab {

  //! A real-valued function on finite subsets.
  //!
  //! `evaluate` is never called on the empty set; h(empty) = 0.
  struct SetFunction {
    struct Flags {
      bool subadditive        = false;
      bool right_subinvariant = false;
      bool non_decreasing     = false;
    };

    std::string                             name;
    std::function<double(FinSubset const&)> evaluate;
    //! M with h({s}) <= M for every s, hence h(A) <= M|A|.
    double singleton_bound = 0;
    Flags  declared;
    //! Relative slack allowed when comparing values; 0 for exactly
    //! representable values.
    double tolerance = 1e-12;

    [[nodiscard]] double operator()(FinSubset const& A) const {
      return A.empty() ? 0.0 : evaluate(A);
    }
  };

  //! True iff lhs <= rhs up to the relative \p tolerance.
  bool leq_within(double lhs, double rhs, double tolerance);

  //! h(A) = c|A|.
  SetFunction cardinality_function(double c);
  //! h(A) = |A| / (1 + max A) on subsets of N (or Z^1 with non-negative
  //! entries). Subadditive and right-subinvariant, but not right-invariant.
  SetFunction inverse_max_function();

  //! h(A) = u(|A|) for a non-decreasing subadditive sequence u (u is 1-based).
  //!
  //! Monotonicity and subadditivity are checked for all m, n with
  //! m + n <= \p check_up_to; a failure throws DomainError.
  SetFunction fekete_lift(std::function<double(std::size_t)> u,
                          std::string                        name,
                          std::size_t                        check_up_to = 64);

  //! Thread-safe memo table of h values keyed by canonical set.
  class MemoizedSetFunction {
   public:
    explicit MemoizedSetFunction(SetFunction const& h) : _h(h) {}
    double                          operator()(FinSubset const& A);
    [[nodiscard]] SetFunction const& function() const noexcept {
      return _h;
    }

   private:
    SetFunction const&          _h;
    std::map<FinSubset, double> _cache;
    std::mutex                  _mutex;
  };

  ////////////////////////////////////////////////////////////////////////
  // Sampled property checks
  ////////////////////////////////////////////////////////////////////////

  using PairSampler      = std::function<std::pair<FinSubset, FinSubset>(std::mt19937_64&)>;
  using TranslateSampler = std::function<std::pair<FinSubset, Element>(std::mt19937_64&)>;

  struct PropertyViolation {
    FinSubset   first;
    FinSubset   second;  // B for subadditivity, As for subinvariance
    double      lhs;
    double      rhs;
    std::string detail;
  };

  struct PropertyReport {
    std::size_t                    trials = 0;
    std::vector<PropertyViolation> violations;
    //! Trials where the inequality held strictly (h(As) < h(A) for subinvariance).
    std::size_t strict = 0;

    [[nodiscard]] bool passed() const noexcept {
      return violations.empty();
    }
  };

  //! Samples pairs and reports every violation of h(A ∪ B) <= h(A) + h(B).
  PropertyReport check_subadditive(SetFunction const& h,
                                   PairSampler const& sampler,
                                   std::size_t        trials,
                                   std::uint64_t      seed = 0x5eed);

  //! Samples (A, s) and reports every violation of h(As) <= h(A).
  PropertyReport check_right_subinvariant(SetFunction const&      h,
                                          Semigroup const&        sg,
                                          TranslateSampler const& sampler,
                                          std::size_t             trials,
                                          std::uint64_t           seed = 0x5eed);

  ////////////////////////////////////////////////////////////////////////
  // Ornstein-Weiss estimator
  ////////////////////////////////////////////////////////////////////////

  struct OWRow {
    std::size_t index;
    std::size_t cardinality;
    double      value;
    double      ratio;
  };

  struct OWEstimate {
    std::vector<OWRow> rows;
    //! Mean ratio over the trailing window.
    double lambda_hat = 0;
    //! max - min of the ratios over the trailing window.
    double                   cauchy_gap = 0;
    std::size_t              window     = 0;
    std::vector<std::string> warnings;
  };

  //! Tabulates h(F_n)/|F_n| for n = 1..max_index.
  //!
  //! Declared flags are spot-checked on the first few F_n; failures become
  //! warnings in the estimate rather than errors.
  OWEstimate ow_estimate(SetFunction const&    h,
                         FolnerSequence const& seq,
                         std::size_t           max_index,
                         std::size_t           window,
                         unsigned              jobs = 1);

  ////////////////////////////////////////////////////////////////////////
  // Certificate
  ////////////////////////////////////////////////////////////////////////

  struct CertificateLink {
    std::string name;
    double      lhs;
    double      rhs;
    bool        holds;
  };

  struct Certificate {
    std::vector<CertificateLink> links;
    double                       lambda_hat;
    double                       eps;
    double                       singleton_bound;
    //! (lambda + eps)/(1 - eps) + M eps.
    double final_bound;
    //! h(D)/|D|.
    double observed_ratio;

    [[nodiscard]] bool passed() const noexcept;
  };

  //! Evaluates the chain
  //!   h(D) <= sum_j h(K_j P_j) + h(D'),
  //!   h(K_j P_j) <= sum_{s in P_j} h(K_j s) <= |P_j| h(K_j)
  //!             <= (lambda + eps)/(1 - eps) |K_j P_j|,
  //!   h(D') <= M eps |D|,
  //!   h(D)/|D| <= (lambda + eps)/(1 - eps) + M eps.
  //!
  //! Throws CertificateRefused when the tiling does not satisfy the three
  //! tiling conclusions or some tile has h(K_j)/|K_j| > lambda + eps.
  Certificate ow_certificate(Semigroup const&    sg,
                             SetFunction const&  h,
                             TilingResult const& tiling,
                             double              lambda_hat,
                             Rational const&     eps);

}  // namespace owlab

#endif  // OWLAB_SUBADDITIVE_HPP_
