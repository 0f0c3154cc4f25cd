// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/subadditive.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "owlab/errors.hpp"
#include "owlab/parallel.hpp"

namespace owlab {

  bool leq_within(double lhs, double rhs, double tolerance) {
    return lhs <= rhs + tolerance * std::max(1.0, std::fabs(rhs));
  }

  SetFunction cardinality_function(double c) {
    if (!(c >= 0)) {
      throw DomainError("cardinality_function: the constant must be non-negative");
    }
    SetFunction h;
    std::ostringstream os;
    os << "card:" << c;
    h.name            = os.str();
    h.evaluate        = [c](FinSubset const& A) { return c * static_cast<double>(A.size()); };
    h.singleton_bound = c;
    h.declared        = {true, true, true};
    h.tolerance       = c == std::floor(c) ? 0.0 : 1e-12;
    return h;
  }

  SetFunction inverse_max_function() {
    SetFunction h;
    h.name     = "invmax";
    h.evaluate = [](FinSubset const& A) {
      Element const& top = A.back();
      if (top.size() != 1 || sgn(A.front()[0]) < 0) {
        throw DomainError("invmax: defined on finite subsets of N only");
      }
      Rational q(BigInt(static_cast<unsigned long>(A.size())), top[0] + 1);
      q.canonicalize();
      return q.get_d();
    };
    h.singleton_bound = 1.0;
    h.declared        = {true, true, false};
    return h;
  }

  SetFunction fekete_lift(std::function<double(std::size_t)> u,
                          std::string                        name,
                          std::size_t                        check_up_to) {
    double const u1 = u(1);
    if (!(u1 >= 0)) {
      throw DomainError("fekete_lift: u_1 must be non-negative");
    }
    double const tol = 1e-12;
    for (std::size_t n = 1; n < check_up_to; ++n) {
      if (!leq_within(u(n), u(n + 1), tol)) {
        throw DomainError("fekete_lift: u is not non-decreasing at n = " + std::to_string(n));
      }
    }
    for (std::size_t m = 1; m < check_up_to; ++m) {
      for (std::size_t n = 1; m + n <= check_up_to; ++n) {
        if (!leq_within(u(m + n), u(m) + u(n), tol)) {
          throw DomainError("fekete_lift: u_{m+n} > u_m + u_n at (m,n) = (" + std::to_string(m)
                            + "," + std::to_string(n) + ")");
        }
      }
    }
    SetFunction h;
    h.name            = std::move(name);
    h.evaluate        = [u = std::move(u)](FinSubset const& A) { return u(A.size()); };
    h.singleton_bound = u1;
    h.declared        = {true, true, true};
    return h;
  }

  double MemoizedSetFunction::operator()(FinSubset const& A) {
    {
      std::lock_guard<std::mutex> lock(_mutex);
      auto                        it = _cache.find(A);
      if (it != _cache.end()) {
        return it->second;
      }
    }
    double const value = _h(A);
    std::lock_guard<std::mutex> lock(_mutex);
    _cache.emplace(A, value);
    return value;
  }

  ////////////////////////////////////////////////////////////////////////
  // Property checks
  ////////////////////////////////////////////////////////////////////////

  PropertyReport check_subadditive(SetFunction const& h,
                                   PairSampler const& sampler,
                                   std::size_t        trials,
                                   std::uint64_t      seed) {
    std::mt19937_64 rng(seed);
    PropertyReport  report;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
      auto [A, B]      = sampler(rng);
      double const lhs = h(set_union(A, B));
      double const rhs = h(A) + h(B);
      if (!leq_within(lhs, rhs, h.tolerance)) {
        report.violations.push_back({A, B, lhs, rhs, "h(A u B) > h(A) + h(B)"});
      } else if (lhs < rhs) {
        ++report.strict;
      }
    }
    return report;
  }

  PropertyReport check_right_subinvariant(SetFunction const&      h,
                                          Semigroup const&        sg,
                                          TranslateSampler const& sampler,
                                          std::size_t             trials,
                                          std::uint64_t           seed) {
    std::mt19937_64 rng(seed);
    PropertyReport  report;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
      auto [A, s]      = sampler(rng);
      FinSubset const As = right_translate(sg, A, s);
      double const lhs = h(As);
      double const rhs = h(A);
      if (!leq_within(lhs, rhs, h.tolerance)) {
        report.violations.push_back({A, As, lhs, rhs, "h(As) > h(A) for s = " + s.to_string()});
      } else if (lhs < rhs) {
        ++report.strict;
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Estimator
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void spot_check(SetFunction const&    h,
                    MemoizedSetFunction&  memo,
                    FolnerSequence const& seq,
                    std::size_t           max_index,
                    std::vector<std::string>& warnings) {
      std::size_t const      upto = std::min<std::size_t>(3, max_index);
      std::vector<FinSubset> sets;
      for (std::size_t n = 1; n <= upto; ++n) {
        sets.push_back(seq(n));
      }
      Element const shift = sets.back().back();
      for (std::size_t i = 0; i < sets.size(); ++i) {
        FinSubset const moved = right_translate(seq.domain, sets[i], shift);
        if (h.declared.subadditive) {
          for (std::size_t j = 0; j < sets.size(); ++j) {
            for (FinSubset const* other : std::array<FinSubset const*, 2>{&sets[j], &moved}) {
              double const lhs = memo(set_union(sets[i], *other));
              double const rhs = memo(sets[i]) + memo(*other);
              if (!leq_within(lhs, rhs, h.tolerance)) {
                warnings.push_back("subadditivity fails on F_" + std::to_string(i + 1)
                                   + " and a sequence set");
              }
            }
          }
        }
        if (h.declared.right_subinvariant && !leq_within(memo(moved), memo(sets[i]), h.tolerance)) {
          warnings.push_back("right-subinvariance fails on F_" + std::to_string(i + 1)
                             + " translated by " + shift.to_string());
        }
      }
      if (!h.declared.subadditive || !h.declared.right_subinvariant) {
        warnings.push_back("h is not declared subadditive and right-subinvariant; "
                           "convergence is not guaranteed");
      }
    }
  }  // namespace

  OWEstimate ow_estimate(SetFunction const&    h,
                         FolnerSequence const& seq,
                         std::size_t           max_index,
                         std::size_t           window,
                         unsigned              jobs) {
    if (window < 2 || max_index < window) {
      throw DomainError("ow_estimate: need max_index >= window >= 2, got max_index = "
                        + std::to_string(max_index) + ", window = " + std::to_string(window));
    }
    OWEstimate est;
    est.window = window;
    MemoizedSetFunction memo(h);
    spot_check(h, memo, seq, max_index, est.warnings);

    est.rows.resize(max_index);
    detail::parallel_for(max_index, jobs, [&](std::size_t r) {
      FinSubset const F     = seq(r + 1);
      double const    value = memo(F);
      est.rows[r] = {r + 1, F.size(), value, value / static_cast<double>(F.size())};
    });

    double lo = est.rows[max_index - window].ratio, hi = lo, sum = 0;
    for (std::size_t r = max_index - window; r < max_index; ++r) {
      double const q = est.rows[r].ratio;
      lo             = std::min(lo, q);
      hi             = std::max(hi, q);
      sum += q;
    }
    est.lambda_hat = sum / static_cast<double>(window);
    est.cauchy_gap = hi - lo;
    return est;
  }

  ////////////////////////////////////////////////////////////////////////
  // Certificate
  ////////////////////////////////////////////////////////////////////////

  bool Certificate::passed() const noexcept {
    return std::all_of(links.begin(), links.end(), [](auto const& l) { return l.holds; });
  }

  Certificate ow_certificate(Semigroup const&    sg,
                             SetFunction const&  h,
                             TilingResult const& tiling,
                             double              lambda_hat,
                             Rational const&     eps) {
    FinSubset const& D = tiling.domain;
    if (D.empty()) {
      throw CertificateRefused("certificate refused: the tiled set D is empty");
    }
    if (sgn(eps) <= 0 || eps >= 1) {
      throw CertificateRefused("certificate refused: eps must lie in (0, 1)");
    }
    // (T1): each P_j is an (eps, K_j)-filling pattern of D.
    for (std::size_t j = 0; j < tiling.patterns.size(); ++j) {
      auto const& p = tiling.patterns[j];
      if (p.pattern.empty()) {
        continue;
      }
      bool const inside = p.pattern.is_subset_of(interior(sg, D, p.tile));
      WitnessedFamily fam = p.witnesses;
      fam.eps             = eps;
      if (!inside || !eps_disjoint_verify(fam)) {
        throw CertificateRefused("certificate refused: (T1) fails for P_" + std::to_string(j + 1));
      }
    }
    // (T2): the K_j P_j are pairwise disjoint subsets of D.
    std::size_t covered = 0;
    FinSubset   all;
    for (auto const& p : tiling.patterns) {
      covered += p.coverage.size();
      all = set_union(all, p.coverage);
    }
    if (all.size() != covered || !all.is_subset_of(D)) {
      throw CertificateRefused("certificate refused: (T2) the sets K_j P_j are not disjoint in D");
    }
    if (set_difference(D, all) != tiling.residual) {
      throw CertificateRefused("certificate refused: residual is not D minus the tiles");
    }
    // (T3)
    Rational const residual_ratio(BigInt(static_cast<unsigned long>(tiling.residual.size())),
                                  BigInt(static_cast<unsigned long>(D.size())));
    if (Rational(residual_ratio) > eps) {
      throw CertificateRefused("certificate refused: (T3) |D'|/|D| = "
                               + std::to_string(tiling.residual.size()) + "/"
                               + std::to_string(D.size()) + " exceeds eps = " + eps.get_str());
    }

    MemoizedSetFunction memo(h);
    double const        e   = eps.get_d();
    double const        tol = std::max(h.tolerance, 1e-9);
    for (std::size_t j = 0; j < tiling.patterns.size(); ++j) {
      FinSubset const& K     = tiling.patterns[j].tile;
      double const     ratio = memo(K) / static_cast<double>(K.size());
      if (!leq_within(ratio, lambda_hat + e, tol)) {
        std::ostringstream os;
        os.precision(12);
        os << "certificate refused: h(K_" << j + 1 << ")/|K_" << j + 1 << "| = " << ratio
           << " exceeds lambda + eps = " << lambda_hat + e;
        throw CertificateRefused(os.str());
      }
    }

    Certificate cert;
    cert.lambda_hat      = lambda_hat;
    cert.eps             = e;
    cert.singleton_bound = h.singleton_bound;
    double const slope   = (lambda_hat + e) / (1 - e);
    cert.final_bound     = slope + h.singleton_bound * e;
    double const size_D  = static_cast<double>(D.size());
    double const hD      = memo(D);
    cert.observed_ratio  = hD / size_D;

    auto link = [&](std::string name, double lhs, double rhs) {
      cert.links.push_back({std::move(name), lhs, rhs, leq_within(lhs, rhs, tol)});
    };

    double tiles_total = 0;
    for (std::size_t j = 0; j < tiling.patterns.size(); ++j) {
      auto const&       p     = tiling.patterns[j];
      std::string const tag   = std::to_string(j + 1);
      double const      hKP   = memo(p.coverage);
      double            split = 0;
      for (auto const& s : p.pattern) {
        split += memo(right_translate(sg, p.tile, s));
      }
      double const stacked = static_cast<double>(p.pattern.size()) * memo(p.tile);
      link("h(K_" + tag + "P_" + tag + ") <= sum_s h(K_" + tag + "s)", hKP, split);
      link("sum_s h(K_" + tag + "s) <= |P_" + tag + "| h(K_" + tag + ")", split, stacked);
      link("h(K_" + tag + "P_" + tag + ") <= (lambda+eps)/(1-eps) |K_" + tag + "P_" + tag + "|",
           hKP,
           slope * static_cast<double>(p.coverage.size()));
      tiles_total += hKP;
    }
    double const hR = memo(tiling.residual);
    link("h(D) <= sum_j h(K_jP_j) + h(D')", hD, tiles_total + hR);
    link("h(D') <= M eps |D|", hR, h.singleton_bound * e * size_D);
    link("sum_j h(K_jP_j) <= (lambda+eps)/(1-eps) |D|", tiles_total, slope * size_D);
    link("h(D)/|D| <= (lambda+eps)/(1-eps) + M eps", cert.observed_ratio, cert.final_bound);
    return cert;
  }

}  // namespace owlab
