// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/filling.hpp"

#include <unordered_set>

#include "owlab/errors.hpp"

namespace owlab {

  namespace {
    Rational as_rational(std::size_t n) {
      return Rational(BigInt(static_cast<unsigned long>(n)));
    }

    Rational power(Rational const& base, std::size_t exp) {
      Rational out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
      }
      return out;
    }
  }  // namespace

  bool eps_disjoint_verify(WitnessedFamily const& family) {
    Rational const keep = 1 - family.eps;
    std::unordered_set<Element, ElementHash> seen;
    std::size_t                              total = 0;
    FinSubset                                all;
    for (auto const& m : family.members) {
      if (!m.witness.is_subset_of(m.set)) {
        return false;
      }
      if (as_rational(m.witness.size()) < keep * as_rational(m.set.size())) {
        return false;
      }
      for (auto const& x : m.witness) {
        if (!seen.insert(x).second) {
          return false;
        }
      }
      total += m.set.size();
      all = set_union(all, m.set);
    }
    return keep * as_rational(total) <= as_rational(all.size());
  }

  FillingPattern greedy_filling(Semigroup const& sg,
                                FinSubset const& omega,
                                FinSubset const& K,
                                Rational const&  eps) {
    if (omega.empty() || K.empty()) {
      throw DomainError("greedy_filling: Omega and K must be non-empty");
    }
    if (sgn(eps) <= 0 || eps > 1) {
      throw DomainError("greedy_filling: eps must lie in (0, 1], got " + eps.get_str());
    }
    if (!sg.is_cancellative()) {
      throw DomainError("greedy_filling: " + sg.name() + " is not cancellative");
    }
    FillingPattern result;
    result.tile          = K;
    result.omega         = omega;
    result.witnesses.eps = eps;

    Rational const                           keep = 1 - eps;
    std::unordered_set<Element, ElementHash> covered;
    std::vector<Element>                     admitted;
    for (auto const& s : interior(sg, omega, K)) {
      FinSubset const      Ks = right_translate(sg, K, s);
      std::vector<Element> fresh;
      for (auto const& x : Ks) {
        if (covered.count(x) == 0) {
          fresh.push_back(x);
        }
      }
      if (as_rational(fresh.size()) >= keep * as_rational(Ks.size())) {
        covered.insert(fresh.begin(), fresh.end());
        admitted.push_back(s);
        result.witnesses.members.push_back({Ks, FinSubset::from_sorted(std::move(fresh))});
      }
    }
    result.pattern  = FinSubset::from_sorted(std::move(admitted));
    result.coverage = FinSubset(std::vector<Element>(covered.begin(), covered.end()));
    return result;
  }

  std::size_t compute_n0(Rational const& eps) {
    if (sgn(eps) <= 0 || eps > Rational(1, 2)) {
      throw DomainError("compute_n0: eps must lie in (0, 1/2], got " + eps.get_str());
    }
    Rational const half(1, 2);
    Rational const shrink = 1 - eps / 2;
    Rational       eps_pow = eps * eps;  // eps^(r+1)
    Rational       shrink_pow = shrink;  // (1 - eps/2)^r
    for (std::size_t r = 1;; ++r) {
      if (as_rational(2 * r + 1) * eps_pow <= half && shrink_pow <= eps) {
        return r;
      }
      eps_pow *= eps;
      shrink_pow *= shrink;
    }
  }

  bool TilingResult::residual_within_eps() const {
    return as_rational(residual.size()) <= eps * as_rational(domain.size());
  }

  std::string to_string(TilingMode mode) {
    return mode == TilingMode::strict ? "strict" : "best-effort";
  }

  TilingMode tiling_mode_from_string(std::string const& text) {
    if (text == "strict") {
      return TilingMode::strict;
    }
    if (text == "best-effort" || text == "best_effort") {
      return TilingMode::best_effort;
    }
    throw ConfigError("unknown tiling mode '" + text + "' (expected strict or best-effort)");
  }

  TilingResult filling_theorem_run(Semigroup const&              sg,
                                   FinSubset const&              D,
                                   std::vector<FinSubset> const& tiles,
                                   Rational const&               eps,
                                   TilingMode                    mode) {
    if (sgn(eps) <= 0 || eps > Rational(1, 2)) {
      throw DomainError("filling_theorem_run: eps must lie in (0, 1/2], got " + eps.get_str());
    }
    if (D.empty()) {
      throw DomainError("filling_theorem_run: D must be non-empty");
    }
    if (tiles.empty()) {
      throw DomainError("filling_theorem_run: at least one tile is required");
    }
    for (std::size_t j = 0; j < tiles.size(); ++j) {
      if (tiles[j].empty()) {
        throw DomainError("filling_theorem_run: tile K_" + std::to_string(j + 1) + " is empty");
      }
    }
    std::size_t const n = tiles.size();

    TilingResult result;
    result.domain        = D;
    result.mode          = mode;
    result.eps           = eps;
    result.n0            = compute_n0(eps);
    result.stopped_early = false;

    Rational const small = power(eps, 2 * n);
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t j = 1; j < k; ++j) {
        auto const     a     = alpha(sg, tiles[k - 1], tiles[j - 1]);
        Rational const bound = small / as_rational(tiles[j - 1].size());
        result.hypothesis_report.push_back({"alpha(K_" + std::to_string(k) + ",K_"
                                                + std::to_string(j) + ")",
                                            k,
                                            j,
                                            a,
                                            bound,
                                            a.value() <= bound});
      }
    }
    for (std::size_t j = 1; j <= n; ++j) {
      auto const a = alpha(sg, D, tiles[j - 1]);
      result.hypothesis_report.push_back(
          {"alpha(D,K_" + std::to_string(j) + ")", 0, j, a, small, a.value() <= small});
    }

    if (mode == TilingMode::strict) {
      if (n < result.n0) {
        throw HypothesisViolation("strict mode needs n >= n0(" + eps.get_str()
                                  + ") = " + std::to_string(result.n0) + ", got n = "
                                  + std::to_string(n));
      }
      for (auto const& h : result.hypothesis_report) {
        if (!h.holds) {
          throw HypothesisViolation("hypothesis " + h.label + " <= bound fails: "
                                    + h.label + " = " + h.value.to_string()
                                    + " exceeds " + h.bound.get_str());
        }
      }
    }

    result.patterns.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      result.patterns[j].tile          = tiles[j];
      result.patterns[j].witnesses.eps = eps;
    }

    FinSubset previous = D;
    for (std::size_t k = 1; k <= n; ++k) {
      std::size_t const j       = n - k + 1;
      FillingPattern    filling = greedy_filling(sg, previous, tiles[j - 1], eps);
      FinSubset         current = set_difference(previous, filling.coverage);
      result.patterns[j - 1]    = std::move(filling);
      result.transcript.push_back({j, current});
      bool const stop = as_rational(current.size()) <= eps * as_rational(previous.size());
      previous        = std::move(current);
      if (stop) {
        result.stopped_early = k < n;
        break;
      }
    }
    result.residual = previous;
    result.achieved = {result.residual.size(), D.size()};

    if (mode == TilingMode::strict && !result.residual_within_eps()) {
      throw std::logic_error("filling_theorem_run: strict hypotheses held but |D'| > eps|D|");
    }
    return result;
  }

}  // namespace owlab
