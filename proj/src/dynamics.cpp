// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "owlab/errors.hpp"

namespace owlab {

  ////////////////////////////////////////////////////////////////////////
  // SftSpec
  ////////////////////////////////////////////////////////////////////////

  SftSpec::SftSpec(unsigned                      alphabet,
                   std::size_t                   dim,
                   std::vector<ForbiddenPattern> forbidden,
                   std::string                   name)
      : _alphabet(alphabet), _dim(dim), _forbidden(std::move(forbidden)), _name(std::move(name)) {
    if (_alphabet == 0 || _alphabet > 256) {
      throw DomainError("sft: alphabet size must lie in [1, 256]");
    }
    if (_dim == 0) {
      throw DomainError("sft: dimension must be positive");
    }
    for (auto& f : _forbidden) {
      if (f.shape.empty() || f.shape.size() != f.symbols.size()) {
        throw DomainError("sft: a forbidden pattern needs one symbol per shape cell");
      }
      std::vector<std::size_t> order(f.shape.size());
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](auto i, auto j) { return f.shape[i] < f.shape[j]; });
      ForbiddenPattern sorted;
      for (auto i : order) {
        if (f.shape[i].size() != _dim) {
          throw DomainError("sft: shape cell of wrong dimension");
        }
        if (f.symbols[i] >= _alphabet) {
          throw DomainError("sft: symbol " + std::to_string(f.symbols[i]) + " out of range");
        }
        if (!sorted.shape.empty() && sorted.shape.back() == f.shape[i]) {
          throw DomainError("sft: repeated cell in a forbidden shape");
        }
        sorted.shape.push_back(f.shape[i]);
        sorted.symbols.push_back(f.symbols[i]);
      }
      f = std::move(sorted);
    }
  }

  SftSpec builtin_sft(std::string const& name, std::size_t dim) {
    if (name == "full2") {
      return SftSpec(2, dim == 0 ? 1 : dim, {}, "full2");
    }
    if (name == "golden") {
      if (dim > 1) {
        throw DomainError("sft:golden is defined on Z only");
      }
      return SftSpec(2, 1, {{{{0}, {1}}, {1, 1}}}, "golden");
    }
    if (name == "hardsq") {
      if (dim != 0 && dim != 2) {
        throw DomainError("sft:hardsq is defined on Z^2 only");
      }
      return SftSpec(2,
                     2,
                     {{{{0, 0}, {1, 0}}, {1, 1}}, {{{0, 0}, {0, 1}}, {1, 1}}},
                     "hardsq");
    }
    throw DomainError("unknown builtin subshift '" + name + "' (expected full2, golden, hardsq)");
  }

  std::uint64_t default_budget() {
    if (char const* env = std::getenv("OWLAB_BUDGET")) {
      char*                    end   = nullptr;
      unsigned long long const value = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && value > 0) {
        return value;
      }
      throw ConfigError("OWLAB_BUDGET must be a positive integer, got '" + std::string(env) + "'");
    }
    return 50'000'000;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pattern counting
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Placement {
      std::vector<std::size_t> cells;
      std::vector<unsigned>    symbols;
      std::size_t              last;
    };

    // Cells of F in canonical order together with every forbidden placement
    // lying entirely inside F, grouped by the index of its last cell.
    struct Layout {
      std::size_t                         size = 0;
      std::vector<std::vector<Placement>> closing;   // closing[i]: placements with last == i
      std::vector<std::size_t>            last_use;  // last step at which cell i is read
    };

    Coord to_coord(Element const& x, std::size_t dim) {
      if (x.size() != dim) {
        throw DomainError("pattern_count: element " + x.to_string() + " is not a point of Z^"
                          + std::to_string(dim));
      }
      Coord c(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!x[i].fits_slong_p()) {
          throw DomainError("pattern_count: coordinate out of machine range");
        }
        c[i] = x[i].get_si();
      }
      return c;
    }

    Layout make_layout(SftSpec const& sft, FinSubset const& F) {
      Layout                       L;
      L.size = F.size();
      std::map<Coord, std::size_t> index;
      std::vector<Coord>           cells;
      cells.reserve(F.size());
      for (auto const& x : F) {
        index.emplace(to_coord(x, sft.dim()), cells.size());
        cells.push_back(to_coord(x, sft.dim()));
      }
      L.closing.resize(L.size);
      L.last_use.resize(L.size);
      std::iota(L.last_use.begin(), L.last_use.end(), 0);
      for (auto const& f : sft.forbidden()) {
        for (auto const& anchor : cells) {
          Placement p;
          bool      inside = true;
          for (auto const& offset : f.shape) {
            Coord c(sft.dim());
            for (std::size_t d = 0; d < sft.dim(); ++d) {
              c[d] = anchor[d] + offset[d] - f.shape.front()[d];
            }
            auto it = index.find(c);
            if (it == index.end()) {
              inside = false;
              break;
            }
            p.cells.push_back(it->second);
          }
          if (!inside) {
            continue;
          }
          p.symbols = f.symbols;
          p.last    = *std::max_element(p.cells.begin(), p.cells.end());
          for (auto c : p.cells) {
            L.last_use[c] = std::max(L.last_use[c], p.last);
          }
          L.closing[p.last].push_back(std::move(p));
        }
      }
      return L;
    }

    [[noreturn]] void over_budget(std::uint64_t budget) {
      throw ResourceError("pattern_count: work budget of " + std::to_string(budget)
                          + " steps exceeded (raise OWLAB_BUDGET)");
    }

    BigInt count_transfer(SftSpec const& sft, Layout const& L, std::uint64_t budget) {
      // A state assigns symbols to the live cells, listed in `live` order.
      std::vector<std::size_t>                 live;
      std::vector<std::size_t>                 slot(L.size, 0);
      std::map<std::vector<std::uint8_t>, BigInt> states{{{}, 1}};
      std::uint64_t                            work = 0;
      unsigned const                           q    = sft.alphabet();

      for (std::size_t i = 0; i < L.size; ++i) {
        work += static_cast<std::uint64_t>(states.size()) * q;
        if (work > budget) {
          over_budget(budget);
        }
        live.push_back(i);
        for (std::size_t k = 0; k < live.size(); ++k) {
          slot[live[k]] = k;
        }
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < live.size(); ++k) {
          if (L.last_use[live[k]] > i) {
            keep.push_back(k);
          }
        }
        std::map<std::vector<std::uint8_t>, BigInt> next;
        std::vector<std::uint8_t>                   row;
        for (auto const& [state, count] : states) {
          row = state;
          row.push_back(0);
          for (unsigned a = 0; a < q; ++a) {
            row.back()   = static_cast<std::uint8_t>(a);
            bool allowed = true;
            for (auto const& p : L.closing[i]) {
              bool hit = true;
              for (std::size_t c = 0; c < p.cells.size() && hit; ++c) {
                hit = row[slot[p.cells[c]]] == p.symbols[c];
              }
              if (hit) {
                allowed = false;
                break;
              }
            }
            if (!allowed) {
              continue;
            }
            std::vector<std::uint8_t> projected;
            projected.reserve(keep.size());
            for (auto k : keep) {
              projected.push_back(row[k]);
            }
            next[std::move(projected)] += count;
          }
        }
        std::vector<std::size_t> kept;
        for (auto k : keep) {
          kept.push_back(live[k]);
        }
        live   = std::move(kept);
        states = std::move(next);
      }
      BigInt total = 0;
      for (auto const& [state, count] : states) {
        total += count;
      }
      return total;
    }

    struct Backtracker {
      Layout const&             L;
      unsigned                  q;
      std::uint64_t             budget;
      std::uint64_t             nodes = 0;
      std::vector<unsigned>     assignment;

      BigInt run(std::size_t i) {
        if (++nodes > budget) {
          over_budget(budget);
        }
        if (i == L.size) {
          return 1;
        }
        BigInt total = 0;
        for (unsigned a = 0; a < q; ++a) {
          assignment[i] = a;
          bool allowed  = true;
          for (auto const& p : L.closing[i]) {
            bool hit = true;
            for (std::size_t c = 0; c < p.cells.size() && hit; ++c) {
              hit = assignment[p.cells[c]] == p.symbols[c];
            }
            if (hit) {
              allowed = false;
              break;
            }
          }
          if (allowed) {
            total += run(i + 1);
          }
        }
        return total;
      }
    };

  }  // namespace

  BigInt pattern_count(SftSpec const&   sft,
                       FinSubset const& F,
                       std::uint64_t    budget,
                       CountMethod      method) {
    if (F.empty()) {
      return 1;
    }
    Layout const L = make_layout(sft, F);
    if (method == CountMethod::automatic) {
      method = sft.dim() <= 2 ? CountMethod::transfer : CountMethod::backtrack;
    }
    if (method == CountMethod::transfer) {
      return count_transfer(sft, L, budget);
    }
    Backtracker bt{L, sft.alphabet(), budget, 0, std::vector<unsigned>(L.size)};
    return bt.run(0);
  }

  double log_count(BigInt const& n) {
    long         exp  = 0;
    double const mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
  }

  SetFunction sft_entropy_h(SftSpec const& sft, std::uint64_t budget) {
    SetFunction h;
    h.name     = "sft:" + sft.name();
    h.evaluate = [sft, budget](FinSubset const& F) {
      return log_count(pattern_count(sft, F, budget));
    };
    h.singleton_bound = std::log(static_cast<double>(sft.alphabet()));
    h.declared        = {true, true, true};
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Measure entropy
  ////////////////////////////////////////////////////////////////////////

  double shannon_entropy(std::vector<double> const& p) {
    double h = 0;
    for (double x : p) {
      if (x > 0) {
        h -= x * std::log(x);
      }
    }
    return h;
  }

  namespace {
    void check_distribution(std::vector<Rational> const& p, std::string const& what) {
      if (p.empty()) {
        throw DomainError(what + " must be non-empty");
      }
      Rational total = 0;
      for (auto const& x : p) {
        if (sgn(x) < 0) {
          throw DomainError(what + " has a negative entry " + x.get_str());
        }
        total += x;
      }
      if (total != 1) {
        throw DomainError(what + " sums to " + total.get_str() + ", not 1");
      }
    }

    std::vector<double> to_doubles(std::vector<Rational> const& p) {
      std::vector<double> out;
      out.reserve(p.size());
      for (auto const& x : p) {
        out.push_back(x.get_d());
      }
      return out;
    }
  }  // namespace

  SetFunction bernoulli_entropy_h(std::vector<Rational> const& p) {
    check_distribution(p, "bernoulli: p");
    double const H = shannon_entropy(to_doubles(p));
    SetFunction  h;
    h.name     = "bernoulli";
    h.evaluate = [H](FinSubset const& F) { return static_cast<double>(F.size()) * H; };
    h.singleton_bound = H;
    h.declared        = {true, true, true};
    return h;
  }

  MarkovSpec::MarkovSpec(std::vector<std::vector<Rational>> P, std::vector<Rational> pi)
      : _P(std::move(P)), _pi(std::move(pi)) {
    std::size_t const k = _P.size();
    if (k == 0) {
      throw DomainError("markov: at least one state is required");
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (_P[i].size() != k) {
        throw DomainError("markov: transition matrix must be square");
      }
      check_distribution(_P[i], "markov: row " + std::to_string(i));
    }
    if (_pi.size() != k) {
      throw DomainError("markov: stationary vector has the wrong length");
    }
    check_distribution(_pi, "markov: pi");
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i < k; ++i) {
        s += _pi[i] * _P[i][j];
      }
      if (s != _pi[j]) {
        throw DomainError("markov: pi is not stationary (coordinate " + std::to_string(j) + ")");
      }
    }
  }

  MarkovSpec MarkovSpec::with_stationary(std::vector<std::vector<Rational>> P) {
    std::size_t const k = P.size();
    for (auto const& row : P) {
      if (row.size() != k) {
        throw DomainError("markov: transition matrix must be square");
      }
    }
    // Rows: (P^T - I) with the last equation replaced by sum pi = 1.
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        a[i][j] = P[j][i] - (i == j ? 1 : 0);
      }
    }
    if (k > 0) {
      for (std::size_t j = 0; j <= k; ++j) {
        a[k - 1][j] = 1;
      }
    }
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t pivot = c;
      while (pivot < k && sgn(a[pivot][c]) == 0) {
        ++pivot;
      }
      if (pivot == k) {
        throw DomainError("markov: the stationary distribution is not unique");
      }
      std::swap(a[c], a[pivot]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r != c && sgn(a[r][c]) != 0) {
          Rational const f = a[r][c] / a[c][c];
          for (std::size_t j = c; j <= k; ++j) {
            a[r][j] -= f * a[c][j];
          }
        }
      }
    }
    std::vector<Rational> pi(k);
    for (std::size_t i = 0; i < k; ++i) {
      pi[i] = a[i][k] / a[i][i];
    }
    return MarkovSpec(std::move(P), std::move(pi));
  }

  std::vector<std::vector<Rational>> MarkovSpec::power(std::size_t g) const {
    std::size_t const k = _P.size();
    auto              mul = [k](auto const& x, auto const& y) {
      std::vector<std::vector<Rational>> z(k, std::vector<Rational>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t l = 0; l < k; ++l) {
          if (sgn(x[i][l]) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < k; ++j) {
            z[i][j] += x[i][l] * y[l][j];
          }
        }
      }
      return z;
    };
    std::vector<std::vector<Rational>> result(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i) {
      result[i][i] = 1;
    }
    auto base = _P;
    while (g > 0) {
      if (g & 1) {
        result = mul(result, base);
      }
      g >>= 1;
      if (g > 0) {
        base = mul(base, base);
      }
    }
    return result;
  }

  double MarkovSpec::conditional_entropy(std::vector<std::vector<Rational>> const& Q) const {
    double h = 0;
    for (std::size_t i = 0; i < _P.size(); ++i) {
      h += _pi[i].get_d() * shannon_entropy(to_doubles(Q[i]));
    }
    return h;
  }

  double MarkovSpec::marginal_entropy() const {
    return shannon_entropy(to_doubles(_pi));
  }

  double MarkovSpec::entropy_rate() const {
    return conditional_entropy(_P);
  }

  SetFunction markov_entropy_h(MarkovSpec const& m) {
    struct GapCache {
      explicit GapCache(MarkovSpec s) : spec(std::move(s)) {}

      MarkovSpec                    spec;
      std::map<std::size_t, double> by_gap;
      std::mutex                    mutex;

      double operator()(std::size_t g) {
        std::lock_guard<std::mutex> lock(mutex);
        auto                        it = by_gap.find(g);
        if (it == by_gap.end()) {
          it = by_gap.emplace(g, spec.conditional_entropy(spec.power(g))).first;
        }
        return it->second;
      }
    };
    auto         cache = std::make_shared<GapCache>(m);
    double const H0    = m.marginal_entropy();
    SetFunction  h;
    h.name     = "markov";
    h.evaluate = [cache, H0](FinSubset const& F) {
      double total = H0;
      for (std::size_t i = 0; i + 1 < F.size(); ++i) {
        if (F[i].size() != 1) {
          throw DomainError("markov entropy is defined on finite subsets of Z");
        }
        BigInt const gap = F[i + 1][0] - F[i][0];
        if (!gap.fits_ulong_p()) {
          throw DomainError("markov entropy: gap too large");
        }
        total += (*cache)(gap.get_ui());
      }
      if (F.front().size() != 1) {
        throw DomainError("markov entropy is defined on finite subsets of Z");
      }
      return total;
    };
    h.singleton_bound = H0;
    h.declared        = {true, true, true};
    return h;
  }

}  // namespace owlab
