// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Entropy set functions of symbolic systems: pattern counts of subshifts of
// finite type, and partition entropies of Bernoulli and Markov shifts.

#ifndef OWLAB_DYNAMICS_HPP_
#define OWLAB_DYNAMICS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "owlab/semigroup.hpp"
#include "owlab/subadditive.hpp"

namespace owlab {

  using Coord = std::vector<long long>;

  //! A pattern on a finite shape of Z^d that may not occur.
  struct ForbiddenPattern {
    std::vector<Coord>    shape;
    std::vector<unsigned> symbols;  // symbols[i] sits at shape[i]
  };

  //! A subshift of finite type on Z^d over the alphabet {0, ..., alphabet-1}.
  class SftSpec {
   public:
    //! Validates symbol ranges and shape dimensions and sorts each shape
    //! (with its symbols) into canonical order.
    SftSpec(unsigned alphabet, std::size_t dim, std::vector<ForbiddenPattern> forbidden,
            std::string name = "sft");

    [[nodiscard]] unsigned alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] std::size_t dim() const noexcept {
      return _dim;
    }
    [[nodiscard]] std::vector<ForbiddenPattern> const& forbidden() const noexcept {
      return _forbidden;
    }
    [[nodiscard]] std::string const& name() const noexcept {
      return _name;
    }

   private:
    unsigned                      _alphabet;
    std::size_t                   _dim;
    std::vector<ForbiddenPattern> _forbidden;
    std::string                   _name;
  };

  //! "full2" (any dim), "golden" (no 11 on Z), "hardsq" (no adjacent 1s on Z^2).
  SftSpec builtin_sft(std::string const& name, std::size_t dim = 0);

  //! Work cap for pattern counting: $OWLAB_BUDGET if set, else 5e7.
  std::uint64_t default_budget();

  enum class CountMethod {
    automatic,  // transfer for d <= 2, backtracking above
    transfer,   // sweep in canonical order keeping only the live frontier
    backtrack
  };

  //! Number of locally admissible patterns on F: maps F -> alphabet in which
  //! no forbidden pattern occurs at a translate lying entirely inside F.
  //! The empty set carries exactly one pattern.
  //!
  //! Throws ResourceError when the work exceeds \p budget.
  BigInt pattern_count(SftSpec const&   sft,
                       FinSubset const& F,
                       std::uint64_t    budget = default_budget(),
                       CountMethod      method = CountMethod::automatic);

  //! Natural logarithm of a positive big integer.
  double log_count(BigInt const& n);

  //! h(F) = log pattern_count(F), with M = log |alphabet|.
  SetFunction sft_entropy_h(SftSpec const& sft, std::uint64_t budget = default_budget());

  //! -sum p_i log p_i with 0 log 0 = 0.
  double shannon_entropy(std::vector<double> const& p);

  //! h(F) = |F| H(p). Throws DomainError unless p is a probability vector.
  SetFunction bernoulli_entropy_h(std::vector<Rational> const& p);

  //! A stationary Markov chain with exact rational transition matrix.
  class MarkovSpec {
   public:
    //! Validates that P is row-stochastic, pi is a distribution and pi P = pi.
    MarkovSpec(std::vector<std::vector<Rational>> P, std::vector<Rational> pi);
    //! Solves for the unique stationary distribution; throws DomainError if
    //! it is not unique.
    static MarkovSpec with_stationary(std::vector<std::vector<Rational>> P);

    [[nodiscard]] std::size_t states() const noexcept {
      return _P.size();
    }
    [[nodiscard]] std::vector<std::vector<Rational>> const& transition() const noexcept {
      return _P;
    }
    [[nodiscard]] std::vector<Rational> const& stationary() const noexcept {
      return _pi;
    }

    //! P^g, computed exactly.
    [[nodiscard]] std::vector<std::vector<Rational>> power(std::size_t g) const;
    //! -sum_i pi_i sum_l Q_il log Q_il.
    [[nodiscard]] double conditional_entropy(std::vector<std::vector<Rational>> const& Q) const;
    //! H(pi).
    [[nodiscard]] double marginal_entropy() const;
    //! The entropy rate -sum_i pi_i sum_j P_ij log P_ij.
    [[nodiscard]] double entropy_rate() const;

   private:
    std::vector<std::vector<Rational>> _P;
    std::vector<Rational>              _pi;
  };

  //! Joint entropy of (X_a)_{a in F} for the stationary chain, on finite
  //! F in Z: H(pi) + sum over consecutive gaps g of H(X_g | X_0).
  SetFunction markov_entropy_h(MarkovSpec const& m);

}  // namespace owlab

#endif  // OWLAB_DYNAMICS_HPP_
