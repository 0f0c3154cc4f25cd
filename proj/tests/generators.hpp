// Random instances for property tests.

#ifndef OWLAB_TESTS_GENERATORS_HPP_
#define OWLAB_TESTS_GENERATORS_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "owlab/semigroup.hpp"

namespace owlab::testing {

  inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  }

  //! An element with coordinates in [-radius, radius] (or [0, radius] on N^d).
  inline Element random_element(Semigroup const& sg, std::mt19937_64& rng, long radius) {
    if (sg.is_finite()) {
      return Element{uniform(rng, 0, static_cast<long>(sg.order()) - 1)};
    }
    long const          lo = sg.family() == Family::nat_monoid ? 0 : -radius;
    std::vector<BigInt> payload;
    for (std::size_t i = 0; i < sg.payload_size(); ++i) {
      payload.emplace_back(uniform(rng, lo, radius));
    }
    return Element(std::move(payload));
  }

  inline FinSubset random_set(Semigroup const&  sg,
                              std::mt19937_64&  rng,
                              std::size_t       min_size,
                              std::size_t       max_size,
                              long              radius) {
    std::size_t const    want = static_cast<std::size_t>(
        uniform(rng, static_cast<long>(min_size), static_cast<long>(max_size)));
    std::vector<Element> xs;
    for (std::size_t i = 0; i < want; ++i) {
      xs.push_back(random_element(sg, rng, radius));
    }
    return FinSubset(std::move(xs));
  }

  //! A random subset of [lo, hi) in Z.
  inline FinSubset random_subset_of_interval(std::mt19937_64& rng, long lo, long hi, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Element>        xs;
    for (long x = lo; x < hi; ++x) {
      if (keep(rng)) {
        xs.push_back(Element{x});
      }
    }
    return FinSubset(std::move(xs));
  }

  inline std::vector<Semigroup> cancellative_families() {
    return {Semigroup::int_lattice(2), Semigroup::nat_monoid(2), Semigroup::heisenberg()};
  }

}  // namespace owlab::testing

#endif  // OWLAB_TESTS_GENERATORS_HPP_
