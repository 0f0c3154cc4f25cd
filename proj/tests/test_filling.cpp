#include <string>

#include "doctest.h"
#include "generators.hpp"

#include "owlab/errors.hpp"
#include "owlab/filling.hpp"
#include "owlab/folner.hpp"

using namespace owlab;
using owlab::testing::random_element;
using owlab::testing::random_set;

namespace {
  FinSubset interval(long lo, long hi) {
    return box(std::vector<long>{lo}, std::vector<long>{hi});
  }
  FinSubset square(long lo, long hi) {
    return box(std::vector<long>{lo, lo}, std::vector<long>{hi, hi});
  }
  Rational size_q(std::size_t n) {
    return Rational(BigInt(static_cast<unsigned long>(n)));
  }

  bool first_inequality(Rational const& eps, std::size_t r) {
    Rational p = 1;
    for (std::size_t i = 0; i <= r; ++i) {
      p *= eps;
    }
    return size_q(2 * r + 1) * p <= Rational(1, 2);
  }
  bool second_inequality(Rational const& eps, std::size_t r) {
    Rational p = 1;
    for (std::size_t i = 0; i < r; ++i) {
      p *= 1 - eps / 2;
    }
    return p <= eps;
  }

  // (T1), (T2) and the residual identity, checked from the raw sets.
  void check_tiling_conclusions(Semigroup const& sg, TilingResult const& t) {
    FinSubset covered;
    std::size_t total = 0;
    for (auto const& p : t.patterns) {
      if (p.pattern.empty()) {
        continue;
      }
      CHECK(p.pattern.is_subset_of(interior(sg, t.domain, p.tile)));
      WitnessedFamily fam = p.witnesses;
      fam.eps             = t.eps;
      CHECK(eps_disjoint_verify(fam));
      CHECK(p.coverage == product(sg, p.tile, p.pattern));
      CHECK(p.coverage.is_subset_of(t.domain));
      total += p.coverage.size();
      covered = set_union(covered, p.coverage);
    }
    CHECK(covered.size() == total);
    CHECK(t.residual == set_difference(t.domain, covered));
    CHECK(t.achieved == CountRatio{t.residual.size(), t.domain.size()});
  }
}  // namespace

TEST_CASE("eps-disjoint verification") {
  WitnessedFamily fam{{{interval(0, 10), interval(0, 10)}, {interval(5, 15), interval(10, 15)}},
                      Rational(1, 2)};
  CHECK(eps_disjoint_verify(fam));
  fam.eps = Rational(1, 4);
  CHECK_FALSE(eps_disjoint_verify(fam));
  CHECK(eps_disjoint_verify({{{interval(0, 3), interval(0, 3)}}, Rational(1, 100)}));
  // Overlapping witnesses and witnesses outside their sets are rejected.
  CHECK_FALSE(eps_disjoint_verify(
      {{{interval(0, 4), interval(0, 4)}, {interval(2, 6), interval(3, 6)}}, Rational(1, 2)}));
  CHECK_FALSE(eps_disjoint_verify({{{interval(0, 4), interval(1, 5)}}, Rational(1, 2)}));
}

TEST_CASE("greedy filling worked example") {
  auto const           z  = Semigroup::int_lattice(1);
  FillingPattern const fp = greedy_filling(z, interval(0, 100), interval(0, 10), Rational(1, 2));
  std::vector<Element> expect;
  for (long s = 0; s <= 90; s += 5) {
    expect.push_back(Element{s});
  }
  CHECK(fp.pattern == FinSubset(expect));
  CHECK(fp.pattern.size() == 19);
  CHECK(fp.coverage == interval(0, 100));
  CHECK(eps_disjoint_verify(fp.witnesses));

  FillingPattern const none = greedy_filling(z, interval(0, 10), interval(0, 20), Rational(1, 2));
  CHECK(none.pattern.empty());
  CHECK(none.coverage.empty());

  FinSubset const      omega = square(0, 5);
  auto const           z2    = Semigroup::int_lattice(2);
  FillingPattern const id    = greedy_filling(z2, omega, FinSubset{Element{0, 0}}, Rational(1, 3));
  CHECK(id.pattern == omega);
  CHECK(id.coverage == omega);
}

TEST_CASE("greedy filling rejects bad input") {
  auto const z = Semigroup::int_lattice(1);
  CHECK_THROWS_AS(greedy_filling(z, FinSubset{}, interval(0, 2), Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(greedy_filling(z, interval(0, 5), FinSubset{}, Rational(1, 2)), DomainError);
  CHECK_THROWS_AS(greedy_filling(z, interval(0, 5), interval(0, 2), Rational(0)), DomainError);
  CHECK_THROWS_AS(greedy_filling(z, interval(0, 5), interval(0, 2), Rational(3, 2)), DomainError);
  auto const t = Semigroup::finite_table({{0, 1}, {1, 1}});
  CHECK_THROWS_AS(greedy_filling(t, t.all_elements(), FinSubset{Element{0}}, Rational(1, 2)),
                  DomainError);
}

TEST_CASE("n0 values and minimality") {
  CHECK(compute_n0(Rational(1, 2)) == 3);
  CHECK(compute_n0(Rational(3, 10)) == 8);
  for (long q = 2; q <= 40; ++q) {
    for (long p = 1; 2 * p <= q; ++p) {
      Rational const    eps(p, q);
      std::size_t const n0 = compute_n0(eps);
      CHECK(first_inequality(eps, n0));
      CHECK(second_inequality(eps, n0));
      if (n0 > 1) {
        CHECK_FALSE((first_inequality(eps, n0 - 1) && second_inequality(eps, n0 - 1)));
      }
      CHECK(first_inequality(eps, n0 + 1));
      CHECK(second_inequality(eps, n0 + 1));
    }
  }
  CHECK_FALSE(second_inequality(Rational(1, 2), 2));
  CHECK_FALSE(first_inequality(Rational(1, 2), 2));
  CHECK_THROWS_AS(compute_n0(Rational(0)), DomainError);
  CHECK_THROWS_AS(compute_n0(Rational(3, 5)), DomainError);
}

TEST_CASE("filling lemma on random triples") {
  std::mt19937_64 rng(41);
  auto const      families = owlab::testing::cancellative_families();
  for (int trial = 0; trial < 240; ++trial) {
    Semigroup const& sg    = families[static_cast<std::size_t>(trial) % families.size()];
    FinSubset const  omega = random_set(sg, rng, 1, 60, 4);
    FinSubset const  K     = random_set(sg, rng, 1, 5, 1);
    Rational const   eps(owlab::testing::uniform(rng, 1, 9), 10);
    FillingPattern const fp = greedy_filling(sg, omega, K, eps);

    Rational const a = alpha(sg, omega, K).value();
    CHECK(size_q(fp.coverage.size()) >= eps * (1 - a) * size_q(omega.size()));
    CHECK(fp.pattern.is_subset_of(interior(sg, omega, K)));
    CHECK(eps_disjoint_verify(fp.witnesses));
    CHECK(fp.coverage == product(sg, K, fp.pattern));
    CHECK(fp.coverage.is_subset_of(omega));

    // Maximality: no unused interior point could still be admitted.
    for (auto const& s : set_difference(interior(sg, omega, K), fp.pattern)) {
      FinSubset const Ks = right_translate(sg, K, s);
      CHECK(size_q(set_difference(Ks, fp.coverage).size()) < (1 - eps) * size_q(Ks.size()));
    }

    if (eps < 1 && !fp.pattern.empty()) {
      // alpha of an eps-disjoint union against the largest member alpha.
      FinSubset const K2 = random_set(sg, rng, 1, 4, 1);
      Rational        worst = 0;
      for (auto const& m : fp.witnesses.members) {
        worst = std::max(worst, alpha(sg, m.set, K2).value());
      }
      CHECK(alpha(sg, fp.coverage, K2).value() <= worst / (1 - eps));
    }

    FinSubset const rest = set_difference(omega, fp.coverage);
    if (!fp.coverage.empty() && !rest.empty() && size_q(rest.size()) >= eps * size_q(omega.size())) {
      Rational const bound
          = (a + size_q(K.size()) * alpha(sg, fp.coverage, K).value()) / eps;
      CHECK(alpha(sg, rest, K).value() <= bound);
    }

    Element const s = random_element(sg, rng, 6);
    CHECK(alpha(sg, right_translate(sg, K, s), omega).value() == alpha(sg, K, omega).value());
  }
}

TEST_CASE("tiling examples") {
  auto const z = Semigroup::int_lattice(1);
  auto const t = filling_theorem_run(z, interval(0, 64), {interval(0, 2)}, Rational(1, 2),
                                     TilingMode::best_effort);
  REQUIRE(t.patterns.size() == 1);
  CHECK(t.patterns[0].pattern == interval(0, 63));
  CHECK(t.patterns[0].coverage == interval(0, 64));
  CHECK(t.residual.empty());
  CHECK(t.residual_within_eps());
  check_tiling_conclusions(z, t);

  auto const id = filling_theorem_run(z, interval(0, 30), {FinSubset{Element{0}}}, Rational(1, 2),
                                      TilingMode::best_effort);
  CHECK(id.patterns[0].pattern == interval(0, 30));
  CHECK(id.residual.empty());
}

TEST_CASE("best-effort tilings with nested boxes") {
  auto const z  = Semigroup::int_lattice(1);
  auto const z2 = Semigroup::int_lattice(2);
  Rational const half(1, 2);
  for (long d = 20; d <= 200; d += 30) {
    auto const t = filling_theorem_run(
        z, interval(0, d), {interval(0, 2), interval(0, 5), interval(0, 11)}, half, TilingMode::best_effort);
    check_tiling_conclusions(z, t);
    CHECK(t.hypothesis_report.size() == 6);
    CHECK(t.n0 == 3);
  }
  for (long d = 8; d <= 30; d += 7) {
    auto const t = filling_theorem_run(
        z2, square(0, d), {square(0, 1), square(0, 2), square(0, 4)}, half, TilingMode::best_effort);
    check_tiling_conclusions(z2, t);
  }
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    FinSubset const D = random_set(z2, rng, 1, 80, 6);
    auto const      t = filling_theorem_run(z2, D, {square(0, 1), square(0, 2), square(0, 3)}, half,
                                            TilingMode::best_effort);
    check_tiling_conclusions(z2, t);
  }
}

TEST_CASE("strict mode") {
  auto const     z = Semigroup::int_lattice(1);
  Rational const half(1, 2);

  try {
    filling_theorem_run(z, interval(0, 100), {interval(0, 1), interval(0, 10)}, half, TilingMode::strict);
    FAIL("expected a rejection");
  } catch (HypothesisViolation const& e) {
    CHECK(std::string(e.what()).find("n0(1/2) = 3") != std::string::npos);
  }

  try {
    filling_theorem_run(z, interval(0, 100), {interval(0, 1), interval(0, 2), interval(0, 10)}, half,
                        TilingMode::strict);
    FAIL("expected a rejection");
  } catch (HypothesisViolation const& e) {
    std::string const msg = e.what();
    CHECK(msg.find("alpha(K_3,K_2)") != std::string::npos);
    CHECK(msg.find("1/10") != std::string::npos);
    CHECK(msg.find("1/128") != std::string::npos);
  }

  // alpha(K_3,K_2) = 1/128 meets eps^6/|K_2| = 1/128; alpha(D,K_3) = 127/8128 = 1/64.
  auto const t = filling_theorem_run(z, interval(0, 8128),
                                     {interval(0, 1), interval(0, 2), interval(0, 128)}, half,
                                     TilingMode::strict);
  check_tiling_conclusions(z, t);
  CHECK(t.residual_within_eps());
  for (auto const& h : t.hypothesis_report) {
    CHECK(h.holds);
  }
  CHECK(t.mode == TilingMode::strict);
}

TEST_CASE("tiling input validation and mode names") {
  auto const z = Semigroup::int_lattice(1);
  CHECK_THROWS_AS(filling_theorem_run(z, interval(0, 5), {interval(0, 2)}, Rational(3, 4),
                                      TilingMode::best_effort),
                  DomainError);
  CHECK_THROWS_AS(filling_theorem_run(z, FinSubset{}, {interval(0, 2)}, Rational(1, 2),
                                      TilingMode::best_effort),
                  DomainError);
  CHECK_THROWS_AS(filling_theorem_run(z, interval(0, 5), {}, Rational(1, 2), TilingMode::best_effort),
                  DomainError);
  CHECK(to_string(TilingMode::best_effort) == "best-effort");
  CHECK(tiling_mode_from_string("strict") == TilingMode::strict);
  CHECK_THROWS_AS(tiling_mode_from_string("lenient"), ConfigError);
}
