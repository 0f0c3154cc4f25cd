#include <cmath>
#include <cstdio>
#include <fstream>

#include "doctest.h"

#include "owlab/errors.hpp"
#include "owlab/folner.hpp"
#include "owlab/io.hpp"

using namespace owlab;
using owlab::io::json;

namespace {
  std::string write_temp(std::string const& name, std::string const& body) {
    std::string const path = "owlab_io_" + name;
    std::ofstream(path) << body;
    return path;
  }
}  // namespace

TEST_CASE("rational parsing is exact") {
  CHECK(io::parse_rational("1/2") == Rational(1, 2));
  CHECK(io::parse_rational("4/8") == Rational(1, 2));
  CHECK(io::parse_rational("0.3") == Rational(3, 10));
  CHECK(io::parse_rational("-2") == Rational(-2));
  CHECK(io::parse_rational(".25") == Rational(1, 4));
  CHECK(io::parse_rational("3/-6") == Rational(-1, 2));
  CHECK_THROWS_AS(io::parse_rational("1/0"), ConfigError);
  CHECK_THROWS_AS(io::parse_rational("abc"), ConfigError);
  CHECK_THROWS_AS(io::parse_rational(""), ConfigError);
  CHECK_THROWS_AS(io::parse_rational("1e3"), ConfigError);
  CHECK(io::rational_to_json(Rational(2, 4)).dump() == R"({"num":1,"den":2})");
  CHECK(io::ratio_to_json(CountRatio{36, 100}).dump() == R"({"num":36,"den":100})");
}

TEST_CASE("reals use 12 significant digits") {
  CHECK(io::format_real(2.0) == "2");
  CHECK(io::format_real(0.0) == "0");
  CHECK(io::format_real(1.0 / 3) == "0.333333333333");
  CHECK(io::format_real(std::log(2.0)) == "0.69314718056");
  CHECK(io::format_real(123456789012345.0) == "1.23456789012e+14");
  // 0.125 has an exact binary form, so the tie rounds to even.
  CHECK(io::format_real(0.0000000000125) == "1.25e-11");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", 0.125);
  CHECK(std::string(buf) == "0.12");
  CHECK(io::real_to_json(1.0 / 3).dump() == "0.333333333333");
  CHECK(io::real_to_json(NAN).is_null());
}

TEST_CASE("semigroup grammar") {
  CHECK(io::parse_semigroup("zd:3").name() == "zd:3");
  CHECK(io::parse_semigroup("nat:1").family() == Family::nat_monoid);
  CHECK(io::parse_semigroup("heis").family() == Family::heisenberg);
  CHECK_THROWS_AS(io::parse_semigroup("zd:0"), ConfigError);
  CHECK_THROWS_AS(io::parse_semigroup("zd:x"), ConfigError);
  CHECK_THROWS_AS(io::parse_semigroup("free:2"), ConfigError);

  std::string const path = write_temp("table.json", R"({"n": 2, "table": [[0, 1], [1, 1]]})");
  Semigroup const   t    = io::parse_semigroup("table:" + path);
  CHECK(t.order() == 2);
  CHECK_FALSE(t.is_cancellative());
  CHECK_THROWS_AS(io::parse_semigroup("table:" + write_temp("bad.json", R"({"n": 3, "table": [[0]]})")),
                  ConfigError);
  CHECK_THROWS_AS(io::parse_semigroup("table:no_such_file.json"), ConfigError);
  CHECK_THROWS_AS(io::parse_semigroup("table:" + write_temp("junk.json", "{")), ConfigError);
}

TEST_CASE("set grammar") {
  auto const z2 = Semigroup::int_lattice(2);
  CHECK(io::parse_set("box:0,0:3,3", z2) == box(std::vector<long>{0, 0}, std::vector<long>{3, 3}));
  CHECK_THROWS_AS(io::parse_set("box:0:3", z2), ConfigError);
  CHECK_THROWS_AS(io::parse_set("box:0,0", z2), ConfigError);
  CHECK_THROWS_AS(io::parse_set("range:0:3", z2), ConfigError);
  CHECK_THROWS_AS(io::parse_set("box:-1:3", Semigroup::nat_monoid(1)), InvalidElement);

  std::string const path = write_temp("set.json", R"([[1, 2], [0, 0], [1, 2], ["5", -1]])");
  FinSubset const   A    = io::parse_set("list:" + path, z2);
  CHECK(A == FinSubset{Element{0, 0}, Element{1, 2}, Element{5, -1}});
  CHECK(io::set_to_json(A, z2).dump() == "[[0,0],[1,2],[5,-1]]");

  auto const      z1 = Semigroup::int_lattice(1);
  FinSubset const B  = io::set_from_json(json::parse("[3, 1, 2]"), z1);
  CHECK(B.size() == 3);
  CHECK_THROWS_AS(io::set_from_json(json::parse("[[1, 2]]"), z1), InvalidElement);
  CHECK_THROWS_AS(io::set_from_json(json::parse("[1.5]"), z1), ConfigError);
  CHECK_THROWS_AS(io::set_from_json(json::parse("{}"), z1), ConfigError);

  BigInt const huge("123456789012345678901234567890");
  CHECK(io::element_to_json(Element(std::vector<BigInt>{huge}), z1).dump()
        == R"(["123456789012345678901234567890"])");
  auto const t = Semigroup::finite_table({{0, 1}, {1, 1}});
  CHECK(io::element_to_json(Element{1}, t).dump() == "1");
}

TEST_CASE("subshift and chain files") {
  SftSpec const s = io::sft_from_json(json::parse(
      R"({"alphabet": 2, "dim": 1, "forbidden": [{"shape": [[0], [1]], "pattern": [1, 1]}]})"));
  CHECK(pattern_count(s, box(std::vector<long>{0}, std::vector<long>{5})) == 13);
  CHECK_THROWS_AS(io::sft_from_json(json::parse(R"({"dim": 1})")), ConfigError);
  CHECK(io::parse_sft("hardsq").dim() == 2);
  CHECK_THROWS_AS(io::parse_sft("golden", 2), DomainError);

  MarkovSpec const m = io::markov_from_json(json::parse(R"({"P": [["9/10", "1/10"], [0.5, 0.5]]})"));
  CHECK(m.stationary()[0] == Rational(5, 6));
  MarkovSpec const given = io::markov_from_json(
      json::parse(R"({"P": [["1/2", "1/2"], ["1/2", "1/2"]], "pi": ["1/2", "1/2"]})"));
  CHECK(given.stationary()[1] == Rational(1, 2));
  CHECK_THROWS_AS(io::markov_from_json(json::parse(R"({"Q": []})")), ConfigError);
}

TEST_CASE("set function grammar") {
  auto const      z  = Semigroup::int_lattice(1);
  FinSubset const F  = box(std::vector<long>{0}, std::vector<long>{6});
  std::uint64_t   lb = 1'000'000;
  CHECK(io::parse_set_function("card:2", z, lb)(F) == 12);
  CHECK(io::parse_set_function("card:1/2", z, lb)(F) == 3);
  CHECK(io::parse_set_function("invmax", Semigroup::nat_monoid(1), lb)(F) == 1);
  CHECK(io::parse_set_function("fekete:linear", z, lb)(F) == 6);
  CHECK(io::parse_set_function("fekete:sqrt", z, lb)(F) == 9);
  CHECK(io::parse_set_function("sft:golden", z, lb)(F) == doctest::Approx(std::log(21.0)));
  CHECK(io::parse_set_function("bernoulli:1/2,1/2", z, lb)(F) == doctest::Approx(6 * std::log(2.0)));
  std::string const chain = write_temp("chain.json", R"({"P": [["1/2", "1/2"], ["1/2", "1/2"]]})");
  CHECK(io::parse_set_function("markov:" + chain, z, lb)(F) == doctest::Approx(6 * std::log(2.0)));
  CHECK_THROWS_AS(io::parse_set_function("sft:golden", Semigroup::heisenberg(), lb), DomainError);
  CHECK_THROWS_AS(io::parse_set_function("volume", z, lb), ConfigError);

  SetFunction const cmd = io::parse_set_function("cmd:python3 -c \"import json,sys; print(len(json.load(sys.stdin)) * 0.5)\"", z, lb);
  CHECK(cmd(F) == 3.0);
  CHECK(cmd.singleton_bound == 0.5);
  CHECK_THROWS_AS(io::subprocess_function("echo not-a-number", z), DomainError);
  CHECK_THROWS_AS(io::subprocess_function("false", z), DomainError);
}
