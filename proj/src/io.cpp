// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "owlab/errors.hpp"
#include "owlab/folner.hpp"

namespace owlab::io {

  namespace {
    std::vector<std::string> split(std::string const& text, char sep) {
      std::vector<std::string> out;
      std::string              cur;
      for (char c : text) {
        if (c == sep) {
          out.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(c);
        }
      }
      out.push_back(cur);
      return out;
    }

    bool starts_with(std::string const& text, std::string const& prefix) {
      return text.compare(0, prefix.size(), prefix) == 0;
    }

    std::size_t parse_positive(std::string const& text, std::string const& what) {
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw ConfigError(what + ": expected a positive integer, got '" + text + "'");
      }
      std::size_t const v = std::stoul(text);
      if (v == 0) {
        throw ConfigError(what + ": expected a positive integer, got '" + text + "'");
      }
      return v;
    }

    BigInt parse_bigint(std::string const& text, std::string const& what) {
      BigInt v;
      if (text.empty() || v.set_str(text, 10) != 0) {
        throw ConfigError(what + ": expected an integer, got '" + text + "'");
      }
      return v;
    }

    BigInt bigint_from_json(json const& j) {
      if (j.is_number_integer()) {
        return BigInt(std::to_string(j.get<long long>()));
      }
      if (j.is_number_unsigned()) {
        return BigInt(std::to_string(j.get<unsigned long long>()));
      }
      if (j.is_string()) {
        return parse_bigint(j.get<std::string>(), "element coordinate");
      }
      throw ConfigError("element coordinate must be an integer, got " + j.dump());
    }

    Rational rational_from_json(json const& j) {
      if (j.is_string()) {
        return parse_rational(j.get<std::string>());
      }
      if (j.is_number_integer()) {
        return Rational(BigInt(std::to_string(j.get<long long>())));
      }
      if (j.is_number()) {
        // Exact value of the decimal literal as written.
        return parse_rational(j.dump());
      }
      throw ConfigError("expected a rational number, got " + j.dump());
    }
  }  // namespace

  json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ConfigError("cannot open '" + path + "'");
    }
    try {
      return json::parse(in);
    } catch (json::exception const& e) {
      throw ConfigError("'" + path + "' is not valid JSON: " + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroups and sets
  ////////////////////////////////////////////////////////////////////////

  Semigroup semigroup_from_json(json const& j) {
    if (!j.is_object() || !j.contains("table") || !j["table"].is_array()) {
      throw ConfigError("table semigroup JSON needs a \"table\" array");
    }
    std::vector<std::vector<std::size_t>> table;
    try {
      table = j["table"].get<std::vector<std::vector<std::size_t>>>();
    } catch (json::exception const&) {
      throw ConfigError("\"table\" must be an array of arrays of non-negative integers");
    }
    if (j.contains("n") && j["n"].get<std::size_t>() != table.size()) {
      throw ConfigError("\"n\" does not match the number of table rows");
    }
    return Semigroup::finite_table(std::move(table));
  }

  Semigroup parse_semigroup(std::string const& text) {
    if (text == "heis") {
      return Semigroup::heisenberg();
    }
    if (starts_with(text, "zd:")) {
      return Semigroup::int_lattice(parse_positive(text.substr(3), "semigroup zd:<d>"));
    }
    if (starts_with(text, "nat:")) {
      return Semigroup::nat_monoid(parse_positive(text.substr(4), "semigroup nat:<d>"));
    }
    if (starts_with(text, "table:")) {
      return semigroup_from_json(read_json_file(text.substr(6)));
    }
    throw ConfigError("unknown semigroup '" + text + "' (expected zd:<d>, nat:<d>, heis, table:<path>)");
  }

  FinSubset set_from_json(json const& j, Semigroup const& sg) {
    if (!j.is_array()) {
      throw ConfigError("a set must be a JSON array of elements");
    }
    std::vector<Element> elems;
    for (auto const& e : j) {
      std::vector<BigInt> payload;
      if (e.is_array()) {
        for (auto const& c : e) {
          payload.push_back(bigint_from_json(c));
        }
      } else {
        payload.push_back(bigint_from_json(e));
      }
      elems.emplace_back(std::move(payload));
    }
    FinSubset A(std::move(elems));
    sg.validate(A);
    return A;
  }

  FinSubset parse_set(std::string const& text, Semigroup const& sg) {
    if (starts_with(text, "box:")) {
      auto parts = split(text.substr(4), ':');
      if (parts.size() != 2) {
        throw ConfigError("set '" + text + "': expected box:<lo>:<hi>");
      }
      auto lo = split(parts[0], ','), hi = split(parts[1], ',');
      if (lo.size() != hi.size() || lo.size() != sg.payload_size()) {
        throw ConfigError("set '" + text + "': corners must have " + std::to_string(sg.payload_size())
                          + " coordinates for " + sg.name());
      }
      std::vector<BigInt> l, h;
      for (std::size_t i = 0; i < lo.size(); ++i) {
        l.push_back(parse_bigint(lo[i], "box corner"));
        h.push_back(parse_bigint(hi[i], "box corner"));
      }
      FinSubset A = box(l, h);
      sg.validate(A);
      return A;
    }
    if (starts_with(text, "list:")) {
      return set_from_json(read_json_file(text.substr(5)), sg);
    }
    throw ConfigError("unknown set '" + text + "' (expected box:<lo>:<hi> or list:<path>)");
  }

  json element_to_json(Element const& x, Semigroup const& sg) {
    auto coord = [](BigInt const& c) -> json {
      if (c.fits_slong_p()) {
        return c.get_si();
      }
      return c.get_str();
    };
    if (sg.is_finite()) {
      return coord(x[0]);
    }
    json out = json::array();
    for (auto const& c : x.payload()) {
      out.push_back(coord(c));
    }
    return out;
  }

  json set_to_json(FinSubset const& A, Semigroup const& sg) {
    json out = json::array();
    for (auto const& x : A) {
      out.push_back(element_to_json(x, sg));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Numbers
  ////////////////////////////////////////////////////////////////////////

  Rational parse_rational(std::string const& text) {
    auto fail = [&]() -> Rational { throw ConfigError("expected a rational number, got '" + text + "'"); };
    if (text.empty()) {
      return fail();
    }
    if (auto slash = text.find('/'); slash != std::string::npos) {
      BigInt const num = parse_bigint(text.substr(0, slash), "rational numerator");
      BigInt const den = parse_bigint(text.substr(slash + 1), "rational denominator");
      if (sgn(den) == 0) {
        throw ConfigError("rational '" + text + "' has a zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    std::string digits = text;
    bool        neg    = false;
    if (digits[0] == '-' || digits[0] == '+') {
      neg    = digits[0] == '-';
      digits = digits.substr(1);
    }
    auto        dot   = digits.find('.');
    std::string whole = digits.substr(0, dot);
    std::string frac  = dot == std::string::npos ? "" : digits.substr(dot + 1);
    if ((whole + frac).empty()
        || (whole + frac).find_first_not_of("0123456789") != std::string::npos) {
      return fail();
    }
    BigInt num(whole + frac == "" ? "0" : whole + frac);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(neg ? BigInt(-num) : num, den);
    q.canonicalize();
    return q;
  }

  json rational_to_json(Rational const& value) {
    Rational q = value;
    q.canonicalize();
    auto as_json = [](BigInt const& v) -> json {
      if (v.fits_slong_p()) {
        return v.get_si();
      }
      return v.get_str();
    };
    return {{"num", as_json(q.get_num())}, {"den", as_json(q.get_den())}};
  }

  json ratio_to_json(CountRatio const& r) {
    return {{"num", r.numerator}, {"den", r.denominator}};
  }

  std::string format_real(double x) {
    if (x == 0) {
      return "0";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
  }

  json real_to_json(double x) {
    if (!std::isfinite(x)) {
      return nullptr;
    }
    return std::strtod(format_real(x).c_str(), nullptr);
  }

  ////////////////////////////////////////////////////////////////////////
  // Dynamics specs
  ////////////////////////////////////////////////////////////////////////

  SftSpec sft_from_json(json const& j) {
    try {
      unsigned const                alphabet = j.at("alphabet").get<unsigned>();
      std::size_t const             dim      = j.at("dim").get<std::size_t>();
      std::vector<ForbiddenPattern> forbidden;
      for (auto const& f : j.value("forbidden", json::array())) {
        ForbiddenPattern p;
        for (auto const& cell : f.at("shape")) {
          p.shape.push_back(cell.is_array() ? cell.get<Coord>() : Coord{cell.get<long long>()});
        }
        p.symbols = f.at("pattern").get<std::vector<unsigned>>();
        forbidden.push_back(std::move(p));
      }
      return SftSpec(alphabet, dim, std::move(forbidden), j.value("name", std::string("sft")));
    } catch (json::exception const& e) {
      throw ConfigError(std::string("malformed SFT JSON: ") + e.what());
    }
  }

  SftSpec parse_sft(std::string const& text, std::size_t dim) {
    if (text == "full2" || text == "golden" || text == "hardsq") {
      return builtin_sft(text, dim);
    }
    SftSpec sft = sft_from_json(read_json_file(text));
    if (dim != 0 && sft.dim() != dim) {
      throw DomainError("subshift '" + text + "' lives on Z^" + std::to_string(sft.dim())
                        + ", not Z^" + std::to_string(dim));
    }
    return sft;
  }

  MarkovSpec markov_from_json(json const& j) {
    if (!j.is_object() || !j.contains("P") || !j["P"].is_array()) {
      throw ConfigError("markov JSON needs a \"P\" matrix");
    }
    std::vector<std::vector<Rational>> P;
    for (auto const& row : j["P"]) {
      if (!row.is_array()) {
        throw ConfigError("markov: each row of P must be an array");
      }
      std::vector<Rational> r;
      for (auto const& x : row) {
        r.push_back(rational_from_json(x));
      }
      P.push_back(std::move(r));
    }
    if (!j.contains("pi")) {
      return MarkovSpec::with_stationary(std::move(P));
    }
    std::vector<Rational> pi;
    for (auto const& x : j["pi"]) {
      pi.push_back(rational_from_json(x));
    }
    return MarkovSpec(std::move(P), std::move(pi));
  }

  ////////////////////////////////////////////////////////////////////////
  // Set functions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string run_capture(std::string const& command, std::string const& input) {
      char path[] = "/tmp/owlab-h-XXXXXX";
      int  fd     = ::mkstemp(path);
      if (fd < 0) {
        throw Error("cannot create a temporary file for the subprocess");
      }
      {
        std::ofstream tmp(path);
        tmp << input;
      }
      ::close(fd);
      std::string const full = command + " < '" + path + "'";
      FILE*             pipe = ::popen(full.c_str(), "r");
      if (pipe == nullptr) {
        ::unlink(path);
        throw Error("cannot start subprocess '" + command + "'");
      }
      std::string out;
      char        buf[4096];
      std::size_t got;
      while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, got);
      }
      int const status = ::pclose(pipe);
      ::unlink(path);
      if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        throw DomainError("subprocess '" + command + "' failed");
      }
      return out;
    }
  }  // namespace

  SetFunction subprocess_function(std::string const& command, Semigroup const& sg) {
    SetFunction h;
    h.name     = "cmd:" + command;
    h.evaluate = [command, sg](FinSubset const& A) {
      std::string const out = run_capture(command, set_to_json(A, sg).dump());
      char*             end = nullptr;
      double const      v   = std::strtod(out.c_str(), &end);
      while (end != nullptr && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) {
        ++end;
      }
      if (end == out.c_str() || (end != nullptr && *end != '\0')) {
        throw DomainError("subprocess '" + command + "' did not print a decimal real");
      }
      return v;
    };
    // In a monoid, right-subinvariance gives h({s}) = h({e}s) <= h({e}).
    auto const e = sg.identity();
    if (!e) {
      throw DomainError("cmd: " + sg.name() + " has no identity to bound h on singletons");
    }
    h.singleton_bound = h(FinSubset{*e});
    h.declared        = {true, true, false};
    return h;
  }

  SetFunction parse_set_function(std::string const& text,
                                 Semigroup const&   sg,
                                 std::uint64_t      budget) {
    if (starts_with(text, "card:")) {
      return cardinality_function(parse_rational(text.substr(5)).get_d());
    }
    if (text == "card") {
      return cardinality_function(1);
    }
    if (text == "invmax") {
      return inverse_max_function();
    }
    if (text == "fekete:linear") {
      return fekete_lift([](std::size_t n) { return static_cast<double>(n); }, "fekete:linear");
    }
    if (text == "fekete:sqrt") {
      return fekete_lift(
          [](std::size_t n) {
            BigInt root, rem;
            mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), BigInt(static_cast<unsigned long>(n)).get_mpz_t());
            return static_cast<double>(n) + root.get_d() + (sgn(rem) > 0 ? 1.0 : 0.0);
          },
          "fekete:sqrt");
    }
    if (starts_with(text, "sft:")) {
      if (sg.family() != Family::int_lattice && sg.family() != Family::nat_monoid) {
        throw DomainError("sft entropy needs a lattice semigroup, got " + sg.name());
      }
      return sft_entropy_h(parse_sft(text.substr(4), sg.dimension()), budget);
    }
    if (starts_with(text, "bernoulli:")) {
      std::vector<Rational> p;
      for (auto const& part : split(text.substr(10), ',')) {
        p.push_back(parse_rational(part));
      }
      return bernoulli_entropy_h(p);
    }
    if (starts_with(text, "markov:")) {
      return markov_entropy_h(markov_from_json(read_json_file(text.substr(7))));
    }
    if (starts_with(text, "cmd:")) {
      return subprocess_function(text.substr(4), sg);
    }
    throw ConfigError("unknown set function '" + text + "'");
  }

}  // namespace owlab::io
