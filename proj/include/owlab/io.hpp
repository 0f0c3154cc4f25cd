// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Text grammars and JSON encodings shared by the command-line tool.
//
//   semigroup  zd:<d> | nat:<d> | heis | table:<path.json>
//   set        box:<lo>:<hi> | list:<path.json>     (lo, hi comma-separated)
//   h          card:<c> | invmax | fekete:<linear|sqrt> | sft:<name|path.json>
//              | bernoulli:<p1,p2,...> | markov:<path.json> | cmd:<command>

#ifndef OWLAB_IO_HPP_
#define OWLAB_IO_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "owlab/boundary.hpp"
#include "owlab/dynamics.hpp"
#include "owlab/semigroup.hpp"
#include "owlab/subadditive.hpp"

namespace owlab::io {

  using json = nlohmann::ordered_json;

  Semigroup parse_semigroup(std::string const& text);
  //! {"n": k, "table": [[...], ...]}
  Semigroup semigroup_from_json(json const& j);

  FinSubset parse_set(std::string const& text, Semigroup const& sg);
  //! A JSON array of elements; each element is an integer array (or a bare
  //! integer for one-coordinate payloads). Big coordinates may be strings.
  FinSubset set_from_json(json const& j, Semigroup const& sg);

  json element_to_json(Element const& x, Semigroup const& sg);
  json set_to_json(FinSubset const& A, Semigroup const& sg);

  //! Accepts "p/q", integers and finite decimals ("0.3"), exactly.
  Rational parse_rational(std::string const& text);
  json     rational_to_json(Rational const& q);
  json     ratio_to_json(CountRatio const& r);

  //! 12 significant digits, ties to even.
  std::string format_real(double x);
  //! \p x rounded to 12 significant digits, for JSON output.
  json real_to_json(double x);

  SftSpec    sft_from_json(json const& j);
  SftSpec    parse_sft(std::string const& text, std::size_t dim = 0);
  //! {"P": [[...]], "pi": [...]} with rational entries as strings or
  //! numbers; "pi" may be omitted when the stationary law is unique.
  MarkovSpec markov_from_json(json const& j);

  SetFunction parse_set_function(std::string const& text,
                                 Semigroup const&   sg,
                                 std::uint64_t      budget);

  //! A set function computed by a subprocess: the element list is written
  //! as JSON to its standard input and a decimal real is read back.
  SetFunction subprocess_function(std::string const& command, Semigroup const& sg);

  json read_json_file(std::string const& path);

}  // namespace owlab::io

#endif  // OWLAB_IO_HPP_
