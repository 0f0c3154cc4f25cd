// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups

#include "owlab/semigroup.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "owlab/errors.hpp"

namespace owlab {

  ////////////////////////////////////////////////////////////////////////
  // Element
  ////////////////////////////////////////////////////////////////////////

  Element::Element(std::initializer_list<long> coords) {
    _payload.reserve(coords.size());
    for (long c : coords) {
      _payload.emplace_back(c);
    }
  }

  int Element::compare(Element const& that) const noexcept {
    std::size_t const n = std::min(_payload.size(), that._payload.size());
    for (std::size_t i = 0; i < n; ++i) {
      int const c = cmp(_payload[i], that._payload[i]);
      if (c != 0) {
        return c < 0 ? -1 : 1;
      }
    }
    if (_payload.size() == that._payload.size()) {
      return 0;
    }
    return _payload.size() < that._payload.size() ? -1 : 1;
  }

  std::string Element::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < _payload.size(); ++i) {
      os << (i == 0 ? "" : ",") << _payload[i].get_str();
    }
    os << ')';
    return os.str();
  }

  std::size_t ElementHash::operator()(Element const& x) const noexcept {
    std::size_t h = x.size();
    for (auto const& c : x.payload()) {
      mpz_srcptr z = c.get_mpz_t();
      std::size_t const limbs = mpz_size(z);
      h = h * 1000003u ^ static_cast<std::size_t>(mpz_sgn(z) + 1);
      for (std::size_t i = 0; i < limbs; ++i) {
        h = (h ^ static_cast<std::size_t>(mpz_getlimbn(z, i))) * 0x100000001b3ull;
      }
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // FinSubset
  ////////////////////////////////////////////////////////////////////////

  FinSubset::FinSubset(std::vector<Element> elements) : _elements(std::move(elements)) {
    std::sort(_elements.begin(), _elements.end());
    _elements.erase(std::unique(_elements.begin(), _elements.end()), _elements.end());
  }

  FinSubset::FinSubset(std::initializer_list<Element> elements)
      : FinSubset(std::vector<Element>(elements)) {}

  FinSubset FinSubset::from_sorted(std::vector<Element> elements) {
    FinSubset result;
    result._elements = std::move(elements);
    return result;
  }

  bool FinSubset::contains(Element const& x) const {
    return std::binary_search(_elements.begin(), _elements.end(), x);
  }

  bool FinSubset::is_subset_of(FinSubset const& that) const {
    return std::includes(that._elements.begin(),
                         that._elements.end(),
                         _elements.begin(),
                         _elements.end());
  }

  bool operator<(FinSubset const& x, FinSubset const& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }

  FinSubset set_union(FinSubset const& x, FinSubset const& y) {
    std::vector<Element> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return FinSubset::from_sorted(std::move(out));
  }

  FinSubset set_intersection(FinSubset const& x, FinSubset const& y) {
    std::vector<Element> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return FinSubset::from_sorted(std::move(out));
  }

  FinSubset set_difference(FinSubset const& x, FinSubset const& y) {
    std::vector<Element> out;
    std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return FinSubset::from_sorted(std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroup
  ////////////////////////////////////////////////////////////////////////

  Semigroup Semigroup::int_lattice(std::size_t dim) {
    if (dim == 0) {
      throw DomainError("int_lattice: dimension must be positive");
    }
    return Semigroup(Family::int_lattice, dim);
  }

  Semigroup Semigroup::nat_monoid(std::size_t dim) {
    if (dim == 0) {
      throw DomainError("nat_monoid: dimension must be positive");
    }
    return Semigroup(Family::nat_monoid, dim);
  }

  Semigroup Semigroup::heisenberg() {
    return Semigroup(Family::heisenberg, 3);
  }

  Semigroup Semigroup::finite_table(std::vector<std::vector<std::size_t>> table) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw DomainError("finite_table: the table must have at least one row");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw DomainError("finite_table: row " + std::to_string(i) + " has "
                          + std::to_string(table[i].size()) + " entries, expected "
                          + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw DomainError("finite_table: entry (" + std::to_string(i) + ","
                            + std::to_string(j) + ") is out of range");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw DomainError("finite_table: not associative at (" + std::to_string(a)
                              + "," + std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
    Semigroup sg(Family::finite_table, 1);
    sg._left_cancellable.assign(n, true);
    sg._right_cancellable.assign(n, true);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<bool> row_seen(n, false), col_seen(n, false);
      for (std::size_t t = 0; t < n; ++t) {
        if (row_seen[table[s][t]]) {
          sg._left_cancellable[s] = false;
        }
        row_seen[table[s][t]] = true;
        if (col_seen[table[t][s]]) {
          sg._right_cancellable[s] = false;
        }
        col_seen[table[t][s]] = true;
      }
    }
    sg._table = std::move(table);
    return sg;
  }

  std::size_t Semigroup::payload_size() const noexcept {
    return _family == Family::finite_table ? 1 : _dim;
  }

  bool Semigroup::is_valid(Element const& x) const {
    if (x.size() != payload_size()) {
      return false;
    }
    switch (_family) {
      case Family::nat_monoid:
        return std::all_of(x.payload().begin(), x.payload().end(), [](BigInt const& c) {
          return sgn(c) >= 0;
        });
      case Family::finite_table:
        return sgn(x[0]) >= 0 && x[0] < BigInt(static_cast<unsigned long>(_table.size()));
      default:
        return true;
    }
  }

  void Semigroup::validate(Element const& x) const {
    if (!is_valid(x)) {
      throw InvalidElement("invalid element " + x.to_string() + " for semigroup " + name());
    }
  }

  void Semigroup::validate(FinSubset const& xs) const {
    for (auto const& x : xs) {
      validate(x);
    }
  }

  namespace {
    std::size_t table_index(Element const& x) {
      return x[0].get_ui();
    }

    Element table_element(std::size_t i) {
      return Element({static_cast<long>(i)});
    }
  }  // namespace

  Element Semigroup::mul(Element const& a, Element const& b) const {
    validate(a);
    validate(b);
    switch (_family) {
      case Family::int_lattice:
      case Family::nat_monoid: {
        std::vector<BigInt> out(_dim);
        for (std::size_t i = 0; i < _dim; ++i) {
          out[i] = a[i] + b[i];
        }
        return Element(std::move(out));
      }
      case Family::heisenberg:
        return Element({a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]});
      case Family::finite_table:
        return table_element(_table[table_index(a)][table_index(b)]);
    }
    return {};
  }

  std::optional<Element> Semigroup::left_divide(Element const& a, Element const& b) const {
    validate(a);
    validate(b);
    switch (_family) {
      case Family::int_lattice: {
        std::vector<BigInt> out(_dim);
        for (std::size_t i = 0; i < _dim; ++i) {
          out[i] = b[i] - a[i];
        }
        return Element(std::move(out));
      }
      case Family::nat_monoid: {
        std::vector<BigInt> out(_dim);
        for (std::size_t i = 0; i < _dim; ++i) {
          out[i] = b[i] - a[i];
          if (sgn(out[i]) < 0) {
            return std::nullopt;
          }
        }
        return Element(std::move(out));
      }
      case Family::heisenberg: {
        BigInt const da = b[0] - a[0];
        BigInt const db = b[1] - a[1];
        BigInt const dc = b[2] - a[2] - a[0] * db;
        return Element({da, db, dc});
      }
      case Family::finite_table: {
        if (!_left_cancellable[table_index(a)]) {
          throw MultiSolutionError("left_divide: " + a.to_string()
                                   + " is not left-cancellable in " + name()
                                   + "; enumerate with left_divide_all");
        }
        auto all = left_divide_all(a, b);
        if (all.empty()) {
          return std::nullopt;
        }
        return all.front();
      }
    }
    return std::nullopt;
  }

  std::vector<Element> Semigroup::left_divide_all(Element const& a, Element const& b) const {
    if (_family != Family::finite_table) {
      auto s = left_divide(a, b);
      return s ? std::vector<Element>{*s} : std::vector<Element>{};
    }
    validate(a);
    validate(b);
    std::vector<Element> out;
    auto const& row = _table[table_index(a)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == table_index(b)) {
        out.push_back(table_element(j));
      }
    }
    return out;
  }

  bool Semigroup::is_left_cancellable(Element const& x) const {
    validate(x);
    return _family != Family::finite_table || _left_cancellable[table_index(x)];
  }

  bool Semigroup::is_right_cancellable(Element const& x) const {
    validate(x);
    return _family != Family::finite_table || _right_cancellable[table_index(x)];
  }

  bool Semigroup::is_cancellative() const noexcept {
    if (_family != Family::finite_table) {
      return true;
    }
    auto all_true = [](std::vector<bool> const& v) {
      return std::all_of(v.begin(), v.end(), [](bool b) { return b; });
    };
    return all_true(_left_cancellable) && all_true(_right_cancellable);
  }

  std::optional<Element> Semigroup::identity() const {
    if (_family != Family::finite_table) {
      return Element(std::vector<BigInt>(_dim));
    }
    std::size_t const n = _table.size();
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t t = 0; t < n && ok; ++t) {
        ok = _table[e][t] == t && _table[t][e] == t;
      }
      if (ok) {
        return table_element(e);
      }
    }
    return std::nullopt;
  }

  FinSubset Semigroup::all_elements() const {
    if (_family != Family::finite_table) {
      throw DomainError("all_elements: " + name() + " is infinite");
    }
    std::vector<Element> out;
    out.reserve(_table.size());
    for (std::size_t i = 0; i < _table.size(); ++i) {
      out.push_back(table_element(i));
    }
    return FinSubset::from_sorted(std::move(out));
  }

  std::string Semigroup::name() const {
    switch (_family) {
      case Family::int_lattice:
        return "zd:" + std::to_string(_dim);
      case Family::nat_monoid:
        return "nat:" + std::to_string(_dim);
      case Family::heisenberg:
        return "heis";
      case Family::finite_table:
        return "table:" + std::to_string(_table.size());
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Translations
  ////////////////////////////////////////////////////////////////////////

  FinSubset right_translate(Semigroup const& sg, FinSubset const& A, Element const& s) {
    std::vector<Element> out;
    out.reserve(A.size());
    for (auto const& a : A) {
      out.push_back(sg.mul(a, s));
    }
    return FinSubset(std::move(out));
  }

  FinSubset left_translate(Semigroup const& sg, Element const& s, FinSubset const& A) {
    std::vector<Element> out;
    out.reserve(A.size());
    for (auto const& a : A) {
      out.push_back(sg.mul(s, a));
    }
    return FinSubset(std::move(out));
  }

  FinSubset product(Semigroup const& sg, FinSubset const& K, FinSubset const& A) {
    std::vector<Element> out;
    out.reserve(K.size() * A.size());
    for (auto const& k : K) {
      for (auto const& a : A) {
        out.push_back(sg.mul(k, a));
      }
    }
    return FinSubset(std::move(out));
  }

  FinSubset left_preimage(Semigroup const& sg, Element const& k, FinSubset const& X) {
    std::vector<Element> out;
    for (auto const& x : X) {
      for (auto& t : sg.left_divide_all(k, x)) {
        out.push_back(std::move(t));
      }
    }
    return FinSubset(std::move(out));
  }

  CancellativityReport cancellativity_probe(Semigroup const& sg, FinSubset const& sample) {
    if (sample.empty()) {
      throw DomainError("cancellativity_probe: the sample must be non-empty");
    }
    sg.validate(sample);
    CancellativityReport report;
    report.exhaustive = sg.is_finite();
    for (auto const& s : sample) {
      if (sg.is_finite()) {
        report.verdicts.push_back({s, sg.is_left_cancellable(s), sg.is_right_cancellable(s)});
      } else {
        bool const left  = left_translate(sg, s, sample).size() == sample.size();
        bool const right = right_translate(sg, sample, s).size() == sample.size();
        report.verdicts.push_back({s, left, right});
      }
    }
    return report;
  }

}  // namespace owlab
