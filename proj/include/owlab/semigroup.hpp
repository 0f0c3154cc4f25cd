// owlab - Følner sets, fillings and Ornstein-Weiss limits on semigroups
//
// Concrete semigroups, their elements, and canonical finite subsets.

#ifndef OWLAB_SEMIGROUP_HPP_
#define OWLAB_SEMIGROUP_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace owlab {

  using BigInt   = mpz_class;
  using Rational = mpq_class;

  //! A point of a concrete semigroup.
  //!
  //! The payload is an integer vector: the coordinates for the lattice
  //! families, the triple (a, b, c) for the Heisenberg group, and a single
  //! index for a multiplication table. Elements are totally ordered
  //! lexicographically on the payload.
  class Element {
   public:
    Element() = default;
    explicit Element(std::vector<BigInt> payload) : _payload(std::move(payload)) {}
    Element(std::initializer_list<long> coords);

    [[nodiscard]] std::vector<BigInt> const& payload() const noexcept {
      return _payload;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _payload.size();
    }
    [[nodiscard]] BigInt const& operator[](std::size_t i) const {
      return _payload[i];
    }

    //! Three-way comparison returning <0, 0 or >0.
    [[nodiscard]] int compare(Element const& that) const noexcept;

    friend bool operator==(Element const& x, Element const& y) noexcept {
      return x.compare(y) == 0;
    }
    friend bool operator!=(Element const& x, Element const& y) noexcept {
      return x.compare(y) != 0;
    }
    friend bool operator<(Element const& x, Element const& y) noexcept {
      return x.compare(y) < 0;
    }

    [[nodiscard]] std::string to_string() const;

   private:
    std::vector<BigInt> _payload;
  };

  //! A finite set of elements stored as a strictly increasing sequence.
  //!
  //! Any construction order, with or without duplicates, yields the same
  //! sequence.
  class FinSubset {
   public:
    using const_iterator = std::vector<Element>::const_iterator;

    FinSubset() = default;
    explicit FinSubset(std::vector<Element> elements);
    FinSubset(std::initializer_list<Element> elements);

    //! Trusts that \p elements is already strictly increasing.
    static FinSubset from_sorted(std::vector<Element> elements);

    [[nodiscard]] std::size_t size() const noexcept {
      return _elements.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _elements.empty();
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _elements.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _elements.end();
    }
    [[nodiscard]] Element const& operator[](std::size_t i) const {
      return _elements[i];
    }
    [[nodiscard]] Element const& front() const {
      return _elements.front();
    }
    [[nodiscard]] Element const& back() const {
      return _elements.back();
    }
    [[nodiscard]] std::vector<Element> const& elements() const noexcept {
      return _elements;
    }

    [[nodiscard]] bool contains(Element const& x) const;
    [[nodiscard]] bool is_subset_of(FinSubset const& that) const;

    friend bool operator==(FinSubset const& x, FinSubset const& y) {
      return x._elements == y._elements;
    }
    friend bool operator!=(FinSubset const& x, FinSubset const& y) {
      return !(x == y);
    }
    friend bool operator<(FinSubset const& x, FinSubset const& y);

   private:
    std::vector<Element> _elements;
  };

  FinSubset set_union(FinSubset const& x, FinSubset const& y);
  FinSubset set_intersection(FinSubset const& x, FinSubset const& y);
  FinSubset set_difference(FinSubset const& x, FinSubset const& y);

  //! Hash over the payload, for unordered containers of elements.
  struct ElementHash {
    std::size_t operator()(Element const& x) const noexcept;
  };

  enum class Family { int_lattice, nat_monoid, heisenberg, finite_table };

  //! A concrete semigroup.
  //!
  //! The Heisenberg group uses the product
  //!   (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
  //! Finite tables are checked for associativity on construction and carry
  //! per-element cancellability flags.
  class Semigroup {
   public:
    static Semigroup int_lattice(std::size_t dim);
    static Semigroup nat_monoid(std::size_t dim);
    static Semigroup heisenberg();
    //! Row i, column j holds the index of s_i * s_j.
    static Semigroup finite_table(std::vector<std::vector<std::size_t>> table);

    [[nodiscard]] Family family() const noexcept {
      return _family;
    }
    //! Length of element payloads.
    [[nodiscard]] std::size_t payload_size() const noexcept;
    //! Lattice dimension d (3 for Heisenberg, 1 for tables).
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _dim;
    }
    //! Number of elements of a finite table; 0 for infinite families.
    [[nodiscard]] std::size_t order() const noexcept {
      return _table.size();
    }
    [[nodiscard]] bool is_finite() const noexcept {
      return _family == Family::finite_table;
    }
    [[nodiscard]] std::vector<std::vector<std::size_t>> const& table() const noexcept {
      return _table;
    }

    [[nodiscard]] bool is_valid(Element const& x) const;
    //! Throws InvalidElement unless \p x is a point of this semigroup.
    void validate(Element const& x) const;
    void validate(FinSubset const& xs) const;

    [[nodiscard]] Element mul(Element const& a, Element const& b) const;

    //! The unique s with a*s = b, if any.
    //!
    //! Throws MultiSolutionError for a finite table when \p a is not
    //! left-cancellable; use left_divide_all in that case.
    [[nodiscard]] std::optional<Element> left_divide(Element const& a,
                                                     Element const& b) const;
    //! Every s with a*s = b.
    [[nodiscard]] std::vector<Element> left_divide_all(Element const& a,
                                                       Element const& b) const;

    [[nodiscard]] bool is_left_cancellable(Element const& x) const;
    [[nodiscard]] bool is_right_cancellable(Element const& x) const;
    [[nodiscard]] bool is_cancellative() const noexcept;

    [[nodiscard]] std::optional<Element> identity() const;

    //! Every element of a finite table, in order.
    [[nodiscard]] FinSubset all_elements() const;

    //! Text form in the semigroup grammar (`zd:2`, `nat:1`, `heis`, `table:<n>`).
    [[nodiscard]] std::string name() const;

   private:
    Semigroup(Family f, std::size_t dim) : _family(f), _dim(dim) {}

    Family                                 _family;
    std::size_t                            _dim;
    std::vector<std::vector<std::size_t>> _table;
    std::vector<bool>                      _left_cancellable;
    std::vector<bool>                      _right_cancellable;
  };

  //! As = {a*s : a in A}.
  FinSubset right_translate(Semigroup const& sg, FinSubset const& A, Element const& s);
  //! sA = {s*a : a in A}.
  FinSubset left_translate(Semigroup const& sg, Element const& s, FinSubset const& A);
  //! KA = {k*a : k in K, a in A}.
  FinSubset product(Semigroup const& sg, FinSubset const& K, FinSubset const& A);
  //! The preimage L_k^{-1}(X) = {t : k*t in X}, computed by left division.
  FinSubset left_preimage(Semigroup const& sg, Element const& k, FinSubset const& X);

  struct CancellabilityVerdict {
    Element element;
    bool    left_cancellable;
    bool    right_cancellable;
  };

  struct CancellativityReport {
    std::vector<CancellabilityVerdict> verdicts;
    //! True when verdicts are decided over the whole semigroup, false when
    //! injectivity was only checked on the sample.
    bool exhaustive;
  };

  CancellativityReport cancellativity_probe(Semigroup const& sg, FinSubset const& sample);

}  // namespace owlab

#endif  // OWLAB_SEMIGROUP_HPP_
