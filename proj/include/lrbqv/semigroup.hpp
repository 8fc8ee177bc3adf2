#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrbqv/error.hpp"

namespace lrbqv {

  //! Elements are identified by their index in the multiplication table.
  using element_type = std::uint32_t;

  //! A set of elements, kept sorted and duplicate-free.
  using element_set = std::vector<element_type>;

  struct ElementPair {
    element_type a;
    element_type b;

    friend bool operator==(ElementPair const&, ElementPair const&) = default;
    friend auto operator<=>(ElementPair const&, ElementPair const&) = default;
  };

  //! Unvalidated input: one name per element and one row of product indices
  //! per element.
  struct RawTable {
    std::vector<std::string>              names;
    std::vector<std::vector<std::size_t>> rows;
  };

  enum class ValidationErrorKind {
    non_square,
    name_count,
    empty_name,
    duplicate_name,
    out_of_range,
    non_associative
  };

  struct ValidationError {
    ValidationErrorKind kind;
    std::string         message;
    //! For non_associative: the failing triple (x, y, z). For out_of_range:
    //! (row, column, value). Otherwise unused.
    std::array<std::size_t, 3> where{};
  };

  class FiniteSemigroup;

  //! Exception carrying the full list of problems found by `validate`.
  class InvalidSemigroup : public Error {
   public:
    explicit InvalidSemigroup(std::vector<ValidationError> errors);

    std::vector<ValidationError> const& errors() const noexcept {
      return _errors;
    }

   private:
    std::vector<ValidationError> _errors;
  };

  //! A finite semigroup given by its multiplication table.
  //!
  //! Instances can only be obtained through `validate` or
  //! `FiniteSemigroup::make`, so the table is always closed and associative.
  //! Everything derived from the table that the library reads repeatedly
  //! (the identity, whether the semigroup is a left regular band) is computed
  //! once at construction; the object is immutable afterwards.
  class FiniteSemigroup {
   public:
    //! Validates and builds; throws InvalidSemigroup listing every problem.
    static FiniteSemigroup make(std::vector<std::string>  names,
                                std::vector<element_type> flat_table);

    //! Builds from a row-major table without the associativity scan. Only for
    //! constructions that are associative by construction (products,
    //! quotients, restrictions); closure and names are still checked.
    static FiniteSemigroup make_unchecked(std::vector<std::string>  names,
                                          std::vector<element_type> flat_table);

    std::size_t order() const noexcept {
      return _names.size();
    }

    element_type product(element_type x, element_type y) const noexcept {
      return _table[x * order() + y];
    }

    std::span<element_type const> row(element_type x) const noexcept {
      return {_table.data() + x * order(), order()};
    }

    std::vector<element_type> const& flat_table() const noexcept {
      return _table;
    }

    std::string const& name(element_type x) const {
      return _names.at(x);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::optional<element_type> find(std::string_view name) const;

    //! Index of a named element; throws PreconditionError if absent.
    element_type at(std::string_view name) const;

    std::optional<element_type> identity() const noexcept {
      return _identity;
    }

    bool is_lrb() const noexcept {
      return _is_lrb;
    }

    //! Same table, new names (must be distinct and non-empty).
    FiniteSemigroup renamed(std::vector<std::string> names) const;

    friend bool operator==(FiniteSemigroup const& x, FiniteSemigroup const& y) {
      return x._names == y._names && x._table == y._table;
    }

   private:
    FiniteSemigroup(std::vector<std::string> names, std::vector<element_type> t);

    std::vector<std::string>    _names;
    std::vector<element_type>   _table;
    std::optional<element_type> _identity;
    bool                        _is_lrb = false;
  };

  struct ValidationResult {
    std::optional<FiniteSemigroup> semigroup;
    std::vector<ValidationError>   errors;

    bool ok() const noexcept {
      return semigroup.has_value();
    }
  };

  //! Checks shape, names, closure and associativity. Every associativity
  //! failure is reported with its triple, in lexicographic order.
  ValidationResult validate(RawTable const& raw);

  //! The first violated left regular band identity and its witnesses.
  struct LrbViolation {
    std::string               identity;   // "xx=x" or "xyx=xy"
    std::vector<element_type> witnesses;  // (x) or (x, y)
  };

  //! Empty iff x^2 = x and xyx = xy hold throughout. Idempotency is scanned
  //! first, then pairs in lexicographic order.
  std::optional<LrbViolation> find_lrb_violation(FiniteSemigroup const& S);

  inline bool is_left_regular_band(FiniteSemigroup const& S) {
    return S.is_lrb();
  }

  //! Throws PreconditionError naming the violated identity unless S is a
  //! left regular band.
  void require_lrb(FiniteSemigroup const& S, std::string_view operation);

  bool is_commutative(FiniteSemigroup const& S);
  bool is_left_zero_semigroup(FiniteSemigroup const& S);
  bool is_semilattice(FiniteSemigroup const& S);

  //! Sorted copy with duplicates removed.
  element_set make_element_set(std::vector<element_type> xs);

  std::string format_element_set(FiniteSemigroup const& S, element_set const& X);

}  // namespace lrbqv
