#include "lrbqv/semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace lrbqv {

  namespace {
    std::string join_errors(std::vector<ValidationError> const& errors) {
      std::string out = "invalid semigroup table";
      for (auto const& e : errors) {
        out += "\n  " + e.message;
      }
      return out;
    }

    void check_names(std::vector<std::string> const& names,
                     std::vector<ValidationError>&   errors) {
      std::unordered_set<std::string> seen;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) {
          errors.push_back({ValidationErrorKind::empty_name,
                            "element " + std::to_string(i) + " has an empty name",
                            {i, 0, 0}});
        } else if (!seen.insert(names[i]).second) {
          errors.push_back({ValidationErrorKind::duplicate_name,
                            "duplicate element name '" + names[i] + "'",
                            {i, 0, 0}});
        }
      }
    }

    bool has_structural_errors(std::vector<ValidationError> const& errors) {
      return std::any_of(errors.begin(), errors.end(), [](auto const& e) {
        return e.kind != ValidationErrorKind::non_associative;
      });
    }

    void check_associativity(std::vector<std::string> const&  names,
                             std::vector<element_type> const& t,
                             std::vector<ValidationError>&    errors) {
      std::size_t const n = names.size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          std::size_t const xy = t[x * n + y];
          for (std::size_t z = 0; z < n; ++z) {
            std::size_t const lhs = t[xy * n + z];
            std::size_t const rhs = t[x * n + t[y * n + z]];
            if (lhs != rhs) {
              errors.push_back(
                  {ValidationErrorKind::non_associative,
                   "associativity fails at (" + names[x] + ", " + names[y]
                       + ", " + names[z] + "): (xy)z = " + names[lhs]
                       + " but x(yz) = " + names[rhs],
                   {x, y, z}});
            }
          }
        }
      }
    }
  }  // namespace

  InvalidSemigroup::InvalidSemigroup(std::vector<ValidationError> errors)
      : Error(join_errors(errors)), _errors(std::move(errors)) {}

  FiniteSemigroup::FiniteSemigroup(std::vector<std::string>  names,
                                   std::vector<element_type> t)
      : _names(std::move(names)), _table(std::move(t)) {
    std::size_t const n = order();
    for (element_type e = 0; e < n; ++e) {
      bool two_sided = true;
      for (element_type x = 0; x < n && two_sided; ++x) {
        two_sided = product(e, x) == x && product(x, e) == x;
      }
      if (two_sided) {
        _identity = e;  // unique when it exists
        break;
      }
    }
    _is_lrb = !find_lrb_violation(*this).has_value();
  }

  FiniteSemigroup FiniteSemigroup::make(std::vector<std::string>  names,
                                        std::vector<element_type> flat_table) {
    std::size_t const            n = names.size();
    std::vector<ValidationError> errors;
    if (n == 0) {
      errors.push_back({ValidationErrorKind::non_square,
                        "a semigroup needs at least one element",
                        {}});
      throw InvalidSemigroup(std::move(errors));
    }
    if (flat_table.size() != n * n) {
      errors.push_back({ValidationErrorKind::non_square,
                        "table has " + std::to_string(flat_table.size())
                            + " entries, expected " + std::to_string(n * n),
                        {}});
    }
    check_names(names, errors);
    if (errors.empty()) {
      for (std::size_t i = 0; i < flat_table.size(); ++i) {
        if (flat_table[i] >= n) {
          errors.push_back({ValidationErrorKind::out_of_range,
                            "entry at row " + std::to_string(i / n)
                                + ", column " + std::to_string(i % n)
                                + " is out of range",
                            {i / n, i % n, flat_table[i]}});
        }
      }
    }
    if (errors.empty()) {
      check_associativity(names, flat_table, errors);
    }
    if (!errors.empty()) {
      throw InvalidSemigroup(std::move(errors));
    }
    return FiniteSemigroup(std::move(names), std::move(flat_table));
  }

  FiniteSemigroup
  FiniteSemigroup::make_unchecked(std::vector<std::string>  names,
                                  std::vector<element_type> flat_table) {
    std::size_t const            n = names.size();
    std::vector<ValidationError> errors;
    if (n == 0 || flat_table.size() != n * n) {
      errors.push_back(
          {ValidationErrorKind::non_square, "table is not square", {}});
    }
    check_names(names, errors);
    for (std::size_t i = 0; errors.empty() && i < flat_table.size(); ++i) {
      if (flat_table[i] >= n) {
        errors.push_back({ValidationErrorKind::out_of_range,
                          "entry out of range",
                          {i / n, i % n, flat_table[i]}});
      }
    }
    if (!errors.empty()) {
      throw InvalidSemigroup(std::move(errors));
    }
    return FiniteSemigroup(std::move(names), std::move(flat_table));
  }

  std::optional<element_type>
  FiniteSemigroup::find(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<element_type>(it - _names.begin());
  }

  element_type FiniteSemigroup::at(std::string_view name) const {
    if (auto x = find(name)) {
      return *x;
    }
    throw PreconditionError("no element named '" + std::string(name) + "'");
  }

  FiniteSemigroup FiniteSemigroup::renamed(std::vector<std::string> names) const {
    if (names.size() != order()) {
      throw PreconditionError("renamed: wrong number of names");
    }
    std::vector<ValidationError> errors;
    check_names(names, errors);
    if (!errors.empty()) {
      throw InvalidSemigroup(std::move(errors));
    }
    FiniteSemigroup copy = *this;
    copy._names          = std::move(names);
    return copy;
  }

  ValidationResult validate(RawTable const& raw) {
    ValidationResult  result;
    auto&             errors = result.errors;
    std::size_t const n      = raw.names.size();
    if (n == 0) {
      errors.push_back({ValidationErrorKind::non_square,
                        "a semigroup needs at least one element",
                        {}});
      return result;
    }
    if (raw.rows.size() != n) {
      errors.push_back({ValidationErrorKind::name_count,
                        std::to_string(n) + " names but "
                            + std::to_string(raw.rows.size()) + " rows",
                        {}});
    }
    for (std::size_t r = 0; r < raw.rows.size(); ++r) {
      if (raw.rows[r].size() != raw.rows.size()) {
        errors.push_back({ValidationErrorKind::non_square,
                          "row " + std::to_string(r) + " has "
                              + std::to_string(raw.rows[r].size())
                              + " entries, expected "
                              + std::to_string(raw.rows.size()),
                          {r, 0, 0}});
      }
    }
    check_names(raw.names, errors);
    if (has_structural_errors(errors)) {
      return result;
    }
    std::vector<element_type> flat;
    flat.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t const v = raw.rows[r][c];
        if (v >= n) {
          errors.push_back({ValidationErrorKind::out_of_range,
                            "entry at (" + raw.names[r] + ", " + raw.names[c]
                                + ") is " + std::to_string(v)
                                + ", outside [0, " + std::to_string(n) + ")",
                            {r, c, v}});
        }
        flat.push_back(static_cast<element_type>(v));
      }
    }
    if (!errors.empty()) {
      return result;
    }
    check_associativity(raw.names, flat, errors);
    if (errors.empty()) {
      result.semigroup = FiniteSemigroup::make_unchecked(raw.names, std::move(flat));
    }
    return result;
  }

  std::optional<LrbViolation> find_lrb_violation(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    for (element_type x = 0; x < n; ++x) {
      if (S.product(x, x) != x) {
        return LrbViolation{"xx=x", {x}};
      }
    }
    for (element_type x = 0; x < n; ++x) {
      for (element_type y = 0; y < n; ++y) {
        element_type const xy = S.product(x, y);
        if (S.product(xy, x) != xy) {
          return LrbViolation{"xyx=xy", {x, y}};
        }
      }
    }
    return std::nullopt;
  }

  void require_lrb(FiniteSemigroup const& S, std::string_view operation) {
    if (S.is_lrb()) {
      return;
    }
    auto               v = find_lrb_violation(S);
    std::ostringstream msg;
    msg << operation << ": not a left regular band (" << v->identity
        << " fails at";
    char const* var[] = {"x", "y"};
    for (std::size_t i = 0; i < v->witnesses.size(); ++i) {
      msg << ' ' << var[i] << '=' << S.name(v->witnesses[i]);
    }
    msg << ')';
    throw PreconditionError(msg.str());
  }

  bool is_commutative(FiniteSemigroup const& S) {
    for (element_type x = 0; x < S.order(); ++x) {
      for (element_type y = x + 1; y < S.order(); ++y) {
        if (S.product(x, y) != S.product(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_left_zero_semigroup(FiniteSemigroup const& S) {
    for (element_type x = 0; x < S.order(); ++x) {
      for (element_type y = 0; y < S.order(); ++y) {
        if (S.product(x, y) != x) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_semilattice(FiniteSemigroup const& S) {
    for (element_type x = 0; x < S.order(); ++x) {
      if (S.product(x, x) != x) {
        return false;
      }
    }
    return is_commutative(S);
  }

  element_set make_element_set(std::vector<element_type> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  }

  std::string format_element_set(FiniteSemigroup const& S, element_set const& X) {
    std::string out = "{";
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += S.name(X[i]);
    }
    return out + "}";
  }

}  // namespace lrbqv
