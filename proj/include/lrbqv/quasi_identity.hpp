#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! A word as variable symbols, e.g. {"x", "y"} for xy.
  using SymbolicTerm = std::vector<std::string>;

  struct SymbolicEquation {
    SymbolicTerm lhs;
    SymbolicTerm rhs;
  };

  //! A non-empty word over the variables of its quasi-identity, as indices
  //! into `QuasiIdentity::variables()`.
  struct Term {
    std::vector<std::size_t> word;

    friend bool operator==(Term const&, Term const&) = default;
  };

  struct Equation {
    Term lhs;
    Term rhs;

    friend bool operator==(Equation const&, Equation const&) = default;
  };

  //! (u_1 = v_1) & ... & (u_n = v_n) => u = v.
  //!
  //! Variables are ordered by first appearance, reading the premises left to
  //! right and then the conclusion, so parse(format(q)) == q always holds.
  class QuasiIdentity {
   public:
    //! Throws PreconditionError on an empty term or a malformed symbol.
    QuasiIdentity(std::vector<SymbolicEquation> const& premises,
                  SymbolicEquation const&              conclusion);

    std::vector<std::string> const& variables() const noexcept {
      return _variables;
    }
    std::vector<Equation> const& premises() const noexcept {
      return _premises;
    }
    Equation const& conclusion() const noexcept {
      return _conclusion;
    }

    friend bool operator==(QuasiIdentity const&, QuasiIdentity const&) = default;

   private:
    std::vector<std::string> _variables;
    std::vector<Equation>    _premises;
    Equation                 _conclusion;
  };

  //! Grammar: premises joined by '&', then '=>', then the conclusion; an
  //! equation is `term = term`; a term is identifiers [a-z][a-z0-9]* joined by
  //! '*' or whitespace; '#' starts a comment running to the end of the line.
  //! A premise-free quasi-identity is written `=> u = v`. Throws ParseError
  //! with the line and column of the offending token.
  QuasiIdentity parse_qi(std::string_view text);

  //! Canonical text: `x*y = x*z => y = z`.
  std::string format_qi(QuasiIdentity const& q);

  //! The zig-zag quasi-identity Q_n (n odd): variables a, b, a1..an;
  //! premises ab = a, ba = b, a_k a = a_k b for every k, then
  //! a1 a = a, a1 a2 = a2, a3 a2 = a2, a3 a4 = a4, ..., an b = b;
  //! conclusion a = b. Throws PreconditionError unless n is odd and positive.
  QuasiIdentity gen_Q(std::size_t n);

  //! Q_n plus variables y1..yn and premises y_k a_k = a.
  QuasiIdentity gen_Q_prime(std::size_t n);

  constexpr std::size_t default_evaluation_budget = 100'000'000;

  struct QiResult {
    bool satisfied = true;
    //! Value of each variable in the least counterexample.
    std::vector<element_type> counterexample;
  };

  //! Exhaustive search over assignments in lexicographic order (variable
  //! order, then element index). Each premise is tested as soon as its
  //! variables are bound and prunes the subtree when it fails, so the first
  //! counterexample reached is the least one. Throws BudgetExceeded once more
  //! than `budget` partial assignments have been visited.
  QiResult evaluate(FiniteSemigroup const& S,
                    QuasiIdentity const&   q,
                    std::size_t            budget = default_evaluation_budget);

  //! Value of a term under an assignment.
  element_type evaluate_term(FiniteSemigroup const&           S,
                             Term const&                      t,
                             std::vector<element_type> const& assignment);

  //! "SATISFIED" or "COUNTEREXAMPLE a=x b=y ...".
  std::string format_qi_result(FiniteSemigroup const& S,
                               QuasiIdentity const&   q,
                               QiResult const&        r);

}  // namespace lrbqv
