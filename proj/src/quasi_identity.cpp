#include "lrbqv/quasi_identity.hpp"

#include <algorithm>
#include <cctype>

namespace lrbqv {

  namespace {
    bool valid_symbol(std::string const& s) {
      if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        auto const u = static_cast<unsigned char>(c);
        return std::islower(u) || std::isdigit(u);
      });
    }

    // Tokenizer and recursive-descent parser for the quasi-identity grammar.
    class QiParser {
     public:
      explicit QiParser(std::string_view text) : _text(text) {}

      QuasiIdentity parse() {
        std::vector<SymbolicEquation> premises;
        skip();
        if (!at("=>")) {
          premises.push_back(equation());
          while (at("&")) {
            advance(1);
            premises.push_back(equation());
          }
        }
        expect("=>");
        SymbolicEquation conclusion = equation();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return QuasiIdentity(premises, conclusion);
      }

     private:
      void skip() {
        while (_pos < _text.size()) {
          char const c = _text[_pos];
          if (c == '#') {
            while (_pos < _text.size() && _text[_pos] != '\n') {
              ++_pos;
            }
          } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++_pos;
          } else {
            break;
          }
        }
      }

      bool at(std::string_view token) {
        skip();
        return _text.substr(_pos, token.size()) == token;
      }

      void advance(std::size_t k) {
        _pos += k;
      }

      void expect(std::string_view token) {
        if (!at(token)) {
          fail("expected '" + std::string(token) + "'");
        }
        advance(token.size());
      }

      bool at_identifier() {
        skip();
        return _pos < _text.size()
               && std::islower(static_cast<unsigned char>(_text[_pos]));
      }

      std::string identifier() {
        if (!at_identifier()) {
          fail("expected a variable");
        }
        std::size_t const start = _pos;
        while (_pos < _text.size()
               && (std::islower(static_cast<unsigned char>(_text[_pos]))
                   || std::isdigit(static_cast<unsigned char>(_text[_pos])))) {
          ++_pos;
        }
        return std::string(_text.substr(start, _pos - start));
      }

      SymbolicTerm term() {
        if (!at_identifier()) {
          fail("empty term");
        }
        SymbolicTerm t{identifier()};
        while (true) {
          if (at("*")) {
            advance(1);
            t.push_back(identifier());
          } else if (at_identifier()) {
            t.push_back(identifier());
          } else {
            return t;
          }
        }
      }

      SymbolicEquation equation() {
        SymbolicTerm lhs = term();
        // "=" but not the "=>" separator.
        if (!at("=") || at("=>")) {
          fail("expected '='");
        }
        advance(1);
        SymbolicTerm rhs = term();
        return {std::move(lhs), std::move(rhs)};
      }

      [[noreturn]] void fail(std::string const& what) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < _pos && i < _text.size(); ++i) {
          if (_text[i] == '\n') {
            ++line;
            column = 1;
          } else {
            ++column;
          }
        }
        throw ParseError("syntax error at line " + std::to_string(line)
                             + ", column " + std::to_string(column) + ": "
                             + what,
                         line,
                         column);
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

    std::string format_term(QuasiIdentity const& q, Term const& t) {
      std::string out;
      for (std::size_t i = 0; i < t.word.size(); ++i) {
        out += (i == 0 ? "" : "*") + q.variables()[t.word[i]];
      }
      return out;
    }

    std::string format_equation(QuasiIdentity const& q, Equation const& e) {
      return format_term(q, e.lhs) + " = " + format_term(q, e.rhs);
    }

    std::string var(std::string const& stem, std::size_t k) {
      return stem + std::to_string(k);
    }
  }  // namespace

  QuasiIdentity::QuasiIdentity(std::vector<SymbolicEquation> const& premises,
                               SymbolicEquation const&              conclusion) {
    auto intern = [this](SymbolicTerm const& t) {
      if (t.empty()) {
        throw PreconditionError("quasi-identity term is empty");
      }
      Term out;
      for (auto const& s : t) {
        if (!valid_symbol(s)) {
          throw PreconditionError("bad variable symbol '" + s + "'");
        }
        auto it = std::find(_variables.begin(), _variables.end(), s);
        if (it == _variables.end()) {
          _variables.push_back(s);
          out.word.push_back(_variables.size() - 1);
        } else {
          out.word.push_back(static_cast<std::size_t>(it - _variables.begin()));
        }
      }
      return out;
    };
    for (auto const& e : premises) {
      Term lhs = intern(e.lhs);
      Term rhs = intern(e.rhs);
      _premises.push_back({std::move(lhs), std::move(rhs)});
    }
    Term lhs    = intern(conclusion.lhs);
    Term rhs    = intern(conclusion.rhs);
    _conclusion = {std::move(lhs), std::move(rhs)};
  }

  QuasiIdentity parse_qi(std::string_view text) {
    return QiParser(text).parse();
  }

  std::string format_qi(QuasiIdentity const& q) {
    std::string out;
    for (std::size_t i = 0; i < q.premises().size(); ++i) {
      out += (i == 0 ? "" : " & ") + format_equation(q, q.premises()[i]);
    }
    out += q.premises().empty() ? "=> " : " => ";
    return out + format_equation(q, q.conclusion());
  }

  QuasiIdentity gen_Q(std::size_t n) {
    if (n == 0 || n % 2 == 0) {
      throw PreconditionError("gen_Q: n must be odd and positive");
    }
    std::vector<SymbolicEquation> premises{{{"a", "b"}, {"a"}},
                                           {{"b", "a"}, {"b"}}};
    for (std::size_t k = 1; k <= n; ++k) {
      premises.push_back({{var("a", k), "a"}, {var("a", k), "b"}});
    }
    // a <= a1 >= a2 <= a3 >= ... <= an >= b, the upper points at odd k.
    auto point = [n](std::size_t k) {
      return k == 0 ? std::string("a") : k == n + 1 ? std::string("b") : var("a", k);
    };
    for (std::size_t k = 1; k <= n; k += 2) {
      premises.push_back({{var("a", k), point(k - 1)}, {point(k - 1)}});
      premises.push_back({{var("a", k), point(k + 1)}, {point(k + 1)}});
    }
    return QuasiIdentity(premises, {{"a"}, {"b"}});
  }

  QuasiIdentity gen_Q_prime(std::size_t n) {
    QuasiIdentity const           q = gen_Q(n);
    std::vector<SymbolicEquation> premises;
    auto symbolic = [&q](Term const& t) {
      SymbolicTerm s;
      for (auto v : t.word) {
        s.push_back(q.variables()[v]);
      }
      return s;
    };
    for (auto const& e : q.premises()) {
      premises.push_back({symbolic(e.lhs), symbolic(e.rhs)});
    }
    // a in S a_k, witnessed by y_k.
    for (std::size_t k = 1; k <= n; ++k) {
      premises.push_back({{var("y", k), var("a", k)}, {"a"}});
    }
    return QuasiIdentity(premises, {{"a"}, {"b"}});
  }

  element_type evaluate_term(FiniteSemigroup const&           S,
                             Term const&                      t,
                             std::vector<element_type> const& assignment) {
    element_type v = assignment[t.word.front()];
    for (std::size_t i = 1; i < t.word.size(); ++i) {
      v = S.product(v, assignment[t.word[i]]);
    }
    return v;
  }

  namespace {
    class QiSearch {
     public:
      QiSearch(FiniteSemigroup const& S, QuasiIdentity const& q, std::size_t budget)
          : _S(S),
            _q(q),
            _budget(budget),
            _k(q.variables().size()),
            _assignment(_k, 0),
            _ready(_k) {
        auto last_var = [](Equation const& e) {
          std::size_t m = 0;
          for (auto v : e.lhs.word) {
            m = std::max(m, v);
          }
          for (auto v : e.rhs.word) {
            m = std::max(m, v);
          }
          return m;
        };
        for (auto const& e : q.premises()) {
          _ready[last_var(e)].push_back(&e);
        }
      }

      QiResult run() {
        QiResult r;
        if (search(0)) {
          r.satisfied      = false;
          r.counterexample = _assignment;
        }
        return r;
      }

     private:
      bool holds(Equation const& e) const {
        return evaluate_term(_S, e.lhs, _assignment)
               == evaluate_term(_S, e.rhs, _assignment);
      }

      // True when a counterexample extends the current partial assignment.
      bool search(std::size_t depth) {
        if (depth == _k) {
          return !holds(_q.conclusion());
        }
        for (element_type v = 0; v < _S.order(); ++v) {
          if (++_visited > _budget) {
            throw BudgetExceeded("evaluate: more than " + std::to_string(_budget)
                                 + " assignments visited");
          }
          _assignment[depth] = v;
          bool ok            = true;
          for (Equation const* e : _ready[depth]) {
            if (!holds(*e)) {
              ok = false;
              break;
            }
          }
          if (ok && search(depth + 1)) {
            return true;
          }
        }
        return false;
      }

      FiniteSemigroup const&                 _S;
      QuasiIdentity const&                   _q;
      std::size_t                            _budget;
      std::size_t                            _k;
      std::size_t                            _visited = 0;
      std::vector<element_type>              _assignment;
      std::vector<std::vector<Equation const*>> _ready;
    };
  }  // namespace

  QiResult evaluate(FiniteSemigroup const& S,
                    QuasiIdentity const&   q,
                    std::size_t            budget) {
    return QiSearch(S, q, budget).run();
  }

  std::string format_qi_result(FiniteSemigroup const& S,
                               QuasiIdentity const&   q,
                               QiResult const&        r) {
    if (r.satisfied) {
      return "SATISFIED";
    }
    std::string out = "COUNTEREXAMPLE";
    for (std::size_t v = 0; v < q.variables().size(); ++v) {
      out += " " + q.variables()[v] + "=" + S.name(r.counterexample[v]);
    }
    return out;
  }

}  // namespace lrbqv
