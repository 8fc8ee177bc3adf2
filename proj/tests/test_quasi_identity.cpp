#include <doctest.h>

#include <optional>
#include <random>

#include "corpus.hpp"
#include "lrbqv/arrangements.hpp"
#include "lrbqv/membership.hpp"
#include "lrbqv/quasi_identity.hpp"
#include "lrbqv/witness_family.hpp"

using namespace lrbqv;

namespace {
  bool holds(FiniteSemigroup const& S, Equation const& e, std::vector<element_type> const& v) {
    return evaluate_term(S, e.lhs, v) == evaluate_term(S, e.rhs, v);
  }

  bool is_counterexample(FiniteSemigroup const& S, QuasiIdentity const& q,
                         std::vector<element_type> const& v) {
    for (auto const& p : q.premises()) {
      if (!holds(S, p, v)) {
        return false;
      }
    }
    return !holds(S, q.conclusion(), v);
  }

  // Runs through every assignment from the top down (last variable slowest,
  // largest values first) and keeps the least counterexample seen.
  std::optional<std::vector<element_type>> reversed_least(FiniteSemigroup const& S,
                                                          QuasiIdentity const&   q) {
    std::size_t const n = q.variables().size();
    auto const top = static_cast<element_type>(S.order() - 1);
    std::vector<element_type> v(n, top);
    std::optional<std::vector<element_type>> best;
    while (true) {
      if (is_counterexample(S, q, v) && (!best || v < *best)) {
        best = v;
      }
      std::size_t k = 0;
      while (k < n && v[k] == 0) {
        v[k++] = top;
      }
      if (k == n) {
        return best;
      }
      --v[k];
    }
  }

  FiniteSemigroup cyclic_group_2() {
    return FiniteSemigroup::make({"e", "g"}, {0, 1, 1, 0});
  }

  std::string const q3_text =
      "a*b = a & b*a = b & a1*a = a1*b & a2*a = a2*b & a3*a = a3*b"
      " & a1*a = a & a1*a2 = a2 & a3*a2 = a2 & a3*b = b => a = b";
}  // namespace

TEST_CASE("parsing") {
  auto const lc = parse_qi("x*y = x*z => y = z");
  CHECK(lc.variables() == std::vector<std::string>{"x", "y", "z"});
  REQUIRE(lc.premises().size() == 1);
  CHECK(lc.premises()[0].lhs == Term{{0, 1}});
  CHECK(lc.conclusion().rhs == Term{{2}});
  CHECK(format_qi(lc) == "x*y = x*z => y = z");

  CHECK(parse_qi("x y = x z => y = z") == lc);
  CHECK(parse_qi("# left cancellation\nx*y = x*z\n  => y = z  # done\n") == lc);

  auto const idem = parse_qi("=> x*x = x");
  CHECK(idem.premises().empty());
  CHECK(format_qi(idem) == "=> x*x = x");
  CHECK(parse_qi(format_qi(idem)) == idem);

  auto const q3 = parse_qi(q3_text);
  CHECK(q3.variables() == std::vector<std::string>{"a", "b", "a1", "a2", "a3"});
  CHECK(q3.premises().size() == 9);
}

TEST_CASE("syntax errors carry positions") {
  auto where = [](std::string const& text) {
    try {
      parse_qi(text);
    } catch (ParseError const& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(where("x = y") != std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(where("x = => y = x") == std::pair<std::size_t, std::size_t>{1, 5});
  CHECK(where("x = y &\n => y = x") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(where("x = y &\n x = Y => x = y") == std::pair<std::size_t, std::size_t>{2, 6});
  CHECK(where("x = y => y = x extra = z") != std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(where("x == y => x = y").first == 1);
  CHECK_THROWS_AS(parse_qi(""), ParseError);
}

TEST_CASE("the zig-zag family") {
  auto const q3 = gen_Q(3);
  CHECK(format_qi(q3) == q3_text);
  CHECK(parse_qi(format_qi(q3)) == q3);
  CHECK(format_qi(gen_Q(1))
        == "a*b = a & b*a = b & a1*a = a1*b & a1*a = a & a1*b = b => a = b");
  for (std::size_t n : {1, 3, 5, 7, 9}) {
    CHECK(gen_Q(n).variables().size() == n + 2);
    CHECK(gen_Q_prime(n).variables().size() == 2 * n + 2);
    CHECK(parse_qi(format_qi(gen_Q_prime(n))) == gen_Q_prime(n));
  }
  CHECK(gen_Q_prime(1).variables() == std::vector<std::string>{"a", "b", "a1", "y1"});
  CHECK(format_qi(gen_Q_prime(1)).find("& y1*a1 = a =>") != std::string::npos);
  CHECK_THROWS_AS(gen_Q(2), PreconditionError);
  CHECK_THROWS_AS(gen_Q(0), PreconditionError);
  CHECK_THROWS_AS(gen_Q_prime(4), PreconditionError);
}

TEST_CASE("evaluation") {
  auto const lc = parse_qi("x*y = x*z => y = z");
  CHECK(evaluate(cyclic_group_2(), lc).satisfied);

  auto const L = gen_L();
  auto const r = evaluate(L, lc);
  REQUIRE_FALSE(r.satisfied);
  CHECK(format_qi_result(L, lc, r) == "COUNTEREXAMPLE x=+ y=0 z=+");
  CHECK(format_qi_result(L, lc, evaluate(cyclic_group_2(), lc)) == "SATISFIED");

  CHECK(evaluate(L, gen_Q(3)).satisfied);
  CHECK(evaluate(gen_ZL(), gen_Q_prime(1)).satisfied);
  CHECK(evaluate(gen_ZL(), gen_Q(1)).satisfied);

  auto const ZL = gen_ZL();
  CHECK(format_qi_result(ZL, gen_Q(3), evaluate(ZL, gen_Q(3)))
        == "COUNTEREXAMPLE a=+ b=- a1=+ a2=z a3=-");
  CHECK(evaluate(ZL, gen_Q_prime(3)).satisfied);
}

TEST_CASE("B_3 violates Q'_7 along the Hasse path") {
  auto const B = b_n(3);
  auto const r = evaluate(B, gen_Q_prime(7));
  REQUIRE_FALSE(r.satisfied);
  std::vector<std::string> got;
  for (std::size_t k = 0; k < 9; ++k) {
    got.push_back(B.name(r.counterexample[k]));
  }
  CHECK(got == std::vector<std::string>{"C_1", "C_6", "r_2", "C_2", "r_3", "C", "r_5", "C_5", "r_6"});
  CHECK(is_counterexample(B, gen_Q_prime(7), r.counterexample));
  CHECK(evaluate(B, gen_Q_prime(5)).satisfied);
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(evaluate(gen_Z(), gen_Q_prime(3), 100), BudgetExceeded);
  CHECK_NOTHROW(evaluate(gen_L(), gen_Q(1), 1000));
}

TEST_CASE("agrees with a reversed enumeration") {
  std::vector<QuasiIdentity> const qs{parse_qi("x*y = x*z => y = z"),
                                      parse_qi("x*y = y*x => x = y"),
                                      parse_qi("=> x*y*x = x*y"),
                                      parse_qi("x*y = x & y*x = y => x = y"),
                                      gen_Q(1), gen_Q(3), gen_Q_prime(1)};
  std::vector<std::pair<std::string, FiniteSemigroup>> corpus;
  for (auto const& [name, S] : testing::fixed_corpus()) {
    if (S.order() <= 5) {
      corpus.emplace_back(name, S);
    }
  }
  corpus.emplace_back("Z2", cyclic_group_2());
  for (auto const& [name, S] : corpus) {
    for (auto const& q : qs) {
      CAPTURE(name);
      CAPTURE(format_qi(q));
      auto const fast = evaluate(S, q);
      auto const slow = reversed_least(S, q);
      CHECK(fast.satisfied == !slow.has_value());
      if (slow) {
        CHECK(fast.counterexample == *slow);
      }
    }
  }
}

TEST_CASE("(CC) and the Q_n agree") {
  std::mt19937 rng(17);
  for (int k = 0; k < 40; ++k) {
    auto const S = testing::random_lrb(rng, 9);
    bool const cc = check_cc(S).satisfied();
    bool all_q = true;
    for (std::size_t n = 1; n <= S.order() + 2 && n <= 9; n += 2) {
      all_q = all_q && evaluate(S, gen_Q(n)).satisfied;
    }
    CHECK(cc == all_q);
  }
}

TEST_CASE("counterexamples extend from Q_n to Q_n+2") {
  auto const ZL = gen_ZL();
  auto const B = b_n(3);
  for (auto const* S : {&ZL, &B}) {
    for (std::size_t n = 1; n <= 7; n += 2) {
      auto const r = evaluate(*S, gen_Q(n));
      if (r.satisfied) {
        continue;
      }
      // a <= a >= a <= a1 >= ... : two extra copies of a in front.
      std::vector<element_type> v{r.counterexample[0], r.counterexample[1],
                                  r.counterexample[0], r.counterexample[0]};
      v.insert(v.end(), r.counterexample.begin() + 2, r.counterexample.end());
      CHECK(is_counterexample(*S, gen_Q(n + 2), v));
    }
  }
}
