#include "lrbqv/membership.hpp"

#include <algorithm>
#include <deque>

#include "lrbqv/green.hpp"

namespace lrbqv {

  namespace {
    bool l_related(FiniteSemigroup const& S, element_type a, element_type b) {
      return S.product(a, b) == a && S.product(b, a) == b;
    }

    std::vector<bool> as_bitmap(std::size_t n, element_set const& X) {
      std::vector<bool> bits(n, false);
      for (element_type x : X) {
        bits[x] = true;
      }
      return bits;
    }

    // Shortest path from a to b in the comparability graph restricted to
    // `inside`, or an empty vector.
    std::vector<element_type> zig_zag(ROrder const&            order,
                                      std::vector<bool> const& inside,
                                      element_type             a,
                                      element_type             b) {
      std::size_t const         n = order.size();
      constexpr element_type    none = ~element_type{0};
      std::vector<element_type> parent(n, none);
      std::deque<element_type>  queue{a};
      parent[a] = a;
      while (!queue.empty()) {
        element_type const x = queue.front();
        queue.pop_front();
        if (x == b) {
          break;
        }
        for (element_type y = 0; y < n; ++y) {
          if (inside[y] && parent[y] == none && order.comparable(x, y)) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      if (parent[b] == none) {
        return {};
      }
      std::vector<element_type> path{b};
      while (path.back() != a) {
        path.push_back(parent[path.back()]);
      }
      std::reverse(path.begin(), path.end());
      return path;
    }

    ConditionResult check(FiniteSemigroup const& S, Condition c) {
      require_lrb(S, c == Condition::cc ? "check_cc" : "check_cc_prime");
      ROrder const order(S);
      for (element_type a = 0; a < S.order(); ++a) {
        for (element_type b = 0; b < S.order(); ++b) {
          if (a == b || !l_related(S, a, b)) {
            continue;
          }
          ElementPair const p{a, b};
          auto const inside = as_bitmap(
              S.order(), c == Condition::cc ? s_ab(S, p) : s_ab_prime(S, p));
          if (!inside[a] || !inside[b]) {
            continue;
          }
          auto path = zig_zag(order, inside, a, b);
          if (path.empty()) {
            continue;
          }
          std::vector<Step> steps;
          for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            steps.push_back(order.leq(path[i], path[i + 1]) ? Step::up
                                                            : Step::down);
          }
          return {c,
                  ZigZagWitness{p,
                                std::move(path),
                                std::move(steps),
                                c == Condition::cc ? Arena::real
                                                   : Arena::complex}};
        }
      }
      return {c, std::nullopt};
    }
  }  // namespace

  element_set s_ab(FiniteSemigroup const& S, ElementPair p) {
    element_set out;
    for (element_type s = 0; s < S.order(); ++s) {
      if (S.product(s, p.a) == S.product(s, p.b)) {
        out.push_back(s);
      }
    }
    return out;
  }

  element_set s_ab_prime(FiniteSemigroup const& S, ElementPair p) {
    element_set out;
    for (element_type s : s_ab(S, p)) {
      for (element_type x = 0; x < S.order(); ++x) {
        if (S.product(x, s) == p.a) {
          out.push_back(s);
          break;
        }
      }
    }
    return out;
  }

  ConditionResult check_cc(FiniteSemigroup const& S) {
    return check(S, Condition::cc);
  }

  ConditionResult check_cc_prime(FiniteSemigroup const& S) {
    return check(S, Condition::cc_prime);
  }

  ConditionResult check_condition(FiniteSemigroup const& S, Condition c) {
    return check(S, c);
  }

  std::optional<std::string> witness_problem(FiniteSemigroup const& S,
                                             ZigZagWitness const&   w) {
    if (!S.is_lrb()) {
      return "semigroup is not a left regular band";
    }
    auto const [a, b] = w.pair;
    if (a >= S.order() || b >= S.order()) {
      return "pair out of range";
    }
    if (a == b) {
      return "pair is not distinct";
    }
    if (!l_related(S, a, b)) {
      return "pair is not L-related";
    }
    if (w.path.size() < 2 || w.path.front() != a || w.path.back() != b) {
      return "path does not run from a to b";
    }
    if (w.directions.size() + 1 != w.path.size()) {
      return "direction count does not match the path";
    }
    if (w.directions.size() > S.order() + 2) {
      return "path longer than |S| + 2";
    }
    auto const arena = as_bitmap(
        S.order(), w.arena == Arena::real ? s_ab(S, w.pair) : s_ab_prime(S, w.pair));
    ROrder const order(S);
    for (std::size_t i = 0; i < w.path.size(); ++i) {
      if (w.path[i] >= S.order() || !arena[w.path[i]]) {
        return "path leaves the arena at position " + std::to_string(i);
      }
    }
    for (std::size_t i = 0; i < w.directions.size(); ++i) {
      element_type const x = w.path[i], y = w.path[i + 1];
      bool const ok = w.directions[i] == Step::up ? order.leq(x, y) : order.leq(y, x);
      if (!ok) {
        return "step " + std::to_string(i) + " has the wrong direction";
      }
    }
    return std::nullopt;
  }

  std::string condition_label(Condition c) {
    return c == Condition::cc ? "cc" : "cc'";
  }

  std::string format_condition_result(FiniteSemigroup const& S,
                                      ConditionResult const& r) {
    if (r.satisfied()) {
      return "SATISFIED " + condition_label(r.condition);
    }
    auto const& w   = *r.witness;
    std::string out = "VIOLATION " + condition_label(r.condition) + " "
                      + S.name(w.pair.a) + " " + S.name(w.pair.b) + " : "
                      + S.name(w.path.front());
    for (std::size_t i = 0; i < w.directions.size(); ++i) {
      out += w.directions[i] == Step::up ? " <= " : " >= ";
      out += S.name(w.path[i + 1]);
    }
    return out;
  }

  std::string MembershipVerdict::statement() const {
    bool const        real = quasivariety == "qv(L)";
    std::string const kind = real ? "real" : "complex";
    if (member) {
      return "MEMBER " + quasivariety + ": embeds in a " + kind
             + " hyperplane face monoid";
    }
    return "NOT MEMBER " + quasivariety + ": does not embed in any " + kind
           + " hyperplane face monoid";
  }

  MembershipVerdict in_qv_L(FiniteSemigroup const& S) {
    auto r = check_cc(S);
    return {r.satisfied(), std::move(r), "qv(L)"};
  }

  MembershipVerdict in_qv_ZL(FiniteSemigroup const& S) {
    auto r = check_cc_prime(S);
    return {r.satisfied(), std::move(r), "qv(ZL)"};
  }

}  // namespace lrbqv
