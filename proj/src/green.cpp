#include "lrbqv/green.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "lrbqv/congruence.hpp"

namespace lrbqv {

  namespace {
    // S^1 x as a bitmap.
    std::vector<bool> principal_left_ideal(FiniteSemigroup const& S,
                                           element_type           x) {
      std::vector<bool> ideal(S.order(), false);
      ideal[x] = true;
      for (element_type s = 0; s < S.order(); ++s) {
        ideal[S.product(s, x)] = true;
      }
      return ideal;
    }

    std::string dot_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }
  }  // namespace

  Partition green_L_classes(FiniteSemigroup const& S) {
    std::map<std::vector<bool>, std::size_t> label_of;
    std::vector<std::size_t>                 labels(S.order());
    for (element_type x = 0; x < S.order(); ++x) {
      auto [it, inserted] = label_of.try_emplace(principal_left_ideal(S, x),
                                                 label_of.size());
      labels[x]           = it->second;
    }
    return Partition::from_labels(labels);
  }

  bool lrb_L_related(FiniteSemigroup const& S, ElementPair p) {
    require_lrb(S, "lrb_L_related");
    return S.product(p.a, p.b) == p.a && S.product(p.b, p.a) == p.b;
  }

  ROrder::ROrder(FiniteSemigroup const& S) : _n(S.order()), _leq(_n * _n) {
    require_lrb(S, "r_order");
    for (element_type x = 0; x < _n; ++x) {
      for (element_type y = 0; y < _n; ++y) {
        _leq[x * _n + y] = S.product(y, x) == x;
      }
    }
  }

  std::vector<ElementPair> ROrder::pairs() const {
    std::vector<ElementPair> out;
    for (element_type x = 0; x < _n; ++x) {
      for (element_type y = 0; y < _n; ++y) {
        if (leq(x, y)) {
          out.push_back({x, y});
        }
      }
    }
    return out;
  }

  std::vector<ElementPair> ROrder::covers() const {
    std::vector<ElementPair> out;
    for (element_type x = 0; x < _n; ++x) {
      for (element_type y = 0; y < _n; ++y) {
        if (x == y || !leq(x, y)) {
          continue;
        }
        bool between = false;
        for (element_type z = 0; z < _n && !between; ++z) {
          between = z != x && z != y && leq(x, z) && leq(z, y);
        }
        if (!between) {
          out.push_back({x, y});
        }
      }
    }
    return out;
  }

  std::size_t ROrder::degree(element_type x) const {
    std::size_t d = 0;
    for (element_type y = 0; y < _n; ++y) {
      d += (y != x && comparable(x, y));
    }
    return d;
  }

  std::vector<element_set> connected_components(FiniteSemigroup const& S,
                                                element_set const&     subset) {
    if (subset.empty()) {
      throw PreconditionError("connected_components: empty subset");
    }
    ROrder const      order(S);
    std::vector<bool> inside(S.order(), false);
    for (element_type x : subset) {
      inside.at(x) = true;
    }
    std::vector<bool>        seen(S.order(), false);
    std::vector<element_set> components;
    for (element_type start : subset) {
      if (seen[start]) {
        continue;
      }
      element_set              component;
      std::vector<element_type> stack{start};
      seen[start] = true;
      while (!stack.empty()) {
        element_type x = stack.back();
        stack.pop_back();
        component.push_back(x);
        for (element_type y = 0; y < S.order(); ++y) {
          if (inside[y] && !seen[y] && order.comparable(x, y)) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
      std::sort(component.begin(), component.end());
      components.push_back(std::move(component));
    }
    return components;
  }

  Partition component_partition(FiniteSemigroup const& S) {
    element_set all(S.order());
    for (element_type x = 0; x < S.order(); ++x) {
      all[x] = x;
    }
    return Partition(S.order(), connected_components(S, all));
  }

  LeftZeroQuotient least_left_zero_quotient(FiniteSemigroup const& S) {
    Partition P = component_partition(S);
    return {P, quotient(S, P)};
  }

  std::string hasse_dot(FiniteSemigroup const& S, std::string const& graph_name) {
    ROrder const       order(S);
    std::ostringstream out;
    out << "digraph " << graph_name << " {\n  rankdir=BT;\n";
    for (element_type x = 0; x < S.order(); ++x) {
      out << "  n" << x << " [label=\"" << dot_escape(S.name(x)) << "\"];\n";
    }
    for (auto [lo, hi] : order.covers()) {
      out << "  n" << lo << " -> n" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace lrbqv
