#include "lrbqv/congruence.hpp"

#include <algorithm>
#include <numeric>

namespace lrbqv {

  CongruenceCheck is_congruence(FiniteSemigroup const& S, Partition const& P) {
    if (P.ground_size() != S.order()) {
      throw PreconditionError("is_congruence: partition has the wrong ground set");
    }
    // Left and right compatibility with single steps suffices for an
    // equivalence relation.
    for (auto const& block : P.blocks()) {
      for (element_type x : block) {
        for (element_type x2 : block) {
          if (x2 <= x) {
            continue;
          }
          for (element_type y = 0; y < S.order(); ++y) {
            if (!P.same_block(S.product(x, y), S.product(x2, y))) {
              return {false, std::array<element_type, 4>{x, y, x2, y}};
            }
            if (!P.same_block(S.product(y, x), S.product(y, x2))) {
              return {false, std::array<element_type, 4>{y, x, y, x2}};
            }
          }
        }
      }
    }
    return {};
  }

  FiniteSemigroup quotient(FiniteSemigroup const& S, Partition const& P) {
    if (auto check = is_congruence(S, P); !check) {
      auto const& v = *check.violation;
      throw PreconditionError("quotient: not a congruence (" + S.name(v[0])
                              + "~" + S.name(v[2]) + ", " + S.name(v[1]) + "~"
                              + S.name(v[3]) + ")");
    }
    std::size_t const        k = P.size();
    std::vector<std::string> names;
    for (auto const& block : P.blocks()) {
      if (block.size() == 1) {
        names.push_back(S.name(block.front()));
        continue;
      }
      std::vector<std::string> members;
      for (element_type x : block) {
        members.push_back(S.name(x));
      }
      std::sort(members.begin(), members.end());
      std::string name = "{";
      for (std::size_t i = 0; i < members.size(); ++i) {
        name += (i == 0 ? "" : ",") + members[i];
      }
      names.push_back(name + "}");
    }
    std::vector<element_type> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = static_cast<element_type>(
            P.block_of(S.product(P.block(i).front(), P.block(j).front())));
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(names), std::move(table));
  }

  Partition congruence_generated_by(FiniteSemigroup const&          S,
                                    std::vector<ElementPair> const& pairs) {
    std::size_t const         n = S.order();
    std::vector<element_type> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](element_type x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    };
    // Each union (x, y) queues (xs, ys) and (sx, sy) for all s.
    std::vector<ElementPair> queue(pairs.begin(), pairs.end());
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      element_type rx = find(x), ry = find(y);
      if (rx == ry) {
        continue;
      }
      parent[std::max(rx, ry)] = std::min(rx, ry);
      for (element_type s = 0; s < n; ++s) {
        queue.push_back({S.product(x, s), S.product(y, s)});
        queue.push_back({S.product(s, x), S.product(s, y)});
      }
    }
    std::vector<std::size_t> labels(n);
    for (element_type x = 0; x < n; ++x) {
      labels[x] = find(x);
    }
    return Partition::from_labels(labels);
  }

}  // namespace lrbqv
