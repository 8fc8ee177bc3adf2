#include "lrbqv/construct.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace lrbqv {

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T) {
    std::size_t const        m = S.order(), n = T.order(), k = m * n;
    std::vector<std::string> names;
    names.reserve(k);
    for (element_type s = 0; s < m; ++s) {
      for (element_type t = 0; t < n; ++t) {
        names.push_back("(" + S.name(s) + "," + T.name(t) + ")");
      }
    }
    std::vector<element_type> table(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        auto const s = S.product(x / n, y / n);
        auto const t = T.product(x % n, y % n);
        table[x * k + y] = static_cast<element_type>(s * n + t);
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(names), std::move(table));
  }

  bool is_closed(FiniteSemigroup const& S, element_set const& X) {
    std::vector<bool> inside(S.order(), false);
    for (element_type x : X) {
      inside.at(x) = true;
    }
    for (element_type x : X) {
      for (element_type y : X) {
        if (!inside[S.product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  element_set subsemigroup_closure(FiniteSemigroup const& S,
                                   element_set const&     seed) {
    std::vector<bool>         inside(S.order(), false);
    std::vector<element_type> members;
    for (element_type x : seed) {
      if (!inside.at(x)) {
        inside[x] = true;
        members.push_back(x);
      }
    }
    // Products of new elements with everything so far, until nothing new.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        element_type const u = members[i], v = members[j];
        for (element_type p : {S.product(u, v), S.product(v, u)}) {
          if (!inside[p]) {
            inside[p] = true;
            members.push_back(p);
          }
        }
      }
    }
    return make_element_set(std::move(members));
  }

  std::vector<element_set> all_subsemigroups(FiniteSemigroup const& S,
                                             std::size_t            cap) {
    if (cap > max_subsemigroup_sweep_order || S.order() > cap) {
      throw BudgetExceeded("all_subsemigroups: order "
                           + std::to_string(S.order()) + " exceeds the cap of "
                           + std::to_string(std::min(
                               cap, max_subsemigroup_sweep_order)));
    }
    std::size_t const n = S.order();
    // bit[x * n + y] is the singleton mask of xy.
    std::vector<std::uint32_t> bit(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        bit[x * n + y] = std::uint32_t{1} << S.product(x, y);
      }
    }
    std::vector<element_set> out;
    std::uint32_t const      end = std::uint32_t{1} << n;
    std::vector<element_type> members;
    for (std::uint32_t mask = 1; mask < end; ++mask) {
      members.clear();
      for (element_type x = 0; x < n; ++x) {
        if (mask >> x & 1U) {
          members.push_back(x);
        }
      }
      bool closed = true;
      for (std::size_t i = 0; i < members.size() && closed; ++i) {
        std::size_t const row = members[i] * n;
        for (element_type y : members) {
          if ((bit[row + y] & mask) == 0) {
            closed = false;
            break;
          }
        }
      }
      if (closed) {
        out.push_back(members);
      }
    }
    return out;
  }

  FiniteSemigroup restrict(FiniteSemigroup const& S, element_set const& subset) {
    if (subset.empty()) {
      throw PreconditionError("restrict: empty subset");
    }
    element_set const X = make_element_set(subset);
    if (!is_closed(S, X)) {
      throw PreconditionError("restrict: subset "
                              + format_element_set(S, X)
                              + " is not closed under multiplication");
    }
    std::vector<element_type> index(S.order(), 0);
    std::vector<std::string>  names;
    for (std::size_t i = 0; i < X.size(); ++i) {
      index[X[i]] = static_cast<element_type>(i);
      names.push_back(S.name(X[i]));
    }
    std::size_t const         k = X.size();
    std::vector<element_type> table(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        table[i * k + j] = index[S.product(X[i], X[j])];
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(names), std::move(table));
  }

  FiniteSemigroup free_lrb(std::size_t k) {
    if (k < 1 || k > 5) {
      throw PreconditionError("free_lrb: generator count must be in [1, 5]");
    }
    // Words in shortlex order over letters a, b, ...
    std::vector<std::string> words;
    std::vector<std::string> layer{""};
    for (std::size_t len = 1; len <= k; ++len) {
      std::vector<std::string> next;
      for (auto const& w : layer) {
        for (std::size_t l = 0; l < k; ++l) {
          char const c = static_cast<char>('a' + l);
          if (w.find(c) == std::string::npos) {
            next.push_back(w + c);
          }
        }
      }
      std::sort(next.begin(), next.end());
      words.insert(words.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    std::map<std::string, element_type> index;
    for (std::size_t i = 0; i < words.size(); ++i) {
      index[words[i]] = static_cast<element_type>(i);
    }
    std::size_t const         n = words.size();
    std::vector<element_type> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::string w = words[x];
        for (char c : words[y]) {
          if (w.find(c) == std::string::npos) {
            w += c;
          }
        }
        table[x * n + y] = index.at(w);
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(words), std::move(table));
  }

  FiniteSemigroup left_zero_semigroup(std::size_t k) {
    if (k < 1 || k > 26) {
      throw PreconditionError("left_zero_semigroup: size must be in [1, 26]");
    }
    std::vector<std::string>  names;
    std::vector<element_type> table(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      names.emplace_back(1, static_cast<char>('a' + x));
      for (std::size_t y = 0; y < k; ++y) {
        table[x * k + y] = static_cast<element_type>(x);
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(names), std::move(table));
  }

  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S,
                                  std::string const&     name) {
    std::size_t const         n = S.order(), k = n + 1;
    std::vector<std::string>  names = S.names();
    std::vector<element_type> table(k * k);
    names.push_back(name);
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        table[x * k + y] = x == n   ? static_cast<element_type>(y)
                           : y == n ? static_cast<element_type>(x)
                                    : S.product(x, y);
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(names), std::move(table));
  }

  FiniteSemigroup chain_semilattice(std::size_t k) {
    if (k < 1) {
      throw PreconditionError("chain_semilattice: size must be positive");
    }
    std::vector<std::string>  names;
    std::vector<element_type> table(k * k);
    for (std::size_t x = 0; x < k; ++x) {
      names.push_back(std::to_string(x));
      for (std::size_t y = 0; y < k; ++y) {
        table[x * k + y] = static_cast<element_type>(std::min(x, y));
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(names), std::move(table));
  }

}  // namespace lrbqv
