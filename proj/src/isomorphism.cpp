#include "lrbqv/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include "lrbqv/green.hpp"

namespace lrbqv {

  namespace {
    using invariant_type = std::array<std::size_t, 6>;

    std::vector<invariant_type> invariants(FiniteSemigroup const& S) {
      std::size_t const        n = S.order();
      Partition const          L = green_L_classes(S);
      std::vector<invariant_type> inv(n);
      for (element_type x = 0; x < n; ++x) {
        std::size_t fixes_left = 0, fixes_right = 0;
        for (element_type y = 0; y < n; ++y) {
          fixes_left += S.product(y, x) == x;
          fixes_right += S.product(x, y) == x;
        }
        inv[x] = {S.product(x, x) == x,
                  L.block(L.block_of(x)).size(),
                  fixes_left,
                  fixes_right,
                  0,
                  0};
      }
      if (S.is_lrb()) {
        ROrder const order(S);
        for (element_type x = 0; x < n; ++x) {
          inv[x][4] = order.degree(x);
          for (element_type y = 0; y < n; ++y) {
            inv[x][5] += order.leq(y, x);
          }
        }
      }
      return inv;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& S, FiniteSemigroup const& T)
          : _S(S),
            _T(T),
            _n(S.order()),
            _inv_s(invariants(S)),
            _inv_t(invariants(T)),
            _f(_n, unset),
            _used(_n, false) {
        _order.resize(_n);
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(), [this](auto x, auto y) {
          return _inv_s[x][4] > _inv_s[y][4];
        });
      }

      std::optional<std::vector<element_type>> run() {
        if (search(0)) {
          return _f;
        }
        return std::nullopt;
      }

     private:
      static constexpr element_type unset = ~element_type{0};

      bool assign(element_type x, element_type v) {
        std::vector<std::pair<element_type, element_type>> work{{x, v}};
        while (!work.empty()) {
          auto [a, image] = work.back();
          work.pop_back();
          if (_f[a] != unset) {
            if (_f[a] != image) {
              return false;
            }
            continue;
          }
          if (_used[image] || _inv_s[a] != _inv_t[image]) {
            return false;
          }
          _f[a]        = image;
          _used[image] = true;
          _trail.push_back(a);
          for (element_type b : _trail) {
            for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
              work.emplace_back(_S.product(p, q), _T.product(_f[p], _f[q]));
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          element_type a = _trail.back();
          _trail.pop_back();
          _used[_f[a]] = false;
          _f[a]        = unset;
        }
      }

      bool search(std::size_t i) {
        while (i < _n && _f[_order[i]] != unset) {
          ++i;
        }
        if (i == _n) {
          return true;
        }
        element_type const x = _order[i];
        for (element_type v = 0; v < _n; ++v) {
          if (_used[v] || _inv_s[x] != _inv_t[v]) {
            continue;
          }
          std::size_t const mark = _trail.size();
          if (assign(x, v) && search(i + 1)) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      FiniteSemigroup const&      _S;
      FiniteSemigroup const&      _T;
      std::size_t                 _n;
      std::vector<invariant_type> _inv_s;
      std::vector<invariant_type> _inv_t;
      std::vector<element_type>   _f;
      std::vector<bool>           _used;
      std::vector<element_type>   _order;
      std::vector<element_type>   _trail;
    };
  }  // namespace

  std::optional<std::vector<element_type>>
  is_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    if (S.order() != T.order() || S.is_lrb() != T.is_lrb()
        || S.identity().has_value() != T.identity().has_value()) {
      return std::nullopt;
    }
    auto inv_s = invariants(S), inv_t = invariants(T);
    std::sort(inv_s.begin(), inv_s.end());
    std::sort(inv_t.begin(), inv_t.end());
    if (inv_s != inv_t) {
      return std::nullopt;
    }
    auto f = IsoSearch(S, T).run();
    if (f && !is_isomorphism(S, T, *f)) {
      throw Error("is_isomorphic: internal error, search returned a non-isomorphism");
    }
    return f;
  }

  bool is_isomorphism(FiniteSemigroup const&           S,
                      FiniteSemigroup const&           T,
                      std::vector<element_type> const& f) {
    if (S.order() != T.order() || f.size() != S.order()) {
      return false;
    }
    std::vector<bool> hit(T.order(), false);
    for (element_type v : f) {
      if (v >= T.order() || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    for (element_type x = 0; x < S.order(); ++x) {
      for (element_type y = 0; y < S.order(); ++y) {
        if (f[S.product(x, y)] != T.product(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace lrbqv
