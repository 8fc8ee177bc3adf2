#include "lrbqv/hom_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace lrbqv {

  namespace {
    struct Triple {
      element_type x, y, xy;
    };

    class HomSearch {
     public:
      HomSearch(FiniteSemigroup const& T, FiniteSemigroup const& S)
          : _T(T), _S(S), _n(T.order()), _image(_n, 0) {
        std::vector<std::size_t> occurrences(_n, 0);
        for (element_type v : T.flat_table()) {
          ++occurrences[v];
        }
        _order.resize(_n);
        std::iota(_order.begin(), _order.end(), 0);
        std::stable_sort(_order.begin(), _order.end(), [&](auto a, auto b) {
          return occurrences[a] > occurrences[b];
        });
        std::vector<std::size_t> pos(_n);
        for (std::size_t k = 0; k < _n; ++k) {
          pos[_order[k]] = k;
        }
        // A triple is checked at the depth where its last member is assigned;
        // a triple whose product comes strictly last forces that value.
        _checks.resize(_n);
        _forced.resize(_n);
        for (element_type x = 0; x < _n; ++x) {
          for (element_type y = 0; y < _n; ++y) {
            element_type const p     = T.product(x, y);
            std::size_t const  depth = std::max({pos[x], pos[y], pos[p]});
            _checks[depth].push_back({x, y, p});
            if (pos[p] > std::max(pos[x], pos[y]) && !_forced[pos[p]]) {
              _forced[pos[p]] = Triple{x, y, p};
            }
          }
        }
      }

      void run(std::function<bool(std::vector<element_type> const&)> const& visit) {
        _visit = &visit;
        search(0);
      }

     private:
      bool consistent(std::size_t depth) const {
        for (auto const& t : _checks[depth]) {
          if (_image[t.xy] != _S.product(_image[t.x], _image[t.y])) {
            return false;
          }
        }
        return true;
      }

      // Returns false once the visitor asks to stop.
      bool search(std::size_t depth) {
        if (depth == _n) {
          return (*_visit)(_image);
        }
        element_type const e = _order[depth];
        if (auto const& f = _forced[depth]) {
          _image[e] = _S.product(_image[f->x], _image[f->y]);
          return !consistent(depth) || search(depth + 1);
        }
        for (element_type v = 0; v < _S.order(); ++v) {
          _image[e] = v;
          if (consistent(depth) && !search(depth + 1)) {
            return false;
          }
        }
        return true;
      }

      FiniteSemigroup const&                                       _T;
      FiniteSemigroup const&                                       _S;
      std::size_t                                                  _n;
      std::vector<element_type>                                    _image;
      std::vector<element_type>                                    _order;
      std::vector<std::vector<Triple>>                             _checks;
      std::vector<std::optional<Triple>>                           _forced;
      std::function<bool(std::vector<element_type> const&)> const* _visit = nullptr;
    };

    // Kernel of a map as canonical labels (first-occurrence numbering).
    std::vector<element_type> kernel_labels(std::vector<element_type> const& image,
                                            std::size_t target_order) {
      std::vector<element_type> relabel(target_order, ~element_type{0});
      std::vector<element_type> labels(image.size());
      element_type              next = 0;
      for (std::size_t t = 0; t < image.size(); ++t) {
        if (relabel[image[t]] == ~element_type{0}) {
          relabel[image[t]] = next++;
        }
        labels[t] = relabel[image[t]];
      }
      return labels;
    }
  }  // namespace

  HomomorphismMap::HomomorphismMap(FiniteSemigroup const&    source,
                                   FiniteSemigroup const&    target,
                                   std::vector<element_type> image)
      : _target_order(target.order()), _image(std::move(image)) {
    if (_image.size() != source.order()) {
      throw PreconditionError("HomomorphismMap: image has the wrong length");
    }
    for (element_type v : _image) {
      if (v >= target.order()) {
        throw PreconditionError("HomomorphismMap: image out of range");
      }
    }
    for (element_type x = 0; x < source.order(); ++x) {
      for (element_type y = 0; y < source.order(); ++y) {
        if (_image[source.product(x, y)]
            != target.product(_image[x], _image[y])) {
          throw PreconditionError("HomomorphismMap: not multiplicative at ("
                                  + source.name(x) + ", " + source.name(y)
                                  + ")");
        }
      }
    }
  }

  void for_each_hom(FiniteSemigroup const&                                  T,
                    FiniteSemigroup const&                                  S,
                    std::function<bool(std::vector<element_type> const&)> const& visit,
                    std::size_t cap) {
    if (T.order() > cap) {
      throw BudgetExceeded("homomorphism search: source order "
                           + std::to_string(T.order()) + " exceeds the cap of "
                           + std::to_string(cap));
    }
    HomSearch(T, S).run(visit);
  }

  std::vector<HomomorphismMap> enumerate_homs(FiniteSemigroup const& T,
                                              FiniteSemigroup const& S,
                                              std::size_t            cap) {
    std::vector<HomomorphismMap> out;
    for_each_hom(
        T, S,
        [&](auto const& image) {
          out.emplace_back(T, S, image);
          return true;
        },
        cap);
    return out;
  }

  SeparationResult separating_family(FiniteSemigroup const& T,
                                     FiniteSemigroup const& S,
                                     std::size_t            cap) {
    std::size_t const n = T.order();
    // Homomorphisms with equal kernels separate the same pairs; keep the
    // first of each.
    std::vector<std::vector<element_type>>       representatives;
    std::set<std::vector<element_type>>          kernels;
    std::vector<bool>                            separated(n * n, false);
    auto collect = [&](std::vector<element_type> const& image) {
      if (kernels.insert(kernel_labels(image, S.order())).second) {
        representatives.push_back(image);
        for (element_type x = 0; x < n; ++x) {
          for (element_type y = x + 1; y < n; ++y) {
            if (image[x] != image[y]) {
              separated[x * n + y] = true;
            }
          }
        }
      }
      return true;
    };
    for_each_hom(T, S, collect, cap);
    SeparationResult result;
    for (element_type x = 0; x < n && !result.inseparable; ++x) {
      for (element_type y = x + 1; y < n; ++y) {
        if (!separated[x * n + y]) {
          result.inseparable = ElementPair{x, y};
          break;
        }
      }
    }
    if (result.inseparable) {
      return result;
    }
    // Greedy cover: take the representative splitting most uncovered pairs,
    // earliest on ties.
    std::vector<bool> covered(n * n, false);
    std::size_t       remaining = n * (n - 1) / 2;
    while (remaining > 0) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t h = 0; h < representatives.size(); ++h) {
        auto const& image = representatives[h];
        std::size_t gain  = 0;
        for (element_type x = 0; x < n; ++x) {
          for (element_type y = x + 1; y < n; ++y) {
            gain += !covered[x * n + y] && image[x] != image[y];
          }
        }
        if (gain > best_gain) {
          best      = h;
          best_gain = gain;
        }
      }
      auto const& image = representatives[best];
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = x + 1; y < n; ++y) {
          if (!covered[x * n + y] && image[x] != image[y]) {
            covered[x * n + y] = true;
            --remaining;
          }
        }
      }
      result.family.emplace_back(T, S, image);
    }
    if (result.family.empty()) {
      // |T| = 1: a single homomorphism (into any idempotent) is the family.
      for_each_hom(
          T, S,
          [&](auto const& image) {
            result.family.emplace_back(T, S, image);
            return false;
          },
          cap);
    }
    return result;
  }

  bool in_qv_oracle(FiniteSemigroup const& T,
                    FiniteSemigroup const& S,
                    std::size_t            cap) {
    return separating_family(T, S, cap).separable();
  }

  std::vector<element_type> PowerEmbedding::operator()(element_type t) const {
    std::vector<element_type> tuple;
    for (auto const& h : coordinates) {
      tuple.push_back(h(t));
    }
    return tuple;
  }

  PowerEmbedding embed_in_power(FiniteSemigroup const& T, FiniteSemigroup const& S) {
    auto r = separating_family(T, S);
    if (!r.separable()) {
      throw PreconditionError("embed_in_power: " + T.name(r.inseparable->a)
                              + " and " + T.name(r.inseparable->b)
                              + " cannot be separated");
    }
    if (r.family.empty()) {
      throw PreconditionError("embed_in_power: no homomorphism into the target");
    }
    PowerEmbedding e{std::move(r.family)};
    std::set<std::vector<element_type>> images;
    for (element_type t = 0; t < T.order(); ++t) {
      images.insert(e(t));
    }
    if (images.size() != T.order()) {
      throw Error("embed_in_power: internal error, product map not injective");
    }
    return e;
  }

  std::string format_certificate(FiniteSemigroup const&  T,
                                 FiniteSemigroup const&  S,
                                 SeparationResult const& r) {
    if (!r.separable()) {
      return "INSEPARABLE " + T.name(r.inseparable->a) + " "
             + T.name(r.inseparable->b) + "\n";
    }
    std::string out;
    for (std::size_t k = 0; k < r.family.size(); ++k) {
      out += "HOM " + std::to_string(k + 1) + ":";
      for (element_type t = 0; t < T.order(); ++t) {
        out += " " + T.name(t) + "->" + S.name(r.family[k](t));
      }
      out += '\n';
    }
    return out;
  }

}  // namespace lrbqv
