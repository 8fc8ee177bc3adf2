#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! Largest source order the oracle accepts unless the caller passes a
  //! larger cap explicitly.
  constexpr std::size_t max_oracle_source_order = 20;

  //! A homomorphism T -> S. Multiplicativity is checked exhaustively on
  //! construction.
  class HomomorphismMap {
   public:
    //! Throws PreconditionError unless image defines a homomorphism.
    HomomorphismMap(FiniteSemigroup const&    source,
                    FiniteSemigroup const&    target,
                    std::vector<element_type> image);

    std::size_t source_order() const noexcept {
      return _image.size();
    }
    std::size_t target_order() const noexcept {
      return _target_order;
    }
    element_type operator()(element_type t) const {
      return _image.at(t);
    }
    std::vector<element_type> const& image() const noexcept {
      return _image;
    }

    friend bool operator==(HomomorphismMap const&, HomomorphismMap const&) = default;

   private:
    std::size_t               _target_order;
    std::vector<element_type> _image;
  };

  //! Backtracking over all maps T -> S. Source elements are assigned in order
  //! of decreasing number of occurrences as a product (ties by index), target
  //! values in index order; a partial map is abandoned as soon as a product
  //! with all three of x, y, xy assigned disagrees. `visit` receives each
  //! homomorphism as an image vector and returns false to stop early.
  //! Throws BudgetExceeded if |T| > cap.
  void for_each_hom(FiniteSemigroup const&                                  T,
                    FiniteSemigroup const&                                  S,
                    std::function<bool(std::vector<element_type> const&)> const& visit,
                    std::size_t cap = max_oracle_source_order);

  //! Every homomorphism T -> S, in search order.
  std::vector<HomomorphismMap>
  enumerate_homs(FiniteSemigroup const& T,
                 FiniteSemigroup const& S,
                 std::size_t            cap = max_oracle_source_order);

  struct SeparationResult {
    //! Greedy set-cover subfamily of homomorphisms separating all pairs.
    std::vector<HomomorphismMap> family;
    //! Lexicographically least pair no homomorphism separates.
    std::optional<ElementPair> inseparable;

    bool separable() const noexcept {
      return !inseparable.has_value();
    }
  };

  SeparationResult
  separating_family(FiniteSemigroup const& T,
                    FiniteSemigroup const& S,
                    std::size_t            cap = max_oracle_source_order);

  //! T belongs to qv(S) iff homomorphisms T -> S separate points.
  bool in_qv_oracle(FiniteSemigroup const& T,
                    FiniteSemigroup const& S,
                    std::size_t            cap = max_oracle_source_order);

  //! The product map T -> S^m of a separating family.
  struct PowerEmbedding {
    std::vector<HomomorphismMap> coordinates;

    std::size_t exponent() const noexcept {
      return coordinates.size();
    }
    //! Image of t as an m-tuple.
    std::vector<element_type> operator()(element_type t) const;
  };

  //! Throws PreconditionError if T is not in qv(S). The result is rechecked
  //! to be injective and multiplicative.
  PowerEmbedding embed_in_power(FiniteSemigroup const& T, FiniteSemigroup const& S);

  //! "HOM k: t1->s1 t2->s2 ..." lines (k from 1) or "INSEPARABLE x y".
  std::string format_certificate(FiniteSemigroup const&  T,
                                 FiniteSemigroup const&  S,
                                 SeparationResult const& r);

}  // namespace lrbqv
