#pragma once

#include <string>
#include <vector>

#include "lrbqv/partition.hpp"
#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! Classes of Green's L relation: a L b iff S^1 a = S^1 b, computed with an
  //! identity formally adjoined.
  Partition green_L_classes(FiniteSemigroup const& S);

  //! The left regular band criterion ab = a and ba = b. Throws
  //! PreconditionError if S is not a left regular band.
  bool lrb_L_related(FiniteSemigroup const& S, ElementPair p);

  //! The R-order of a left regular band: x <= y iff yx = x.
  class ROrder {
   public:
    //! Throws PreconditionError if S is not a left regular band.
    explicit ROrder(FiniteSemigroup const& S);

    std::size_t size() const noexcept {
      return _n;
    }
    bool leq(element_type x, element_type y) const noexcept {
      return _leq[x * _n + y];
    }
    bool comparable(element_type x, element_type y) const noexcept {
      return leq(x, y) || leq(y, x);
    }
    //! All pairs (x, y) with x <= y, lexicographic.
    std::vector<ElementPair> pairs() const;
    //! Pairs (x, y) with x < y and nothing strictly between, lexicographic.
    std::vector<ElementPair> covers() const;
    //! Number of elements comparable to x, x excluded.
    std::size_t degree(element_type x) const;

   private:
    std::size_t       _n;
    std::vector<bool> _leq;
  };

  inline ROrder r_order(FiniteSemigroup const& S) {
    return ROrder(S);
  }

  //! Connected components of the R-order restricted to `subset` (zig-zags may
  //! not leave the subset). Components are sorted, ordered by least element.
  //! Throws PreconditionError on an empty subset or a non-LRB.
  std::vector<element_set> connected_components(FiniteSemigroup const& S,
                                                element_set const&     subset);

  //! Components of the whole semigroup as a partition.
  Partition component_partition(FiniteSemigroup const& S);

  struct LeftZeroQuotient {
    Partition       partition;
    FiniteSemigroup quotient;
  };

  //! Quotient by the connected components, which is the least congruence with
  //! a left zero quotient.
  LeftZeroQuotient least_left_zero_quotient(FiniteSemigroup const& S);

  //! Hasse diagram of the R-order in DOT, edges from each element up to its
  //! covers.
  std::string hasse_dot(FiniteSemigroup const& S,
                        std::string const&     graph_name = "hasse");

}  // namespace lrbqv
