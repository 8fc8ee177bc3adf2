#pragma once

#include <cstddef>
#include <vector>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! Componentwise product. Element (s, t) has index s * |T| + t and name
  //! "(s,t)".
  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T);

  bool is_closed(FiniteSemigroup const& S, element_set const& X);

  //! The smallest product-closed superset of seed.
  element_set subsemigroup_closure(FiniteSemigroup const& S,
                                   element_set const&     seed);

  constexpr std::size_t max_subsemigroup_sweep_order = 20;

  //! Every non-empty product-closed subset, ordered by bitmask value. Throws
  //! BudgetExceeded if S.order() > cap or cap > max_subsemigroup_sweep_order.
  std::vector<element_set>
  all_subsemigroups(FiniteSemigroup const& S,
                    std::size_t            cap = max_subsemigroup_sweep_order);

  //! Induced semigroup on a closed subset, elements renumbered in increasing
  //! order. Throws PreconditionError if subset is empty or not closed.
  FiniteSemigroup restrict(FiniteSemigroup const& S, element_set const& subset);

  //! The free left regular band on k generators (1 <= k <= 5): non-empty
  //! repetition-free words, u.v = u followed by the letters of v not in u.
  FiniteSemigroup free_lrb(std::size_t k);

  //! Left zero semigroup on k elements named "a", "b", ...
  FiniteSemigroup left_zero_semigroup(std::size_t k);

  //! S with a new identity "1" appended (last index).
  FiniteSemigroup adjoin_identity(FiniteSemigroup const& S,
                                  std::string const&     name = "1");

  //! Chain semilattice 0 < 1 < ... < k-1 under min.
  FiniteSemigroup chain_semilattice(std::size_t k);

}  // namespace lrbqv
