#pragma once

#include <optional>
#include <vector>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! A bijection f from S onto T with f(xy) = f(x)f(y), or nothing if none
  //! exists. `f[x]` is the image of x. Backtracking search; candidates are
  //! pruned by idempotency, L-class size and (on left regular bands)
  //! R-order degree.
  std::optional<std::vector<element_type>>
  is_isomorphic(FiniteSemigroup const& S, FiniteSemigroup const& T);

  //! Exhaustive recheck that f is a bijective homomorphism S -> T.
  bool is_isomorphism(FiniteSemigroup const&           S,
                      FiniteSemigroup const&           T,
                      std::vector<element_type> const& f);

}  // namespace lrbqv
