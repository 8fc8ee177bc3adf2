#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lrbqv/partition.hpp"
#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  struct CongruenceCheck {
    bool ok = true;
    //! On failure: (x, y, x', y') with x ~ x', y ~ y' and xy, x'y' in
    //! different blocks.
    std::optional<std::array<element_type, 4>> violation;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  CongruenceCheck is_congruence(FiniteSemigroup const& S, Partition const& P);

  //! Elements are the blocks of P in block order. A singleton block keeps its
  //! member's name; a larger block is named by its sorted member names joined
  //! with commas inside braces. Throws PreconditionError if P is not a
  //! congruence.
  FiniteSemigroup quotient(FiniteSemigroup const& S, Partition const& P);

  //! The least congruence identifying each given pair.
  Partition congruence_generated_by(FiniteSemigroup const&          S,
                                    std::vector<ElementPair> const& pairs);

}  // namespace lrbqv
