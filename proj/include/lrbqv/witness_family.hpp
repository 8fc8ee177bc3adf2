#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lrbqv/membership.hpp"
#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! F_n with the origin and the x-axis L-class (r_1, r_{n+1}) removed,
  //! 3 <= n <= 8. Order 4n - 2.
  FiniteSemigroup f_n_prime(std::size_t n);

  //! F_n' modulo the congruence whose only non-singleton block is
  //! {C_n, C_{n+1}}; the merged element is named "C". Order 4n - 3.
  FiniteSemigroup b_n(std::size_t n);

  //! The element names along C_1 < r_2 > C_2 < ... < r_n > C < r_{n+2} > ...
  //! < r_{2n} > C_{2n}.
  std::vector<std::string> expected_hasse_path(std::size_t n);

  struct HassePathResult {
    bool                      is_path = false;
    std::vector<element_type> path;  // the expected path, when present
  };

  //! True iff the covers of the R-order of Bn are exactly the consecutive
  //! pairs of expected_hasse_path, alternating up and down.
  HassePathResult hasse_is_path(FiniteSemigroup const& Bn);

  struct SweepResult {
    std::size_t checked      = 0;
    bool        all_in_qv_L  = true;
    //! Proper subsemigroups containing both C_1 and C_{2n}, and whether in
    //! each of them the two lie in different connected components.
    std::size_t                containing_both = 0;
    bool                       both_separated  = true;
    std::optional<element_set> first_failure;
  };

  //! Runs check_cc on every proper subsemigroup of Bn. Throws BudgetExceeded
  //! if Bn has more than max_subsemigroup_sweep_order elements.
  SweepResult proper_subsemigroup_sweep(FiniteSemigroup const& Bn);

  //! B_n with C_1 and C_{2n} identified, compared with F_{n-1} minus the
  //! origin.
  bool quotient_iso_check(std::size_t n);

  struct WitnessReport {
    std::size_t                n;
    std::size_t                order_f;
    std::size_t                order_f_prime;
    std::size_t                order_b;
    FiniteSemigroup            b;
    ConditionResult            cc_prime;
    HassePathResult            hasse;
    std::optional<SweepResult> sweep;  // absent above the sweep cap
    bool                       quotient_iso_ok;
  };

  WitnessReport witness_report(std::size_t n);

  //! Structured "key: value" text; with `dot` the Hasse diagram follows.
  std::string format_witness_report(WitnessReport const& r, bool dot = false);

}  // namespace lrbqv
