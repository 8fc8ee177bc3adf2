#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! S_{a,b} = { s : sa = sb }.
  element_set s_ab(FiniteSemigroup const& S, ElementPair p);

  //! S'_{a,b} = { s in S_{a,b} : a in Ss }, where Ss is scanned over S with
  //! no identity adjoined.
  element_set s_ab_prime(FiniteSemigroup const& S, ElementPair p);

  enum class Condition { cc, cc_prime };

  //! Where a zig-zag lives: S_{a,b} for (CC), S'_{a,b} for (CC').
  enum class Arena { real, complex };

  //! up: path[i] <= path[i+1]; down: path[i] >= path[i+1].
  enum class Step { up, down };

  struct ZigZagWitness {
    ElementPair               pair;
    std::vector<element_type> path;
    std::vector<Step>         directions;
    Arena                     arena;
  };

  struct ConditionResult {
    Condition                    condition;
    std::optional<ZigZagWitness> witness;

    bool satisfied() const noexcept {
      return !witness.has_value();
    }
  };

  //! (CC): for every L-related pair a != b, a and b lie in different
  //! connected components of S_{a,b}. Ordered pairs are scanned
  //! lexicographically; the first violation is returned with a shortest
  //! zig-zag found by breadth-first search on the comparability graph,
  //! neighbours in index order. Throws PreconditionError on a non-LRB.
  ConditionResult check_cc(FiniteSemigroup const& S);

  //! (CC'): the same with S'_{a,b}.
  ConditionResult check_cc_prime(FiniteSemigroup const& S);

  ConditionResult check_condition(FiniteSemigroup const& S, Condition c);

  //! Rechecks a witness from scratch against S: a != b, a L b, endpoints,
  //! arena membership, each step's direction in the R-order, and length at
  //! most |S| + 2. Returns a description of the first problem, or nothing.
  std::optional<std::string> witness_problem(FiniteSemigroup const& S,
                                             ZigZagWitness const&   w);

  //! "cc" or "cc'".
  std::string condition_label(Condition c);

  //! "VIOLATION cc a b : a <= x >= b" or "SATISFIED cc".
  std::string format_condition_result(FiniteSemigroup const& S,
                                      ConditionResult const& r);

  struct MembershipVerdict {
    bool            member;
    ConditionResult evidence;
    //! "qv(L)" or "qv(ZL)".
    std::string quasivariety;

    //! One sentence phrased in terms of hyperplane face monoids.
    std::string statement() const;
  };

  //! Membership in qv(L): embeds in a real hyperplane face monoid.
  MembershipVerdict in_qv_L(FiniteSemigroup const& S);

  //! Membership in qv(ZL): embeds in a complex hyperplane face monoid.
  MembershipVerdict in_qv_ZL(FiniteSemigroup const& S);

}  // namespace lrbqv
