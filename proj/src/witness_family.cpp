#include "lrbqv/witness_family.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "lrbqv/arrangements.hpp"
#include "lrbqv/congruence.hpp"
#include "lrbqv/construct.hpp"
#include "lrbqv/green.hpp"
#include "lrbqv/isomorphism.hpp"

namespace lrbqv {

  namespace {
    void require_family_range(std::size_t n, char const* what) {
      if (n < 3 || n > 8) {
        throw PreconditionError(std::string(what) + ": n must be in [3, 8]");
      }
    }

    std::size_t family_index(FiniteSemigroup const& Bn) {
      if ((Bn.order() + 3) % 4 != 0 || Bn.order() < 9) {
        throw PreconditionError("order " + std::to_string(Bn.order())
                                + " is not of the form 4n - 3 with n >= 3");
      }
      return (Bn.order() + 3) / 4;
    }
  }  // namespace

  FiniteSemigroup f_n_prime(std::size_t n) {
    require_family_range(n, "f_n_prime");
    auto const F       = line_arrangement_faces(n).semigroup;
    auto const removed = std::set<std::string>{"O", ray_name(1), ray_name(n + 1)};
    element_set keep;
    for (element_type x = 0; x < F.order(); ++x) {
      if (!removed.contains(F.name(x))) {
        keep.push_back(x);
      }
    }
    if (!is_closed(F, keep)) {
      throw Error("f_n_prime: construction is not closed");
    }
    return restrict(F, keep);
  }

  FiniteSemigroup b_n(std::size_t n) {
    auto const               Fp = f_n_prime(n);
    element_type const       cn = Fp.at(chamber_name(n));
    element_type const       cm = Fp.at(chamber_name(n + 1));
    std::vector<element_set> blocks{{cn, cm}};
    for (element_type x = 0; x < Fp.order(); ++x) {
      if (x != cn && x != cm) {
        blocks.push_back({x});
      }
    }
    Partition const P(Fp.order(), std::move(blocks));
    if (!is_congruence(Fp, P)) {
      throw Error("b_n: {C_n, C_n+1} does not generate a congruence");
    }
    auto const               Q     = quotient(Fp, P);
    std::vector<std::string> names = Q.names();
    names[P.block_of(cn)]          = "C";
    return Q.renamed(std::move(names));
  }

  std::vector<std::string> expected_hasse_path(std::size_t n) {
    std::vector<std::string> path{chamber_name(1)};
    for (std::size_t j = 2; j <= 2 * n; ++j) {
      if (j == n + 1) {
        continue;  // r_{n+1} is gone; C_n and C_{n+1} are the single C
      }
      path.push_back(ray_name(j));
      path.push_back(j == n ? std::string("C") : chamber_name(j));
    }
    return path;
  }

  HassePathResult hasse_is_path(FiniteSemigroup const& Bn) {
    HassePathResult result;
    std::size_t const n = family_index(Bn);
    for (auto const& name : expected_hasse_path(n)) {
      auto x = Bn.find(name);
      if (!x) {
        return result;
      }
      result.path.push_back(*x);
    }
    if (!Bn.is_lrb() || result.path.size() != Bn.order()) {
      result.path.clear();
      return result;
    }
    // Chambers sit at even positions, rays at odd ones; each ray covers its
    // two neighbours.
    std::set<ElementPair> expected;
    for (std::size_t i = 0; i + 1 < result.path.size(); ++i) {
      element_type const x = result.path[i], y = result.path[i + 1];
      expected.insert(i % 2 == 0 ? ElementPair{x, y} : ElementPair{y, x});
    }
    auto const            covers = ROrder(Bn).covers();
    std::set<ElementPair> actual(covers.begin(), covers.end());
    result.is_path = actual == expected && expected.size() == 4 * n - 4;
    return result;
  }

  SweepResult proper_subsemigroup_sweep(FiniteSemigroup const& Bn) {
    std::size_t const  n     = family_index(Bn);
    element_type const first = Bn.at(chamber_name(1));
    element_type const last  = Bn.at(chamber_name(2 * n));
    SweepResult        result;
    for (auto const& X : all_subsemigroups(Bn)) {
      if (X.size() == Bn.order()) {
        continue;
      }
      ++result.checked;
      auto const T = restrict(Bn, X);
      if (!check_cc(T).satisfied()) {
        if (result.all_in_qv_L) {
          result.first_failure = X;
        }
        result.all_in_qv_L = false;
      }
      bool const has_first = std::binary_search(X.begin(), X.end(), first);
      bool const has_last  = std::binary_search(X.begin(), X.end(), last);
      if (has_first && has_last) {
        ++result.containing_both;
        auto const   components = component_partition(T);
        element_type a          = T.at(chamber_name(1));
        element_type b          = T.at(chamber_name(2 * n));
        if (components.same_block(a, b)) {
          result.both_separated = false;
        }
      }
    }
    return result;
  }

  bool quotient_iso_check(std::size_t n) {
    require_family_range(n, "quotient_iso_check");
    auto const   B     = b_n(n);
    element_type first = B.at(chamber_name(1));
    element_type last  = B.at(chamber_name(2 * n));
    auto const   P     = congruence_generated_by(B, {{first, last}});
    // The identification must be exactly the one pair, not something coarser.
    if (P.size() != B.order() - 1 || !is_congruence(B, P)) {
      return false;
    }
    auto const  Q = quotient(B, P);
    auto const  F = line_arrangement_faces(n - 1).semigroup;
    element_set non_origin;
    for (element_type x = 0; x < F.order(); ++x) {
      if (F.name(x) != "O") {
        non_origin.push_back(x);
      }
    }
    return is_isomorphic(Q, restrict(F, non_origin)).has_value();
  }

  WitnessReport witness_report(std::size_t n) {
    require_family_range(n, "witness_report");
    auto const  F  = line_arrangement_faces(n).semigroup;
    auto const  Fp = f_n_prime(n);
    auto        B  = b_n(n);
    auto        cc = check_cc_prime(B);
    auto        hp = hasse_is_path(B);
    std::optional<SweepResult> sweep;
    if (B.order() <= max_subsemigroup_sweep_order) {
      sweep = proper_subsemigroup_sweep(B);
    }
    bool const iso = quotient_iso_check(n);
    return {n,
            F.order(),
            Fp.order(),
            B.order(),
            std::move(B),
            std::move(cc),
            std::move(hp),
            sweep,
            iso};
  }

  std::string format_witness_report(WitnessReport const& r, bool dot) {
    std::ostringstream out;
    auto               yes_no = [](bool b) { return b ? "true" : "false"; };
    out << "witness-report n=" << r.n << '\n';
    out << "order F_n: " << r.order_f << '\n';
    out << "order F_n': " << r.order_f_prime << '\n';
    out << "order B_n: " << r.order_b << '\n';
    out << "cc': " << format_condition_result(r.b, r.cc_prime) << '\n';
    if (r.cc_prime.witness) {
      out << "cc' path edges: " << r.cc_prime.witness->directions.size() << '\n';
    }
    out << "hasse_is_path: " << yes_no(r.hasse.is_path) << '\n';
    if (r.hasse.is_path) {
      out << "hasse_path:";
      for (std::size_t i = 0; i < r.hasse.path.size(); ++i) {
        if (i != 0) {
          out << (i % 2 == 1 ? " <" : " >");
        }
        out << ' ' << r.b.name(r.hasse.path[i]);
      }
      out << '\n';
    }
    if (r.sweep) {
      out << "proper_subsemigroups_checked: " << r.sweep->checked << '\n';
      out << "all_proper_in_qv_L: " << yes_no(r.sweep->all_in_qv_L) << '\n';
      out << "proper_containing_C_1_and_C_2n: " << r.sweep->containing_both
          << '\n';
      out << "C_1_C_2n_separated_in_each: " << yes_no(r.sweep->both_separated)
          << '\n';
    } else {
      out << "proper_subsemigroups_checked: skipped (order " << r.order_b
          << " exceeds sweep cap " << max_subsemigroup_sweep_order << ")\n";
      out << "all_proper_in_qv_L: skipped\n";
    }
    out << "quotient_iso_ok: " << yes_no(r.quotient_iso_ok) << '\n';
    if (dot) {
      out << hasse_dot(r.b, "B_" + std::to_string(r.n));
    }
    return out.str();
  }

}  // namespace lrbqv
