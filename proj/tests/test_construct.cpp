#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "lrbqv/arrangements.hpp"
#include "lrbqv/construct.hpp"
#include "lrbqv/isomorphism.hpp"

using namespace lrbqv;

TEST_CASE("direct product") {
  auto const P = direct_product(gen_L(), gen_ZL());
  CHECK(P.order() == 12);
  CHECK(P.name(1 * 4 + 3) == "(+,z)");
  CHECK(P.is_lrb());
  CHECK(P.identity() == element_type{0});
  // (+,0)(-,-) = (+,-)
  CHECK(P.product(4, 2 * 4 + 2) == 1 * 4 + 2);
  CHECK(is_isomorphic(direct_product(gen_L(), gen_L()), coordinate_arrangement_monoid(2)));
}

TEST_CASE("subsemigroups of L") {
  auto const subs = all_subsemigroups(gen_L());
  CHECK(subs.size() == 7);
  CHECK(subs.front() == element_set{0});
  CHECK(subs.back() == element_set{0, 1, 2});
  CHECK(is_closed(gen_L(), {1, 2}));
  CHECK(subsemigroup_closure(gen_L(), {1}) == element_set{1});
}

TEST_CASE("subsemigroup counts") {
  CHECK(all_subsemigroups(b_n(3)).size() == 142);
  CHECK(all_subsemigroups(b_n(4)).size() == 814);
  CHECK_THROWS_AS(all_subsemigroups(line_arrangement_faces(5).semigroup), BudgetExceeded);
  CHECK_THROWS_AS(all_subsemigroups(gen_L(), 21), BudgetExceeded);
}

TEST_CASE("closure against brute force") {
  std::mt19937 rng(11);
  auto const S = coordinate_arrangement_monoid(2);
  std::uniform_int_distribution<element_type> pick(0, 8);
  auto const subs = all_subsemigroups(S);
  for (int k = 0; k < 50; ++k) {
    element_set const seed = make_element_set({pick(rng), pick(rng)});
    auto const c = subsemigroup_closure(S, seed);
    CHECK(is_closed(S, c));
    // The closure is the least closed superset.
    for (auto const& X : subs) {
      if (std::includes(X.begin(), X.end(), seed.begin(), seed.end())) {
        CHECK(std::includes(X.begin(), X.end(), c.begin(), c.end()));
      }
    }
  }
}

TEST_CASE("restrict") {
  auto const R = restrict(gen_ZL(), {1, 2, 3});
  CHECK(R.names() == std::vector<std::string>{"+", "-", "z"});
  CHECK(R.product(0, 1) == 0);
  CHECK_THROWS_AS(restrict(gen_ZL(), {}), PreconditionError);
  auto const F3 = line_arrangement_faces(3).semigroup;
  CHECK_THROWS_AS(restrict(F3, {F3.at("r_2"), F3.at("C_5")}), PreconditionError);
}

TEST_CASE("free left regular bands") {
  std::size_t const orders[] = {1, 4, 15, 64, 325};
  for (std::size_t k = 1; k <= 4; ++k) {
    auto const F = free_lrb(k);
    CAPTURE(k);
    CHECK(F.order() == orders[k - 1]);
    CHECK(F.is_lrb());
  }
  auto const F2 = free_lrb(2);
  CHECK(F2.names() == std::vector<std::string>{"a", "b", "ab", "ba"});
  CHECK(F2.product(F2.at("a"), F2.at("ba")) == F2.at("ab"));
  CHECK_THROWS_AS(free_lrb(0), PreconditionError);
  CHECK_THROWS_AS(free_lrb(6), PreconditionError);
}

TEST_CASE("free_lrb(5) has 325 elements") {
  CHECK(free_lrb(5).order() == 325);
}

TEST_CASE("small families") {
  auto const LZ = left_zero_semigroup(3);
  CHECK(is_left_zero_semigroup(LZ));
  CHECK(LZ.names() == std::vector<std::string>{"a", "b", "c"});
  auto const C = chain_semilattice(3);
  CHECK(is_semilattice(C));
  CHECK(C.product(2, 1) == 1);
  CHECK(is_commutative(C));
  CHECK_FALSE(is_commutative(gen_L()));
  auto const M = adjoin_identity(LZ);
  CHECK(M.identity() == element_type{3});
  CHECK(M.name(3) == "1");
  CHECK(is_isomorphic(adjoin_identity(left_zero_semigroup(2)), gen_L()));
}

TEST_CASE("isomorphism") {
  CHECK_FALSE(is_isomorphic(gen_L(), chain_semilattice(3)));
  CHECK_FALSE(is_isomorphic(gen_L(), gen_ZL()));

  SUBCASE("random relabelings are recognised") {
    std::mt19937 rng(5);
    for (auto const& [name, S] : testing::fixed_corpus()) {
      CAPTURE(name);
      std::vector<element_type> perm(S.order());
      std::iota(perm.begin(), perm.end(), element_type{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<element_type> t(S.order() * S.order());
      std::vector<std::string>  names(S.order());
      for (element_type x = 0; x < S.order(); ++x) {
        names[perm[x]] = S.name(x);
        for (element_type y = 0; y < S.order(); ++y) {
          t[perm[x] * S.order() + perm[y]] = perm[S.product(x, y)];
        }
      }
      auto const T = FiniteSemigroup::make(names, t);
      auto const f = is_isomorphic(S, T);
      REQUIRE(f);
      CHECK(is_isomorphism(S, T, *f));
    }
  }
  SUBCASE("distinct bands of equal order are told apart") {
    CHECK_FALSE(is_isomorphic(free_lrb(2), gen_ZL()));
    CHECK_FALSE(is_isomorphic(free_lrb(2), left_zero_semigroup(4)));
    CHECK_FALSE(is_isomorphic(coordinate_arrangement_monoid(2), b_n(3)));
  }
}
