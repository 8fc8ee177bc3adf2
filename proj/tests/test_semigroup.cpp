#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "lrbqv/arrangements.hpp"
#include "lrbqv/construct.hpp"
#include "lrbqv/partition.hpp"
#include "lrbqv/semigroup.hpp"
#include "lrbqv/table_io.hpp"

using namespace lrbqv;

namespace {
  RawTable raw(std::vector<std::string> names, std::vector<std::vector<std::size_t>> rows) {
    return {std::move(names), std::move(rows)};
  }
}  // namespace

TEST_CASE("validate: L") {
  auto r = validate(raw({"0", "+", "-"}, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}));
  REQUIRE(r.ok());
  CHECK(r.errors.empty());
  CHECK(r.semigroup->order() == 3);
  CHECK(r.semigroup->identity() == element_type{0});
  CHECK(r.semigroup->is_lrb());
}

TEST_CASE("validate: singleton") {
  auto r = validate(raw({"e"}, {{0}}));
  REQUIRE(r.ok());
  CHECK(r.semigroup->identity() == element_type{0});
}

TEST_CASE("validate: the cyclic group of order two is associative") {
  // aa = b, ab = a, ba = a, bb = b: b is an identity and a has order two.
  auto r = validate(raw({"a", "b"}, {{1, 0}, {0, 1}}));
  REQUIRE(r.ok());
  CHECK(r.semigroup->identity() == element_type{1});
  CHECK_FALSE(r.semigroup->is_lrb());
}

TEST_CASE("validate: associativity failures are all listed") {
  // aa = b, ab = b, ba = a, bb = a. Brute force: all eight triples fail.
  auto r = validate(raw({"a", "b"}, {{1, 1}, {0, 0}}));
  REQUIRE_FALSE(r.ok());
  REQUIRE(r.errors.size() == 8);
  for (auto const& e : r.errors) {
    CHECK(e.kind == ValidationErrorKind::non_associative);
  }
  CHECK(r.errors.front().where == std::array<std::size_t, 3>{0, 0, 0});
  CHECK(r.errors.back().where == std::array<std::size_t, 3>{1, 1, 1});
  CHECK(r.errors.front().message.find("(a, a, a)") != std::string::npos);
}

TEST_CASE("validate: structural errors") {
  SUBCASE("non-square") {
    auto r = validate(raw({"a", "b"}, {{0, 1}, {1}}));
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().kind == ValidationErrorKind::non_square);
  }
  SUBCASE("name count") {
    auto r = validate(raw({"a", "b", "c"}, {{0, 1}, {1, 1}}));
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().kind == ValidationErrorKind::name_count);
  }
  SUBCASE("duplicate names") {
    auto r = validate(raw({"a", "a"}, {{0, 0}, {0, 0}}));
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().kind == ValidationErrorKind::duplicate_name);
  }
  SUBCASE("out of range") {
    auto r = validate(raw({"a", "b"}, {{0, 7}, {1, 1}}));
    REQUIRE_FALSE(r.ok());
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors.front().kind == ValidationErrorKind::out_of_range);
    CHECK(r.errors.front().where == std::array<std::size_t, 3>{0, 1, 7});
  }
  SUBCASE("empty") {
    CHECK_FALSE(validate(raw({}, {})).ok());
  }
  CHECK_THROWS_AS(FiniteSemigroup::make({"a", "b"}, {1, 1, 0, 0}), InvalidSemigroup);
}

TEST_CASE("identity detection") {
  CHECK_FALSE(left_zero_semigroup(2).identity().has_value());
  CHECK(gen_ZL().identity() == element_type{0});
  auto const S = adjoin_identity(left_zero_semigroup(2));
  CHECK(S.identity() == element_type{2});
}

TEST_CASE("is_left_regular_band") {
  CHECK(is_left_regular_band(gen_L()));
  CHECK(is_left_regular_band(chain_semilattice(4)));
  SUBCASE("two right zeroes with identity") {
    // Elements a, b, 1 with xy = y on {a, b}.
    auto const R = FiniteSemigroup::make({"a", "b", "1"}, {0, 1, 0, 0, 1, 1, 0, 1, 2});
    CHECK_FALSE(is_left_regular_band(R));
    auto v = find_lrb_violation(R);
    REQUIRE(v);
    CHECK(v->identity == "xyx=xy");
    CHECK(v->witnesses == std::vector<element_type>{0, 1});
    CHECK_THROWS_AS(require_lrb(R, "test"), PreconditionError);
  }
  SUBCASE("non-idempotent") {
    auto v = find_lrb_violation(FiniteSemigroup::make({"a", "b"}, {1, 0, 0, 1}));
    REQUIRE(v);
    CHECK(v->identity == "xx=x");
    CHECK(v->witnesses == std::vector<element_type>{0});
  }
}

TEST_CASE("Partition") {
  Partition P(5, {{3, 1}, {0}, {4, 2}});
  CHECK(P.size() == 3);
  CHECK(P.blocks() == std::vector<element_set>{{0}, {1, 3}, {2, 4}});
  CHECK(P.same_block(1, 3));
  CHECK_FALSE(P.same_block(0, 1));
  CHECK(Partition::discrete(5).refines(P));
  CHECK(P.refines(Partition::single_block(5)));
  CHECK_FALSE(P.refines(Partition::discrete(5)));
  CHECK(Partition::from_labels({7, 3, 7, 3, 1}) == Partition(5, {{0, 2}, {1, 3}, {4}}));
  CHECK_THROWS_AS(Partition(3, {{0, 1}, {1, 2}}), PreconditionError);
  CHECK_THROWS_AS(Partition(3, {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Partition(3, {{0, 1, 2}, {}}), PreconditionError);
}

TEST_CASE("table text format") {
  std::string const text = "# the monoid L\n"
                           "elements: 0 + -\n"
                           "\n"
                           "0 + -\n"
                           "+ + +\n"
                           "  # rows may be interleaved with comments\n"
                           "- - -\n";
  auto const S = read_semigroup(text);
  CHECK(S == gen_L());
  CHECK(format_table(S) == "elements: 0 + -\n0 + -\n+ + +\n- - -\n");

  SUBCASE("round trip over the corpus") {
    for (auto const& [name, T] : testing::fixed_corpus()) {
      CAPTURE(name);
      CHECK(read_semigroup(format_table(T)) == T);
    }
  }
  SUBCASE("errors carry line numbers") {
    auto line_of = [](std::string const& t) {
      try {
        parse_table(t);
      } catch (ParseError const& e) {
        return e.line();
      }
      return std::size_t{0};
    };
    CHECK(line_of("elements: a b\na b\na c\n") == 3);
    CHECK(line_of("# x\nelems: a\n") == 2);
    CHECK(line_of("elements: a b\na b a\n") == 2);
    CHECK(line_of("elements: a b\na b\n") != 0);
    CHECK(line_of("elements: a a\n") == 1);
    CHECK(line_of("") == 0);
    CHECK_THROWS_AS(parse_table(""), ParseError);
  }
  SUBCASE("non-associative text is rejected by read_semigroup") {
    CHECK_THROWS_AS(read_semigroup("elements: a b\nb b\na a\n"), InvalidSemigroup);
  }
}

TEST_CASE("renamed") {
  auto const S = gen_L().renamed({"one", "p", "m"});
  CHECK(S.name(1) == "p");
  CHECK(S.at("m") == 2);
  CHECK_THROWS_AS(gen_L().renamed({"a", "a", "b"}), InvalidSemigroup);
  CHECK_THROWS_AS(gen_L().at("nope"), PreconditionError);
}
