#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "riesz/types.hpp"

using namespace riesz;

TEST_CASE("rationals construct in lowest terms with positive denominator") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(rat(-3, -6) == rat(1, 2));
  CHECK(to_string(rat(-3, 6)) == "-1/2");
  CHECK(to_string(rat(8, 4)) == "2");
  CHECK_THROWS_AS(rat(1, 0), ValidationError);
}

TEST_CASE("rational parsing accepts a and a/b shapes only") {
  CHECK(parse_rational("7") == rat(7));
  CHECK(parse_rational("-7") == rat(-7));
  CHECK(parse_rational("2/6") == rat(1, 3));
  CHECK(parse_rational("-2/6") == rat(-1, 3));
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
  CHECK_THROWS_AS(parse_rational("/2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1 2"), ParseError);
}

TEST_CASE("integer detection and conversion") {
  CHECK(is_integer(rat(4, 2)));
  CHECK(!is_integer(rat(1, 2)));
  CHECK(to_double(rat(1, 2)) == 0.5);
}

TEST_CASE("exact powers and roots") {
  CHECK(pow_int(rat(2, 3), 3) == rat(8, 27));
  CHECK(pow_int(rat(5), 0) == rat(1));
  REQUIRE(exact_root(rat(4, 9), 2).has_value());
  CHECK(*exact_root(rat(4, 9), 2) == rat(2, 3));
  CHECK(!exact_root(rat(2), 2).has_value());
  CHECK(!exact_root(rat(-1), 2).has_value());
  REQUIRE(exact_root(rat(27, 8), 3).has_value());
  CHECK(*exact_root(rat(27, 8), 3) == rat(3, 2));
}

TEST_CASE("dyadic floor truncates toward minus infinity in units of 2^-j") {
  CHECK(dyadic_floor(rat(5, 3), 2) == rat(6, 4));
  CHECK(dyadic_floor(rat(-1, 3), 1) == rat(-1, 2));
  CHECK(dyadic_floor(rat(3, 4), 2) == rat(3, 4));
  CHECK(dyadic_floor(rat(0), 3) == 0);
}

TEST_CASE("spaces require nonnegative weights and a sane size") {
  const FiniteSpace s = make_space({1, 1, 2});
  CHECK(s.size() == 3);
  CHECK(s.strictly_positive());
  CHECK(s.total_mass() == 4);
  const FiniteSpace z = make_space({1, 0, 2});
  CHECK(!z.strictly_positive());
  CHECK_THROWS_AS(make_space({rat(-1), rat(1)}), ValidationError);
  CHECK_THROWS_AS(make_space(Vec()), ValidationError);
}

TEST_CASE("components are bit masks with 1-based text forms") {
  const Component p = make_component(4, {1, 3});
  CHECK(p.contains(0));
  CHECK(!p.contains(1));
  CHECK(p.contains(2));
  CHECK(p.count() == 2);
  CHECK(to_string(p) == "{1 3}");
  CHECK(to_string(Component{0, 4}) == "{}");
  CHECK_THROWS_AS(make_component(2, {3}), ValidationError);
}

TEST_CASE("component lattice operations") {
  const Component p = make_component(4, {1, 2});
  const Component q = make_component(4, {2, 3});
  CHECK(meet(p, q) == make_component(4, {2}));
  CHECK(join(p, q) == make_component(4, {1, 2, 3}));
  CHECK(complement(p) == make_component(4, {3, 4}));
  CHECK(difference(p, q) == make_component(4, {1}));
  CHECK(subset(meet(p, q), p));
  CHECK(!subset(p, q));
  CHECK(disjoint(p, complement(p)));
  CHECK(join(p, complement(p)) == full_component(4));
}

TEST_CASE("indicator and support are inverse on components") {
  const Component p = make_component(3, {1, 3});
  CHECK(support(indicator(p)) == p);
  const Vec f = vec_of({rat(1, 2), 0, rat(-3)});
  CHECK(support(f) == make_component(3, {1, 3}));
  CHECK(vec_eq(indicator(support(f)), vec_of({1, 0, 1})));
}

TEST_CASE("vector comparisons and printing") {
  const Vec a = vec_of({1, rat(1, 2), -2});
  CHECK(to_string(a) == "(1, 1/2, -2)");
  CHECK(vec_leq(a, a));
  CHECK(vec_leq(a, vec_of({1, 1, 0})));
  CHECK(!vec_leq(vec_of({1, 1, 0}), a));
  CHECK(is_zero(zero_vec(3)));
  CHECK(is_nonneg(vec_of({0, 1, rat(1, 3)})));
  CHECK(!is_nonneg(a));
  CHECK_THROWS_AS(require_same_size(zero_vec(2), zero_vec(3), "op"), SpaceMismatchError);
}
