#include <doctest.h>

#include <stdexcept>
#include <random>

#include "distprof/poly.hpp"

using namespace distprof;

namespace {

TriPoly random_tri(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 5), deg(0, 3), coeff(-40, 40);
  TriPoly p;
  for (int i = terms(rng); i > 0; --i)
    p.add_term({std::uint32_t(deg(rng)), std::uint32_t(deg(rng)), std::uint32_t(deg(rng))},
               BigInt(coeff(rng)));
  return p;
}

}  // namespace

TEST_CASE("sparse polynomial basics") {
  TriPoly p = tri_monomial(0, 1, 0, 3) + tri_monomial(0, 0, 1, 2);
  CHECK(p.term_count() == 2);
  CHECK(p.coefficient({0, 1, 0}) == 3);
  CHECK(p.coefficient({1, 1, 1}) == 0);
  p -= tri_monomial(0, 1, 0, 3);
  CHECK(p.term_count() == 1);
  CHECK((p - p).is_zero());
  CHECK(p.max_degree(2) == 1);
  CHECK(to_string(TriPoly{}) == "0");
  CHECK(to_string(tri_monomial(1, 1, 0, -1) + TriPoly::constant(1)) == "1 - ex");
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
  TriPoly big = TriPoly::constant(BigInt("18446744073709551616"));  // 2^64
  TriPoly sq = big * big;
  CHECK(sq.coefficient({0, 0, 0}) == BigInt("340282366920938463463374607431768211456"));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  const TriPoly zero, one = TriPoly::constant(1);
  for (int i = 0; i < 300; ++i) {
    const TriPoly a = random_tri(rng), b = random_tri(rng), c = random_tri(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + zero == a);
    CHECK(a * one == a);
    CHECK((a * zero).is_zero());
    CHECK((a + (-a)).is_zero());
    CHECK(a - b == a + (-b));
  }
}

TEST_CASE("profile rendering uses the canonical order") {
  const Profile p = parse_profile("3y^2 + 6xy + 1 + 4x + 3x^2 + 4y");
  CHECK(to_string(p) == "1 + 4x + 4y + 3x^2 + 6xy + 3y^2");
  CHECK(to_string(Profile{}) == "0");
  CHECK(to_string(Profile::one()) == "1");
  CHECK(to_string(Profile::single_piece()) == "x + y");
  CHECK(to_string(Profile::monomial(2, 3, 5)) == "5x^2y^3");
}

TEST_CASE("profile parse and print round trip") {
  for (const char* text : {"1", "x", "1 + x + y", "1 + 4x + 4y + 2x^2 + 12xy + 2y^2 + 4x^2y + 4xy^2 + 2x^2y^2",
                           "7 + 12x^10y^3"}) {
    CAPTURE(text);
    CHECK(to_string(parse_profile(text)) == text);
  }
  CHECK(parse_profile("x + x") == Profile::monomial(1, 0, 2));
  CHECK(parse_profile("0").is_zero());
}

TEST_CASE("profile parse errors") {
  CHECK_THROWS_AS(parse_profile(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("1 +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("1 - x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_profile("z"), std::invalid_argument);
}

TEST_CASE("profiles reject negative coefficients") {
  CHECK_THROWS_AS(Profile::monomial(1, 0, -1), std::domain_error);
  Profile p;
  CHECK_THROWS_AS(p.add_count(0, 0, -3), std::domain_error);
  Profile::Poly neg;
  neg.add_term({0, 0}, -1);
  CHECK_THROWS_AS(Profile{neg}, std::domain_error);
}

TEST_CASE("evaluation, collapse, alternating part and swap") {
  const Profile p = parse_profile("1 + 4x + 4y + 3x^2 + 6xy + 3y^2");
  CHECK(total(p) == 21);
  CHECK(evaluate(p, 2, 0) == 1 + 8 + 12);
  CHECK(univariate_collapse(p) == std::vector<BigInt>{1, 8, 12});
  CHECK(univariate_to_string(univariate_collapse(p)) == "1 + 8x + 12x^2");
  CHECK(to_string(alternating_part(p)) == "1 + 4x + 4y + 6xy");
  const Profile q = parse_profile("1 + 2x + 5y^3");
  CHECK(to_string(q.swapped()) == "1 + 2y + 5x^3");
  CHECK(q.swapped().swapped() == q);
  CHECK(univariate_collapse(Profile{}).empty());
  CHECK(univariate_to_string({}) == "0");
}

TEST_CASE("profile products count disjoint unions") {
  // Two isolated vertices under any game: (1 + x + y)^2.
  const Profile v = Profile::one() + Profile::single_piece();
  CHECK(to_string(v * v) == "1 + 2x + 2y + x^2 + 2xy + y^2");
}

TEST_CASE("setting e to one merges terms") {
  const TriPoly t = tri_monomial(2, 1, 0, 3) + tri_monomial(0, 1, 0, 4) + tri_monomial(1, 0, 0);
  CHECK(to_string(specialize_e(t)) == "1 + 7x");
}
