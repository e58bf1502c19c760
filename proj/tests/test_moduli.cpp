#include <doctest.h>

#include "ulrich/moduli.hpp"

using namespace ulrich;

TEST_SUITE("moduli") {
  TEST_CASE("dimension formula, frozen values") {
    CHECK(dimension_formula(1, 5, 2) == 18);
    CHECK(dimension_formula(0, 4, 3) == 40);
    CHECK(dimension_formula(0, 2, 2) == 9);
    CHECK(dimension_formula(1, 5, 5) == 102);
    CHECK(dimension_formula(2, 14, 6) == 559);
  }

  TEST_CASE("Hom-space counts, frozen values") {
    const HomCounts c1 = hom_counts(0, 4, 3);
    CHECK(c1.hom_ab == 140);
    CHECK(c1.end_a == 49);
    CHECK(c1.end_b == 52);
    CHECK(dimension_from_counts(c1) == 40);

    const HomCounts c2 = hom_counts(1, 5, 2);
    CHECK(c2.hom_ab == 60);
    CHECK(c2.end_a == 16);
    CHECK(c2.end_b == 27);
    CHECK(dimension_from_counts(c2) == 18);
  }

  TEST_CASE("counted dimension equals the closed form on a box") {
    for (long e = 0; e <= 3; ++e)
      for (long b = 3 * e + 2; b <= 3 * e + 12; ++b)
        for (long r = 2; r <= 8; ++r)
          REQUIRE(dimension_from_counts(hom_counts(e, b, r)) ==
                  dimension_formula(e, b, r));
  }

  TEST_CASE("odd rank at e = 0 matches the specialization") {
    for (long b = 2; b <= 14; ++b)
      for (long r = 3; r <= 9; r += 2)
        REQUIRE(dimension_formula(0, b, r) ==
                Int(r * r - 1) / 4 * (Int(6) * b - 4));
  }

  TEST_CASE("rank steps of two change the dimension linearly") {
    for (long e = 0; e <= 3; ++e)
      for (long b = 3 * e + 2; b <= 3 * e + 10; ++b)
        for (long r = 2; r <= 6; ++r)
          REQUIRE(dimension_formula(e, b, r + 2) - dimension_formula(e, b, r) ==
                  Int(r + 1) * (Int(6) * b - 9 * e - 4));
  }

  TEST_CASE("comparison report") {
    const DimensionReport rep = compare_dimensions(1, 5, 2);
    CHECK(rep.e == 1);
    CHECK(rep.b == 5);
    CHECK(rep.r == 2);
    CHECK(rep.counted == 18);
    CHECK(rep.formula == 18);
    CHECK(rep.agree);
    CHECK_FALSE(rep.has_sample);
  }

  TEST_CASE("ranks below two are rejected") {
    CHECK_THROWS_AS(dimension_formula(0, 2, 1), ConfigError);
    CHECK_THROWS_AS(compare_dimensions(0, 2, 0), ConfigError);
  }
}
