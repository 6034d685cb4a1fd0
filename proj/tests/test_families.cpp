#include <doctest.h>

#include "helpers.hpp"
#include "integra/errors.hpp"
#include "integra/families.hpp"

#include <optional>

using namespace integra;

TEST_CASE("pell solutions") {
  const auto sols = pell_solutions(5);
  REQUIRE(sols.size() == 5);
  const std::vector<std::pair<long, long>> expected{
      {1, 1}, {5, 3}, {19, 11}, {71, 41}, {265, 153}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(sols[i].x == expected[i].first);
    CHECK(sols[i].y == expected[i].second);
  }

  SUBCASE("every solution satisfies the defining equation and recurrence") {
    const auto many = pell_solutions(30);
    for (const auto& s : many) CHECK(s.x * s.x - 3 * s.y * s.y == -2);
    for (std::size_t i = 1; i < many.size(); ++i) {
      CHECK(many[i].x == 2 * many[i - 1].x + 3 * many[i - 1].y);
      CHECK(many[i].y == many[i - 1].x + 2 * many[i - 1].y);
    }
  }

  SUBCASE("brute force search confirms completeness up to x = 300") {
    std::vector<std::pair<long, long>> found;
    for (long x = 1; x <= 300; ++x)
      for (long y = 1; 3 * y * y <= x * x + 2; ++y)
        if (x * x - 3 * y * y == -2) found.emplace_back(x, y);
    REQUIRE(found.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) {
      CHECK(sols[i].x == found[i].first);
      CHECK(sols[i].y == found[i].second);
    }
  }
}

TEST_CASE("admissible a values") {
  const auto values = valid_a_values(3);
  CHECK(values == std::vector<BigInt>{4, -11, 45});

  SUBCASE("each passes the perfect-square screen") {
    for (const BigInt& a : valid_a_values(8)) {
      CHECK(abs(a) >= 3);
      const auto b = is_perfect_square(12 * a * a - 20 * a + 9);
      REQUIRE(b.has_value());
      const BigInt six_a = 6 * a - 5;
      CHECK(six_a * six_a - 3 * (*b) * (*b) == -2);
    }
  }

  SUBCASE("screen witnesses from the examples") {
    CHECK(is_perfect_square(BigInt(12 * 16 - 80 + 9)) == BigInt(11));
    CHECK(is_perfect_square(BigInt(12 * 121 + 220 + 9)) == BigInt(41));
  }
}

TEST_CASE("pick_squares") {
  CHECK(pick_squares(16, 36, 1) == std::vector<BigInt>{25});
  CHECK(pick_squares(36, 64, 1) == std::vector<BigInt>{49});
  CHECK(pick_squares(64, 225, 2) == std::vector<BigInt>{81, 100});
  CHECK(pick_squares(10, 11, 0).empty());

  try {
    pick_squares(4, 9, 1);
    FAIL("expected infeasible_error");
  } catch (const infeasible_error& e) {
    CHECK(e.minimal_feasible() == 0);  // number available
    CHECK(std::string(e.what()).find("only 0 available") != std::string::npos);
  }

  SUBCASE("strictness at the boundaries") {
    // lo and hi themselves are squares and must be excluded
    CHECK(pick_squares(16, 36, 1).front() == 25);
    CHECK(count_squares_between(16, 26) == 1);
    CHECK(count_squares_between(16, 25) == 0);
    CHECK(count_squares_between(15, 26) == 2);  // 16 and 25
  }
}

TEST_CASE("family 4k+1") {
  SUBCASE("the diameter-5 seed instance") {
    const FamilyInstance inst = family_4k1(3, 2);
    CHECK(inst.diameter() == 5);
    CHECK(inst.params.r == 35);
    CHECK(inst.params.r0 == 1);
    CHECK(inst.params.radii == std::vector<BigInt>{36, 64});
  }

  SUBCASE("k too small for the requested depth") {
    try {
      family_4k1(3, 4);
      FAIL("expected infeasible_error");
    } catch (const infeasible_error& e) {
      CHECK(e.minimal_feasible() == 4);
      CHECK(std::string(e.what()).find("need 2") != std::string::npos);
    }
    try {
      family_4k1(2, 2);
      FAIL("expected infeasible_error");
    } catch (const infeasible_error& e) {
      CHECK(e.minimal_feasible() == 3);
      CHECK(std::string(e.what()).find("k >= 3") != std::string::npos);
    }
  }

  SUBCASE("diameter-9 instance picks the smallest admissible squares") {
    const FamilyInstance inst = family_4k1(4, 4);
    CHECK(inst.diameter() == 9);
    CHECK(inst.params.r == 63);
    CHECK(inst.params.radii == std::vector<BigInt>{64, 81, 100, 225});
  }

  SUBCASE("ordering invariant holds for a sweep of k and n") {
    for (long k = 3; k <= 8; ++k)
      for (std::size_t n : {2, 4, 6}) {
        std::optional<FamilyInstance> inst;
        try {
          inst = family_4k1(k, n);
        } catch (const infeasible_error&) {
          continue;
        }
        BigInt prev = std::max(inst->params.r0, inst->params.radii[0]);
        for (std::size_t i = 1; i < inst->params.radii.size(); ++i) {
          CHECK(inst->params.radii[i] > prev);
          prev = inst->params.radii[i];
        }
      }
  }
}

TEST_CASE("family 4k+3") {
  SUBCASE("the diameter-7 seed instance") {
    const FamilyInstance inst = family_4k3(4, 3);
    CHECK(inst.diameter() == 7);
    CHECK(inst.params.r == 36);
    CHECK(inst.params.r0 == 16);
    CHECK(inst.params.radii == std::vector<BigInt>{16, 25, 36});
  }

  SUBCASE("negative a") {
    const FamilyInstance inst = family_4k3(-11, 3);
    CHECK(inst.params.r == 576);
    CHECK(inst.params.r0 == 121);
    CHECK(inst.params.radii == std::vector<BigInt>{121, 144, 576});

    const FamilyInstance deeper = family_4k3(-11, 5);
    CHECK(deeper.params.radii == std::vector<BigInt>{121, 144, 169, 196, 576});
  }

  SUBCASE("inadmissible a is rejected") {
    CHECK_THROWS_AS(family_4k3(5, 3), infeasible_error);
    CHECK_THROWS_AS(family_4k3(2, 3), infeasible_error);
  }

  SUBCASE("interval too thin reports the minimal feasible a") {
    try {
      family_4k3(4, 5);  // needs 3 squares in (16, 36); only 25 is there
      FAIL("expected infeasible_error");
    } catch (const infeasible_error& e) {
      CHECK(e.minimal_feasible() == -11);
    }
  }
}

TEST_CASE("instance_for_diameter") {
  CHECK_THROWS_AS(instance_for_diameter(4, 0), param_error);
  CHECK_THROWS_AS(instance_for_diameter(3, 0), param_error);

  const FamilyInstance d5 = instance_for_diameter(5, 0);
  CHECK(d5.family == Family::diameter_4k1);
  CHECK(d5.parameter == 3);
  CHECK(instance_for_diameter(5, 1).parameter == 4);

  const FamilyInstance d7 = instance_for_diameter(7, 0);
  CHECK(d7.family == Family::diameter_4k3);
  CHECK(d7.parameter == 4);
  CHECK(instance_for_diameter(7, 1).parameter == -11);

  // a = 4 gives only one middle square, so diameter 11 starts at a = -11
  CHECK(instance_for_diameter(11, 0).parameter == -11);
  CHECK(instance_for_diameter(11, 1).parameter == 45);

  CHECK(instance_for_diameter(9, 0).parameter == 4);
  CHECK(instance_for_diameter(13, 0).parameter == 4);
}

TEST_CASE("certify") {
  SUBCASE("diameter 5, 3314 vertices") {
    const Certificate cert = certify(family_4k1(3, 2));
    CHECK(cert.certified);
    CHECK(cert.vertices == 3314);
    CHECK(cert.diameter_checked);
    CHECK(cert.spectrum.integral);
    CHECK(cert.spectrum.multiplicity_total() == 3314);
  }

  SUBCASE("diameter 7, 12197 vertices") {
    const Certificate cert = certify(family_4k3(4, 3));
    CHECK(cert.certified);
    CHECK(cert.vertices == 12197);
    CHECK(cert.diameter_checked);
    std::set<BigInt> values;
    for (const auto& [v, m] : cert.spectrum.multiplicities) values.insert(v);
    CHECK(values == std::set<BigInt>{-8, -6, -5, -4, -3, 0, 3, 4, 5, 6, 8});
  }

  SUBCASE("a hand-mutated non-square radius fails certification") {
    FamilyInstance broken = family_4k3(4, 3);
    broken.params = OddTreeParams::of(broken.params.r, broken.params.r0,
                                      {16, 26, 36});  // 26 is not a square
    const Certificate cert = certify(broken);
    CHECK_FALSE(cert.certified);
    CHECK(cert.failure.find("non-square radicand 26") != std::string::npos);
  }

  SUBCASE("instances beyond the cap skip only the BFS check") {
    const Certificate cert = certify(family_4k3(-11, 3));  // 37 million vertices
    CHECK(cert.certified);
    CHECK_FALSE(cert.diameter_checked);
    CHECK(cert.spectrum.integral);
  }

  SUBCASE("certification stays exact at astronomical parameter size") {
    // a deep admissible a makes every root of psi_odd astronomically large
    const BigInt a = valid_a_values(25).back();
    REQUIRE(abs(a) > BigInt("1000000000000"));
    const Certificate cert = certify(family_4k3(a, 3));
    CHECK(cert.certified);
    CHECK_FALSE(cert.diameter_checked);
    CHECK(cert.spectrum.integral);
    CHECK(cert.spectrum.multiplicity_total() == cert.vertices);
  }

  SUBCASE("certification sweep within budget") {
    for (long k = 3; k <= 6; ++k)
      for (std::size_t n : {2, 4}) {
        std::optional<FamilyInstance> inst;
        try {
          inst = family_4k1(k, n);
        } catch (const infeasible_error&) {
          continue;
        }
        const Certificate cert = certify(*inst);
        CHECK(cert.certified);
        // the 4k+1 family always shows +-1, +-(k^2+1) and +-2k
        const BigInt kk(k);
        CHECK(cert.spectrum.multiplicities.count(1) == 1);
        CHECK(cert.spectrum.multiplicities.count(kk * kk + 1) == 1);
        CHECK(cert.spectrum.multiplicities.count(2 * kk) == 1);
      }
    for (const BigInt& a : {BigInt(4), BigInt(-11)}) {
      const Certificate cert = certify(family_4k3(a, 3));
      CHECK(cert.certified);
    }
  }
}
