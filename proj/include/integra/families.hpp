#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "integra/bigint.hpp"
#include "integra/charpoly.hpp"
#include "integra/tree.hpp"

namespace integra {

/// Solution of x^2 - 3y^2 = -2.
struct PellSolution {
  BigInt x;
  BigInt y;
};

// First `count` solutions in increasing x, generated from (1, 1) by
// (x, y) -> (2x + 3y, x + 2y).
std::vector<PellSolution> pell_solutions(std::size_t count);

// Integers a with 6a - 5 = +-x for a Pell solution x, |a| >= 3 and
// 12a^2 - 20a + 9 a perfect square, in order of |x|. Starts 4, -11, 45.
std::vector<BigInt> valid_a_values(std::size_t count);

// The a value a Pell solution induces via 6a - 5 = +-x, when admissible.
std::optional<BigInt> admissible_a_for(const PellSolution& s);

// The `count` smallest distinct perfect squares strictly inside (lo, hi),
// increasing. Throws infeasible_error reporting how many are available when
// there are fewer than `count`.
std::vector<BigInt> pick_squares(const BigInt& lo, const BigInt& hi,
                                 std::size_t count);

// Number of perfect squares strictly inside (lo, hi).
BigInt count_squares_between(const BigInt& lo, const BigInt& hi);

enum class Family { diameter_4k1, diameter_4k3 };

/// A concrete parameter set drawn from one of the two odd-diameter families.
struct FamilyInstance {
  Family family;
  BigInt parameter;  // k for the 4k+1 family, a for the 4k+3 family
  std::size_t n;
  OddTreeParams params;

  std::size_t diameter() const { return 2 * n + 1; }
};

// Diameter 2n+1 with n even: r0 = 1, r1 = 4k^2, rn = (k^2-1)^2, r = 4k^2-1,
// middle radii the smallest perfect squares in (4k^2, (k^2-1)^2).
// Requires k >= 3; throws infeasible_error naming the minimal feasible k.
FamilyInstance family_4k1(const BigInt& k, std::size_t n_even);

// Diameter 2n+1 with n odd: r0 = r1 = a^2, r = rn = 4(a-1)^2, middle radii
// the smallest perfect squares in (a^2, 4(a-1)^2). Requires a admissible
// (|a| >= 3, 12a^2 - 20a + 9 a perfect square); throws infeasible_error
// naming the minimal feasible |a| when the interval is too thin.
FamilyInstance family_4k3(const BigInt& a, std::size_t n_odd);

// Instance `index` (0-based) of odd diameter D >= 5: the 4k+1 family with
// the smallest feasible k plus `index` increments when D = 1 (mod 4), the
// (index+1)-th feasible admissible a when D = 3 (mod 4).
FamilyInstance instance_for_diameter(std::size_t diameter, std::size_t index);

/// Exact certification outcome: the spectrum with multiplicities plus
/// degree and (budget permitting) BFS-diameter cross-checks.
struct Certificate {
  FamilyInstance instance;
  BigInt vertices;
  SpectrumReport spectrum;
  bool diameter_checked = false;  // false when the tree exceeded the cap
  bool certified = false;
  std::string failure;  // names the violated invariant when not certified
};

Certificate certify(const FamilyInstance& inst,
                    std::size_t max_vertices = kDefaultMaxVertices);

}  // namespace integra
