#include "integra/families.hpp"

#include <sstream>

#include "integra/errors.hpp"

namespace integra {

std::vector<PellSolution> pell_solutions(std::size_t count) {
  if (count < 1) throw param_error("count must be positive");
  std::vector<PellSolution> out;
  out.reserve(count);
  BigInt x = 1, y = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({x, y});
    BigInt nx = 2 * x + 3 * y;
    y = x + 2 * y;
    x = std::move(nx);
  }
  return out;
}

namespace {

// The unique integer a with 6a - 5 = +-x for a Pell x (always x = +-1 mod 6).
BigInt a_from_pell_x(const BigInt& x) {
  if ((x - 1) % 6 == 0) return (x + 5) / 6;
  return (5 - x) / 6;
}

bool admissible_a(const BigInt& a) {
  return abs(a) >= 3 && is_perfect_square(12 * a * a - 20 * a + 9).has_value();
}

}  // namespace

std::vector<BigInt> valid_a_values(std::size_t count) {
  if (count < 1) throw param_error("count must be positive");
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt x = 1, y = 1;
  while (out.size() < count) {
    BigInt a = a_from_pell_x(x);
    if (admissible_a(a)) out.push_back(std::move(a));
    BigInt nx = 2 * x + 3 * y;
    y = x + 2 * y;
    x = std::move(nx);
  }
  return out;
}

std::optional<BigInt> admissible_a_for(const PellSolution& s) {
  BigInt a = a_from_pell_x(s.x);
  if (!admissible_a(a)) return std::nullopt;
  return a;
}

BigInt count_squares_between(const BigInt& lo, const BigInt& hi) {
  // squares s^2 with lo < s^2 < hi, i.e. isqrt(lo) < s <= isqrt(hi - 1)
  if (hi <= lo + 1) return 0;
  BigInt first = isqrt(std::max(lo, BigInt(0))) + 1;
  BigInt last = isqrt(hi - 1);
  BigInt n = last - first + 1;
  return n > 0 ? n : BigInt(0);
}

std::vector<BigInt> pick_squares(const BigInt& lo, const BigInt& hi,
                                 std::size_t count) {
  const BigInt available = count_squares_between(lo, hi);
  if (available < BigInt(static_cast<unsigned long>(count))) {
    std::ostringstream msg;
    msg << "need " << count << " distinct squares strictly inside ("
        << lo.get_str() << ", " << hi.get_str() << "), only "
        << available.get_str() << " available";
    throw infeasible_error(msg.str(), available);
  }
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt s = isqrt(std::max(lo, BigInt(0))) + 1;
  for (std::size_t i = 0; i < count; ++i, ++s) out.push_back(s * s);
  return out;
}

FamilyInstance family_4k1(const BigInt& k, std::size_t n_even) {
  if (n_even < 2 || n_even % 2 != 0)
    throw param_error("the 4k+1 family needs an even n >= 2");
  if (k < 3)
    throw infeasible_error("family 4k1 requires k >= 3 (4k^2 < (k^2-1)^2 fails below)",
                           3);
  const BigInt r1 = 4 * k * k;
  const BigInt rn = (k * k - 1) * (k * k - 1);
  std::vector<BigInt> middle;
  try {
    middle = pick_squares(r1, rn, n_even - 2);
  } catch (const infeasible_error& e) {
    // report the smallest k that fits this n; square availability grows with k
    BigInt feasible = k;
    while (count_squares_between(4 * feasible * feasible,
                                 (feasible * feasible - 1) * (feasible * feasible - 1)) <
           BigInt(static_cast<unsigned long>(n_even - 2)))
      ++feasible;
    std::ostringstream msg;
    msg << e.what() << "; minimal feasible k for n=" << n_even << " is "
        << feasible.get_str();
    throw infeasible_error(msg.str(), feasible);
  }

  std::vector<BigInt> radii;
  radii.reserve(n_even);
  radii.push_back(r1);
  for (auto& s : middle) radii.push_back(std::move(s));
  radii.push_back(rn);
  OddTreeParams params = OddTreeParams::of(4 * k * k - 1, 1, std::move(radii));
  return FamilyInstance{Family::diameter_4k1, k, n_even, std::move(params)};
}

FamilyInstance family_4k3(const BigInt& a, std::size_t n_odd) {
  if (n_odd < 3 || n_odd % 2 != 1)
    throw param_error("the 4k+3 family needs an odd n >= 3");
  if (!admissible_a(a)) {
    std::ostringstream msg;
    msg << "a=" << a.get_str()
        << " is not admissible: need |a| >= 3 and 12a^2-20a+9 a perfect square"
        << " (admissible values start 4, -11, 45)";
    throw infeasible_error(msg.str(), 4);
  }
  const BigInt r0 = a * a;
  const BigInt rn = 4 * (a - 1) * (a - 1);
  std::vector<BigInt> middle;
  try {
    middle = pick_squares(r0, rn, n_odd - 2);
  } catch (const infeasible_error& e) {
    // report the smallest admissible |a| whose interval holds enough squares
    BigInt feasible = 0;
    for (std::size_t probe = 1;; ++probe) {
      const BigInt cand = valid_a_values(probe).back();
      if (count_squares_between(cand * cand, 4 * (cand - 1) * (cand - 1)) >=
          BigInt(static_cast<unsigned long>(n_odd - 2))) {
        feasible = cand;
        break;
      }
    }
    std::ostringstream msg;
    msg << e.what() << "; minimal feasible a for n=" << n_odd << " is "
        << feasible.get_str();
    throw infeasible_error(msg.str(), feasible);
  }

  std::vector<BigInt> radii;
  radii.reserve(n_odd);
  radii.push_back(r0);  // r1 = a^2
  for (auto& s : middle) radii.push_back(std::move(s));
  radii.push_back(rn);
  OddTreeParams params = OddTreeParams::of(rn, r0, std::move(radii));
  return FamilyInstance{Family::diameter_4k3, a, n_odd, std::move(params)};
}

FamilyInstance instance_for_diameter(std::size_t diameter, std::size_t index) {
  if (diameter < 5 || diameter % 2 == 0)
    throw param_error("certified instances exist for odd diameters >= 5");
  const std::size_t n = (diameter - 1) / 2;
  if (n % 2 == 0) {
    // smallest feasible k, then `index` increments (feasibility is monotone)
    BigInt k = 3;
    while (count_squares_between(4 * k * k, (k * k - 1) * (k * k - 1)) <
           BigInt(static_cast<unsigned long>(n - 2)))
      ++k;
    return family_4k1(k + BigInt(static_cast<unsigned long>(index)), n);
  }
  // (index+1)-th admissible a whose square interval is wide enough
  std::size_t found = 0;
  for (std::size_t probe = 1;; ++probe) {
    const BigInt a = valid_a_values(probe).back();
    if (count_squares_between(a * a, 4 * (a - 1) * (a - 1)) >=
        BigInt(static_cast<unsigned long>(n - 2))) {
      if (found == index) return family_4k3(a, n);
      ++found;
    }
  }
}

Certificate certify(const FamilyInstance& inst, std::size_t max_vertices) {
  Certificate cert{inst, {}, {}, false, false, {}};
  cert.vertices = vertex_count_t(inst.params);
  auto fail = [&](const std::string& what) {
    if (!cert.failure.empty()) return;
    cert.failure = what;
  };

  const FactoredSpectrum factored = charpoly_t_factored(inst.params);
  cert.spectrum = spectrum_report(factored, cert.vertices);

  if (!cert.spectrum.integral) {
    std::ostringstream msg;
    msg << "spectrum is not integral:";
    for (const auto& [poly, e] : cert.spectrum.residual_factors) {
      if (poly.degree() == 2 && poly.coeff(1) == 0 && poly.coeff(2) == 1) {
        const BigInt radicand = -poly.coeff(0);
        msg << " non-square radicand " << radicand.get_str() << ";";
      } else {
        msg << " non-integer residual factor " << poly.to_string() << ";";
      }
    }
    fail(msg.str());
  }

  if (cert.spectrum.multiplicity_total() + cert.spectrum.residual_degree_total() !=
      cert.vertices)
    fail("eigenvalue count does not match the vertex count");

  if (fits_size_t(cert.vertices) && to_size_t(cert.vertices) <= max_vertices) {
    const RootedTree tree = build_t(inst.params, max_vertices);
    cert.diameter_checked = true;
    if (BigInt(tree.vertex_count()) != cert.vertices)
      fail("materialized vertex count disagrees with the size recurrence");
    const std::size_t measured = integra::diameter(tree);
    if (measured != inst.diameter()) {
      std::ostringstream msg;
      msg << "measured diameter " << measured << " != declared "
          << inst.diameter();
      fail(msg.str());
    }
  }

  cert.certified = cert.failure.empty();
  return cert;
}

}  // namespace integra
