#include "integra/charpoly.hpp"

#include <algorithm>

#include "integra/errors.hpp"

namespace integra {

std::pair<IntPoly, IntPoly> charpoly_join(const IntPoly& p1,
                                          const IntPoly& p1_root_deleted,
                                          const IntPoly& p2,
                                          const IntPoly& p2_root_deleted,
                                          const BigInt& n) {
  if (n < 1) throw param_error("join needs n >= 1 copies");
  const std::size_t copies = to_size_t(n);
  IntPoly p2_pow = p2.pow(copies - 1);
  IntPoly joined = p2_pow * (p1 * p2 - IntPoly(n) * p1_root_deleted * p2_root_deleted);
  IntPoly joined_deleted = p1_root_deleted * p2_pow * p2;
  return {std::move(joined), std::move(joined_deleted)};
}

namespace {

// P_k = phi(C(r1..rk)) for k = 0..n, via
// P_k = P_{k-1}^{d_k} P_{k-2} (x^2 - r_k) / (x^2 - r_{k-1}).
std::vector<FactoredSpectrum> c_prefix_charpolys(const CsikvariParams& p) {
  std::vector<FactoredSpectrum> f(p.n() + 1);
  f[0] = FactoredSpectrum::x_power(1);
  if (p.n() == 0) return f;
  const auto d = p.gaps();
  f[1] = FactoredSpectrum::x_power(p.radii[0] - 1) *
         FactoredSpectrum::quadratic(p.radii[0]);
  for (std::size_t k = 2; k <= p.n(); ++k) {
    f[k] = f[k - 1].pow(d[k]) * f[k - 2] *
           FactoredSpectrum::quadratic(p.radii[k - 1]) *
           FactoredSpectrum::quadratic(p.radii[k - 2], -1);
  }
  return f;
}

}  // namespace

FactoredSpectrum charpoly_c_factored(const CsikvariParams& p) {
  return c_prefix_charpolys(p).back();
}

FactoredSpectrum charpoly_c_root_deleted(const CsikvariParams& p) {
  // Q_k = P_{k-1}^{d_k} Q_{k-2}; Q_0 = 1 (empty forest), Q_1 = x^{r_1}.
  if (p.n() == 0) return FactoredSpectrum{};
  const auto f = c_prefix_charpolys(p);
  const auto d = p.gaps();
  FactoredSpectrum prev2;  // Q_0
  FactoredSpectrum prev = FactoredSpectrum::x_power(p.radii[0]);
  for (std::size_t k = 2; k <= p.n(); ++k) {
    FactoredSpectrum cur = f[k - 1].pow(d[k]) * prev2;
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

FactoredSpectrum f_of_c(const CsikvariParams& p) {
  if (p.n() == 0) throw param_error("f(C) needs n >= 1");
  const auto f = c_prefix_charpolys(p);
  const auto d = p.gaps();
  const std::size_t n = p.n();
  FactoredSpectrum acc;
  // product over i = 1..ceil(n/2) of phi(C(r1..r_L))^{d_{L+1}} / (x^2 - r_L)
  // with L = n - 2i + 1; r_0 = 0 makes the last divisor x^2 when n is odd.
  for (std::size_t i = 1; 2 * i <= n + 1; ++i) {
    const std::size_t len = n - 2 * i + 1;
    acc *= f[len].pow(d[len + 1]);
    const BigInt divisor_radicand = (len == 0) ? BigInt(0) : p.radii[len - 1];
    acc *= FactoredSpectrum::quadratic(divisor_radicand, -1);
  }
  return acc;
}

IntPoly psi_odd(const BigInt& r, const BigInt& r0, const BigInt& r1,
                const BigInt& rn) {
  const IntPoly x2 = IntPoly::monomial(2);
  return x2 * IntPoly::quadratic(r1) * IntPoly::quadratic(rn) -
         IntPoly(r) * IntPoly::quadratic(r0) * IntPoly::quadratic(r1) -
         x2 * IntPoly::quadratic(r0);
}

IntPoly psi_even(const BigInt& r, const BigInt& r0, const BigInt& r1,
                 const BigInt& rn) {
  return IntPoly::quadratic(r0) * IntPoly::quadratic(rn) -
         IntPoly::monomial(2, r) - IntPoly::quadratic(r1);
}

FactoredSpectrum charpoly_t_factored(const OddTreeParams& p) {
  const std::size_t n = p.n();
  const auto& radii = p.radii;
  auto r_at = [&](std::size_t j) -> const BigInt& { return radii[j - 1]; };

  FactoredSpectrum acc = charpoly_c_factored(p.w_params()).pow(p.r - 1);
  acc *= f_of_c(p.u_params());
  acc *= f_of_c(p.v_params());
  acc *= f_of_c(p.w_params());

  if (n % 2 == 1) {
    // n = 2m+1:  x (x^2-rn) prod_{i=1..m}(x^2-r_{2i}) prod_{i=2..m}(x^2-r_{2i-1})^2 psi_o
    const std::size_t m = (n - 1) / 2;
    acc *= FactoredSpectrum::x_power(1);
    acc *= FactoredSpectrum::quadratic(r_at(n));
    for (std::size_t i = 1; i <= m; ++i)
      acc *= FactoredSpectrum::quadratic(r_at(2 * i));
    for (std::size_t i = 2; i <= m; ++i)
      acc *= FactoredSpectrum::quadratic(r_at(2 * i - 1), 2);
    acc *= FactoredSpectrum::residual(psi_odd(p.r, p.r0, r_at(1), r_at(n)));
  } else {
    // n = 2m:  x^3 (x^2-rn) prod_{i=2..m}(x^2-r_{2i-1}) prod_{i=1..m-1}(x^2-r_{2i})^2 psi_e
    const std::size_t m = n / 2;
    acc *= FactoredSpectrum::x_power(3);
    acc *= FactoredSpectrum::quadratic(r_at(n));
    for (std::size_t i = 2; i <= m; ++i)
      acc *= FactoredSpectrum::quadratic(r_at(2 * i - 1));
    for (std::size_t i = 1; i + 1 <= m; ++i)
      acc *= FactoredSpectrum::quadratic(r_at(2 * i), 2);
    acc *= FactoredSpectrum::residual(psi_even(p.r, p.r0, r_at(1), r_at(n)));
  }
  return acc;
}

IntPoly oracle_charpoly(const RootedTree& t, std::size_t max_vertices) {
  const std::size_t n = t.vertex_count();
  if (n > max_vertices) throw budget_error(BigInt(n), max_vertices);

  // Bottom-up over the canonical BFS order (children have larger ids than
  // their parent, so a reverse sweep sees every child before its parent).
  // For vertex v with children c_1..c_k, deleting v from its subtree gives
  //   phi(subtree - v) = prod_i phi(subtree_{c_i})
  // and the deletion recurrence collapses to
  //   phi(subtree_v) = x prod_i phi(subtree_{c_i})
  //                    - sum_i phi(subtree_{c_i} - c_i) prod_{j != i} phi(subtree_{c_j}).
  std::vector<IntPoly> whole(n);    // phi of the subtree rooted at v
  std::vector<IntPoly> deleted(n);  // phi of that subtree minus v
  for (std::size_t idx = n; idx-- > 0;) {
    const auto v = static_cast<RootedTree::Vertex>(idx);
    const auto kids = t.children(v);
    if (kids.empty()) {
      whole[idx] = IntPoly::x();
      deleted[idx] = IntPoly::one();
      continue;
    }
    const std::size_t k = kids.size();
    std::vector<IntPoly> prefix(k + 1), suffix(k + 1);
    prefix[0] = IntPoly::one();
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * whole[kids[i]];
    suffix[k] = IntPoly::one();
    for (std::size_t i = k; i-- > 0;) suffix[i] = whole[kids[i]] * suffix[i + 1];

    IntPoly sum;
    for (std::size_t i = 0; i < k; ++i)
      sum += deleted[kids[i]] * prefix[i] * suffix[i + 1];
    deleted[idx] = prefix[k];
    whole[idx] = IntPoly::x() * deleted[idx] - sum;
    for (RootedTree::Vertex c : kids) {  // subtree polys are no longer needed
      whole[c] = IntPoly{};
      deleted[c] = IntPoly{};
    }
  }
  return whole[0];
}

std::set<BigInt> distinct_eigenvalues(const CsikvariParams& p) {
  const FactoredSpectrum f = charpoly_c_factored(p);
  std::set<BigInt> radicands;
  if (f.x_exp() > 0) radicands.insert(0);
  for (const auto& [rho, e] : f.quad_factors())
    if (e > 0) radicands.insert(rho);
  return radicands;
}

BigInt SpectrumReport::multiplicity_total() const {
  BigInt total = 0;
  for (const auto& [value, mult] : multiplicities) total += mult;
  return total;
}

BigInt SpectrumReport::residual_degree_total() const {
  BigInt total = 0;
  for (const auto& [p, e] : residual_factors) total += BigInt(p.degree()) * e;
  return total;
}

SpectrumReport spectrum_report(const FactoredSpectrum& f,
                               const BigInt& expected_degree) {
  if (f.degree() != expected_degree)
    throw consistency_error("factored degree " + f.degree().get_str() +
                            " does not match the expected degree " +
                            expected_degree.get_str());
  if (!f.expandable())
    throw factored_error("spectrum wanted for a non-expandable factored form: " +
                         f.to_string());

  SpectrumReport report;
  report.degree = expected_degree;
  if (f.x_exp() > 0) report.multiplicities[0] = f.x_exp();

  for (const auto& [rho, e] : f.quad_factors()) {
    if (auto s = is_perfect_square(rho)) {
      report.multiplicities[*s] += e;
      report.multiplicities[-*s] += e;
    } else {
      report.residual_factors.emplace_back(IntPoly::quadratic(rho), e);
    }
  }
  for (const auto& [poly, e] : f.residuals()) {
    const RootSplit split = integer_root_split(poly);
    for (const auto& [root, mult] : split.roots)
      report.multiplicities[root] += BigInt(static_cast<unsigned long>(mult)) * e;
    if (split.remainder.degree() > 0)
      report.residual_factors.emplace_back(split.remainder, e);
  }
  for (auto it = report.multiplicities.begin(); it != report.multiplicities.end();)
    it = (it->second == 0) ? report.multiplicities.erase(it) : std::next(it);

  report.integral = report.residual_factors.empty();
  return report;
}

}  // namespace integra
