#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "integra/factored.hpp"
#include "integra/poly.hpp"
#include "integra/tree.hpp"

namespace integra {

inline constexpr std::size_t kDefaultOracleMaxVertices = 5'000;

/// Characteristic polynomial of T = T1 ~ nT2 and of its root-deleted forest,
/// from the char polys of the parts and of their root-deleted forests:
///   phi(T)  = phi(T2)^(n-1) * (phi(T1) phi(T2) - n phi(T1') phi(T2'))
///   phi(T') = phi(T1') * phi(T2)^n
std::pair<IntPoly, IntPoly> charpoly_join(const IntPoly& p1,
                                          const IntPoly& p1_root_deleted,
                                          const IntPoly& p2,
                                          const IntPoly& p2_root_deleted,
                                          const BigInt& n);

// Closed factored char poly of C(r1..rn): pure exponent bookkeeping on
// x and the quadratics (x^2 - r_i); no residuals, all exponents >= 0.
FactoredSpectrum charpoly_c_factored(const CsikvariParams& p);

// Closed factored char poly of the root-deleted forest C'(r1..rn), via
// Q_k = P_{k-1}^{d_k} Q_{k-2}.
FactoredSpectrum charpoly_c_root_deleted(const CsikvariParams& p);

// The cofactor f(C) relating phi(C) and phi(C'):
//   phi(C)  = x f(C) prod_{i>=1} (x^2 - r_{n-2i+2})
//   phi(C') =   f(C) prod_{i>=1} (x^2 - r_{n-2i+1})
// May carry a negative power of x (e.g. f(C(1)) = x^-1); requires n >= 1.
FactoredSpectrum f_of_c(const CsikvariParams& p);

// Residual polynomials deciding integrality of the odd-diameter trees.
// psi_odd  = x^2(x^2-r1)(x^2-rn) - r(x^2-r0)(x^2-r1) - x^2(x^2-r0)
// psi_even = (x^2-r0)(x^2-rn) - r x^2 - (x^2-r1)
IntPoly psi_odd(const BigInt& r, const BigInt& r0, const BigInt& r1,
                const BigInt& rn);
IntPoly psi_even(const BigInt& r, const BigInt& r0, const BigInt& r1,
                 const BigInt& rn);

// Closed factored char poly of T(r, r0, r1..rn), assembled from f(U), f(V),
// f(W), phi(W)^(r-1) and the parity-dependent quadratic products, with
// psi_odd / psi_even as the single residual factor.
FactoredSpectrum charpoly_t_factored(const OddTreeParams& p);

// Brute-force char poly of the adjacency matrix via the leaf-deletion
// recurrence phi(T) = x phi(T-v) - phi(T-v-u), organized bottom-up over the
// rooted tree; O(n^2) coefficient operations, no dependence on any closed
// formula.
IntPoly oracle_charpoly(const RootedTree& t,
                        std::size_t max_vertices = kDefaultOracleMaxVertices);

// Distinct eigenvalues of C(r1..rn) as radicands: radicand 0 stands for the
// eigenvalue 0 and radicand rho for the pair +-sqrt(rho). Read off the
// positive-exponent support of the factored form, which stays correct even
// when r_n - r_{n-1} = 1 and some +-sqrt(r_i) drop out of the spectrum.
std::set<BigInt> distinct_eigenvalues(const CsikvariParams& p);

/// Exact multiset spectrum of a factored char poly.
struct SpectrumReport {
  bool integral = false;
  // Integer eigenvalue -> multiplicity, every multiplicity positive.
  std::map<BigInt, BigInt> multiplicities;
  // Factors with no integer roots, with exponents; empty iff integral.
  std::vector<std::pair<IntPoly, BigInt>> residual_factors;
  BigInt degree;

  BigInt multiplicity_total() const;
  BigInt residual_degree_total() const;
};

// Turns square radicands into +-sqrt(rho) multiplicity pairs, splits integer
// roots out of the residuals and merges coinciding eigenvalues. Throws
// consistency_error when the factored degree disagrees with expected_degree.
SpectrumReport spectrum_report(const FactoredSpectrum& f,
                               const BigInt& expected_degree);

}  // namespace integra
