#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "integra/bigint.hpp"

namespace integra {

/// Dense univariate polynomial over the integers, constant term first.
/// Canonical form: no stored trailing zero coefficient; the zero polynomial
/// is the empty coefficient vector.
class IntPoly {
 public:
  IntPoly() = default;                          // zero polynomial
  explicit IntPoly(BigInt constant);
  explicit IntPoly(std::vector<BigInt> coeffs);  // trims trailing zeros

  static IntPoly one() { return IntPoly(BigInt(1)); }
  static IntPoly x() { return monomial(1); }
  static IntPoly monomial(std::size_t k, BigInt coeff = BigInt(1));
  // x^2 - rho
  static IntPoly quadratic(const BigInt& rho);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^i (zero beyond the degree).
  const BigInt& coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& leading() const;  // requires nonzero
  bool is_monic() const;

  BigInt operator()(const BigInt& v) const;  // Horner evaluation

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  IntPoly pow(std::size_t e) const;
  IntPoly shifted(std::size_t k) const;  // multiply by x^k

  // "c0 + c1*x + ..." with zero terms skipped; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Exact quotient a / b; throws division_error naming the remainder degree
// when b does not divide a.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

struct RootSplit {
  // Integer roots with multiplicity, ascending by root value.
  std::vector<std::pair<BigInt, std::size_t>> roots;
  // What is left after dividing all (x - root) factors out; has no
  // integer roots.
  IntPoly remainder;

  std::size_t total_multiplicity() const;
};

// Splits off every integer linear factor of p (p nonzero). Candidate roots
// are divisors of the trailing coefficient after stripping powers of x,
// capped by the Cauchy bound 1 + max|c_i|/|lead| (intersected with the
// Fujiwara bound, which is far tighter for characteristic polynomials).
// When both the bound and the trailing coefficient are too large to
// enumerate, candidates come from exact Sturm bisection instead; either way
// every root is verified by exact evaluation and multiplicities by exact
// division.
RootSplit integer_root_split(const IntPoly& p);

}  // namespace integra
