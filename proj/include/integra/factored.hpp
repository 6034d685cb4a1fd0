#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "integra/bigint.hpp"
#include "integra/poly.hpp"

namespace integra {

/// A polynomial kept as  x^e * prod (x^2 - rho)^e_rho * prod residual^e.
///
/// Exponents are signed: intermediate products may carry negative powers
/// (they cancel by the time a whole characteristic polynomial is
/// assembled), and only a form with all exponents >= 0 can be expanded.
/// Radicand 0 never appears as a quadratic factor; (x^2 - 0) folds into
/// the x power. Residual exponents are always positive.
class FactoredSpectrum {
 public:
  FactoredSpectrum() = default;  // the constant 1

  static FactoredSpectrum x_power(BigInt e);
  static FactoredSpectrum quadratic(const BigInt& rho, BigInt e = BigInt(1));
  static FactoredSpectrum residual(IntPoly p, BigInt e = BigInt(1));

  const BigInt& x_exp() const { return x_exp_; }
  const std::map<BigInt, BigInt>& quad_factors() const { return quad_; }
  const std::vector<std::pair<IntPoly, BigInt>>& residuals() const {
    return residuals_;
  }

  FactoredSpectrum& operator*=(const FactoredSpectrum& rhs);
  friend FactoredSpectrum operator*(FactoredSpectrum a,
                                    const FactoredSpectrum& b) {
    return a *= b;
  }
  // Raise the whole product to e >= 0 (pure exponent scaling).
  FactoredSpectrum pow(const BigInt& e) const;

  // Total degree; meaningful (and possibly negative) even while negative
  // exponents are present.
  BigInt degree() const;

  bool expandable() const;
  // Multiply everything out; throws factored_error on a negative exponent
  // or an implausibly large expansion.
  IntPoly expand() const;

  // "x^17 * (x^2 - 2)^9 * ..." with quadratics ascending by radicand.
  std::string to_string() const;

  friend bool operator==(const FactoredSpectrum& a,
                         const FactoredSpectrum& b) = default;

 private:
  BigInt x_exp_ = 0;
  std::map<BigInt, BigInt> quad_;                      // radicand -> exponent
  std::vector<std::pair<IntPoly, BigInt>> residuals_;  // factor -> exponent
};

}  // namespace integra
