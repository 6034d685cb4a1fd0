#pragma once

#include <stdexcept>
#include <string>

#include "integra/bigint.hpp"

namespace integra {

// Malformed construction parameters or malformed input.
class param_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested materialization exceeds the vertex cap. Carries the exact
// vertex count the construction would need.
class budget_error : public std::runtime_error {
 public:
  budget_error(BigInt required, std::size_t cap)
      : std::runtime_error("construction needs " + required.get_str() +
                           " vertices, cap is " + std::to_string(cap)),
        required_(std::move(required)),
        cap_(cap) {}

  const BigInt& required() const { return required_; }
  std::size_t cap() const { return cap_; }

 private:
  BigInt required_;
  std::size_t cap_;
};

// Family parameters cannot produce an instance; carries the smallest
// parameter value that can.
class infeasible_error : public param_error {
 public:
  infeasible_error(const std::string& what, BigInt minimal_feasible)
      : param_error(what), minimal_feasible_(std::move(minimal_feasible)) {}

  const BigInt& minimal_feasible() const { return minimal_feasible_; }

 private:
  BigInt minimal_feasible_;
};

// exact_div left a nonzero remainder.
class division_error : public std::runtime_error {
 public:
  division_error(const std::string& what, long remainder_degree)
      : std::runtime_error(what), remainder_degree_(remainder_degree) {}

  long remainder_degree() const { return remainder_degree_; }

 private:
  long remainder_degree_;
};

// FactoredSpectrum cannot be expanded (negative exponent, oversize degree).
class factored_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal bookkeeping mismatch, e.g. factored degree vs. vertex count.
class consistency_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace integra
