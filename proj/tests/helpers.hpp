#pragma once

#include <array>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "integra/charpoly.hpp"
#include "integra/poly.hpp"
#include "integra/tree.hpp"

namespace testutil {

using integra::BigInt;
using integra::IntPoly;
using integra::RootedTree;

inline std::mt19937& rng() {
  static std::mt19937 gen(20240817u);
  return gen;
}

inline IntPoly random_poly(int max_degree, int max_coeff) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-max_coeff, max_coeff);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng())) + 1);
  for (auto& v : c) v = coeff(rng());
  return IntPoly(std::move(c));
}

// Independent check for tree characteristic polynomials: a forest has no
// cycles, so phi equals the matching polynomial
//   phi(T) = sum_k (-1)^k m_k x^(n-2k)
// with m_k the number of k-edge matchings, counted here by plain recursion
// over the edge list. Only usable for small trees.
inline IntPoly matching_charpoly(const RootedTree& t) {
  const auto edges = t.edges();
  const std::size_t n = t.vertex_count();
  std::vector<BigInt> match_counts(n / 2 + 1, BigInt(0));
  std::vector<bool> used(n, false);
  std::size_t chosen = 0;

  auto recurse = [&](auto&& self, std::size_t idx) -> void {
    if (idx == edges.size()) {
      match_counts[chosen] += 1;
      return;
    }
    self(self, idx + 1);
    auto [u, v] = edges[idx];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      ++chosen;
      self(self, idx + 1);
      --chosen;
      used[u] = used[v] = false;
    }
  };
  recurse(recurse, 0);

  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  for (std::size_t k = 0; k < match_counts.size(); ++k) {
    if (match_counts[k] == 0) continue;
    coeffs[n - 2 * k] = (k % 2 == 0) ? match_counts[k] : BigInt(-match_counts[k]);
  }
  return IntPoly(std::move(coeffs));
}

// phi(P_n) by the three-term recurrence phi_n = x phi_{n-1} - phi_{n-2}.
inline IntPoly path_charpoly(std::size_t n) {
  IntPoly prev2 = IntPoly::one();
  IntPoly prev = IntPoly::x();
  if (n == 0) return prev2;
  for (std::size_t i = 2; i <= n; ++i) {
    IntPoly cur = IntPoly::x() * prev - prev2;
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

// The n-vertex path rooted at one end, built by repeated single attach.
inline RootedTree path_tree(std::size_t n) {
  RootedTree t = RootedTree::single();
  for (std::size_t i = 1; i < n; ++i)
    t = integra::attach(RootedTree::single(), 1, t);
  return t;
}

// All strictly increasing tuples from {1..max_value} of length n.
inline std::vector<std::vector<BigInt>> increasing_tuples(std::size_t n,
                                                          int max_value) {
  std::vector<std::vector<BigInt>> out;
  std::vector<int> pick(n);
  auto recurse = [&](auto&& self, std::size_t pos, int from) -> void {
    if (pos == n) {
      std::vector<BigInt> tuple(pick.begin(), pick.end());
      out.push_back(std::move(tuple));
      return;
    }
    for (int v = from; v <= max_value; ++v) {
      pick[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  recurse(recurse, 0, 1);
  return out;
}

struct CliResult {
  int exit_code;
  std::string output;
};

// Runs the built CLI with stderr folded into stdout.
inline CliResult run_cli(const std::string& args) {
#ifndef INTEGRA_CLI_PATH
#error "INTEGRA_CLI_PATH must be defined by the build"
#endif
  const std::string cmd = std::string(INTEGRA_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  std::string output;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    output.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), std::move(output)};
}

}  // namespace testutil
