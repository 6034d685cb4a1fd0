#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "integra/bigint.hpp"

namespace integra {

// Constructions refuse to materialize trees above this many vertices unless
// the caller passes a different cap.
inline constexpr std::size_t kDefaultMaxVertices = 10'000'000;

/// Explicit rooted tree. Vertex ids are canonical: the root is 0 and the
/// remaining ids follow BFS order with children kept in construction order,
/// so parent(v) < v for every non-root vertex.
class RootedTree {
 public:
  using Vertex = std::uint32_t;

  // Single-vertex tree.
  static RootedTree single();
  // Validates (every non-root vertex is a child exactly once, the whole
  // vertex set is reachable from `root`) and renumbers canonically.
  static RootedTree from_children(
      const std::vector<std::vector<Vertex>>& children, Vertex root = 0);

  std::size_t vertex_count() const { return children_.size(); }
  std::size_t edge_count() const { return children_.size() - 1; }
  Vertex root() const { return 0; }
  std::span<const Vertex> children(Vertex v) const;
  // Parent of a non-root vertex; parent(0) == 0.
  Vertex parent(Vertex v) const { return parent_[v]; }

  // Edges as (parent, child), child ascending; parent < child always holds.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.children_ == b.children_;
  }

 private:
  RootedTree() = default;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> parent_;

  friend RootedTree attach(const RootedTree&, const BigInt&,
                           const RootedTree&, std::size_t);
  friend std::vector<RootedTree> delete_root(const RootedTree&);
  static RootedTree canonicalized(std::vector<std::vector<Vertex>> children,
                                  Vertex root);
};

/// Radii r1 < r2 < ... < rn of the recursively attached tree family
/// C(r1,...,rn); n = 0 is the one-vertex tree C().
struct CsikvariParams {
  std::vector<BigInt> radii;

  // Validates positivity and strict monotonicity.
  static CsikvariParams of(std::vector<BigInt> radii);

  std::size_t n() const { return radii.size(); }
  // Gaps d_i = r_i - r_{i-1} with the convention r_0 = 0 (1-indexed result
  // padded with a dummy at index 0).
  std::vector<BigInt> gaps() const;
};

/// Parameters (r, r0, r1, ..., rn) of the odd-diameter construction
/// T = U ~ (V ~ rW) with U = C(r1..rn), V = C(r0, r2..r_{n-1}),
/// W = C(r2..rn). Requires n >= 2 and max{r0, r1} < r2 < ... < rn.
struct OddTreeParams {
  BigInt r;
  BigInt r0;
  std::vector<BigInt> radii;  // r1..rn

  static OddTreeParams of(BigInt r, BigInt r0, std::vector<BigInt> radii);

  std::size_t n() const { return radii.size(); }
  CsikvariParams u_params() const;
  CsikvariParams v_params() const;
  CsikvariParams w_params() const;
};

// Joins the root of t1 by edges to the roots of n fresh copies of t2; the
// root of t1 is the root of the result.
RootedTree attach(const RootedTree& t1, const BigInt& n, const RootedTree& t2,
                  std::size_t max_vertices = kDefaultMaxVertices);

RootedTree build_c(const CsikvariParams& p,
                   std::size_t max_vertices = kDefaultMaxVertices);
RootedTree build_t(const OddTreeParams& p,
                   std::size_t max_vertices = kDefaultMaxVertices);

// Vertex counts from the size recurrence N_k = N_{k-2} + d_k N_{k-1};
// exact at any scale, nothing is materialized.
BigInt vertex_count_c(const CsikvariParams& p);
BigInt vertex_count_t(const OddTreeParams& p);

// Child subtrees of the root, each re-rooted at the former child, in
// construction order. Empty for the one-vertex tree.
std::vector<RootedTree> delete_root(const RootedTree& t);

// Longest path length in edges, by double BFS.
std::size_t diameter(const RootedTree& t);
// Largest root-to-vertex distance.
std::size_t root_height(const RootedTree& t);

enum class TreeFormat { edge_list, dot };

// Deterministic text form. Edge list: "# vertices=<N> root=0" header, then
// one "u v" line per edge with u < v.
std::string serialize(const RootedTree& t, TreeFormat format);

}  // namespace integra
