#include "integra/tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "integra/errors.hpp"

namespace integra {

namespace {

void check_budget(const BigInt& required, std::size_t cap) {
  if (!fits_size_t(required) || to_size_t(required) > cap)
    throw budget_error(required, cap);
}

std::vector<BigInt> validate_radii(std::vector<BigInt> radii) {
  BigInt prev = 0;
  for (const BigInt& r : radii) {
    if (r <= prev) throw param_error("radii must be strictly increasing positive integers");
    prev = r;
  }
  return radii;
}

}  // namespace

RootedTree RootedTree::single() {
  RootedTree t;
  t.children_.resize(1);
  t.parent_.assign(1, 0);
  return t;
}

RootedTree RootedTree::canonicalized(std::vector<std::vector<Vertex>> children,
                                     Vertex root) {
  const std::size_t n = children.size();
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> new_id(n, 0);
  order.push_back(root);
  for (std::size_t head = 0; head < order.size() && order.size() <= n; ++head) {
    Vertex v = order[head];
    new_id[v] = static_cast<Vertex>(head);
    for (Vertex c : children[v]) order.push_back(c);
  }
  if (order.size() != n)
    throw param_error("children lists do not describe a connected tree");

  RootedTree t;
  t.children_.resize(n);
  t.parent_.assign(n, 0);
  for (std::size_t head = 0; head < n; ++head) {
    Vertex old_v = order[head];
    auto& list = t.children_[head];
    list.reserve(children[old_v].size());
    for (Vertex c : children[old_v]) {
      list.push_back(new_id[c]);
      t.parent_[new_id[c]] = static_cast<Vertex>(head);
    }
  }
  return t;
}

RootedTree RootedTree::from_children(
    const std::vector<std::vector<Vertex>>& children, Vertex root) {
  const std::size_t n = children.size();
  if (n == 0) throw param_error("a tree needs at least one vertex");
  if (root >= n) throw param_error("root id out of range");
  std::vector<int> indegree(n, 0);
  for (const auto& list : children)
    for (Vertex c : list) {
      if (c >= n) throw param_error("child id out of range");
      ++indegree[c];
    }
  for (std::size_t v = 0; v < n; ++v) {
    int expected = (v == root) ? 0 : 1;
    if (indegree[v] != expected)
      throw param_error("every non-root vertex must have exactly one parent");
  }
  return canonicalized(children, root);
}

std::span<const RootedTree::Vertex> RootedTree::children(Vertex v) const {
  return children_[v];
}

std::vector<std::pair<RootedTree::Vertex, RootedTree::Vertex>>
RootedTree::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count());
  for (Vertex v = 1; v < vertex_count(); ++v) out.emplace_back(parent_[v], v);
  return out;
}

RootedTree attach(const RootedTree& t1, const BigInt& n, const RootedTree& t2,
                  std::size_t max_vertices) {
  if (n < 1) throw param_error("attach needs n >= 1 copies");
  const BigInt required = BigInt(t1.vertex_count()) + n * BigInt(t2.vertex_count());
  check_budget(required, max_vertices);
  const std::size_t copies = to_size_t(n);
  const std::size_t n1 = t1.vertex_count();
  const std::size_t n2 = t2.vertex_count();

  std::vector<std::vector<RootedTree::Vertex>> children(to_size_t(required));
  for (std::size_t v = 0; v < n1; ++v) children[v] = t1.children_[v];
  for (std::size_t j = 0; j < copies; ++j) {
    const std::size_t base = n1 + j * n2;
    children[0].push_back(static_cast<RootedTree::Vertex>(base));
    for (std::size_t v = 0; v < n2; ++v) {
      auto& list = children[base + v];
      list.reserve(t2.children_[v].size());
      for (RootedTree::Vertex c : t2.children_[v])
        list.push_back(static_cast<RootedTree::Vertex>(base + c));
    }
  }
  return RootedTree::canonicalized(std::move(children), 0);
}

CsikvariParams CsikvariParams::of(std::vector<BigInt> radii) {
  return CsikvariParams{validate_radii(std::move(radii))};
}

std::vector<BigInt> CsikvariParams::gaps() const {
  std::vector<BigInt> d(radii.size() + 1);
  d[0] = 0;  // unused; gaps are 1-indexed
  BigInt prev = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    d[i + 1] = radii[i] - prev;
    prev = radii[i];
  }
  return d;
}

OddTreeParams OddTreeParams::of(BigInt r, BigInt r0, std::vector<BigInt> radii) {
  if (r < 1) throw param_error("copy count r must be positive");
  if (r0 < 1) throw param_error("r0 must be positive");
  if (radii.size() < 2) throw param_error("the odd construction needs n >= 2 radii");
  if (radii[0] < 1) throw param_error("r1 must be positive");
  const BigInt lower = std::max(r0, radii[0]);
  BigInt prev = lower;
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (radii[i] <= prev)
      throw param_error("parameters must satisfy max{r0, r1} < r2 < ... < rn");
    prev = radii[i];
  }
  return OddTreeParams{std::move(r), std::move(r0), std::move(radii)};
}

CsikvariParams OddTreeParams::u_params() const {
  return CsikvariParams{radii};  // already validated as strictly increasing
}

CsikvariParams OddTreeParams::v_params() const {
  std::vector<BigInt> v;
  v.reserve(radii.size() - 1);
  v.push_back(r0);
  for (std::size_t i = 1; i + 1 < radii.size(); ++i) v.push_back(radii[i]);
  return CsikvariParams{std::move(v)};
}

CsikvariParams OddTreeParams::w_params() const {
  return CsikvariParams{{radii.begin() + 1, radii.end()}};
}

BigInt vertex_count_c(const CsikvariParams& p) {
  // N_k = N_{k-2} + d_k N_{k-1}, N(C()) = 1, N(C(r1)) = r1 + 1
  if (p.n() == 0) return 1;
  const auto d = p.gaps();
  BigInt prev2 = 1;
  BigInt prev = p.radii[0] + 1;
  for (std::size_t k = 2; k <= p.n(); ++k) {
    BigInt cur = prev2 + d[k] * prev;
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

BigInt vertex_count_t(const OddTreeParams& p) {
  return vertex_count_c(p.u_params()) + vertex_count_c(p.v_params()) +
         p.r * vertex_count_c(p.w_params());
}

RootedTree build_c(const CsikvariParams& p, std::size_t max_vertices) {
  check_budget(vertex_count_c(p), max_vertices);
  RootedTree prev2 = RootedTree::single();
  if (p.n() == 0) return prev2;
  const auto d = p.gaps();
  RootedTree prev = attach(prev2, p.radii[0], RootedTree::single(), max_vertices);
  for (std::size_t k = 2; k <= p.n(); ++k) {
    RootedTree cur = attach(prev2, d[k], prev, max_vertices);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

RootedTree build_t(const OddTreeParams& p, std::size_t max_vertices) {
  check_budget(vertex_count_t(p), max_vertices);
  RootedTree u = build_c(p.u_params(), max_vertices);
  RootedTree v = build_c(p.v_params(), max_vertices);
  RootedTree w = build_c(p.w_params(), max_vertices);
  RootedTree inner = attach(v, p.r, w, max_vertices);
  return attach(u, 1, inner, max_vertices);
}

std::vector<RootedTree> delete_root(const RootedTree& t) {
  std::vector<RootedTree> forest;
  forest.reserve(t.children_[0].size());
  for (RootedTree::Vertex c : t.children_[0]) {
    // collect the subtree under c
    std::vector<RootedTree::Vertex> order{c};
    std::vector<RootedTree::Vertex> new_id(t.vertex_count(), 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      RootedTree::Vertex v = order[head];
      new_id[v] = static_cast<RootedTree::Vertex>(head);
      for (RootedTree::Vertex ch : t.children_[v]) order.push_back(ch);
    }
    RootedTree sub;
    sub.children_.resize(order.size());
    sub.parent_.assign(order.size(), 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      RootedTree::Vertex old_v = order[head];
      for (RootedTree::Vertex ch : t.children_[old_v]) {
        sub.children_[head].push_back(new_id[ch]);
        sub.parent_[new_id[ch]] = static_cast<RootedTree::Vertex>(head);
      }
    }
    forest.push_back(std::move(sub));
  }
  return forest;
}

namespace {

// BFS distances over the undirected tree; returns the farthest vertex.
RootedTree::Vertex bfs_farthest(const RootedTree& t, RootedTree::Vertex from,
                                std::vector<std::size_t>& dist) {
  dist.assign(t.vertex_count(), SIZE_MAX);
  std::queue<RootedTree::Vertex> q;
  dist[from] = 0;
  q.push(from);
  RootedTree::Vertex far = from;
  while (!q.empty()) {
    RootedTree::Vertex v = q.front();
    q.pop();
    if (dist[v] > dist[far]) far = v;
    auto visit = [&](RootedTree::Vertex u) {
      if (dist[u] == SIZE_MAX) {
        dist[u] = dist[v] + 1;
        q.push(u);
      }
    };
    for (RootedTree::Vertex c : t.children(v)) visit(c);
    if (v != t.root()) visit(t.parent(v));
  }
  return far;
}

}  // namespace

std::size_t diameter(const RootedTree& t) {
  std::vector<std::size_t> dist;
  RootedTree::Vertex a = bfs_farthest(t, t.root(), dist);
  RootedTree::Vertex b = bfs_farthest(t, a, dist);
  return dist[b];
}

std::size_t root_height(const RootedTree& t) {
  std::vector<std::size_t> dist;
  RootedTree::Vertex far = bfs_farthest(t, t.root(), dist);
  return dist[far];
}

std::string serialize(const RootedTree& t, TreeFormat format) {
  std::ostringstream out;
  switch (format) {
    case TreeFormat::edge_list:
      out << "# vertices=" << t.vertex_count() << " root=0\n";
      for (const auto& [u, v] : t.edges()) out << u << " " << v << "\n";
      return out.str();
    case TreeFormat::dot:
      out << "graph tree {\n";
      if (t.vertex_count() == 1) out << "  0;\n";
      for (const auto& [u, v] : t.edges())
        out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      return out.str();
  }
  throw param_error("unknown serialization format");
}

}  // namespace integra
