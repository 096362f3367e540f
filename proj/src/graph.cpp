#include "sparsesym/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

namespace sparsesym {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Bitmask closure of v within the vertex subset `allowed`.
std::uint64_t reach(const Graph& g, int v, std::uint64_t allowed) {
  std::uint64_t seen = bit(v);
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n + 1, 0) {
  if (n < 2 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must lie in [2, " + std::to_string(kMaxVertices) +
                                "], got " + std::to_string(n));
  }
  for (Edge& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 1 || e.v > n) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                                  " has an endpoint outside [1, " + std::to_string(n) + "]");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  }
  for (const Edge& e : edges_) {
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

Graph Graph::from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int pos = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++pos)
      if (mask >> pos & 1) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

bool Graph::has_edge(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_ || i == j) return false;
  return (adj_[i] >> j & 1) != 0;
}

Forest::Forest(const Graph& parent, std::vector<Edge> edges)
    : graph_(parent.n(), std::move(edges)), component_(parent.n() + 1, 0) {
  for (const Edge& e : graph_.edges()) {
    if (!parent.has_edge(e.u, e.v)) {
      throw std::invalid_argument("forest edge " + std::to_string(e.u) + " " +
                                  std::to_string(e.v) + " is not an edge of the graph");
    }
  }
  const Partition own = connected_components(graph_);
  const Partition target = connected_components(parent);
  if (static_cast<int>(graph_.edges().size()) != graph_.n() - static_cast<int>(own.size())) {
    throw std::invalid_argument("forest edge set contains a cycle");
  }
  if (own != target) {
    throw std::invalid_argument("forest does not span every component of the graph");
  }
  for (const VertexSet& block : own.blocks)
    for (int v : block) component_[v] = block.front();
}

bool Forest::spans(const Graph& g) const {
  if (g.n() != n()) return false;
  for (const Edge& e : edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return connected_components(g) == connected_components(graph_);
}

Partition connected_components(const Graph& g) {
  Partition p;
  std::uint64_t assigned = 0;
  const std::uint64_t all = ((std::uint64_t{1} << (g.n() + 1)) - 1) & ~std::uint64_t{1};
  for (int v = 1; v <= g.n(); ++v) {
    if (assigned & bit(v)) continue;
    const std::uint64_t comp = reach(g, v, all);
    assigned |= comp;
    VertexSet block;
    for (std::uint64_t c = comp; c != 0; c &= c - 1) block.push_back(std::countr_zero(c));
    p.blocks.push_back(std::move(block));
  }
  return p;
}

Forest spanning_forest(const Graph& g) {
  std::vector<Edge> edges;
  std::vector<bool> visited(g.n() + 1, false);
  for (int root = 1; root <= g.n(); ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (std::uint64_t nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (visited[w]) continue;
        visited[w] = true;
        edges.push_back({std::min(v, w), std::max(v, w)});
        queue.push(w);
      }
    }
  }
  return Forest(g, std::move(edges));
}

std::optional<std::vector<int>> tree_path(const Forest& t, int k, int l) {
  if (k == l) throw std::invalid_argument("tree_path requires distinct end points");
  if (k < 1 || l < 1 || k > t.n() || l > t.n()) {
    throw std::invalid_argument("tree_path end point outside [1, n]");
  }
  if (!t.same_component(k, l)) return std::nullopt;
  // BFS parents from l, then walk from k.
  const Graph& tg = t.as_graph();
  std::vector<int> parent(t.n() + 1, 0);
  parent[l] = l;
  std::queue<int> queue;
  queue.push(l);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (std::uint64_t nb = tg.neighbors(v); nb != 0; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      if (parent[w] != 0) continue;
      parent[w] = v;
      queue.push(w);
    }
  }
  std::vector<int> path{k};
  while (path.back() != l) path.push_back(parent[path.back()]);
  return path;
}

long long d_invariant(const Graph& g) {
  const Partition p = connected_components(g);
  long long total = 0;
  for (std::size_t s = 0; s < p.size(); ++s)
    for (std::size_t t = s + 1; t < p.size(); ++t)
      total += static_cast<long long>(p.blocks[s].size()) * static_cast<long long>(p.blocks[t].size());
  return total;
}

bool is_m_connected(const Graph& g, int m) {
  const int n = g.n();
  if (m < 1 || m > n) throw std::invalid_argument("is_m_connected requires 1 <= m <= n");
  // Gosper's hack over m-subsets of {1..n}, shifted by one bit.
  std::uint64_t subset = (std::uint64_t{1} << m) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (subset < limit) {
    const std::uint64_t vertices = subset << 1;
    const int first = std::countr_zero(vertices);
    if (reach(g, first, vertices) != vertices) return false;
    const std::uint64_t c = subset & (~subset + 1);
    const std::uint64_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return true;
}

const char* to_string(Primality p) {
  switch (p) {
    case Primality::prime: return "prime";
    case Primality::not_prime: return "not_prime";
    case Primality::unknown: return "unknown";
  }
  return "unknown";
}

Primality primality_verdict(const Graph& g, int k, int characteristic) {
  const int n = g.n();
  if (k < 1 || k > n) throw std::invalid_argument("primality_verdict requires 1 <= k <= n");
  if (characteristic < 0) throw std::invalid_argument("characteristic must be 0 or a prime");
  if (characteristic != 0) {
    for (int d = 2; d * d <= characteristic; ++d)
      if (characteristic % d == 0) throw std::invalid_argument("characteristic must be 0 or a prime");
    if (characteristic < 2) throw std::invalid_argument("characteristic must be 0 or a prime");
  }
  if (k == 1) return Primality::prime;
  const bool connected = connected_components(g).size() == 1;
  if (k == n) return connected ? Primality::prime : Primality::not_prime;
  const bool condition = is_m_connected(g, k);
  if ((k == 2 || k == 3) && characteristic == 0) {
    return condition ? Primality::prime : Primality::not_prime;
  }
  return condition ? Primality::unknown : Primality::not_prime;
}

std::vector<Forest> all_spanning_forests(const Graph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > 30) throw std::invalid_argument("all_spanning_forests is limited to 30 edges");
  const int want = g.n() - static_cast<int>(connected_components(g).size());
  std::vector<Forest> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (std::popcount(mask) != want) continue;
    std::vector<Edge> subset;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) subset.push_back(edges[i]);
    Graph candidate(g.n(), subset);
    if (connected_components(candidate).size() != connected_components(g).size()) continue;
    out.emplace_back(g, std::move(subset));
  }
  return out;
}

}  // namespace sparsesym
