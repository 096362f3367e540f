#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace sparsesym {

/// Undirected edge {u, v} with 1 <= u < v <= n.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

using VertexSet = std::vector<int>;

/// Disjoint blocks covering [n], each sorted, blocks sorted by smallest element.
struct Partition {
  std::vector<VertexSet> blocks;

  std::size_t size() const { return blocks.size(); }
  bool operator==(const Partition&) const = default;
};

/// Simple undirected graph on the vertex set {1, ..., n}.
///
/// Vertices are 1-based. Adjacency is kept as bitmasks, which limits n to 63.
class Graph {
 public:
  static constexpr int kMaxVertices = 63;

  Graph(int n, std::vector<Edge> edges);

  static Graph complete(int n);
  static Graph edgeless(int n);
  /// Graph whose edges are the set bits of `mask` in lexicographic pair order
  /// (12, 13, ..., 1n, 23, ...).
  static Graph from_mask(int n, std::uint64_t mask);

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  /// N_G = |E| + n, the number of surviving variables of X_G.
  int surviving_variables() const { return static_cast<int>(edges_.size()) + n_; }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;  // index 0 unused
};

/// Spanning forest T of a parent graph: acyclic, with the parent's components.
class Forest {
 public:
  /// Validates that `edges` forms a spanning forest of `parent`.
  Forest(const Graph& parent, std::vector<Edge> edges);

  int n() const { return graph_.n(); }
  const std::vector<Edge>& edges() const { return graph_.edges(); }
  const Graph& as_graph() const { return graph_; }
  /// Component label (smallest vertex of its block) of vertex v.
  int component_of(int v) const { return component_[v]; }
  bool same_component(int a, int b) const { return component_[a] == component_[b]; }
  /// True when this forest is a spanning forest of `g`.
  bool spans(const Graph& g) const;

 private:
  Graph graph_;
  std::vector<int> component_;
};

Partition connected_components(const Graph& g);

/// BFS from the smallest vertex of each component, neighbours visited in
/// increasing order.
Forest spanning_forest(const Graph& g);

/// Unique path k = k_0, ..., k_r = l in the forest, or nullopt when k and l
/// lie in different trees. Throws std::invalid_argument for k == l.
std::optional<std::vector<int>> tree_path(const Forest& t, int k, int l);

/// D_G = sum over pairs of components of the product of their sizes.
long long d_invariant(const Graph& g);

/// Every induced subgraph on an m-subset of vertices is connected.
bool is_m_connected(const Graph& g, int m);

enum class Primality { prime, not_prime, unknown };

const char* to_string(Primality p);

/// Primality of the ideal of k-minors of X_G from the graph alone.
/// `characteristic` is 0 or a prime.
Primality primality_verdict(const Graph& g, int k, int characteristic);

/// Every spanning forest of g (exhaustive; intended for small graphs).
std::vector<Forest> all_spanning_forests(const Graph& g);

}  // namespace sparsesym
