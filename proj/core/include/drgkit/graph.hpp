#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drgkit/matrix.hpp"

namespace drgkit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph with dense 0/1 adjacency. Immutable once built.
class Graph {
 public:
  /// Validates the edge list: endpoints in range, no loops, no duplicates.
  /// Errors: "loop", "duplicate edge", "vertex out of range", "empty graph".
  Graph(std::size_t n, const std::vector<Edge>& edges, std::string label = {});

  /// Builds from an adjacency matrix. Errors: "loop", "asymmetric", "not 0/1".
  static Graph from_adjacency(const BitMatrix& adj, std::string label = {});

  std::size_t order() const noexcept { return n_; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  bool adjacent(Vertex u, Vertex v) const { return adj_(u, v) != 0; }
  const BitMatrix& adjacency() const noexcept { return adj_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_.at(v); }
  std::size_t degree(Vertex v) const { return nbrs_.at(v).size(); }

  /// Common degree, or nullopt when the graph is not regular.
  std::optional<std::size_t> regular_degree() const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  bool connected() const;
  /// Throws Error("disconnected") unless connected.
  void require_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  Graph() = default;
  void build_neighbors();

  std::size_t n_ = 0;
  BitMatrix adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::string label_;
};

/// Path-length distances and the distance matrices A_0..A_D.
struct DistanceData {
  std::size_t diameter = 0;
  Matrix<std::size_t> dist;
  std::vector<BitMatrix> a;

  /// Γ_i(x) in increasing vertex order.
  std::vector<Vertex> sphere(Vertex x, std::size_t i) const;
};

/// BFS from every vertex. Errors: "disconnected".
DistanceData distances(const Graph& g);

/// BFS distances from a single vertex (entries for unreachable vertices are
/// SIZE_MAX).
std::vector<std::size_t> bfs(const Graph& g, Vertex x);

/// Subgraph on `vertices` (relabelled 0..m-1 in the given order, which must be
/// strictly increasing). Errors: "empty vertex set", "vertex out of range".
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

/// Reads JSON ({"n", "edges", "label"}) or a plain "u v" edge list with '#'
/// comments. Errors: "parse", "io", plus Graph validation errors. A
/// disconnected graph loads fine; analysis entry points reject it.
Graph load_graph(const std::filesystem::path& path);
Graph parse_graph_json(const std::string& text);
Graph parse_edge_list(const std::string& text);

void save_graph(const Graph& g, const std::filesystem::path& path);
std::string graph_to_json(const Graph& g);

}  // namespace drgkit
