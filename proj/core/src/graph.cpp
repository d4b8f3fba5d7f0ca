#include "drgkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "drgkit/error.hpp"
#include "json.hpp"

namespace drgkit {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::string edge_str(Vertex u, Vertex v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, std::string label)
    : n_(n), adj_(n, n, 0), label_(std::move(label)) {
  if (n == 0) throw Error("empty graph", "n must be positive");
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error("vertex out of range", edge_str(u, v) + " with n=" + std::to_string(n));
    if (u == v) throw Error("loop", "at vertex " + std::to_string(u));
    if (adj_(u, v)) throw Error("duplicate edge", edge_str(u, v));
    adj_(u, v) = adj_(v, u) = 1;
  }
  build_neighbors();
}

Graph Graph::from_adjacency(const BitMatrix& adj, std::string label) {
  if (!adj.square()) throw Error("dimension mismatch", "adjacency must be square");
  if (adj.rows() == 0) throw Error("empty graph", "n must be positive");
  for (std::size_t i = 0; i < adj.rows(); ++i) {
    if (adj(i, i)) throw Error("loop", "at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < adj.cols(); ++j) {
      if (adj(i, j) > 1) throw Error("not 0/1", "entry " + edge_str(i, j));
      if (adj(i, j) != adj(j, i)) throw Error("asymmetric", "entry " + edge_str(i, j));
    }
  }
  Graph g;
  g.n_ = adj.rows();
  g.adj_ = adj;
  g.label_ = std::move(label);
  g.build_neighbors();
  return g;
}

void Graph::build_neighbors() {
  nbrs_.assign(n_, {});
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      if (adj_(u, v)) nbrs_[u].push_back(v);
}

std::optional<std::size_t> Graph::regular_degree() const {
  const std::size_t k = nbrs_[0].size();
  for (const auto& nb : nbrs_)
    if (nb.size() != k) return std::nullopt;
  return k;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : nbrs_) twice += nb.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::connected() const {
  const auto d = bfs(*this, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreached; });
}

void Graph::require_connected() const {
  if (!connected()) throw Error("disconnected", label_.empty() ? "graph is not connected" : label_ + " is not connected");
}

std::vector<std::size_t> bfs(const Graph& g, Vertex x) {
  std::vector<std::size_t> d(g.order(), kUnreached);
  std::queue<Vertex> q;
  d[x] = 0;
  q.push(x);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u))
      if (d[v] == kUnreached) {
        d[v] = d[u] + 1;
        q.push(v);
      }
  }
  return d;
}

DistanceData distances(const Graph& g) {
  const std::size_t n = g.order();
  DistanceData dd;
  dd.dist = Matrix<std::size_t>(n, n, 0);
  for (Vertex x = 0; x < n; ++x) {
    const auto d = bfs(g, x);
    for (Vertex y = 0; y < n; ++y) {
      if (d[y] == kUnreached) throw Error("disconnected", "no path from " + std::to_string(x) + " to " + std::to_string(y));
      dd.dist(x, y) = d[y];
      dd.diameter = std::max(dd.diameter, d[y]);
    }
  }
  dd.a.assign(dd.diameter + 1, BitMatrix(n, n, 0));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) dd.a[dd.dist(x, y)](x, y) = 1;
  return dd;
}

std::vector<Vertex> DistanceData::sphere(Vertex x, std::size_t i) const {
  std::vector<Vertex> out;
  for (Vertex y = 0; y < dist.cols(); ++y)
    if (dist(x, y) == i) out.push_back(y);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) throw Error("empty vertex set", "induced subgraph");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order()) throw Error("vertex out of range", std::to_string(vertices[i]));
    if (i > 0 && vertices[i] <= vertices[i - 1]) throw Error("vertex set", "must be strictly increasing");
  }
  BitMatrix adj(vertices.size(), vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) adj(i, j) = g.adjacency()(vertices[i], vertices[j]);
  return Graph::from_adjacency(adj);
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse", e.what());
  }
  try {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw Error("parse", "expected object with 'n' and 'edges'");
    const auto n = j.at("n").get<long long>();
    if (n <= 0) throw Error("parse", "'n' must be positive");
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error("parse", "edge must be a pair");
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0) throw Error("vertex out of range", "negative index");
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    std::string label;
    if (j.contains("label") && j.at("label").is_string()) label = j.at("label").get<std::string>();
    return Graph(static_cast<std::size_t>(n), edges, label);
  } catch (const nlohmann::json::exception& e) {
    throw Error("parse", e.what());
  }
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    if (!(ls >> u)) continue;
    std::string rest;
    if (!(ls >> v) || (ls >> rest) || u < 0 || v < 0)
      throw Error("parse", "line " + std::to_string(lineno) + ": expected two non-negative integers");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  if (edges.empty()) throw Error("parse", "edge list is empty");
  return Graph(n, edges);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(text);
  Graph g = parse_edge_list(text);
  g.set_label(path.stem().string());
  return g;
}

std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.label().empty()) j["label"] = g.label();
  return j.dump() + "\n";
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path.string());
  out << graph_to_json(g);
  if (!out) throw Error("io", "write failed for " + path.string());
}

}  // namespace drgkit
