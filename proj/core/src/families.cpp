#include "drgkit/families.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "drgkit/error.hpp"

namespace drgkit {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kNames{{
    {Family::johnson, "johnson"},
    {Family::halved_cube, "halved_cube"},
    {Family::hamming, "hamming"},
    {Family::shrikhande, "shrikhande"},
    {Family::rook_grid, "rook_grid"},
    {Family::triangular_complement, "triangular_complement"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::icosahedron, "icosahedron"},
    {Family::chang, "chang"},
}};

void require_arity(const FamilySpec& spec, std::size_t arity) {
  if (spec.params.size() != arity)
    throw Error("arity", std::string(family_name(spec.family)) + " takes " + std::to_string(arity) +
                             " parameter(s), got " + std::to_string(spec.params.size()));
}

void require_range(bool ok, const FamilySpec& spec, const std::string& why) {
  if (!ok) throw Error("parameter range", std::string(family_name(spec.family)) + ": " + why);
}

template <class Adj>
Graph from_predicate(std::size_t n, Adj adjacent, std::string label) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) edges.emplace_back(u, v);
  return Graph(n, edges, std::move(label));
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Graph johnson(int n, int k, std::string label) {
  const auto masks = johnson_masks(n, k);
  return from_predicate(
      masks.size(), [&](Vertex u, Vertex v) { return std::popcount(masks[u] & masks[v]) == k - 1; }, std::move(label));
}

Graph icosahedron_graph() {
  static constexpr std::array<std::array<int, 2>, 30> kEdges{{
      {0, 1}, {0, 2}, {0, 3}, {0, 4},  {0, 5},  {1, 2},  {2, 3},  {3, 4},  {4, 5},  {1, 5},
      {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10}, {6, 11}, {7, 11}, {8, 11}, {9, 11}, {10, 11},
      {1, 6}, {1, 7}, {2, 7}, {2, 8},  {3, 8},  {3, 9},  {4, 9},  {4, 10}, {5, 10}, {5, 6},
  }};
  std::vector<Edge> edges;
  for (auto [u, v] : kEdges) edges.emplace_back(u, v);
  return Graph(12, edges, "icosahedron");
}

}  // namespace

std::string_view family_name(Family f) {
  for (auto [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

Family family_from_name(std::string_view name) {
  for (auto [fam, n] : kNames)
    if (n == name) return fam;
  throw Error("unknown family", std::string(name));
}

std::vector<std::string_view> family_names() {
  std::vector<std::string_view> out;
  for (auto [fam, name] : kNames) out.push_back(name);
  return out;
}

std::vector<std::uint64_t> johnson_masks(int n, int k) {
  if (n < 1 || n > 30 || k < 0 || k > n) throw Error("parameter range", "johnson masks need 0 <= k <= n <= 30");
  // Numeric order of characteristic vectors is colex order of the subsets.
  std::vector<std::uint64_t> out;
  if (k == 0) return {0};
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t m = (std::uint64_t{1} << k) - 1; m < end;) {
    out.push_back(m);
    // Next larger integer with the same popcount.
    const std::uint64_t low = m & (~m + 1);
    const std::uint64_t ripple = m + low;
    m = ripple | (((ripple ^ m) >> 2) / low);
  }
  return out;
}

std::vector<Vertex> chang_switching_set(int variant) {
  using Pairs = std::vector<std::array<int, 2>>;
  Pairs pairs;
  switch (variant) {
    case 1: pairs = {{1, 5}, {2, 6}, {3, 7}, {4, 8}}; break;
    case 2: pairs = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 1}}; break;
    case 3: pairs = {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}}; break;
    default: throw Error("parameter range", "chang variant must be 1, 2 or 3");
  }
  const auto masks = johnson_masks(8, 2);
  std::vector<Vertex> s;
  for (auto [i, j] : pairs) {
    // Pair elements are 1-based.
    const std::uint64_t m = (std::uint64_t{1} << (i - 1)) | (std::uint64_t{1} << (j - 1));
    for (Vertex v = 0; v < masks.size(); ++v)
      if (masks[v] == m) s.push_back(v);
  }
  std::sort(s.begin(), s.end());
  return s;
}

Graph seidel_switch(const Graph& g, const std::vector<Vertex>& s) {
  const std::size_t n = g.order();
  std::vector<char> in(n, 0);
  for (Vertex v : s) {
    if (v >= n) throw Error("vertex out of range", std::to_string(v));
    in[v] = 1;
  }
  BitMatrix adj = g.adjacency();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (in[u] != in[v]) adj(u, v) ^= 1;
  return Graph::from_adjacency(adj, g.label());
}

Graph construct(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::johnson: {
      require_arity(spec, 2);
      require_range(p[0] >= 1 && p[1] >= 1 && p[1] < p[0] && p[0] <= 20, spec, "need 1 <= k < n <= 20");
      require_range(binomial(p[0], p[1]) <= static_cast<long>(kMaxFamilyOrder), spec, "too many vertices");
      return johnson(static_cast<int>(p[0]), static_cast<int>(p[1]),
                     "J(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")");
    }
    case Family::halved_cube: {
      require_arity(spec, 1);
      require_range(p[0] >= 2 && p[0] <= 11, spec, "need 2 <= n <= 11");
      std::vector<std::uint64_t> words;
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << p[0]); ++w)
        if (std::popcount(w) % 2 == 0) words.push_back(w);
      return from_predicate(
          words.size(), [&](Vertex u, Vertex v) { return std::popcount(words[u] ^ words[v]) == 2; },
          "halved_cube(" + std::to_string(p[0]) + ")");
    }
    case Family::hamming: {
      require_arity(spec, 2);
      require_range(p[0] >= 1 && p[1] >= 2, spec, "need d >= 1, q >= 2");
      long n = 1;
      for (long i = 0; i < p[0]; ++i) {
        n *= p[1];
        require_range(n <= static_cast<long>(kMaxFamilyOrder), spec, "too many vertices");
      }
      const long d = p[0];
      const long q = p[1];
      return from_predicate(
          static_cast<std::size_t>(n),
          [&](Vertex u, Vertex v) {
            int diff = 0;
            for (long i = 0; i < d; ++i, u /= q, v /= q) diff += (u % q) != (v % q);
            return diff == 1;
          },
          "H(" + std::to_string(d) + "," + std::to_string(q) + ")");
    }
    case Family::shrikhande: {
      require_arity(spec, 0);
      return from_predicate(
          16,
          [](Vertex u, Vertex v) {
            const int di = (static_cast<int>(u / 4) - static_cast<int>(v / 4) + 4) % 4;
            const int dj = (static_cast<int>(u % 4) - static_cast<int>(v % 4) + 4) % 4;
            const bool axis = (di == 0 && (dj == 1 || dj == 3)) || (dj == 0 && (di == 1 || di == 3));
            const bool diag = (di == 1 && dj == 1) || (di == 3 && dj == 3);
            return axis || diag;
          },
          "shrikhande");
    }
    case Family::rook_grid: {
      require_arity(spec, 1);
      require_range(p[0] >= 2 && p[0] <= 32, spec, "need 2 <= m <= 32");
      const auto m = static_cast<std::size_t>(p[0]);
      return from_predicate(
          m * m, [m](Vertex u, Vertex v) { return u / m == v / m || u % m == v % m; },
          "rook_grid(" + std::to_string(m) + ")");
    }
    case Family::triangular_complement: {
      require_arity(spec, 1);
      require_range(p[0] >= 4 && p[0] <= 30, spec, "need 4 <= m <= 30");
      const auto masks = johnson_masks(static_cast<int>(p[0]), 2);
      return from_predicate(
          masks.size(), [&](Vertex u, Vertex v) { return (masks[u] & masks[v]) == 0; },
          "triangular_complement(" + std::to_string(p[0]) + ")");
    }
    case Family::complete_bipartite: {
      require_arity(spec, 1);
      require_range(p[0] >= 1 && p[0] <= 512, spec, "need 1 <= t <= 512");
      const auto t = static_cast<std::size_t>(p[0]);
      return from_predicate(
          2 * t, [t](Vertex u, Vertex v) { return (u < t) != (v < t); }, "K(" + std::to_string(t) + "," + std::to_string(t) + ")");
    }
    case Family::icosahedron:
      require_arity(spec, 0);
      return icosahedron_graph();
    case Family::chang: {
      require_arity(spec, 1);
      require_range(p[0] >= 1 && p[0] <= 3, spec, "variant must be 1, 2 or 3");
      Graph g = seidel_switch(johnson(8, 2, ""), chang_switching_set(static_cast<int>(p[0])));
      g.set_label("chang(" + std::to_string(p[0]) + ")");
      return g;
    }
  }
  throw Error("unknown family", "unhandled enum value");
}

}  // namespace drgkit
