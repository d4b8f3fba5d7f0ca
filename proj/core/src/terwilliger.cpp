#include "drgkit/terwilliger.hpp"

#include <deque>
#include <optional>

#include "drgkit/error.hpp"
#include "drgkit/exactla.hpp"

namespace drgkit {

DualIdempotents dual_idempotents(const Graph& g, Vertex x, const DistanceData& dd) {
  if (x >= g.order()) throw Error("vertex out of range", std::to_string(x));
  const std::size_t n = g.order();
  DualIdempotents de;
  de.base = x;
  de.e_star.assign(dd.diameter + 1, BitMatrix(n, n, 0));
  for (Vertex y = 0; y < n; ++y) de.e_star[dd.dist(x, y)](y, y) = 1;
  return de;
}

DualAdjacency dual_adjacency(const Graph& g, Vertex x, const DistanceData& dd, const EigenData& ed,
                             const std::vector<std::size_t>& ordering) {
  const std::size_t n = g.order();
  if (ordering.size() != dd.diameter + 1 || ordering.size() < 2 || ordering[0] != 0)
    throw Error("dual adjacency", "ordering must list 0..D starting at 0");
  const std::size_t e1 = ordering[1];
  const AlgebraicScalar scale(static_cast<long>(n));
  DualAdjacency da;
  da.base = x;
  da.ordering = ordering;
  da.a_star = ExactMatrix(n, n, AlgebraicScalar(0));
  std::vector<std::optional<AlgebraicScalar>> seen(dd.diameter + 1);
  for (Vertex y = 0; y < n; ++y) {
    const AlgebraicScalar entry = ed.E.empty() ? ed.coeff[e1][dd.dist(x, y)] : ed.E[e1](x, y);
    const AlgebraicScalar v = scale * entry;
    da.a_star(y, y) = v;
    auto& s = seen[dd.dist(x, y)];
    if (!s) {
      s = v;
    } else if (!same_value(*s, v)) {
      throw Error("dual adjacency", "diagonal not constant on Γ_" + std::to_string(dd.dist(x, y)) + "(x)");
    }
  }
  for (const auto& s : seen) da.theta_star.push_back(*s);
  for (std::size_t i = 0; i < da.theta_star.size(); ++i)
    for (std::size_t j = i + 1; j < da.theta_star.size(); ++j)
      if (same_value(da.theta_star[i], da.theta_star[j]))
        throw Error("dual adjacency", "θ*_" + std::to_string(i) + " = θ*_" + std::to_string(j));
  return da;
}

AlgebraBasis algebra_closure(const std::vector<ExactMatrix>& generators) {
  if (generators.empty()) throw Error("dimension mismatch", "closure needs at least one generator");
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw Error("dimension mismatch", "generators must be square and equal-sized");

  AlgebraBasis out;
  out.generators = generators;
  exactla::Span span(n, n);
  std::deque<std::size_t> frontier;
  auto add = [&](const ExactMatrix& m) {
    if (span.insert(m)) frontier.push_back(span.dim() - 1);
  };
  add(ExactMatrix::identity(n));
  for (const auto& g : generators) add(g);
  // Closing the span under left multiplication by the generators yields
  // every word, since I is in it.
  while (!frontier.empty()) {
    const ExactMatrix b = span.members()[frontier.front()];
    frontier.pop_front();
    for (const auto& g : generators) add(g * b);
  }
  out.basis = span.members();
  out.dim = span.dim();
  return out;
}

std::vector<ExactMatrix> terwilliger_generators(const Graph& g, Vertex x, const DistanceData& dd) {
  std::vector<ExactMatrix> gens{exactla::to_exact(g.adjacency())};
  for (const auto& e : dual_idempotents(g, x, dd).e_star) gens.push_back(exactla::to_exact(e));
  return gens;
}

BlockClosure terwilliger_closure(const Graph& g, Vertex x, const DistanceData& dd) {
  if (x >= g.order()) throw Error("vertex out of range", std::to_string(x));
  const std::size_t d1 = dd.diameter + 1;
  std::vector<std::vector<Vertex>> cls(d1);
  for (std::size_t i = 0; i < d1; ++i) cls[i] = dd.sphere(x, i);
  // pos[v] = index of v inside its own class.
  std::vector<std::size_t> pos(g.order());
  for (const auto& c : cls)
    for (std::size_t t = 0; t < c.size(); ++t) pos[c[t]] = t;

  BlockClosure out;
  out.block_dim.assign(d1, std::vector<std::size_t>(d1, 0));

  for (std::size_t j = 0; j < d1; ++j) {
    const std::size_t cols = cls[j].size();
    std::vector<exactla::IntegerSpan> spans;
    for (std::size_t i = 0; i < d1; ++i) spans.emplace_back(cls[i].size() * cols);

    struct Item {
      std::size_t row_class;
      std::vector<Integer> data;
    };
    std::deque<Item> frontier;
    auto add = [&](std::size_t i, std::vector<Integer> v) {
      if (auto r = spans[i].insert(std::move(v))) frontier.push_back({i, std::move(*r)});
    };

    std::vector<Integer> seed(cols * cols, 0);
    for (std::size_t t = 0; t < cols; ++t) seed[t * cols + t] = 1;
    add(j, std::move(seed));

    while (!frontier.empty()) {
      Item it = std::move(frontier.front());
      frontier.pop_front();
      const std::size_t i = it.row_class;
      // E*_{i'} A b: row y in Γ_{i'} sums the rows of b at neighbors of y in Γ_i.
      for (std::size_t ip = i == 0 ? 0 : i - 1; ip <= i + 1 && ip < d1; ++ip) {
        std::vector<Integer> next(cls[ip].size() * cols, 0);
        bool nonzero = false;
        for (std::size_t r = 0; r < cls[ip].size(); ++r) {
          for (Vertex w : g.neighbors(cls[ip][r])) {
            if (dd.dist(x, w) != i) continue;
            const std::size_t src = pos[w] * cols;
            for (std::size_t c = 0; c < cols; ++c)
              if (it.data[src + c] != 0) {
                next[r * cols + c] += it.data[src + c];
                nonzero = true;
              }
          }
        }
        if (nonzero) add(ip, std::move(next));
      }
    }
    for (std::size_t i = 0; i < d1; ++i) {
      out.block_dim[i][j] = spans[i].dim();
      out.dim += spans[i].dim();
    }
  }
  return out;
}

ExactMatrix tridiagonal_primary(const DrgParameters& params) { return intersection_matrix(params); }

}  // namespace drgkit
