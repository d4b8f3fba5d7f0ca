#include "drgkit/scheme.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "drgkit/error.hpp"
#include "drgkit/exactla.hpp"

namespace drgkit {

namespace {

constexpr double kZeroTol = 1e-9;

using Coeffs = std::vector<AlgebraicScalar>;

bool is_zero(const AlgebraicScalar& x) { return x.exact() ? x.is_zero() : std::fabs(x.to_double()) < kZeroTol; }

bool near_integer(double v, long& out) {
  const double r = std::round(v);
  if (std::fabs(v - r) > 1e-6) return false;
  out = static_cast<long>(r);
  return true;
}

// Product in the Bose-Mesner algebra, both factors in {A_h} coordinates.
Coeffs bm_product(const Coeffs& u, const Coeffs& v, const DrgParameters& p) {
  const std::size_t d1 = u.size();
  Coeffs out(d1, AlgebraicScalar(0));
  for (std::size_t i = 0; i < d1; ++i) {
    if (is_zero(u[i])) continue;
    for (std::size_t j = 0; j < d1; ++j) {
      if (is_zero(v[j])) continue;
      const AlgebraicScalar uv = u[i] * v[j];
      for (std::size_t h = 0; h < d1; ++h)
        if (p.p[h][i][j] != 0) out[h] += uv * AlgebraicScalar(p.p[h][i][j]);
    }
  }
  return out;
}

bool same_coeffs(const Coeffs& u, const Coeffs& v) {
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!is_zero(u[i] - v[i])) return false;
  return true;
}

std::vector<double> numeric_eigenvalues(const DrgParameters& p) {
  const auto d1 = static_cast<Eigen::Index>(p.diameter + 1);
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(d1, d1);
  for (Eigen::Index i = 0; i < d1; ++i) {
    t(i, i) = static_cast<double>(p.a[static_cast<std::size_t>(i)]);
    if (i + 1 < d1) {
      const double off = std::sqrt(static_cast<double>(p.b_at(static_cast<std::size_t>(i))) *
                                   static_cast<double>(p.c_at(static_cast<std::size_t>(i) + 1)));
      t(i, i + 1) = t(i + 1, i) = off;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t, Eigen::EigenvaluesOnly);
  std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + d1);
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

// Exact roots matching the numerical ones, each certified as a root of the
// characteristic polynomial; nullopt if some root is not quadratic.
std::optional<std::vector<AlgebraicScalar>> exact_roots(const ExactMatrix& l, const std::vector<double>& approx) {
  const auto cp = exactla::characteristic_polynomial(l);
  std::vector<AlgebraicScalar> roots(approx.size());
  std::vector<bool> done(approx.size(), false);
  for (std::size_t i = 0; i < approx.size(); ++i) {
    if (done[i]) continue;
    long r = 0;
    if (near_integer(approx[i], r) && exactla::evaluate(cp, AlgebraicScalar(r)).is_zero()) {
      roots[i] = AlgebraicScalar(r);
      done[i] = true;
      continue;
    }
    for (std::size_t j = i + 1; j < approx.size() && !done[i]; ++j) {
      long s = 0;
      long q = 0;
      if (done[j] || !near_integer(approx[i] + approx[j], s) || !near_integer(approx[i] * approx[j], q)) continue;
      const long disc = s * s - 4 * q;
      if (disc <= 0) continue;
      const auto hi = AlgebraicScalar::surd(Rational(s, 2), Rational(1, 2), disc);
      const auto lo = AlgebraicScalar::surd(Rational(s, 2), Rational(-1, 2), disc);
      if (!exactla::evaluate(cp, hi).is_zero() || !exactla::evaluate(cp, lo).is_zero()) continue;
      // approx is decreasing, so i holds the larger root.
      roots[i] = hi;
      roots[j] = lo;
      done[i] = done[j] = true;
    }
    if (!done[i]) return std::nullopt;
  }
  return roots;
}

}  // namespace

std::vector<long> DrgParameters::class_sizes() const {
  std::vector<long> ks(diameter + 1);
  for (std::size_t i = 0; i <= diameter; ++i) ks[i] = p[0][i][i];
  return ks;
}

bool DrgParameters::bipartite() const {
  return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

std::string DrgParameters::array_str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + "}";
}

DrgParameters verify_drg(const Graph& g, const DistanceData& dd) {
  const std::size_t n = g.order();
  const std::size_t d1 = dd.diameter + 1;
  using Table = std::vector<long>;
  std::vector<Table> ref(d1);
  std::vector<std::pair<Vertex, Vertex>> ref_pair(d1);
  Table cnt(d1 * d1);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      std::fill(cnt.begin(), cnt.end(), 0);
      for (Vertex z = 0; z < n; ++z) ++cnt[dd.dist(x, z) * d1 + dd.dist(y, z)];
      const std::size_t h = dd.dist(x, y);
      if (ref[h].empty()) {
        ref[h] = cnt;
        ref_pair[h] = {x, y};
        continue;
      }
      if (cnt == ref[h]) continue;
      std::size_t idx = 0;
      while (cnt[idx] == ref[h][idx]) ++idx;
      const std::size_t i = idx / d1;
      const std::size_t j = idx % d1;
      const auto [x0, y0] = ref_pair[h];
      throw Error("not distance-regular",
                  "p^" + std::to_string(h) + "_" + std::to_string(i) + std::to_string(j) + " is " + std::to_string(ref[h][idx]) +
                      " for (" + std::to_string(x0) + "," + std::to_string(y0) + ") but " + std::to_string(cnt[idx]) + " for (" +
                      std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  DrgParameters p;
  p.n = n;
  p.diameter = dd.diameter;
  p.p.assign(d1, std::vector<std::vector<long>>(d1, std::vector<long>(d1, 0)));
  for (std::size_t h = 0; h < d1; ++h)
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) p.p[h][i][j] = ref[h][i * d1 + j];
  p.k = p.p[0][1][1];
  for (std::size_t i = 0; i < d1; ++i) {
    p.a.push_back(p.p[i][1][i]);
    if (i + 1 < d1) p.b.push_back(p.p[i][1][i + 1]);
    if (i > 0) p.c.push_back(p.p[i][1][i - 1]);
  }
  return p;
}

DrgParameters verify_drg(const Graph& g) {
  g.require_connected();
  return verify_drg(g, distances(g));
}

std::optional<SrgParams> srg_params(const DrgParameters& p) {
  if (p.diameter != 2) return std::nullopt;
  return SrgParams::make(static_cast<long>(p.n), p.k, p.a[1], p.c[1]);
}

ExactMatrix intersection_matrix(const DrgParameters& p) {
  const std::size_t d1 = p.diameter + 1;
  ExactMatrix l(d1, d1, AlgebraicScalar(0));
  for (std::size_t i = 0; i < d1; ++i) {
    l(i, i) = AlgebraicScalar(p.a[i]);
    if (i > 0) l(i - 1, i) = AlgebraicScalar(p.b_at(i - 1));
    if (i + 1 < d1) l(i + 1, i) = AlgebraicScalar(p.c_at(i + 1));
  }
  return l;
}

EigenData eigen_data(const DistanceData& dd, const DrgParameters& params, bool allow_float, bool materialize) {
  const std::size_t d1 = params.diameter + 1;
  const ExactMatrix l = intersection_matrix(params);
  const auto approx = numeric_eigenvalues(params);

  EigenData ed;
  auto roots = exact_roots(l, approx);
  if (roots) {
    std::int64_t field = 0;
    for (const auto& r : *roots) {
      if (r.radicand() == 0) continue;
      if (field != 0 && field != r.radicand()) {
        roots.reset();
        break;
      }
      field = r.radicand();
    }
  }
  if (roots) {
    ed.theta = *roots;
  } else {
    if (!allow_float) throw Error("float fallback", "eigenvalues of " + params.array_str() + " are not in one quadratic field");
    ed.exact = false;
    for (double v : approx) ed.theta.push_back(AlgebraicScalar::approx(v));
  }

  // Lagrange interpolation in {A_h} coordinates; multiplying by A is L.
  for (std::size_t i = 0; i < d1; ++i) {
    Coeffs u(d1, AlgebraicScalar(0));
    u[0] = 1;
    for (std::size_t j = 0; j < d1; ++j) {
      if (j == i) continue;
      Coeffs next(d1, AlgebraicScalar(0));
      for (std::size_t r = 0; r < d1; ++r)
        for (std::size_t c = 0; c < d1; ++c)
          if (!is_zero(l(r, c))) next[r] += l(r, c) * u[c];
      const AlgebraicScalar gap = ed.theta[i] - ed.theta[j];
      for (std::size_t r = 0; r < d1; ++r) next[r] = (next[r] - ed.theta[j] * u[r]) / gap;
      u = std::move(next);
    }
    ed.coeff.push_back(std::move(u));
  }

  Coeffs sum(d1, AlgebraicScalar(0));
  Coeffs recon(d1, AlgebraicScalar(0));
  for (std::size_t i = 0; i < d1; ++i) {
    for (std::size_t h = 0; h < d1; ++h) {
      sum[h] += ed.coeff[i][h];
      recon[h] += ed.theta[i] * ed.coeff[i][h];
    }
    for (std::size_t j = i; j < d1; ++j) {
      const Coeffs prod = bm_product(ed.coeff[i], ed.coeff[j], params);
      const Coeffs want = i == j ? ed.coeff[i] : Coeffs(d1, AlgebraicScalar(0));
      if (!same_coeffs(prod, want))
        throw Error("eigenprojection", "E_" + std::to_string(i) + " E_" + std::to_string(j) + " check failed");
    }
  }
  Coeffs id(d1, AlgebraicScalar(0));
  id[0] = 1;
  Coeffs adj(d1, AlgebraicScalar(0));
  adj[1] = 1;
  if (!same_coeffs(sum, id)) throw Error("eigenprojection", "idempotents do not sum to I");
  if (!same_coeffs(recon, adj)) throw Error("eigenprojection", "A != sum theta_i E_i");

  const AlgebraicScalar n(static_cast<long>(params.n));
  for (std::size_t i = 0; i < d1; ++i) {
    const AlgebraicScalar m = n * ed.coeff[i][0];
    if (ed.exact) {
      if (!m.is_rational() || m.rational_part().get_den() != 1 || m.sign() <= 0)
        throw Error("eigenprojection", "multiplicity " + m.str() + " is not a positive integer");
      ed.mult.push_back(m.rational_part().get_num().get_ui());
    } else {
      ed.mult.push_back(static_cast<std::size_t>(std::lround(m.to_double())));
    }
  }

  if (materialize) {
    const std::size_t nn = params.n;
    for (std::size_t i = 0; i < d1; ++i) {
      ExactMatrix e(nn, nn, AlgebraicScalar(0));
      for (std::size_t x = 0; x < nn; ++x)
        for (std::size_t y = 0; y < nn; ++y) e(x, y) = ed.coeff[i][dd.dist(x, y)];
      ed.E.push_back(std::move(e));
    }
  }
  return ed;
}

KreinData krein(const EigenData& ed, const DrgParameters& params) {
  const std::size_t d1 = params.diameter + 1;
  ExactMatrix e(d1, d1);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t l = 0; l < d1; ++l) e(i, l) = ed.coeff[i][l];
  const ExactMatrix inv = exactla::inverse(e);
  const AlgebraicScalar n(static_cast<long>(params.n));

  KreinData kd;
  kd.q.assign(d1, std::vector<std::vector<AlgebraicScalar>>(d1, std::vector<AlgebraicScalar>(d1, AlgebraicScalar(0))));
  for (std::size_t h = 0; h < d1; ++h)
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        AlgebraicScalar s(0);
        for (std::size_t l = 0; l < d1; ++l) s += e(i, l) * e(j, l) * inv(l, h);
        s *= n;
        const bool negative = s.exact() ? s.sign() < 0 : s.to_double() < -kZeroTol;
        if (negative)
          throw Error("krein violation", "q^" + std::to_string(h) + "_" + std::to_string(i) + std::to_string(j) + " = " + s.str());
        kd.q[h][i][j] = s;
      }

  std::vector<std::size_t> perm(d1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t h = 0; h < d1 && ok; ++h)
      for (std::size_t i = 0; i < d1 && ok; ++i)
        for (std::size_t j = 0; j < d1 && ok; ++j) {
          const std::size_t big = std::max({h, i, j});
          const std::size_t rest = h + i + j - big;
          const bool zero = is_zero(kd.q[perm[h]][perm[i]][perm[j]]);
          if (big > rest && !zero) ok = false;
          if (big == rest && zero) ok = false;
        }
    if (ok) kd.qpoly_orderings.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return kd;
}

std::optional<std::vector<Vertex>> antipodality(const Graph& g, const DistanceData& dd) {
  if (dd.diameter == 0) return std::nullopt;
  std::vector<Vertex> hat(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    const auto far = dd.sphere(x, dd.diameter);
    if (far.size() != 1) return std::nullopt;
    hat[x] = far.front();
  }
  return hat;
}

Tightness tightness(const DrgParameters& params, const EigenData& ed) {
  if (params.diameter < 3) throw Error("diameter", "tightness needs D >= 3");
  if (params.bipartite()) throw Error("bipartite", "tightness undefined");
  const AlgebraicScalar k(params.k);
  const AlgebraicScalar a1(params.a[1]);
  const AlgebraicScalar b1(params.b[1]);
  const AlgebraicScalar one(1);
  const AlgebraicScalar& t1 = ed.theta[1];
  const AlgebraicScalar& td = ed.theta[params.diameter];
  const AlgebraicScalar shift = k / (a1 + one);
  Tightness t;
  t.lhs = (t1 + shift) * (td + shift);
  t.rhs = -(k * a1 * b1) / ((a1 + one) * (a1 + one));
  t.is_tight = same_value(t.lhs, t.rhs);
  t.b_plus = -one - b1 / (one + td);
  t.b_minus = -one - b1 / (one + t1);
  return t;
}

}  // namespace drgkit
