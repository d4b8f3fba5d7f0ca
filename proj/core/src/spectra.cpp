#include "drgkit/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "drgkit/error.hpp"
#include "drgkit/exactla.hpp"

namespace drgkit {

namespace {

constexpr double kIntegralTol = 1e-6;

bool near_integer(double v, long& out) {
  const double r = std::round(v);
  if (std::fabs(v - r) > kIntegralTol) return false;
  out = static_cast<long>(r);
  return true;
}

// n - rank(M^2 - sM + pI), or n - rank(M - lI) when `quadratic` is false.
std::size_t nullity(const IntMatrix& m, const IntMatrix* m2, long s, long p, bool quadratic) {
  const std::size_t n = m.rows();
  IntMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (quadratic) {
        w(i, j) = (*m2)(i, j) - Integer(s) * m(i, j);
        if (i == j) w(i, j) += p;
      } else {
        w(i, j) = m(i, j);
        if (i == j) w(i, j) -= s;
      }
    }
  return n - exactla::rank(w);
}

struct Cluster {
  double value;
  std::size_t count;
};

std::vector<Cluster> clusters(const IntMatrix& m, double tol) {
  const std::size_t n = m.rows();
  Eigen::MatrixXd dm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dm, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("eigensolver", "symmetric eigensolve did not converge");
  std::vector<double> vals(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(vals.begin(), vals.end(), std::greater<>());
  std::vector<Cluster> out;
  for (double v : vals) {
    if (!out.empty() && std::fabs(out.back().value - v) < tol) {
      auto& c = out.back();
      c.value = (c.value * static_cast<double>(c.count) + v) / static_cast<double>(c.count + 1);
      ++c.count;
    } else {
      out.push_back({v, 1});
    }
  }
  return out;
}

Spectrum float_spectrum(const std::vector<Cluster>& cs) {
  std::vector<Spectrum::Pair> pairs;
  for (const auto& c : cs) pairs.emplace_back(AlgebraicScalar::approx(c.value), c.count);
  return Spectrum(std::move(pairs));
}

bool in_pair(const AlgebraicScalar& v, const AlgebraicScalar& s, const AlgebraicScalar& t) {
  return same_value(v, s) || same_value(v, t);
}

}  // namespace

Spectrum::Spectrum(std::vector<Pair> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const Pair& x, const Pair& y) { return x.first > y.first; });
  for (auto& p : pairs) {
    if (p.second == 0) continue;
    if (!pairs_.empty() && same_value(pairs_.back().first, p.first)) {
      pairs_.back().second += p.second;
    } else {
      pairs_.push_back(std::move(p));
    }
  }
}

std::size_t Spectrum::size() const {
  std::size_t s = 0;
  for (const auto& p : pairs_) s += p.second;
  return s;
}

bool Spectrum::exact() const {
  return std::all_of(pairs_.begin(), pairs_.end(), [](const Pair& p) { return p.first.exact(); });
}

AlgebraicScalar Spectrum::trace() const {
  AlgebraicScalar t(0);
  for (const auto& [v, m] : pairs_) t += v * AlgebraicScalar(static_cast<long>(m));
  return t;
}

std::size_t Spectrum::multiplicity(const AlgebraicScalar& v) const {
  for (const auto& [w, m] : pairs_)
    if (same_value(v, w)) return m;
  return 0;
}

std::size_t Spectrum::remove(const AlgebraicScalar& v, std::size_t count) {
  for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
    if (!same_value(v, it->first)) continue;
    const std::size_t take = std::min(count, it->second);
    it->second -= take;
    if (it->second == 0) pairs_.erase(it);
    return take;
  }
  return 0;
}

std::string Spectrum::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ", ";
    const std::string v = pairs_[i].first.str();
    const bool wrap = v.find(' ') != std::string::npos;
    s += (wrap ? "(" + v + ")" : v) + "^" + std::to_string(pairs_[i].second);
  }
  return s + "}";
}

Spectrum symmetric_spectrum(const IntMatrix& m, const SpectrumOptions& opts) {
  if (!m.square() || m.rows() == 0) throw Error("dimension mismatch", "spectrum needs a nonempty square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) throw Error("asymmetric", "spectrum needs a symmetric matrix");

  const auto cs = clusters(m, opts.group_tol);
  const std::size_t n = m.rows();
  std::vector<Spectrum::Pair> pairs;
  std::size_t certified = 0;
  std::vector<bool> used(cs.size(), false);
  IntMatrix m2;
  bool have_m2 = false;

  for (std::size_t i = 0; i < cs.size() && certified <= n; ++i) {
    if (used[i]) continue;
    long r = 0;
    if (near_integer(cs[i].value, r)) {
      used[i] = true;
      const std::size_t mult = nullity(m, nullptr, r, 0, false);
      if (mult == 0) break;
      pairs.emplace_back(AlgebraicScalar(r), mult);
      certified += mult;
      continue;
    }
    // Look for a conjugate partner: an algebraic integer of degree 2 has
    // integral sum and product with its conjugate.
    bool found = false;
    for (std::size_t j = i + 1; j < cs.size() && !found; ++j) {
      if (used[j]) continue;
      long s = 0;
      long p = 0;
      if (!near_integer(cs[i].value + cs[j].value, s) || !near_integer(cs[i].value * cs[j].value, p)) continue;
      const long disc = s * s - 4 * p;
      if (disc <= 0) continue;
      if (!have_m2) {
        m2 = m * m;
        have_m2 = true;
      }
      const std::size_t both = nullity(m, &m2, s, p, true);
      if (both == 0 || both % 2 != 0) continue;
      used[i] = used[j] = true;
      found = true;
      const AlgebraicScalar hi = AlgebraicScalar::surd(Rational(s, 2), Rational(1, 2), disc);
      const AlgebraicScalar lo = AlgebraicScalar::surd(Rational(s, 2), Rational(-1, 2), disc);
      pairs.emplace_back(hi, both / 2);
      pairs.emplace_back(lo, both / 2);
      certified += both;
    }
    if (!found) break;
  }

  if (certified == n) return Spectrum(std::move(pairs));
  if (!opts.allow_float)
    throw Error("float fallback", "eigenvalues could not be certified in Q or a quadratic field; allow float mode to continue");
  return float_spectrum(cs);
}

Spectrum graph_spectrum(const Graph& g, const SpectrumOptions& opts) {
  return symmetric_spectrum(matrix_cast<Integer>(g.adjacency()), opts);
}

Spectrum subconstituent_spectrum(const Graph& g, const DistanceData& dd, Vertex x, std::size_t i,
                                 const SpectrumOptions& opts) {
  if (x >= g.order()) throw Error("vertex out of range", std::to_string(x));
  const auto cls = dd.sphere(x, i);
  if (cls.empty()) throw Error("empty class", "no vertices at distance " + std::to_string(i) + " from " + std::to_string(x));
  return graph_spectrum(induced_subgraph(g, cls), opts);
}

SrgParams SrgParams::make(long n, long k, long a, long c) {
  auto fail = [&](const std::string& why) {
    return Error("infeasible SRG parameters", "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(a) + "," +
                                                   std::to_string(c) + "): " + why);
  };
  if (n < 2 || k < 1 || k >= n || a < 0 || c < 1 || a >= k || c > k) throw fail("out of range");
  SrgParams p;
  p.n = n;
  p.k = k;
  p.a = a;
  p.c = c;
  const long disc = (a - c) * (a - c) + 4 * (k - c);
  if (disc < 0) throw fail("negative discriminant");
  p.sigma = AlgebraicScalar::surd(Rational(a - c, 2), Rational(1, 2), disc);
  p.tau = AlgebraicScalar::surd(Rational(a - c, 2), Rational(-1, 2), disc);
  if (p.sigma == p.tau) throw fail("sigma equals tau");
  const AlgebraicScalar ms = (AlgebraicScalar(n - 1) * p.tau + AlgebraicScalar(k)) / (p.tau - p.sigma);
  const AlgebraicScalar mt = (AlgebraicScalar(n - 1) * p.sigma + AlgebraicScalar(k)) / (p.sigma - p.tau);
  for (const auto* m : {&ms, &mt})
    if (!m->is_rational() || m->rational_part().get_den() != 1 || m->sign() < 0)
      throw fail("multiplicity " + m->str() + " is not a non-negative integer");
  p.m_sigma = ms.rational_part().get_num().get_si();
  p.m_tau = mt.rational_part().get_num().get_si();
  return p;
}

Spectrum srg_spectrum(const SrgParams& p) {
  return Spectrum({{AlgebraicScalar(p.k), 1},
                   {p.sigma, static_cast<std::size_t>(p.m_sigma)},
                   {p.tau, static_cast<std::size_t>(p.m_tau)}});
}

Spectrum second_subconstituent_derived(const Spectrum& local, const SrgParams& p) {
  if (local.size() != static_cast<std::size_t>(p.k))
    throw Error("inconsistent local spectrum", "size " + std::to_string(local.size()) + " != k");
  Spectrum rest = local;
  if (rest.remove(AlgebraicScalar(p.a)) != 1)
    throw Error("inconsistent local spectrum", "trivial eigenvalue a=" + std::to_string(p.a) + " missing");
  long f_sigma = 0;
  long f_tau = 0;
  std::vector<Spectrum::Pair> out;
  const AlgebraicScalar shift(p.a - p.c);
  for (const auto& [v, m] : rest.pairs()) {
    if (same_value(v, p.sigma)) {
      f_sigma = static_cast<long>(m);
    } else if (same_value(v, p.tau)) {
      f_tau = static_cast<long>(m);
    } else {
      out.emplace_back(shift - v, m);
    }
  }
  const long g_sigma = -p.k + p.m_sigma + f_tau;
  const long g_tau = -p.k + p.m_tau + f_sigma;
  if (g_sigma < 0 || g_tau < 0)
    throw Error("inconsistent local spectrum", "derived multiplicities g_sigma=" + std::to_string(g_sigma) +
                                                   ", g_tau=" + std::to_string(g_tau));
  out.emplace_back(p.sigma, static_cast<std::size_t>(g_sigma));
  out.emplace_back(p.tau, static_cast<std::size_t>(g_tau));
  out.emplace_back(AlgebraicScalar(p.k - p.c), 1);
  return Spectrum(std::move(out));
}

bool local_duality_check(const Spectrum& s1, const Spectrum& s2, const SrgParams& p) {
  Spectrum r1 = s1;
  Spectrum r2 = s2;
  if (r1.remove(AlgebraicScalar(p.a)) != 1 || r2.remove(AlgebraicScalar(p.k - p.c)) != 1) return false;
  const AlgebraicScalar shift(p.a - p.c);
  std::vector<Spectrum::Pair> mapped;
  for (const auto& [v, m] : r1.pairs())
    if (!in_pair(v, p.sigma, p.tau)) mapped.emplace_back(shift - v, m);
  std::vector<Spectrum::Pair> local2;
  for (const auto& [v, m] : r2.pairs())
    if (!in_pair(v, p.sigma, p.tau)) local2.emplace_back(v, m);
  return cospectral(Spectrum(std::move(mapped)), Spectrum(std::move(local2)));
}

bool cospectral(const Spectrum& s1, const Spectrum& s2) {
  if (s1.exact() && s2.exact()) return s1 == s2;
  if (s1.distinct() != s2.distinct()) return false;
  for (std::size_t i = 0; i < s1.distinct(); ++i) {
    const auto& [v1, m1] = s1.pairs()[i];
    const auto& [v2, m2] = s2.pairs()[i];
    if (m1 != m2 || std::fabs(v1.to_double() - v2.to_double()) >= 1e-8) return false;
  }
  return true;
}

}  // namespace drgkit
