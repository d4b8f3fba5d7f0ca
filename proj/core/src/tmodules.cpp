#include "drgkit/tmodules.hpp"

#include <algorithm>
#include <cmath>

#include "drgkit/error.hpp"
#include "drgkit/exactla.hpp"

namespace drgkit {

namespace {

Error module_error(const std::string& what) { return Error("module check", what); }

bool near_zero(const AlgebraicScalar& v) { return v.exact() ? v.is_zero() : std::fabs(v.to_double()) < 1e-6; }

ModuleDescriptor primary_from_array(const std::vector<long>& a, const std::vector<long>& b, const std::vector<long>& c) {
  ModuleDescriptor d;
  d.endpoint = 0;
  d.dual_endpoint = 0;
  d.diameter = a.size() - 1;
  d.dim = a.size();
  for (long v : a) d.a_seq.emplace_back(v);
  for (std::size_t i = 1; i < a.size(); ++i) d.x_seq.emplace_back(b[i - 1] * c[i - 1]);
  d.multiplicity = 1;
  return d;
}

ModuleDescriptor thin_class(std::size_t endpoint, std::size_t dual_endpoint, std::vector<AlgebraicScalar> a_seq,
                            std::vector<AlgebraicScalar> x_seq, std::size_t mult) {
  ModuleDescriptor d;
  d.endpoint = endpoint;
  d.dual_endpoint = dual_endpoint;
  d.diameter = a_seq.size() - 1;
  d.dim = a_seq.size();
  d.local_eigenvalue = a_seq.front();
  d.a_seq = std::move(a_seq);
  d.x_seq = std::move(x_seq);
  d.multiplicity = mult;
  return d;
}

std::size_t as_count(const Rational& r, const std::string& what) {
  if (r.get_den() != 1 || r < 0) throw module_error(what + " = " + r.get_str() + " is not a non-negative integer");
  return r.get_num().get_ui();
}

std::size_t as_count(const AlgebraicScalar& r, const std::string& what) {
  if (!r.is_rational()) throw module_error(what + " = " + r.str() + " is irrational");
  return as_count(r.rational_part(), what);
}

}  // namespace

std::size_t ModuleDecomposition::total() const {
  std::size_t t = 0;
  for (const auto& d : descriptors) t += d.multiplicity * d.dim;
  return t;
}

void sort_descriptors(std::vector<ModuleDescriptor>& ds) {
  std::stable_sort(ds.begin(), ds.end(), [](const ModuleDescriptor& x, const ModuleDescriptor& y) {
    if (x.endpoint != y.endpoint) return x.endpoint < y.endpoint;
    if (x.dim != y.dim) return x.dim < y.dim;
    if (x.local_eigenvalue && y.local_eigenvalue) return *x.local_eigenvalue > *y.local_eigenvalue;
    return static_cast<bool>(x.local_eigenvalue) < static_cast<bool>(y.local_eigenvalue);
  });
}

ExactMatrix module_action_matrix(const ModuleDescriptor& d) {
  const std::size_t m = d.a_seq.size();
  ExactMatrix out(m, m, AlgebraicScalar(0));
  for (std::size_t i = 0; i < m; ++i) {
    out(i, i) = d.a_seq[i];
    if (i + 1 < m) {
      out(i + 1, i) = 1;
      out(i, i + 1) = d.x_seq.at(i);
    }
  }
  return out;
}

ModuleDescriptor primary_module(const DrgParameters& params) {
  std::vector<long> b(params.b);
  b.push_back(0);
  std::vector<long> c{0};
  c.insert(c.end(), params.c.begin(), params.c.end());
  // x_i = b_{i-1} c_i
  std::vector<long> cc(c.begin() + 1, c.end());
  return primary_from_array(params.a, std::vector<long>(b.begin(), b.end() - 1), cc);
}

ModuleDecomposition decompose_srg(const Graph& g, const DistanceData& dd, Vertex x, const SrgParams& p,
                                  const SpectrumOptions& opts) {
  if (dd.diameter != 2 || static_cast<long>(g.order()) != p.n || g.degree(x) != static_cast<std::size_t>(p.k))
    throw Error("not strongly regular", "graph does not match SRG parameters");
  ModuleDecomposition md;
  md.n = g.order();
  const Spectrum s1 = subconstituent_spectrum(g, dd, x, 1, opts);
  const Spectrum s2 = subconstituent_spectrum(g, dd, x, 2, opts);
  md.subconstituents = {s1, s2};

  md.descriptors.push_back(primary_from_array({0, p.a, p.k - p.c}, {p.k, p.k - p.a - 1}, {1, p.c}));

  Spectrum rest1 = s1;
  if (rest1.remove(AlgebraicScalar(p.a)) != 1) throw module_error("Δ1 lacks its valency " + std::to_string(p.a));
  long f_sigma = 0;
  long f_tau = 0;
  const AlgebraicScalar st = p.sigma + p.tau;
  for (const auto& [lambda, m] : rest1.pairs()) {
    if (same_value(lambda, p.sigma)) {
      f_sigma = static_cast<long>(m);
      md.descriptors.push_back(thin_class(1, 1, {p.sigma}, {}, m));
    } else if (same_value(lambda, p.tau)) {
      f_tau = static_cast<long>(m);
      md.descriptors.push_back(thin_class(1, 2, {p.tau}, {}, m));
    } else {
      const AlgebraicScalar x1 = -((lambda - p.sigma) * (lambda - p.tau));
      md.descriptors.push_back(thin_class(1, 1, {lambda, st - lambda}, {x1}, m));
    }
  }

  const long g_sigma = -p.k + p.m_sigma + f_tau;
  const long g_tau = -p.k + p.m_tau + f_sigma;
  if (g_sigma < 0 || g_tau < 0) throw module_error("negative endpoint-2 multiplicity");
  Spectrum rest2 = s2;
  if (rest2.remove(AlgebraicScalar(p.k - p.c)) != 1) throw module_error("Δ2 lacks its valency");
  if (rest2.multiplicity(p.sigma) != static_cast<std::size_t>(g_sigma) ||
      rest2.multiplicity(p.tau) != static_cast<std::size_t>(g_tau))
    throw module_error("Δ2 multiplicities of σ, τ differ from -k + m + f");
  if (!local_duality_check(s1, s2, p)) throw module_error("Δ1/Δ2 local eigenvalues are not dual under λ -> a-c-λ");
  if (g_sigma > 0) md.descriptors.push_back(thin_class(2, 1, {p.sigma}, {}, static_cast<std::size_t>(g_sigma)));
  if (g_tau > 0) md.descriptors.push_back(thin_class(2, 2, {p.tau}, {}, static_cast<std::size_t>(g_tau)));

  sort_descriptors(md.descriptors);
  if (md.total() != md.n) throw module_error("Σ mult·dim = " + std::to_string(md.total()) + " != n");
  return md;
}

DimensionSequence dimension_sequence(const ModuleDecomposition& md, const SrgParams& p) {
  DimensionSequence ds;
  std::vector<AlgebraicScalar> images;
  for (const auto& d : md.descriptors) {
    if (d.endpoint == 1 && d.dim == 1) ++ds.l1;
    if (d.endpoint == 1 && d.dim == 2) {
      ++ds.l1p;
      images.push_back(d.a_seq[1]);
    }
    if (d.endpoint == 2 && d.dim == 1) ++ds.l2;
  }
  if (md.subconstituents.size() >= 2) {
    Spectrum rest2 = md.subconstituents[1];
    rest2.remove(AlgebraicScalar(p.k - p.c));
    for (const auto& [v, m] : rest2.pairs())
      if (!same_value(v, p.sigma) && !same_value(v, p.tau)) ++ds.l2p;
  } else {
    std::sort(images.begin(), images.end());
    ds.l2p = static_cast<std::size_t>(std::unique(images.begin(), images.end(),
                                                  [](const auto& u, const auto& v) { return same_value(u, v); }) -
                                      images.begin());
  }
  return ds;
}

std::size_t srg_dim_formula(const DimensionSequence& ds) { return ds.l1 + ds.l2 + 4 * ds.l1p + 9; }
std::size_t srg_dim_formula_dual(const DimensionSequence& ds) { return ds.l1 + ds.l2 + 4 * ds.l2p + 9; }

TaylorParams TaylorParams::make(long k, long b) {
  if (k < 2 || b < 1 || b >= k - 1)
    throw Error("not a Taylor graph", "need 1 <= b < k-1, got k=" + std::to_string(k) + ", b=" + std::to_string(b));
  if ((2 * k - 3 * b - 4) % 2 != 0 || (k - b - 1) % 2 != 0)
    throw Error("not a Taylor graph", "local parameters are not integral for k=" + std::to_string(k) + ", b=" + std::to_string(b));
  TaylorParams t;
  t.k = k;
  t.b = b;
  const long e = k - 2 * b - 1;
  const long disc = e * e + 4 * k;
  t.theta = {AlgebraicScalar(k), AlgebraicScalar::surd(Rational(e, 2), Rational(1, 2), disc), AlgebraicScalar(-1),
             AlgebraicScalar::surd(Rational(e, 2), Rational(-1, 2), disc)};
  t.sigma = AlgebraicScalar::surd(Rational(e - 2, 4), Rational(1, 4), disc);
  t.tau = AlgebraicScalar::surd(Rational(e - 2, 4), Rational(-1, 4), disc);
  const AlgebraicScalar skew = AlgebraicScalar(Rational((k + 1) * e, 2)) / AlgebraicScalar::sqrt(disc);
  t.m_sigma = AlgebraicScalar(Rational(k - 1, 2)) - skew;
  t.m_tau = AlgebraicScalar(Rational(k - 1, 2)) + skew;
  t.local = SrgParams::make(k, k - b - 1, (2 * k - 3 * b - 4) / 2, (k - b - 1) / 2);
  return t;
}

ModuleDecomposition decompose_taylor(const Graph& g, const DistanceData& dd, Vertex x, long k, long b,
                                     const SpectrumOptions& opts) {
  const TaylorParams tp = TaylorParams::make(k, b);
  if (g.order() != static_cast<std::size_t>(2 * (k + 1)) || dd.diameter != 3 || g.degree(x) != static_cast<std::size_t>(k) ||
      dd.sphere(x, 3).size() != 1)
    throw Error("not a Taylor graph", "shape does not match {" + std::to_string(k) + "," + std::to_string(b) + ",1;1," +
                                          std::to_string(b) + "," + std::to_string(k) + "}");
  ModuleDecomposition md;
  md.n = g.order();
  const Spectrum s1 = subconstituent_spectrum(g, dd, x, 1, opts);
  const Spectrum s2 = subconstituent_spectrum(g, dd, x, 2, opts);
  const Spectrum s3 = subconstituent_spectrum(g, dd, x, 3, opts);
  md.subconstituents = {s1, s2, s3};
  if (!cospectral(s1, s2)) throw module_error("Δ1 and Δ2 are not cospectral");

  Spectrum rest = s1;
  if (rest.remove(AlgebraicScalar(tp.local.k)) != 1) throw module_error("Δ1 lacks its valency");
  std::size_t f_sigma = 0;
  std::size_t f_tau = 0;
  for (const auto& [v, m] : rest.pairs()) {
    if (same_value(v, tp.sigma)) {
      f_sigma = m;
    } else if (same_value(v, tp.tau)) {
      f_tau = m;
    } else {
      throw module_error("local eigenvalue " + v.str() + " is neither σ nor τ");
    }
  }
  if (f_sigma != as_count(tp.m_sigma, "m_sigma") || f_tau != as_count(tp.m_tau, "m_tau"))
    throw module_error("local multiplicities differ from the closed form");

  const AlgebraicScalar two(2);
  if (two * tp.sigma != tp.theta[1] + tp.theta[2] || two * tp.tau != tp.theta[2] + tp.theta[3])
    throw module_error("2σ = θ1+θ2 or 2τ = θ2+θ3 fails");
  const AlgebraicScalar diff_form = (tp.theta[1] - tp.theta[2]) / two;
  if (diff_form != tp.sigma)
    md.notes.push_back("sigma = (theta_1 + theta_2)/2 = " + tp.sigma.str() + "; the difference form (theta_1 - theta_2)/2 = " +
                       diff_form.str() + " does not match");
  const AlgebraicScalar b_plus = AlgebraicScalar(-1) - AlgebraicScalar(b) / (AlgebraicScalar(1) + tp.theta[3]);
  const AlgebraicScalar b_minus = AlgebraicScalar(-1) - AlgebraicScalar(b) / (AlgebraicScalar(1) + tp.theta[1]);
  if (b_plus != tp.sigma || b_minus != tp.tau) throw module_error("σ, τ differ from b+, b-");

  md.descriptors.push_back(primary_from_array({0, k - b - 1, k - b - 1, 0}, {k, b, 1}, {1, b, k}));
  const AlgebraicScalar ds = tp.sigma - tp.theta[1];
  const AlgebraicScalar dt = tp.tau - tp.theta[2];
  if (f_sigma > 0) md.descriptors.push_back(thin_class(1, 1, {tp.sigma, tp.sigma}, {ds * ds}, f_sigma));
  if (f_tau > 0) md.descriptors.push_back(thin_class(1, 2, {tp.tau, tp.tau}, {dt * dt}, f_tau));
  sort_descriptors(md.descriptors);
  if (md.total() != md.n) throw module_error("Σ mult·dim = " + std::to_string(md.total()) + " != n");
  return md;
}

At4Params At4Params::make(long p, long q) {
  if (p < 1 || q < 2) throw Error("parameter range", "AT4(p,q,2) needs p >= 1, q >= 2");
  if ((q * (p + q)) % 2 != 0) throw Error("parameter range", "q(p+q) must be even");
  At4Params t;
  t.p = p;
  t.q = q;
  const long k = q * (p * q + p + q);
  const long mid = q * (p + q) / 2;
  const long b1 = (q * q - 1) * (p + 1);
  t.b = {k, b1, mid, 1};
  t.c = {1, mid, b1, k};
  t.theta = {k, p * q + p + q, p, -q, -q * q};
  const long r = p * q * q + q * q + p * q - p;
  const long s = p * q + p + q;
  t.mult = {Rational(1), Rational(q * r, p + q), Rational(q * s * (q * q - 1) * (2 * q + p * q + p), (p + q) * (p + q * q)),
            Rational(r * s, p + q), Rational((p + 1) * s * r, (p + q) * (p + q * q))};
  for (auto& m : t.mult) m.canonicalize();
  t.local = SrgParams::make(k, p * (q + 1), 2 * p - q, p);
  t.m_bplus = Rational((q * q - 1) * s, p + q);
  t.m_bminus = Rational(p * q * (q + 1) * (p + 1), p + q);
  t.m_bplus.canonicalize();
  t.m_bminus.canonicalize();
  return t;
}

std::optional<At4Params> At4Params::from_array(const DrgParameters& params) {
  if (params.diameter != 4) return std::nullopt;
  const long k = params.k;
  for (long q = 2; q * q * q <= k; ++q) {
    if (k % q != 0) continue;
    const long rest = k / q - q;
    if (rest <= 0 || rest % (q + 1) != 0) continue;
    const long p = rest / (q + 1);
    if (p < 1 || (q * (p + q)) % 2 != 0) continue;
    At4Params t = At4Params::make(p, q);
    if (t.b == params.b && t.c == params.c) return t;
  }
  return std::nullopt;
}

long At4Params::a1(long lambda) const {
  std::size_t t = 0;
  if (lambda == p) {
    t = 1;
  } else if (lambda == -q) {
    t = 2;
  } else {
    throw module_error("local eigenvalue " + std::to_string(lambda) + " is neither p nor -q");
  }
  return theta[t] + theta[t + 1] + theta[t + 2] - 2 * lambda;
}

ModuleDecomposition decompose_at4(const Graph& g, const DistanceData& dd, Vertex x, long p, long q,
                                  const SpectrumOptions& opts, At4Residual* residual) {
  const At4Params ap = At4Params::make(p, q);
  const long k = ap.b[0];
  const long k2 = k * ap.b[1] / ap.c[1];
  if (g.order() != static_cast<std::size_t>(2 + 2 * k + k2) || dd.diameter != 4 || g.degree(x) != static_cast<std::size_t>(k) ||
      dd.sphere(x, 4).size() != 1)
    throw Error("array mismatch", "graph does not have the AT4(" + std::to_string(p) + "," + std::to_string(q) + ",2) shape");

  ModuleDecomposition md;
  md.n = g.order();
  const auto cls2 = dd.sphere(x, 2);
  const Graph delta2 = induced_subgraph(g, cls2);
  const Spectrum s1 = subconstituent_spectrum(g, dd, x, 1, opts);
  const Spectrum s2 = graph_spectrum(delta2, opts);
  md.subconstituents = {s1, s2};

  Spectrum rest1 = s1;
  if (rest1.remove(AlgebraicScalar(ap.local.k)) != 1) throw module_error("Δ1 lacks its valency");
  std::size_t f_p = 0;
  std::size_t f_q = 0;
  for (const auto& [v, m] : rest1.pairs()) {
    if (same_value(v, AlgebraicScalar(p))) {
      f_p = m;
    } else if (same_value(v, AlgebraicScalar(-q))) {
      f_q = m;
    } else {
      throw module_error("local eigenvalue " + v.str() + " is neither p nor -q");
    }
  }
  if (f_p != as_count(ap.m_bplus, "m_b+") || f_q != as_count(ap.m_bminus, "m_b-"))
    throw module_error("local multiplicities differ from m_b+, m_b-");

  if (s2.distinct() > 7) throw module_error("Δ2 has " + std::to_string(s2.distinct()) + " > 7 distinct eigenvalues");

  const long a2 = k - ap.b[2] - ap.c[1];
  const long a1p = ap.a1(p);
  const long a1q = ap.a1(-q);
  Spectrum res = s2;
  if (res.remove(AlgebraicScalar(a2)) != 1) throw module_error("Δ2 lacks a_2 = " + std::to_string(a2));
  if (f_p > 0 && res.remove(AlgebraicScalar(a1p), f_p) != f_p) throw module_error("Δ2 lacks a_1(W) for λ = p");
  if (f_q > 0 && res.remove(AlgebraicScalar(a1q), f_q) != f_q) throw module_error("Δ2 lacks a_1(W) for λ = -q");

  // trace(B^l) over the residual space, l = 0..3, against θ_1..θ_4.
  IntMatrix bm = matrix_cast<Integer>(delta2.adjacency());
  const IntMatrix b2 = bm * bm;
  Integer tr[4] = {Integer(static_cast<long>(cls2.size())), bm.trace(), b2.trace(), 0};
  for (std::size_t i = 0; i < bm.rows(); ++i)
    for (std::size_t j = 0; j < bm.cols(); ++j) tr[3] += b2(i, j) * bm(j, i);
  ExactMatrix vand(4, 4);
  std::vector<AlgebraicScalar> rhs(4);
  for (int l = 0; l < 4; ++l) {
    Rational r(tr[l]);
    Rational pa = 1, pp = 1, pq = 1;
    for (int e = 0; e < l; ++e) {
      pa *= a2;
      pp *= a1p;
      pq *= a1q;
    }
    r -= pa + Rational(static_cast<long>(f_p)) * pp + Rational(static_cast<long>(f_q)) * pq;
    rhs[static_cast<std::size_t>(l)] = AlgebraicScalar(r);
    for (int i = 0; i < 4; ++i) {
      Rational pw = 1;
      for (int e = 0; e < l; ++e) pw *= ap.theta[static_cast<std::size_t>(i) + 1];
      vand(static_cast<std::size_t>(l), static_cast<std::size_t>(i)) = AlgebraicScalar(pw);
    }
  }
  const ExactMatrix vinv = exactla::inverse(vand);
  std::array<Rational, 4> trace_mult;
  for (std::size_t i = 0; i < 4; ++i) {
    AlgebraicScalar m(0);
    for (std::size_t l = 0; l < 4; ++l) m += vinv(i, l) * rhs[l];
    trace_mult[i] = m.rational_part();
  }

  md.descriptors.push_back(primary_from_array({0, k - ap.b[1] - 1, a2, k - ap.b[1] - 1, 0}, ap.b, ap.c));
  auto add_endpoint1 = [&](long lambda, std::size_t t, long a1w, std::size_t mult) {
    if (mult == 0) return;
    std::vector<long> others;
    bool found = false;
    for (std::size_t i = t; i <= t + 2; ++i) {
      if (!found && ap.theta[i] == lambda) {
        found = true;
      } else {
        others.push_back(ap.theta[i]);
      }
    }
    if (!found) throw module_error("λ = " + std::to_string(lambda) + " is not among θ_t..θ_{t+2}");
    // The module matrix has char poly (z-λ)((z-a_1)(z-λ) - x_1 - x_2); the
    // antipodal symmetry gives x_1 = x_2.
    const Rational xsum = Rational(lambda * a1w - others[0] * others[1]);
    const AlgebraicScalar xi(Rational(xsum / 2));
    md.descriptors.push_back(thin_class(1, t, {AlgebraicScalar(lambda), AlgebraicScalar(a1w), AlgebraicScalar(lambda)}, {xi, xi}, mult));
  };
  add_endpoint1(p, 1, a1p, f_p);
  add_endpoint1(-q, 2, a1q, f_q);

  for (const auto& [eta, m] : res.pairs()) {
    std::size_t t = 0;
    for (std::size_t i = 1; i <= 4; ++i)
      if (same_value(eta, AlgebraicScalar(ap.theta[i]))) t = i;
    if (t == 0) throw module_error("endpoint-2 eigenvalue " + eta.str() + " is not in {θ1..θ4}");
    if (trace_mult[t - 1] != Rational(static_cast<long>(m)))
      throw module_error("multiplicity of " + eta.str() + " differs from the trace system");
    md.descriptors.push_back(thin_class(2, t, {eta}, {}, m));
  }
  for (std::size_t i = 0; i < 4; ++i)
    if (res.multiplicity(AlgebraicScalar(ap.theta[i + 1])) == 0 && trace_mult[i] != 0)
      throw module_error("trace system assigns θ_" + std::to_string(i + 1) + " a nonzero multiplicity");

  const std::size_t ell = res.distinct();
  const std::size_t naive = s2.distinct() - 1;
  if (naive != ell)
    md.notes.push_back("ell counts distinct residual eigenvalues of Δ2 (" + std::to_string(ell) +
                       "); distinct Δ2 eigenvalues other than a_2 number " + std::to_string(naive));
  if (residual) {
    residual->residual = res;
    residual->trace_mult = trace_mult;
    residual->distinct_delta2 = s2.distinct();
  }
  sort_descriptors(md.descriptors);
  if (md.total() != md.n) throw module_error("Σ mult·dim = " + std::to_string(md.total()) + " != n");
  return md;
}

bool is_taylor_array(const DrgParameters& params) {
  if (params.diameter != 3) return false;
  const long k = params.k;
  const long b = params.b[1];
  return params.b == std::vector<long>{k, b, 1} && params.c == std::vector<long>{1, b, k} && b < k - 1 && !params.bipartite();
}

std::optional<ModuleDecomposition> decompose_vertex(const Graph& g, const DistanceData& dd, const DrgParameters& params,
                                                    const std::vector<AlgebraicScalar>& theta, Vertex x,
                                                    const SpectrumOptions& opts) {
  std::optional<ModuleDecomposition> md;
  bool antipodal = false;
  if (auto s = srg_params(params)) {
    md = decompose_srg(g, dd, x, *s, opts);
  } else if (is_taylor_array(params)) {
    md = decompose_taylor(g, dd, x, params.k, params.b[1], opts);
    antipodal = true;
  } else if (auto a = At4Params::from_array(params)) {
    md = decompose_at4(g, dd, x, a->p, a->q, opts);
    antipodal = true;
  }
  if (md) validate_decomposition(*md, theta, antipodal);
  return md;
}

std::size_t wedderburn_dim(const ModuleDecomposition& md) {
  std::size_t s = 0;
  for (const auto& d : md.descriptors) s += d.dim * d.dim;
  return s;
}

void validate_decomposition(const ModuleDecomposition& md, const std::vector<AlgebraicScalar>& theta, bool antipodal) {
  if (md.total() != md.n) throw module_error("Σ mult·dim != n");
  std::size_t primaries = 0;
  for (const auto& d : md.descriptors) {
    if (d.endpoint == 0) {
      ++primaries;
      if (d.multiplicity != 1) throw module_error("primary multiplicity != 1");
    }
    if (d.dim != d.diameter + 1 || d.a_seq.size() != d.dim || d.x_seq.size() != d.diameter)
      throw module_error("descriptor is not thin-shaped");
    if (d.dual_endpoint + d.diameter >= theta.size()) throw module_error("dual endpoint out of range");
    AlgebraicScalar sa(0);
    AlgebraicScalar sth(0);
    for (std::size_t i = 0; i <= d.diameter; ++i) {
      sa += d.a_seq[i];
      sth += theta[d.dual_endpoint + i];
    }
    if (!near_zero(sa - sth)) throw module_error("Σ a_i(W) != Σ θ_{t+i}");
    if (antipodal)
      for (std::size_t i = 0; i <= d.diameter; ++i)
        if (!near_zero(d.a_seq[i] - d.a_seq[d.diameter - i])) throw module_error("a_i(W) != a_{d-i}(W)");
    const auto cp = exactla::characteristic_polynomial(module_action_matrix(d));
    for (std::size_t i = 0; i <= d.diameter; ++i)
      if (!near_zero(exactla::evaluate(cp, theta[d.dual_endpoint + i])))
        throw module_error("module matrix spectrum is not {θ_t..θ_{t+d}}");
  }
  if (primaries != 1) throw module_error("expected exactly one primary class");
}

}  // namespace drgkit
