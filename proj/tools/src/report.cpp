#include "drgkit_tools/report.hpp"

namespace drgkit::tools {

using nlohmann::ordered_json;

namespace {

ordered_json scalars_json(const std::vector<AlgebraicScalar>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

}  // namespace

VertexRecord analyze_vertex(const Graph& g, const DistanceData& dd, const DrgParameters& params,
                            const std::vector<AlgebraicScalar>& theta, Vertex x, const SpectrumOptions& sopts) {
  VertexRecord r;
  r.vertex = x;
  for (std::size_t i = 1; i <= dd.diameter; ++i) r.subconstituents.push_back(subconstituent_spectrum(g, dd, x, i, sopts));
  r.closure_dim = terwilliger_closure(g, x, dd).dim;
  r.modules = decompose_vertex(g, dd, params, theta, x, sopts);
  if (r.modules) {
    const std::size_t w = wedderburn_dim(*r.modules);
    if (w != r.closure_dim)
      throw Error("cross-check", "vertex " + std::to_string(x) + ": closure dim " + std::to_string(r.closure_dim) +
                                     " != Wedderburn sum " + std::to_string(w));
    if (auto s = srg_params(params)) r.dimension_sequence = dimension_sequence(*r.modules, *s);
  }
  return r;
}

Analysis analyze(const Graph& g, const AnalyzeOptions& opts) {
  g.require_connected();
  if (!opts.all_vertices && opts.base_vertex >= g.order())
    throw Error("vertex out of range", std::to_string(opts.base_vertex) + " >= " + std::to_string(g.order()));
  SpectrumOptions sopts;
  sopts.allow_float = opts.float_fallback;

  Analysis a;
  a.label = g.label();
  const DistanceData dd = distances(g);
  a.params = verify_drg(g, dd);
  a.spectrum = graph_spectrum(g, sopts);
  a.eigen = eigen_data(dd, a.params, opts.float_fallback, false);
  a.krein = krein(a.eigen, a.params);
  if (a.params.diameter < 3) {
    a.tightness_note = "diameter < 3";
  } else if (a.params.bipartite()) {
    a.tightness_note = "bipartite";
  } else {
    a.tightness = tightness(a.params, a.eigen);
  }
  PvtOptions popts;
  popts.spectrum = sopts;
  popts.threads = opts.threads;
  a.pvt = check_pvt(g, popts);

  std::vector<Vertex> targets;
  if (opts.all_vertices) {
    for (Vertex x = 0; x < g.order(); ++x) targets.push_back(x);
  } else {
    targets.push_back(opts.base_vertex);
  }
  a.vertices = parallel_map(
      targets.size(), [&](std::size_t i) { return analyze_vertex(g, dd, a.params, a.eigen.theta, targets[i], sopts); },
      opts.threads);
  return a;
}

ordered_json spectrum_json(const Spectrum& s) {
  ordered_json out = ordered_json::array();
  for (const auto& [v, m] : s.pairs()) out.push_back({{"value", v.str()}, {"multiplicity", m}});
  return out;
}

ordered_json modules_json(const ModuleDecomposition& md) {
  ordered_json classes = ordered_json::array();
  for (const auto& d : md.descriptors) {
    ordered_json c;
    c["endpoint"] = d.endpoint;
    c["dual_endpoint"] = d.dual_endpoint;
    c["diameter"] = d.diameter;
    c["dim"] = d.dim;
    c["local_eigenvalue"] = d.local_eigenvalue ? ordered_json(d.local_eigenvalue->str()) : ordered_json(nullptr);
    c["a_seq"] = scalars_json(d.a_seq);
    c["x_seq"] = scalars_json(d.x_seq);
    c["multiplicity"] = d.multiplicity;
    classes.push_back(std::move(c));
  }
  ordered_json out;
  out["classes"] = std::move(classes);
  out["total"] = md.total();
  out["wedderburn_dim"] = wedderburn_dim(md);
  out["notes"] = md.notes;
  return out;
}

ordered_json report_json(const Analysis& a, const AnalyzeOptions& opts) {
  const DrgParameters& p = a.params;
  ordered_json out;
  out["schema"] = kSchemaVersion;

  ordered_json graph;
  graph["label"] = a.label;
  graph["n"] = p.n;
  graph["diameter"] = p.diameter;
  graph["intersection_array"] = {{"b", p.b}, {"c", p.c}};
  graph["a"] = p.a;
  if (auto s = srg_params(p)) {
    graph["srg"] = {{"n", s->n}, {"k", s->k}, {"a", s->a}, {"c", s->c}};
  } else {
    graph["srg"] = nullptr;
  }
  out["graph"] = std::move(graph);

  out["spectrum"] = spectrum_json(a.spectrum);
  ordered_json eig;
  eig["theta"] = scalars_json(a.eigen.theta);
  eig["multiplicities"] = a.eigen.mult;
  eig["q_polynomial_orderings"] = a.krein.qpoly_orderings;
  out["eigen"] = std::move(eig);

  if (a.tightness) {
    const auto& t = *a.tightness;
    out["tightness"] = {{"tight", t.is_tight}, {"lhs", t.lhs.str()}, {"rhs", t.rhs.str()},
                        {"b_plus", t.b_plus.str()}, {"b_minus", t.b_minus.str()}};
  } else {
    out["tightness"] = {{"undefined", a.tightness_note}};
  }

  ordered_json pvt;
  pvt["verdict"] = std::string(verdict_name(a.pvt.verdict));
  pvt["method"] = std::string(method_name(a.pvt.method));
  if (a.pvt.witness) {
    pvt["witness"] = {{"x", a.pvt.witness->x}, {"y", a.pvt.witness->y}, {"detail", a.pvt.witness->detail}};
  } else {
    pvt["witness"] = nullptr;
  }
  pvt["notes"] = a.pvt.notes;
  out["pvt"] = std::move(pvt);

  ordered_json vertices = ordered_json::array();
  for (const auto& r : a.vertices) {
    ordered_json v;
    v["vertex"] = r.vertex;
    ordered_json subs = ordered_json::array();
    for (const auto& s : r.subconstituents) subs.push_back(spectrum_json(s));
    v["subconstituents"] = std::move(subs);
    v["dim_T"] = r.closure_dim;
    if (r.dimension_sequence) {
      const auto& ds = *r.dimension_sequence;
      v["dimension_sequence"] = {ds.l1, ds.l1p, ds.l2, ds.l2p};
    } else {
      v["dimension_sequence"] = nullptr;
    }
    v["modules"] = r.modules ? modules_json(*r.modules) : ordered_json(nullptr);
    vertices.push_back(std::move(v));
  }
  out["vertices"] = std::move(vertices);

  bool exact = a.spectrum.exact() && a.eigen.exact;
  for (const auto& r : a.vertices)
    for (const auto& s : r.subconstituents) exact = exact && s.exact();
  out["provenance"] = {{"exact", exact}, {"float_fallback", opts.float_fallback}, {"tool", "drgkit"},
                       {"version", kToolVersion}};
  return out;
}

}  // namespace drgkit::tools
