#include "drgkit/pvt.hpp"

#include <map>

#include "drgkit/error.hpp"
#include "drgkit/parallel.hpp"
#include "drgkit/scheme.hpp"
#include "drgkit/terwilliger.hpp"
#include "drgkit/tmodules.hpp"

namespace drgkit {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pvt: return "pvt";
    case Verdict::not_pvt: return "not_pvt";
    case Verdict::necessary_conditions_pass: return "necessary_conditions_pass";
  }
  return "?";
}

std::string_view method_name(PvtMethod m) {
  switch (m) {
    case PvtMethod::srg_theorem: return "srg_theorem";
    case PvtMethod::taylor_theorem: return "taylor_theorem";
    case PvtMethod::at4_theorem: return "at4_theorem";
    case PvtMethod::generic_necessary: return "generic_necessary";
  }
  return "?";
}

namespace {

std::vector<Spectrum> local_spectra(const Graph& g, const DistanceData& dd, std::size_t i, const PvtOptions& opts) {
  return parallel_map(
      g.order(), [&](std::size_t x) { return subconstituent_spectrum(g, dd, x, i, opts.spectrum); }, opts.threads);
}

std::optional<PvtWitness> first_difference(const std::vector<Spectrum>& s, std::size_t i) {
  for (Vertex y = 1; y < s.size(); ++y)
    if (!cospectral(s[0], s[y]))
      return PvtWitness{0, y, "Spec Δ" + std::to_string(i) + "(0) = " + s[0].str() + " but Spec Δ" + std::to_string(i) + "(" +
                                  std::to_string(y) + ") = " + s[y].str()};
  return std::nullopt;
}

}  // namespace

PvtVerdict check_pvt(const Graph& g, const PvtOptions& opts) {
  g.require_connected();
  const DistanceData dd = distances(g);
  const DrgParameters params = verify_drg(g, dd);
  PvtVerdict v;

  if (params.diameter == 2) {
    v.method = PvtMethod::srg_theorem;
    v.witness = first_difference(local_spectra(g, dd, 1, opts), 1);
    v.verdict = v.witness ? Verdict::not_pvt : Verdict::pvt;
    return v;
  }
  if (is_taylor_array(params)) {
    TaylorParams::make(params.k, params.b[1]);
    v.method = PvtMethod::taylor_theorem;
    v.verdict = Verdict::pvt;
    return v;
  }
  if (At4Params::from_array(params)) {
    v.method = PvtMethod::at4_theorem;
    v.verdict = Verdict::pvt;
    return v;
  }

  v.method = PvtMethod::generic_necessary;
  for (std::size_t i = 1; i <= params.diameter; ++i) {
    if (auto w = first_difference(local_spectra(g, dd, i, opts), i)) {
      v.verdict = Verdict::not_pvt;
      v.witness = std::move(w);
      return v;
    }
  }
  if (opts.compare_algebra_dims) {
    const auto dims = parallel_map(
        g.order(), [&](std::size_t x) { return terwilliger_closure(g, x, dd).dim; }, opts.threads);
    for (Vertex y = 1; y < dims.size(); ++y) {
      if (dims[y] != dims[0]) {
        v.verdict = Verdict::not_pvt;
        v.witness = PvtWitness{0, y, "dim T(0) = " + std::to_string(dims[0]) + " but dim T(" + std::to_string(y) +
                                         ") = " + std::to_string(dims[y])};
        return v;
      }
    }
  }
  v.verdict = Verdict::necessary_conditions_pass;
  v.notes.push_back("no sufficiency theorem for this array; necessary conditions only");
  return v;
}

TIsoResult t_isomorphic_srg(const Graph& g1, const Graph& g2, const PvtOptions& opts) {
  auto srg_of = [](const Graph& g, const DistanceData& dd) {
    auto p = srg_params(verify_drg(g, dd));
    if (!p) throw Error("not strongly regular", g.label());
    return *p;
  };
  g1.require_connected();
  g2.require_connected();
  const DistanceData dd1 = distances(g1);
  const DistanceData dd2 = distances(g2);
  const SrgParams p1 = srg_of(g1, dd1);
  const SrgParams p2 = srg_of(g2, dd2);
  TIsoResult r;
  if (!(p1 == p2)) {
    r.witness = "parameters differ";
    return r;
  }
  const auto s1 = local_spectra(g1, dd1, 1, opts);
  const auto s2 = local_spectra(g2, dd2, 1, opts);
  std::map<std::string, std::pair<std::size_t, Vertex>> c1;
  std::map<std::string, std::pair<std::size_t, Vertex>> c2;
  for (Vertex x = 0; x < s1.size(); ++x) c1.try_emplace(s1[x].str(), 0, x).first->second.first++;
  for (Vertex x = 0; x < s2.size(); ++x) c2.try_emplace(s2[x].str(), 0, x).first->second.first++;
  if (c1.size() > 1) r.notes.push_back(g1.label() + " is not pseudo-vertex-transitive; compared multisets of local spectra");
  if (c2.size() > 1) r.notes.push_back(g2.label() + " is not pseudo-vertex-transitive; compared multisets of local spectra");

  auto describe = [](const std::string& key, const std::string& in, Vertex x, std::size_t n1, const std::string& other,
                     std::size_t n2) {
    return "local spectrum " + key + " at vertex " + std::to_string(x) + " of " + in + " occurs " + std::to_string(n1) +
           " times there and " + std::to_string(n2) + " times in " + other;
  };
  for (const auto& [key, cv] : c1) {
    auto it = c2.find(key);
    if (it == c2.end()) {
      r.witness = describe(key, g1.label(), cv.second, cv.first, g2.label(), 0);
      return r;
    }
  }
  for (const auto& [key, cv] : c2) {
    if (!c1.count(key)) {
      r.witness = describe(key, g2.label(), cv.second, cv.first, g1.label(), 0);
      return r;
    }
  }
  for (const auto& [key, cv] : c1) {
    const auto& other = c2.at(key);
    if (other.first != cv.first) {
      r.witness = describe(key, g1.label(), cv.second, cv.first, g2.label(), other.first);
      return r;
    }
  }
  r.isomorphic = true;
  return r;
}

std::size_t gq_dim(long s, long t) {
  if (s < 1 || t < 1) throw Error("parameter range", "GQ(s,t) needs s,t >= 1");
  if (s == 1 && t == 1) return 10;
  if (t == 1) return 15;
  if (s == 1) return 11;
  return s * s == t ? 15 : 16;
}

}  // namespace drgkit
