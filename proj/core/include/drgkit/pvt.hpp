#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drgkit/graph.hpp"
#include "drgkit/spectra.hpp"

namespace drgkit {

enum class Verdict { pvt, not_pvt, necessary_conditions_pass };
enum class PvtMethod { srg_theorem, taylor_theorem, at4_theorem, generic_necessary };

std::string_view verdict_name(Verdict v);
std::string_view method_name(PvtMethod m);

struct PvtWitness {
  Vertex x = 0;
  Vertex y = 0;
  std::string detail;
};

struct PvtVerdict {
  Verdict verdict = Verdict::necessary_conditions_pass;
  std::optional<PvtWitness> witness;
  PvtMethod method = PvtMethod::generic_necessary;
  std::vector<std::string> notes;
};

struct PvtOptions {
  SpectrumOptions spectrum;
  /// Generic path only: also compare dim T(x) across vertices.
  bool compare_algebra_dims = true;
  std::size_t threads = 0;
};

/// Errors: "disconnected", "not distance-regular".
PvtVerdict check_pvt(const Graph& g, const PvtOptions& opts = {});

struct TIsoResult {
  bool isomorphic = false;
  std::optional<std::string> witness;
  std::vector<std::string> notes;
};

/// Compares parameters and the multisets of local spectra over all
/// vertices. Errors: "not strongly regular".
TIsoResult t_isomorphic_srg(const Graph& g1, const Graph& g2, const PvtOptions& opts = {});

/// dim T(x) for the point graph of a GQ(s,t). Errors: "parameter range".
std::size_t gq_dim(long s, long t);

}  // namespace drgkit
