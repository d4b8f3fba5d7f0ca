#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drgkit/drgkit.hpp"
#include "json.hpp"

namespace drgkit::tools {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalyzeOptions {
  bool all_vertices = false;
  Vertex base_vertex = 0;
  bool float_fallback = false;
  std::size_t threads = 0;
};

struct VertexRecord {
  Vertex vertex = 0;
  std::vector<Spectrum> subconstituents;  // Δ_1..Δ_D
  std::size_t closure_dim = 0;
  std::optional<ModuleDecomposition> modules;
  std::optional<DimensionSequence> dimension_sequence;
};

struct Analysis {
  std::string label;
  DrgParameters params;
  Spectrum spectrum;
  EigenData eigen;
  KreinData krein;
  std::optional<Tightness> tightness;
  std::string tightness_note;
  PvtVerdict pvt;
  std::vector<VertexRecord> vertices;
};

/// Full analysis. Per-vertex dim T is cross-checked against the Wedderburn
/// sum of the decomposition; a mismatch throws Error("cross-check").
Analysis analyze(const Graph& g, const AnalyzeOptions& opts);

VertexRecord analyze_vertex(const Graph& g, const DistanceData& dd, const DrgParameters& params,
                            const std::vector<AlgebraicScalar>& theta, Vertex x, const SpectrumOptions& sopts);

nlohmann::ordered_json spectrum_json(const Spectrum& s);
nlohmann::ordered_json modules_json(const ModuleDecomposition& md);
nlohmann::ordered_json report_json(const Analysis& a, const AnalyzeOptions& opts);

}  // namespace drgkit::tools
