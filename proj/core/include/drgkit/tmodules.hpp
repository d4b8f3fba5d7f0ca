#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drgkit/graph.hpp"
#include "drgkit/matrix.hpp"
#include "drgkit/scheme.hpp"
#include "drgkit/spectra.hpp"

namespace drgkit {

/// Isomorphism class of a thin irreducible T(x)-module together with its
/// multiplicity in the standard module.
struct ModuleDescriptor {
  std::size_t endpoint = 0;
  std::size_t dual_endpoint = 0;
  std::size_t diameter = 0;
  std::size_t dim = 1;
  /// a_0(W) for non-primary classes: the local eigenvalue for endpoint 1,
  /// the E*_2 A E*_2 eigenvalue for endpoint 2.
  std::optional<AlgebraicScalar> local_eigenvalue;
  std::vector<AlgebraicScalar> a_seq;  // a_0(W)..a_d(W)
  std::vector<AlgebraicScalar> x_seq;  // x_1(W)..x_d(W)
  std::size_t multiplicity = 1;
};

struct ModuleDecomposition {
  std::size_t n = 0;
  std::vector<ModuleDescriptor> descriptors;
  /// Spectra of Δ_1(x), Δ_2(x), ... used for the classification.
  std::vector<Spectrum> subconstituents;
  std::vector<std::string> notes;

  /// Σ multiplicity · dim.
  std::size_t total() const;
};

/// Sorts by endpoint, then dim, then local eigenvalue descending.
void sort_descriptors(std::vector<ModuleDescriptor>& ds);

/// Matrix of A on {w_0..w_d} with A w_i = w_{i+1} + a_i w_i + x_i w_{i-1}.
ExactMatrix module_action_matrix(const ModuleDescriptor& d);

/// Primary module from the intersection numbers.
ModuleDescriptor primary_module(const DrgParameters& params);

ModuleDecomposition decompose_srg(const Graph& g, const DistanceData& dd, Vertex x, const SrgParams& p,
                                  const SpectrumOptions& opts = {});

struct DimensionSequence {
  std::size_t l1 = 0;   // dim-1 classes, endpoint 1
  std::size_t l1p = 0;  // dim-2 classes (distinct local eigenvalues of Δ1 outside {σ,τ})
  std::size_t l2 = 0;   // dim-1 classes, endpoint 2
  std::size_t l2p = 0;  // distinct local eigenvalues of Δ2 outside {σ,τ}

  friend bool operator==(const DimensionSequence&, const DimensionSequence&) = default;
};

DimensionSequence dimension_sequence(const ModuleDecomposition& md, const SrgParams& p);

/// ℓ1 + ℓ2 + 4ℓ1' + 9.
std::size_t srg_dim_formula(const DimensionSequence& ds);
/// ℓ1 + ℓ2 + 4ℓ2' + 9.
std::size_t srg_dim_formula_dual(const DimensionSequence& ds);

/// Closed-form data of a Taylor graph with array {k,b,1;1,b,k}.
struct TaylorParams {
  long k = 0;
  long b = 0;
  std::array<AlgebraicScalar, 4> theta;
  AlgebraicScalar sigma;  // local eigenvalues, sigma > tau
  AlgebraicScalar tau;
  AlgebraicScalar m_sigma;
  AlgebraicScalar m_tau;
  SrgParams local;

  /// Errors: "not a Taylor graph" (b >= k-1 or non-integral local
  /// parameters).
  static TaylorParams make(long k, long b);
};

ModuleDecomposition decompose_taylor(const Graph& g, const DistanceData& dd, Vertex x, long k, long b,
                                     const SpectrumOptions& opts = {});

/// Closed-form data of AT4(p,q,2).
struct At4Params {
  long p = 0;
  long q = 0;
  std::vector<long> b;  // b_0..b_3
  std::vector<long> c;  // c_1..c_4
  std::array<long, 5> theta{};
  std::array<Rational, 5> mult;
  SrgParams local;
  Rational m_bplus;
  Rational m_bminus;

  /// a_1(W) = θ_t + θ_{t+1} + θ_{t+2} - 2λ with t = 1 for λ = p, t = 2 for
  /// λ = -q.
  long a1(long lambda) const;

  /// Errors: "parameter range" unless p >= 1, q >= 2.
  static At4Params make(long p, long q);
  /// Inverts the array; nullopt if it is not of AT4(p,q,2) shape.
  static std::optional<At4Params> from_array(const DrgParameters& params);
};

/// Residual data behind the endpoint-2 classes of an AT4(p,q,2) vertex.
struct At4Residual {
  Spectrum residual;  // Δ2 minus a_2 and the endpoint-1 images
  /// Multiplicities of θ_1..θ_4 solved from trace(B^l), l = 0..3.
  std::array<Rational, 4> trace_mult;
  std::size_t distinct_delta2 = 0;
};

ModuleDecomposition decompose_at4(const Graph& g, const DistanceData& dd, Vertex x, long p, long q,
                                  const SpectrumOptions& opts = {}, At4Residual* residual = nullptr);

/// Array {k,b,1;1,b,k} with b < k-1 (non-bipartite by shape).
bool is_taylor_array(const DrgParameters& params);

/// Dispatches to decompose_srg, decompose_taylor or decompose_at4 by array
/// shape and validates the result against θ; nullopt for other arrays.
std::optional<ModuleDecomposition> decompose_vertex(const Graph& g, const DistanceData& dd, const DrgParameters& params,
                                                    const std::vector<AlgebraicScalar>& theta, Vertex x,
                                                    const SpectrumOptions& opts = {});

/// Σ dim².
std::size_t wedderburn_dim(const ModuleDecomposition& md);

/// Checks every descriptor against θ: thin dimension, Σ a_i(W) = Σ θ_{t+i},
/// module matrix spectrum {θ_t..θ_{t+d}}, a_i = a_{d-i} when `antipodal`,
/// plus Σ mult·dim = n and a unique primary class. Errors: "module check".
void validate_decomposition(const ModuleDecomposition& md, const std::vector<AlgebraicScalar>& theta, bool antipodal);

}  // namespace drgkit
