#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "drgkit/graph.hpp"
#include "drgkit/matrix.hpp"
#include "drgkit/scalar.hpp"
#include "drgkit/spectra.hpp"

namespace drgkit {

struct DrgParameters {
  std::size_t n = 0;
  std::size_t diameter = 0;
  long k = 0;
  std::vector<long> b;  // b_0..b_{D-1}
  std::vector<long> c;  // c_1..c_D
  std::vector<long> a;  // a_0..a_D
  /// p[h][i][j] = |Γ_i(x) ∩ Γ_j(y)| for ∂(x,y) = h.
  std::vector<std::vector<std::vector<long>>> p;

  /// b_i with b_D = 0; c_i with c_0 = 0.
  long b_at(std::size_t i) const { return i < b.size() ? b[i] : 0; }
  long c_at(std::size_t i) const { return i == 0 ? 0 : c[i - 1]; }
  /// k_i = |Γ_i(x)|.
  std::vector<long> class_sizes() const;
  bool bipartite() const;
  /// "{k,b_1,...;c_1,...,c_D}".
  std::string array_str() const;
};

/// Checks that every p^h_ij is constant over all pairs at distance h.
/// Errors: "not distance-regular" naming h, i, j and two disagreeing pairs;
/// "disconnected".
DrgParameters verify_drg(const Graph& g, const DistanceData& dd);
DrgParameters verify_drg(const Graph& g);

/// (n,k,a_1,c_2) when the diameter is 2.
std::optional<SrgParams> srg_params(const DrgParameters& p);

/// (D+1)x(D+1) matrix of A on {E*_i 1}: column i holds b_{i-1}, a_i,
/// c_{i+1} in rows i-1, i, i+1.
ExactMatrix intersection_matrix(const DrgParameters& p);

struct EigenData {
  std::vector<AlgebraicScalar> theta;  // θ_0 > θ_1 > ... > θ_D
  std::vector<std::size_t> mult;
  /// E_i = Σ_h coeff[i][h] A_h.
  std::vector<std::vector<AlgebraicScalar>> coeff;
  /// n x n idempotents; empty unless materialized.
  std::vector<ExactMatrix> E;
  bool exact = true;
};

/// Eigenvalues of the intersection matrix (exact when each lies in Q or a
/// single Q(sqrt d)), idempotents in Bose-Mesner coordinates checked against
/// the intersection numbers, multiplicities as traces. Without allow_float an
/// uncertified spectrum throws Error("float fallback").
EigenData eigen_data(const DistanceData& dd, const DrgParameters& params, bool allow_float = false,
                     bool materialize = true);

struct KreinData {
  /// q[h][i][j] for the natural (decreasing θ) order.
  std::vector<std::vector<std::vector<AlgebraicScalar>>> q;
  /// Orderings of {0..D} fixing 0 under which q follows the polynomial
  /// vanishing pattern.
  std::vector<std::vector<std::size_t>> qpoly_orderings;
};

/// Errors: "krein violation" if some q^h_ij is negative.
KreinData krein(const EigenData& ed, const DrgParameters& params);

/// x -> antipode when |Γ_D(x)| = 1 for every x; nullopt otherwise.
std::optional<std::vector<Vertex>> antipodality(const Graph& g, const DistanceData& dd);

struct Tightness {
  bool is_tight = false;
  AlgebraicScalar lhs;  // (θ_1 + k/(a_1+1))(θ_D + k/(a_1+1))
  AlgebraicScalar rhs;  // -k a_1 b_1 / (a_1+1)^2
  AlgebraicScalar b_plus;
  AlgebraicScalar b_minus;
};

/// Errors: "diameter" when D < 3; "bipartite" (tightness undefined).
Tightness tightness(const DrgParameters& params, const EigenData& ed);

}  // namespace drgkit
