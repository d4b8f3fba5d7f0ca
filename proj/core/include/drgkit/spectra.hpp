#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "drgkit/graph.hpp"
#include "drgkit/matrix.hpp"
#include "drgkit/scalar.hpp"

namespace drgkit {

/// Multiset of eigenvalues, values strictly decreasing.
class Spectrum {
 public:
  using Pair = std::pair<AlgebraicScalar, std::size_t>;

  Spectrum() = default;
  /// Sorts, merges equal values and drops zero multiplicities.
  explicit Spectrum(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return pairs_.empty(); }
  std::size_t distinct() const noexcept { return pairs_.size(); }
  std::size_t size() const;
  bool exact() const;
  AlgebraicScalar trace() const;

  /// Multiplicity of `v` (0 if absent); tolerant at 1e-8 in float mode.
  std::size_t multiplicity(const AlgebraicScalar& v) const;
  /// Removes up to `count` copies of `v`; returns how many were removed.
  std::size_t remove(const AlgebraicScalar& v, std::size_t count = 1);

  /// "{6^1, 4^1, 0^5, -2^5}".
  std::string str() const;

  friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.pairs_ == b.pairs_; }

 private:
  std::vector<Pair> pairs_;
};

struct SpectrumOptions {
  /// Accept an uncertified floating-point spectrum instead of throwing.
  bool allow_float = false;
  /// Absolute tolerance used to group numerical eigenvalues.
  double group_tol = 1e-8;
};

/// Spectrum of a symmetric integer matrix. Eigenvalues are located
/// numerically, recognized as integers or conjugate quadratic pairs, and
/// certified by exact nullities summing to n. Uncertified spectra throw
/// Error("float fallback") unless allow_float is set.
Spectrum symmetric_spectrum(const IntMatrix& m, const SpectrumOptions& opts = {});

Spectrum graph_spectrum(const Graph& g, const SpectrumOptions& opts = {});

/// Spectrum of the subgraph induced on Γ_i(x). Errors: "empty class".
Spectrum subconstituent_spectrum(const Graph& g, const DistanceData& dd, Vertex x, std::size_t i,
                                 const SpectrumOptions& opts = {});

/// Strongly regular parameters (n,k,a,c) with the derived nontrivial
/// eigenvalues sigma > tau and their multiplicities.
struct SrgParams {
  long n = 0;
  long k = 0;
  long a = 0;
  long c = 0;
  AlgebraicScalar sigma;
  AlgebraicScalar tau;
  long m_sigma = 0;
  long m_tau = 0;

  /// Errors: "infeasible SRG parameters".
  static SrgParams make(long n, long k, long a, long c);

  friend bool operator==(const SrgParams& x, const SrgParams& y) {
    return x.n == y.n && x.k == y.k && x.a == y.a && x.c == y.c;
  }
};

Spectrum srg_spectrum(const SrgParams& p);

/// Δ2(x) spectrum computed from the Δ1(x) spectrum alone: local values
/// λ outside {σ,τ} map to a-c-λ with equal multiplicity, σ and τ get
/// multiplicities -k + m_σ + f_τ and -k + m_τ + f_σ, and k-c is added once.
/// Errors: "inconsistent local spectrum".
Spectrum second_subconstituent_derived(const Spectrum& local, const SrgParams& p);

/// Δ1/Δ2 duality: after removing one copy of the trivial value (a resp.
/// k-c), the values outside {σ,τ} correspond under λ ↦ a-c-λ with equal
/// multiplicities.
bool local_duality_check(const Spectrum& s1, const Spectrum& s2, const SrgParams& p);

/// Exact multiset equality, or 1e-8 matching when either side is float.
bool cospectral(const Spectrum& s1, const Spectrum& s2);

}  // namespace drgkit
