#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "drgkit/matrix.hpp"
#include "drgkit/scalar.hpp"

namespace drgkit::exactla {

/// Rank over Q(sqrt d) by Bareiss elimination. Throws Error("float mode") if
/// any entry is approximate and Error("field mismatch") if entries mix fields.
std::size_t rank(const ExactMatrix& m);

/// Rank over Q of an integer matrix; fraction-free Bareiss, all divisions exact.
std::size_t rank(const IntMatrix& m);

/// The single radicand shared by every irrational entry (0 if all rational).
std::int64_t common_radicand(const ExactMatrix& m);

ExactMatrix to_exact(const BitMatrix& m);
ExactMatrix to_exact(const IntMatrix& m);

/// Incremental span of equally-shaped matrices, viewed as flat vectors over
/// one quadratic field. Keeps a reduced echelon form next to the members.
class Span {
 public:
  Span(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Appends `m` if it is not already in the span; reports whether it was.
  bool insert(const ExactMatrix& m);
  bool contains(const ExactMatrix& m) const;

  std::size_t dim() const noexcept { return members_.size(); }
  const std::vector<ExactMatrix>& members() const noexcept { return members_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<AlgebraicScalar>> echelon_;
  std::vector<std::size_t> pivots_;
  std::vector<ExactMatrix> members_;

  std::vector<AlgebraicScalar> flatten(const ExactMatrix& m) const;
  void reduce(std::vector<AlgebraicScalar>& v) const;
};

/// Appends `m` to `basis` when it lies outside span(basis). `basis` must be
/// linearly independent on entry and stays so.
bool span_insert(std::vector<ExactMatrix>& basis, const ExactMatrix& m);

/// Fraction-free incremental row space over Q for integer vectors of fixed
/// length. Stored rows are primitive with a positive pivot and vanish on the
/// pivots of every earlier row.
class IntegerSpan {
 public:
  explicit IntegerSpan(std::size_t length) : length_(length) {}

  /// Reduces `v` against the span. If a nonzero remainder survives it is
  /// stored and returned; otherwise nullopt.
  std::optional<std::vector<Integer>> insert(std::vector<Integer> v);

  std::size_t dim() const noexcept { return rows_.size(); }
  std::size_t length() const noexcept { return length_; }
  const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }

 private:
  std::size_t length_;
  std::vector<std::vector<Integer>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Primitive idempotents of a diagonalizable A from its distinct eigenvalues,
/// by Lagrange interpolation. The four defining identities are checked
/// exactly; a wrong or incomplete eigenvalue list throws
/// Error("eigenprojection").
std::vector<ExactMatrix> eigenprojection(const ExactMatrix& a, std::span<const AlgebraicScalar> eigs);

/// Gauss-Jordan inverse; throws Error("singular matrix").
ExactMatrix inverse(const ExactMatrix& m);

/// Coefficients c_0..c_n of det(zI - M), lowest degree first (Faddeev-LeVerrier).
std::vector<AlgebraicScalar> characteristic_polynomial(const ExactMatrix& m);

AlgebraicScalar evaluate(std::span<const AlgebraicScalar> poly, const AlgebraicScalar& z);

}  // namespace drgkit::exactla
