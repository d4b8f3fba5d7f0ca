#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace drgkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Number of the form a + b*sqrt(d) with a, b rational and d square-free,
/// or an approximate double when produced by the floating-point fallback.
///
/// Exact values are kept canonical: b == 0 forces d == 0, and d is never a
/// perfect square. Arithmetic between two exact values whose surd parts live
/// in different quadratic fields throws `Error("field mismatch")`; ordering
/// comparisons across fields are always exact.
class AlgebraicScalar {
 public:
  AlgebraicScalar() = default;
  AlgebraicScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  AlgebraicScalar(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  AlgebraicScalar(Rational r) : a_(std::move(r)) { a_.canonicalize(); }  // NOLINT

  /// a + b*sqrt(d); d >= 0 is reduced to its square-free part.
  static AlgebraicScalar surd(Rational a, Rational b, std::int64_t d);
  static AlgebraicScalar sqrt(std::int64_t d) { return surd(0, 1, d); }
  static AlgebraicScalar approx(double v);

  bool exact() const noexcept { return exact_; }
  bool is_rational() const noexcept { return exact_ && d_ == 0; }
  const Rational& rational_part() const noexcept { return a_; }
  const Rational& surd_coeff() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return d_; }

  double to_double() const;
  int sign() const;
  bool is_zero() const { return sign() == 0; }
  AlgebraicScalar conjugate() const;
  AlgebraicScalar to_float() const { return approx(to_double()); }

  /// Canonical text: "a", "p/q", "a + b√d", "-√5", "1/2 - 1/2√13". Float
  /// values use 17 significant digits.
  std::string str() const;
  static AlgebraicScalar parse(std::string_view text);

  AlgebraicScalar& operator+=(const AlgebraicScalar& o);
  AlgebraicScalar& operator-=(const AlgebraicScalar& o);
  AlgebraicScalar& operator*=(const AlgebraicScalar& o);
  AlgebraicScalar& operator/=(const AlgebraicScalar& o);
  AlgebraicScalar operator-() const;

  friend AlgebraicScalar operator+(AlgebraicScalar x, const AlgebraicScalar& y) { return x += y; }
  friend AlgebraicScalar operator-(AlgebraicScalar x, const AlgebraicScalar& y) { return x -= y; }
  friend AlgebraicScalar operator*(AlgebraicScalar x, const AlgebraicScalar& y) { return x *= y; }
  friend AlgebraicScalar operator/(AlgebraicScalar x, const AlgebraicScalar& y) { return x /= y; }

  /// Exact comparison when both are exact (works across quadratic fields);
  /// otherwise compares doubles.
  friend std::strong_ordering operator<=>(const AlgebraicScalar& x, const AlgebraicScalar& y);
  friend bool operator==(const AlgebraicScalar& x, const AlgebraicScalar& y);

 private:
  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
  bool exact_ = true;
  double approx_ = 0.0;

  void normalize();
  std::int64_t common_radicand(const AlgebraicScalar& o) const;
};

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& x);

/// Equality with tolerance `tol` whenever either side is approximate.
bool same_value(const AlgebraicScalar& x, const AlgebraicScalar& y, double tol = 1e-8);

/// Returns the square-free part s of d (d = s * m^2) and the multiplier m.
std::pair<std::int64_t, std::int64_t> square_free_split(std::int64_t d);

}  // namespace drgkit
