#include "drgkit/exactla.hpp"

#include <utility>

#include "drgkit/error.hpp"

namespace drgkit::exactla {

namespace {

// Bareiss elimination on a working copy. The entry at step k is a (k+1)-minor
// of the input, so each division by the previous pivot is exact even when
// columns without a pivot are skipped.
template <class T, class DivExact>
std::size_t bareiss_rank(Matrix<T> m, DivExact div_exact) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  T prev(1);
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == T(0)) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = div_exact(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      m(i, c) = T(0);
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

void require_exact(const ExactMatrix& m, const char* what) {
  for (const auto& x : m.data())
    if (!x.exact()) throw Error("float mode", std::string(what) + " needs exact entries");
}

}  // namespace

std::int64_t common_radicand(const ExactMatrix& m) {
  std::int64_t d = 0;
  for (const auto& x : m.data()) {
    if (x.radicand() == 0) continue;
    if (d == 0) {
      d = x.radicand();
    } else if (d != x.radicand()) {
      throw Error("field mismatch", "matrix entries span Q(sqrt " + std::to_string(d) + ") and Q(sqrt " +
                                        std::to_string(x.radicand()) + ")");
    }
  }
  return d;
}

std::size_t rank(const ExactMatrix& m) {
  require_exact(m, "rank");
  common_radicand(m);
  return bareiss_rank(m, [](const AlgebraicScalar& x, const AlgebraicScalar& y) { return x / y; });
}

std::size_t rank(const IntMatrix& m) {
  return bareiss_rank(m, [](const Integer& x, const Integer& y) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return q;
  });
}

ExactMatrix to_exact(const BitMatrix& m) { return matrix_cast<AlgebraicScalar>(m); }

ExactMatrix to_exact(const IntMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = AlgebraicScalar(Rational(m(i, j)));
  return out;
}

std::vector<AlgebraicScalar> Span::flatten(const ExactMatrix& m) const {
  if (m.rows() != rows_ || m.cols() != cols_) throw Error("dimension mismatch", "span member shape");
  require_exact(m, "span");
  return m.data();
}

void Span::reduce(std::vector<AlgebraicScalar>& v) const {
  for (std::size_t k = 0; k < echelon_.size(); ++k) {
    const AlgebraicScalar f = v[pivots_[k]];
    if (f.is_zero()) continue;
    const auto& e = echelon_[k];
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!e[j].is_zero()) v[j] -= f * e[j];
  }
}

bool Span::contains(const ExactMatrix& m) const {
  auto v = flatten(m);
  reduce(v);
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool Span::insert(const ExactMatrix& m) {
  auto v = flatten(m);
  reduce(v);
  std::size_t p = 0;
  while (p < v.size() && v[p].is_zero()) ++p;
  if (p == v.size()) return false;
  const AlgebraicScalar inv = AlgebraicScalar(1) / v[p];
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  echelon_.push_back(std::move(v));
  pivots_.push_back(p);
  members_.push_back(m);
  return true;
}

bool span_insert(std::vector<ExactMatrix>& basis, const ExactMatrix& m) {
  if (basis.empty()) {
    require_exact(m, "span");
    for (const auto& x : m.data())
      if (!x.is_zero()) {
        basis.push_back(m);
        return true;
      }
    return false;
  }
  Span s(basis.front().rows(), basis.front().cols());
  for (const auto& b : basis) s.insert(b);
  if (!s.insert(m)) return false;
  basis.push_back(m);
  return true;
}

std::optional<std::vector<Integer>> IntegerSpan::insert(std::vector<Integer> v) {
  if (v.size() != length_) throw Error("dimension mismatch", "integer span vector length");
  Integer g;
  Integer alpha;
  Integer beta;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (v[p] == 0) continue;
    const auto& row = rows_[k];
    mpz_gcd(g.get_mpz_t(), row[p].get_mpz_t(), v[p].get_mpz_t());
    mpz_divexact(alpha.get_mpz_t(), row[p].get_mpz_t(), g.get_mpz_t());
    mpz_divexact(beta.get_mpz_t(), v[p].get_mpz_t(), g.get_mpz_t());
    // v <- alpha*v - beta*row clears position p.
    const bool scale = alpha != 1;
    for (std::size_t j = 0; j < length_; ++j) {
      if (scale && v[j] != 0) v[j] *= alpha;
      if (row[j] != 0) v[j] -= beta * row[j];
    }
  }
  std::size_t p = 0;
  while (p < length_ && v[p] == 0) ++p;
  if (p == length_) return std::nullopt;
  Integer content = 0;
  for (const auto& x : v)
    if (x != 0) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (v[p] < 0) content = -content;
  if (content != 1)
    for (auto& x : v)
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  rows_.push_back(v);
  pivots_.push_back(p);
  return v;
}

std::vector<ExactMatrix> eigenprojection(const ExactMatrix& a, std::span<const AlgebraicScalar> eigs) {
  if (!a.square()) throw Error("dimension mismatch", "eigenprojection needs a square matrix");
  if (eigs.empty()) throw Error("eigenprojection", "empty eigenvalue list");
  require_exact(a, "eigenprojection");
  const std::size_t n = a.rows();
  const ExactMatrix id = ExactMatrix::identity(n);
  std::vector<ExactMatrix> shifted;
  shifted.reserve(eigs.size());
  for (const auto& t : eigs) shifted.push_back(a - id * t);

  std::vector<ExactMatrix> e;
  e.reserve(eigs.size());
  for (std::size_t i = 0; i < eigs.size(); ++i) {
    ExactMatrix p = id;
    AlgebraicScalar denom(1);
    for (std::size_t j = 0; j < eigs.size(); ++j) {
      if (j == i) continue;
      const AlgebraicScalar gap = eigs[i] - eigs[j];
      if (gap.is_zero()) throw Error("eigenprojection", "repeated eigenvalue " + eigs[i].str());
      p = p * shifted[j];
      denom *= gap;
    }
    p *= AlgebraicScalar(1) / denom;
    e.push_back(std::move(p));
  }

  ExactMatrix sum(n, n, AlgebraicScalar(0));
  ExactMatrix recon(n, n, AlgebraicScalar(0));
  for (std::size_t i = 0; i < e.size(); ++i) {
    sum += e[i];
    recon += e[i] * eigs[i];
    if (e[i] * e[i] != e[i]) throw Error("eigenprojection", "E_" + std::to_string(i) + " not idempotent");
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const ExactMatrix prod = e[i] * e[j];
      for (const auto& x : prod.data())
        if (!x.is_zero())
          throw Error("eigenprojection", "E_" + std::to_string(i) + " E_" + std::to_string(j) + " != 0");
    }
  }
  if (sum != id) throw Error("eigenprojection", "idempotents do not sum to I");
  if (recon != a) throw Error("eigenprojection", "A != sum theta_i E_i");
  return e;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.square()) throw Error("dimension mismatch", "inverse needs a square matrix");
  const std::size_t n = m.rows();
  ExactMatrix w = m;
  ExactMatrix inv = ExactMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c).is_zero()) ++p;
    if (p == n) throw Error("singular matrix", "");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(w(p, j), w(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const AlgebraicScalar s = AlgebraicScalar(1) / w(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      w(c, j) *= s;
      inv(c, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w(i, c).is_zero()) continue;
      const AlgebraicScalar f = w(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        w(i, j) -= f * w(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::vector<AlgebraicScalar> characteristic_polynomial(const ExactMatrix& m) {
  if (!m.square()) throw Error("dimension mismatch", "characteristic polynomial needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<AlgebraicScalar> c(n + 1, AlgebraicScalar(0));
  c[n] = 1;
  const ExactMatrix id = ExactMatrix::identity(n);
  ExactMatrix mk(n, n, AlgebraicScalar(0));
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id * c[n - k + 1];
    c[n - k] = -(m * mk).trace() / AlgebraicScalar(static_cast<long>(k));
  }
  return c;
}

AlgebraicScalar evaluate(std::span<const AlgebraicScalar> poly, const AlgebraicScalar& z) {
  AlgebraicScalar acc(0);
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * z + poly[i];
  return acc;
}

}  // namespace drgkit::exactla
