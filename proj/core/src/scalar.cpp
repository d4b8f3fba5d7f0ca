#include "drgkit/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "drgkit/error.hpp"

namespace drgkit {

namespace {

constexpr std::string_view kRoot = "\xE2\x88\x9A";  // U+221A

int rsign(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

// sign(a + b*sqrt(d)) for d square-free, exact.
int surd_sign(const Rational& a, const Rational& b, std::int64_t d) {
  const int sa = rsign(a);
  const int sb = d == 0 ? 0 : rsign(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational t = a * a - b * b * Rational(d);
  const int st = rsign(t);
  if (st > 0) return sa;
  if (st < 0) return sb;
  return 0;
}

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw Error("parse", "empty rational");
  Rational r;
  if (r.set_str(std::string(s), 10) != 0) throw Error("parse", "bad rational '" + std::string(s) + "'");
  if (r.get_den() == 0) throw Error("parse", "zero denominator in '" + std::string(s) + "'");
  r.canonicalize();
  return r;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> square_free_split(std::int64_t d) {
  if (d < 0) throw Error("domain", "negative radicand " + std::to_string(d));
  std::int64_t rest = d;
  std::int64_t mult = 1;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      mult *= p;
    }
  }
  return {rest, mult};
}

AlgebraicScalar AlgebraicScalar::surd(Rational a, Rational b, std::int64_t d) {
  AlgebraicScalar x;
  a.canonicalize();
  b.canonicalize();
  auto [free, mult] = square_free_split(d);
  x.a_ = std::move(a);
  x.b_ = b * Rational(mult);
  x.d_ = free;
  x.normalize();
  return x;
}

AlgebraicScalar AlgebraicScalar::approx(double v) {
  AlgebraicScalar x;
  x.exact_ = false;
  x.approx_ = v;
  return x;
}

void AlgebraicScalar::normalize() {
  if (!exact_) return;
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
  if (d_ == 0 || b_ == 0) {
    b_ = 0;
    d_ = 0;
  }
}

double AlgebraicScalar::to_double() const {
  if (!exact_) return approx_;
  double v = a_.get_d();
  if (d_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

int AlgebraicScalar::sign() const {
  if (!exact_) return (approx_ > 0) - (approx_ < 0);
  return surd_sign(a_, b_, d_);
}

AlgebraicScalar AlgebraicScalar::conjugate() const {
  AlgebraicScalar x = *this;
  if (exact_) x.b_ = -x.b_;
  return x;
}

std::int64_t AlgebraicScalar::common_radicand(const AlgebraicScalar& o) const {
  if (d_ == 0) return o.d_;
  if (o.d_ == 0 || o.d_ == d_) return d_;
  throw Error("field mismatch",
              "cannot combine Q(" + std::string(kRoot) + std::to_string(d_) + ") with Q(" +
                  std::string(kRoot) + std::to_string(o.d_) + ")");
}

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
  if (!exact_ || !o.exact_) return *this = approx(to_double() + o.to_double());
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) {
  if (!exact_ || !o.exact_) return *this = approx(to_double() - o.to_double());
  d_ = common_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
  if (!exact_ || !o.exact_) return *this = approx(to_double() * o.to_double());
  const std::int64_t d = common_radicand(o);
  Rational na = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = d;
  normalize();
  return *this;
}

AlgebraicScalar& AlgebraicScalar::operator/=(const AlgebraicScalar& o) {
  if (!exact_ || !o.exact_) {
    if (o.to_double() == 0.0) throw Error("division by zero", "");
    return *this = approx(to_double() / o.to_double());
  }
  if (o.is_zero()) throw Error("division by zero", "");
  const std::int64_t d = common_radicand(o);
  Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * Rational(d);
  Rational na = (a_ * o.a_ - b_ * o.b_ * Rational(d)) / norm;
  Rational nb = (b_ * o.a_ - a_ * o.b_) / norm;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = d;
  normalize();
  return *this;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
  AlgebraicScalar x = *this;
  if (exact_) {
    x.a_ = -x.a_;
    x.b_ = -x.b_;
  } else {
    x.approx_ = -x.approx_;
  }
  return x;
}

std::strong_ordering operator<=>(const AlgebraicScalar& x, const AlgebraicScalar& y) {
  int s = 0;
  if (!x.exact_ || !y.exact_) {
    const double dx = x.to_double();
    const double dy = y.to_double();
    s = (dx > dy) - (dx < dy);
  } else if (x.d_ == y.d_ || x.d_ == 0 || y.d_ == 0) {
    const std::int64_t d = x.d_ == 0 ? y.d_ : x.d_;
    s = surd_sign(x.a_ - y.a_, x.b_ - y.b_, d);
  } else {
    // sign(u + v), u = (a1 - a2) + b1 sqrt(d1), v = -b2 sqrt(d2).
    const Rational alpha = x.a_ - y.a_;
    const int su = surd_sign(alpha, x.b_, x.d_);
    const int sv = -rsign(y.b_);
    if (sv == 0 || su == sv) {
      s = su;
    } else if (su == 0) {
      s = sv;
    } else {
      const Rational rest = alpha * alpha + x.b_ * x.b_ * Rational(x.d_) -
                            y.b_ * y.b_ * Rational(y.d_);
      const int st = surd_sign(rest, 2 * alpha * x.b_, x.d_);
      s = st > 0 ? su : (st < 0 ? sv : 0);
    }
  }
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool operator==(const AlgebraicScalar& x, const AlgebraicScalar& y) {
  if (x.exact_ && y.exact_) return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  return x.to_double() == y.to_double();
}

bool same_value(const AlgebraicScalar& x, const AlgebraicScalar& y, double tol) {
  if (x.exact() && y.exact()) return x == y;
  return std::fabs(x.to_double() - y.to_double()) < tol;
}

std::string AlgebraicScalar::str() const {
  if (!exact_) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", approx_);
    return buf;
  }
  if (d_ == 0) return a_.get_str();
  Rational mag = abs(b_);
  std::string root = (mag == 1 ? std::string() : mag.get_str()) + std::string(kRoot) + std::to_string(d_);
  if (a_ == 0) return (rsign(b_) < 0 ? "-" : "") + root;
  return a_.get_str() + (rsign(b_) < 0 ? " - " : " + ") + root;
}

AlgebraicScalar AlgebraicScalar::parse(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw Error("parse", "empty scalar");
  const auto root = s.find(kRoot);
  if (root == std::string::npos) {
    if (s.find_first_of(".eEn") != std::string::npos) {
      try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw Error("parse", "bad number '" + s + "'");
        return approx(v);
      } catch (const std::logic_error&) {
        throw Error("parse", "bad number '" + s + "'");
      }
    }
    return AlgebraicScalar(parse_rational(s));
  }
  const std::string radicand = s.substr(root + kRoot.size());
  if (radicand.empty() || radicand.find_first_not_of("0123456789") != std::string::npos)
    throw Error("parse", "bad radicand in '" + s + "'");
  const std::string head = s.substr(0, root);
  std::size_t split = std::string::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      split = i;
      break;
    }
  }
  Rational a = 0;
  std::string coeff = head;
  if (split != std::string::npos) {
    a = parse_rational(head.substr(0, split));
    coeff = head.substr(split);
  }
  if (!coeff.empty() && coeff[0] == '+') coeff.erase(0, 1);
  Rational b;
  if (coeff.empty()) {
    b = 1;
  } else if (coeff == "-") {
    b = -1;
  } else {
    b = parse_rational(coeff);
  }
  return surd(a, b, std::stoll(radicand));
}

std::ostream& operator<<(std::ostream& os, const AlgebraicScalar& x) { return os << x.str(); }

}  // namespace drgkit
