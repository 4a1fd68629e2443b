#pragma once

// Truncated q-expansions q^alpha * sum_{m < prec} c_m q^m with exact rational
// alpha and coefficients, plus the classical level-one constructors used to
// assemble the hypergeometric component forms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "noncong/error.hpp"
#include "noncong/rational.hpp"

namespace noncong {

class QExp {
 public:
  QExp() = default;

  /// Known coefficients c_0..c_{prec-1}; prec = coeffs.size(). Leading zeros
  /// are absorbed into alpha unless every coefficient vanishes.
  QExp(Rational alpha, std::vector<Rational> coeffs) : alpha_(std::move(alpha)), coeffs_(std::move(coeffs)) {
    normalize();
  }

  static QExp zero(Rational alpha, std::size_t prec) { return QExp(std::move(alpha), std::vector<Rational>(prec)); }

  static QExp constant(const Rational& c, std::size_t prec) {
    std::vector<Rational> v(prec);
    if (prec > 0) v[0] = c;
    return QExp(Rational(0), std::move(v));
  }

  static QExp one(std::size_t prec) { return constant(Rational(1), prec); }

  const Rational& alpha() const { return alpha_; }
  std::size_t prec() const { return coeffs_.size(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t m) const { return coeffs_.at(m); }

  /// q-exponent through which the expansion is known (exclusive).
  Rational absolute_precision() const { return alpha_ + Rational(static_cast<long>(prec())); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
  }

  /// Coefficient of q^exponent. Exponents below alpha or off the lattice
  /// alpha + Z read as zero; exponents at or beyond the precision throw.
  Rational coefficient_at(const Rational& exponent) const {
    if (exponent >= absolute_precision())
      fail(ErrorKind::insufficient_precision, "coefficient of q^" + to_string(exponent) + " is not known");
    const Rational offset = exponent - alpha_;
    if (offset < 0 || !is_integer(offset)) return Rational(0);
    return coeffs_[offset.get_num().get_ui()];
  }

  QExp truncate(std::size_t prec) const {
    if (prec > this->prec()) fail(ErrorKind::insufficient_precision, "cannot extend precision by truncation");
    return QExp(alpha_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(prec)));
  }

  /// Multiply by q^shift.
  QExp shift(const Rational& delta) const {
    QExp out = *this;
    out.alpha_ += delta;
    return out;
  }

  /// Substitute q -> q^d (d >= 1).
  QExp substitute(int d) const {
    if (d < 1) fail(ErrorKind::invalid_argument, "substitution degree must be positive");
    if (prec() == 0) return *this;
    std::vector<Rational> v(static_cast<std::size_t>(d) * (prec() - 1) + 1);
    for (std::size_t m = 0; m < prec(); ++m) v[m * d] = coeffs_[m];
    return QExp(alpha_ * d, std::move(v));
  }

  QExp operator-() const {
    QExp out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend QExp operator+(const QExp& f, const QExp& g) { return combine(f, g, false); }
  friend QExp operator-(const QExp& f, const QExp& g) { return combine(f, g, true); }

  friend QExp operator*(const Rational& s, const QExp& f) {
    std::vector<Rational> v(f.coeffs_);
    for (auto& c : v) c *= s;
    return QExp(f.alpha_, std::move(v));
  }
  friend QExp operator*(const QExp& f, const Rational& s) { return s * f; }

  /// Relative precision of the product is min(prec f, prec g).
  friend QExp operator*(const QExp& f, const QExp& g) {
    const std::size_t p = std::min(f.prec(), g.prec());
    std::vector<Rational> v(p);
    Rational t;
    for (std::size_t i = 0; i < p; ++i) {
      if (f.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j < p; ++j) {
        if (g.coeffs_[j] == 0) continue;
        mpq_mul(t.get_mpq_t(), f.coeffs_[i].get_mpq_t(), g.coeffs_[j].get_mpq_t());
        v[i + j] += t;
      }
    }
    return QExp(f.alpha_ + g.alpha_, std::move(v));
  }

  QExp& operator+=(const QExp& g) { return *this = *this + g; }
  QExp& operator-=(const QExp& g) { return *this = *this - g; }
  QExp& operator*=(const QExp& g) { return *this = *this * g; }

  /// Multiplicative inverse; requires a nonzero leading coefficient.
  QExp inverse() const {
    if (prec() == 0 || coeffs_[0] == 0) fail(ErrorKind::non_unit, "series has no invertible leading coefficient");
    std::vector<Rational> g(prec());
    const Rational inv0 = 1 / coeffs_[0];
    g[0] = inv0;
    for (std::size_t m = 1; m < prec(); ++m) {
      Rational acc;
      for (std::size_t i = 1; i <= m; ++i)
        if (coeffs_[i] != 0) acc += coeffs_[i] * g[m - i];
      g[m] = -acc * inv0;
    }
    return QExp(-alpha_, std::move(g));
  }

  friend bool operator==(const QExp& f, const QExp& g) { return f.alpha_ == g.alpha_ && f.coeffs_ == g.coeffs_; }

 private:
  void normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
    if (first == coeffs_.end() || first == coeffs_.begin()) return;
    const auto skip = std::distance(coeffs_.begin(), first);
    coeffs_.erase(coeffs_.begin(), first);
    alpha_ += Rational(static_cast<long>(skip));
  }

  static QExp combine(const QExp& f, const QExp& g, bool subtract) {
    const Rational diff = g.alpha_ - f.alpha_;
    if (!is_integer(diff))
      fail(ErrorKind::incompatible_alpha,
           "exponents q^" + to_string(f.alpha_) + " and q^" + to_string(g.alpha_) + " differ by a non-integer");
    const Rational lo = std::min(f.alpha_, g.alpha_);
    const Rational hi_prec = std::min(f.absolute_precision(), g.absolute_precision());
    if (hi_prec <= lo) fail(ErrorKind::insufficient_precision, "sum has no known coefficients");
    const std::size_t p = Rational(hi_prec - lo).get_num().get_ui();
    std::vector<Rational> v(p);
    const std::size_t fo = Rational(f.alpha_ - lo).get_num().get_ui();
    const std::size_t go = Rational(g.alpha_ - lo).get_num().get_ui();
    for (std::size_t m = fo; m < p; ++m) v[m] = f.coeffs_[m - fo];
    for (std::size_t m = go; m < p; ++m) {
      if (subtract)
        v[m] -= g.coeffs_[m - go];
      else
        v[m] += g.coeffs_[m - go];
    }
    return QExp(lo, std::move(v));
  }

  Rational alpha_;
  std::vector<Rational> coeffs_;
};

/// A q-expansion with the weight needed by the modular derivative.
struct Weighted {
  QExp series;
  int weight = 0;
};

/// u^t for a unit series u (alpha = 0, u_0 = 1), by the power recurrence
/// m h_m = sum_{k=1}^{m} ((t+1)k - m) u_k h_{m-k}.
inline QExp unit_pow(const QExp& u, const Rational& t) {
  if (u.prec() == 0) return u;
  if (u.alpha() != 0 || u[0] != 1) fail(ErrorKind::invalid_argument, "unit_pow needs alpha = 0 and constant term 1");
  const std::size_t p = u.prec();
  std::vector<Rational> h(p);
  h[0] = 1;
  const Rational t1 = t + 1;
  for (std::size_t m = 1; m < p; ++m) {
    Rational acc;
    const Rational mm(static_cast<long>(m));
    for (std::size_t k = 1; k <= m; ++k) {
      if (u[k] == 0 || h[m - k] == 0) continue;
      acc += (t1 * Rational(static_cast<long>(k)) - mm) * u[k] * h[m - k];
    }
    h[m] = acc / mm;
  }
  return QExp(Rational(0), std::move(h));
}

/// f^t for a series with leading coefficient 1: q^{alpha t} (f q^-alpha)^t.
inline QExp rational_power(const QExp& f, const Rational& t) {
  if (f.prec() == 0 || f[0] != 1) fail(ErrorKind::invalid_argument, "rational_power needs leading coefficient 1");
  return unit_pow(f.shift(-f.alpha()), t).shift(f.alpha() * t);
}

/// prod_{m >= 1} (1 - q^m) via the pentagonal number theorem.
inline QExp euler_product(std::size_t prec) {
  std::vector<Rational> v(prec);
  for (long k = 0;; ++k) {
    const long p1 = k * (3 * k - 1) / 2;
    const long p2 = k * (3 * k + 1) / 2;
    if (p1 >= static_cast<long>(prec)) break;
    const long sign = (k % 2 == 0) ? 1 : -1;
    v[p1] += sign;
    if (k > 0 && p2 < static_cast<long>(prec)) v[p2] += sign;
  }
  return QExp(Rational(0), std::move(v));
}

/// eta^k = q^{k/24} prod (1 - q^m)^k.
inline QExp eta_power(int k, std::size_t prec) {
  if (k < 1) fail(ErrorKind::invalid_argument, "eta_power needs k >= 1");
  return unit_pow(euler_product(prec), Rational(k)).shift(make_rational(k, 24));
}

inline QExp delta(std::size_t prec) { return eta_power(24, prec); }

inline Integer divisor_power_sum(unsigned long m, unsigned long power) {
  Integer s = 0;
  for (unsigned long d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    s += ipow(Integer(d), power);
    if (d * d != m) s += ipow(Integer(m / d), power);
  }
  return s;
}

/// Normalized Eisenstein series E_2, E_4, E_6.
inline QExp eisenstein(int k, std::size_t prec) {
  long factor = 0;
  switch (k) {
    case 2: factor = -24; break;
    case 4: factor = 240; break;
    case 6: factor = -504; break;
    default: fail(ErrorKind::unsupported_weight, "eisenstein supports k in {2, 4, 6}, got " + std::to_string(k));
  }
  std::vector<Rational> v(prec);
  if (prec > 0) v[0] = 1;
  for (std::size_t m = 1; m < prec; ++m)
    v[m] = Rational(factor * divisor_power_sum(m, static_cast<unsigned long>(k - 1)));
  return QExp(Rational(0), std::move(v));
}

/// 1/j = Delta / E_4^3 = q (1 - 744 q + 356652 q^2 - ...).
inline QExp j_inverse(std::size_t prec) {
  if (prec < 1) fail(ErrorKind::insufficient_precision, "j_inverse needs prec >= 1");
  const QExp e4 = eisenstein(4, prec);
  return delta(prec) * (e4 * e4 * e4).inverse();
}

/// g(q) with 1/j = q (1 + q g(q)); prec of the result is prec - 1.
inline QExp g_series(std::size_t prec) {
  if (prec < 2) fail(ErrorKind::insufficient_precision, "g_series needs prec >= 2");
  const QExp ji = j_inverse(prec);
  std::vector<Rational> v(ji.coeffs().begin() + 1, ji.coeffs().end());
  return QExp(Rational(0), std::move(v));
}

/// D f = q df/dq - (k/12) E_2 f, raising the weight by two.
inline Weighted modular_derivative(const Weighted& f) {
  const QExp& s = f.series;
  std::vector<Rational> theta(s.prec());
  for (std::size_t m = 0; m < s.prec(); ++m) theta[m] = (s.alpha() + Rational(static_cast<long>(m))) * s[m];
  QExp out(s.alpha(), std::move(theta));
  if (f.weight != 0) out = out - make_rational(f.weight, 12) * (eisenstein(2, s.prec()) * s);
  return {out, f.weight + 2};
}

struct EvalResult {
  std::complex<double> value;
  /// Geometric estimate of the omitted tail: the largest used |c_m| times
  /// sum_{m >= terms} |q|^{alpha + m}.
  double tail_bound = 0.0;
  /// False when |q| >= 1 or the tail estimate exceeds the requested tolerance.
  bool reliable = true;
};

/// Floating-point value of sum_{m < terms} c_m exp(2 pi i (alpha + m) tau).
inline EvalResult eval_at_tau(const QExp& f, std::complex<double> tau, std::size_t terms, double tolerance = 1e-10) {
  if (tau.imag() <= 0) fail(ErrorKind::invalid_argument, "tau must lie in the upper half-plane");
  if (terms > f.prec()) fail(ErrorKind::insufficient_precision, "requested more terms than known");
  using namespace std::complex_literals;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double alpha = f.alpha().get_d();
  const double qabs = std::exp(-two_pi * tau.imag());
  EvalResult out;
  double cmax = 0.0;
  for (std::size_t m = 0; m < terms; ++m) {
    if (f[m] == 0) continue;
    const double c = f[m].get_d();
    cmax = std::max(cmax, std::abs(c));
    out.value += c * std::exp(two_pi * 1i * (alpha + static_cast<double>(m)) * tau);
  }
  if (qabs >= 1.0) {
    out.tail_bound = INFINITY;
    out.reliable = false;
  } else {
    out.tail_bound = cmax * std::pow(qabs, alpha + static_cast<double>(terms)) / (1.0 - qabs);
    out.reliable = out.tail_bound <= tolerance;
  }
  return out;
}

/// One row per nonzero term: exponent_num,exponent_den,coeff_num,coeff_den.
inline void write_csv(std::ostream& os, const QExp& f, bool header = true) {
  if (header) os << "exponent_num,exponent_den,coeff_num,coeff_den\n";
  for (std::size_t m = 0; m < f.prec(); ++m) {
    if (f[m] == 0) continue;
    const Rational e = f.alpha() + Rational(static_cast<long>(m));
    os << e.get_num().get_str() << ',' << e.get_den().get_str() << ',' << f[m].get_num().get_str() << ','
       << f[m].get_den().get_str() << '\n';
  }
}

}  // namespace noncong
