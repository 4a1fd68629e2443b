#pragma once

// Minimal-weight component forms eta^{2k0} K^s pFq(...; K), K = 1728/j,
// assembled two independent ways, and their normalized integer coefficients.

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noncong/error.hpp"
#include "noncong/grouprep.hpp"
#include "noncong/qseries.hpp"
#include "noncong/rational.hpp"

namespace noncong {

struct HypergeomParams {
  std::vector<Rational> upper;
  std::vector<Rational> lower;

  void validate() const {
    for (const auto& b : lower)
      if (is_integer(b) && b <= 0)
        fail(ErrorKind::pole, "lower parameter " + to_string(b) + " is a non-positive integer");
  }
};

/// Bare pFq coefficients: c_0 = 1, c_{m+1} = c_m prod(upper + m) / prod(lower + m) / (m + 1).
inline std::vector<Rational> hypergeom_coeffs(const HypergeomParams& p, std::size_t count) {
  p.validate();
  std::vector<Rational> c;
  c.reserve(count);
  if (count == 0) return c;
  c.emplace_back(1);
  for (std::size_t m = 0; m + 1 < count; ++m) {
    const Rational mm(static_cast<long>(m));
    Rational next = c.back();
    for (const auto& a : p.upper) next *= a + mm;
    for (const auto& b : p.lower) next /= b + mm;
    next /= Rational(static_cast<long>(m + 1));
    c.push_back(std::move(next));
  }
  return c;
}

/// Dense view of a q-expansion in q_N = q^{1/N}: coefficient of q_N^k for
/// first_exponent <= k < limit.
struct QNView {
  int N = 1;
  long first_exponent = 0;
  std::vector<Rational> coeffs;

  long limit() const { return first_exponent + static_cast<long>(coeffs.size()); }

  Rational coefficient(long k) const {
    if (k >= limit())
      fail(ErrorKind::insufficient_precision, "q_N coefficient " + std::to_string(k) + " beyond known range");
    if (k < first_exponent) return Rational(0);
    return coeffs[static_cast<std::size_t>(k - first_exponent)];
  }
};

inline QNView qn_view(const QExp& f, int N) {
  const Rational scaled = f.alpha() * N;
  if (!is_integer(scaled)) fail(ErrorKind::invalid_argument, "alpha is not a multiple of 1/" + std::to_string(N));
  QNView v;
  v.N = N;
  v.first_exponent = to_int64(scaled.get_num());
  // off-lattice exponents below the absolute precision are known zeros
  v.coeffs.assign(static_cast<std::size_t>(N) * f.prec(), Rational(0));
  for (std::size_t m = 0; m < f.prec(); ++m) v.coeffs[m * static_cast<std::size_t>(N)] = f[m];
  return v;
}

struct ComponentExpansion {
  CharacterData chi;
  int index = 1;
  QExp series;
  QNView qN_view;
};

namespace detail {

inline void require_prec(std::size_t prec) {
  if (prec < 1) fail(ErrorKind::insufficient_precision, "need at least one term");
}

/// The three 3F2 parameter sets of the minimal-weight vector: for shift s and
/// the other two shifts o1, o2: (s, s+1/3, s+2/3; s-o1+1, s-o2+1).
inline HypergeomParams component_params(const ExponentData& d, int index) {
  const Rational& s = d.shift(index);
  std::vector<Rational> others;
  for (int i = 1; i <= 3; ++i)
    if (i != index) others.push_back(d.shift(i));
  return {{s, s + make_rational(1, 3), s + make_rational(2, 3)},
          {s - others[0] + 1, s - others[1] + 1}};
}

inline Integer range_product(long lo, long hi, auto&& term) {
  Integer p = 1;
  for (long i = lo; i <= hi; ++i) p *= term(i);
  return p;
}

}  // namespace detail

/// Coefficients C_m of j^{-m} in the bracketed series of component `index`,
/// written as explicit products (empty products are 1).
inline std::vector<Rational> product_form_coeffs(const CharacterData& chi, int index, std::size_t count) {
  const ExponentData d = exponent_data(chi);
  const long n = chi.n, r = chi.r, e = d.e;
  std::vector<Rational> c;
  c.reserve(count);
  if (count == 0) return c;
  c.emplace_back(1);
  for (std::size_t mu = 1; mu < count; ++mu) {
    const long m = static_cast<long>(mu);
    Integer num, den;
    switch (index) {
      case 1:
        num = Integer((e - 1) * n + 3 * r) * ipow(Integer(2), 8 * mu) *
              detail::range_product(2 * m + e, 3 * m + e - 2, [&](long i) { return Integer(i * n + 3 * r); });
        den = factorial(mu) * ipow(Integer(n), mu);
        break;
      case 2:
        num = -Integer((e - 1) * n + 3 * r) * ipow(Integer(2), 6 * mu) *
              detail::range_product(m + 1, 3 * m - 1, [&](long i) { return Integer((2 * i + 1 - e) * n - 3 * r); });
        den = factorial(2 * mu) * ipow(Integer(n), 2 * mu);
        break;
      case 3:
        num = ipow(Integer(2), 6 * mu) *
              detail::range_product(m, 3 * m - 1, [&](long i) { return Integer((2 * i + 4 - e) * n - 3 * r); });
        den = factorial(2 * mu + 1) * ipow(Integer(n), 2 * mu);
        break;
      default: fail(ErrorKind::invalid_argument, "component index must be 1, 2 or 3");
    }
    c.push_back(make_rational(num, den));
  }
  return c;
}

/// Monic eta^{eta_k} K^{shift} pFq(params; K) to `prec` integer-step terms,
/// with K = 1728/j evaluated by Horner's rule. The constant 1728^shift is
/// dropped so every coefficient stays rational.
inline QExp hypergeometric_form(int eta_k, const Rational& shift, const HypergeomParams& params, std::size_t prec) {
  detail::require_prec(prec);
  const auto c = hypergeom_coeffs(params, prec);
  const QExp k_series = Rational(1728) * j_inverse(prec);
  QExp acc = QExp::constant(c[prec - 1], prec);
  for (std::size_t m = prec - 1; m-- > 0;) acc = QExp::constant(c[m], prec) + k_series * acc;
  const QExp unit = make_rational(1, 1728) * k_series.shift(Rational(-1));
  const QExp k_pow = unit_pow(unit, shift).shift(shift);
  return eta_power(eta_k, prec) * k_pow * acc;
}

/// Eq.-style assembly: eta^{2k0} K^s 3F2(...; K), monic.
inline QExp component_hypergeometric(const CharacterData& chi, int index, std::size_t prec) {
  const ExponentData d = exponent_data(chi);
  return hypergeometric_form(2 * d.k0, d.shift(index), detail::component_params(d, index), prec);
}

/// Product-form assembly: eta^{2k0} j^{-s} (1 + sum_m C_m j^{-m}) with C_m
/// from product_form_coeffs and powers of 1/j accumulated directly.
inline QExp component_product_form(const CharacterData& chi, int index, std::size_t prec) {
  detail::require_prec(prec);
  const ExponentData d = exponent_data(chi);
  const auto c = product_form_coeffs(chi, index, prec);
  const QExp ji = j_inverse(prec);
  const QExp unit = ji.shift(Rational(-1));
  QExp bracket = QExp::one(prec);
  QExp power = QExp::one(prec);
  for (std::size_t m = 1; m < prec; ++m) {
    power = (power * ji).truncate(prec - m);
    bracket += c[m] * power;
  }
  const QExp j_pow = unit_pow(unit, d.shift(index)).shift(d.shift(index));
  return eta_power(2 * d.k0, prec) * j_pow * bracket;
}

/// Component `index` of the minimal-weight vector-valued form for chi.
/// Both assemblies are computed and must agree exactly.
inline ComponentExpansion component(const CharacterData& chi, int index, std::size_t prec) {
  if (index < 1 || index > 3) fail(ErrorKind::invalid_argument, "component index must be 1, 2 or 3");
  detail::require_prec(prec);
  QExp via_pfq = component_hypergeometric(chi, index, prec);
  const QExp via_products = component_product_form(chi, index, prec);
  if (!(via_pfq == via_products))
    throw std::logic_error("component assemblies disagree for (" + std::to_string(chi.n) + "," +
                           std::to_string(chi.r) + "," + std::to_string(chi.eps) + ") index " +
                           std::to_string(index));
  if (via_pfq[0] != 1) throw std::logic_error("component is not monic");
  QNView view = qn_view(via_pfq, chi.root_modulus());
  return {chi, index, std::move(via_pfq), std::move(view)};
}

struct BasisForm {
  int r = 0;
  int reduced_n = 0;
  int reduced_r = 0;
  ComponentExpansion form;
};

/// eta^4 K^{t-2/3} 3F2(t-2/3, t-1/3, t; 3t/2, 3t/2-1/2; K) with t = r/n.
inline QExp basis_form_series(int n, int r, std::size_t prec) {
  const Rational t = make_rational(r, n);
  const Rational w = make_rational(3 * r, 2 * n);
  HypergeomParams params{{t - make_rational(2, 3), t - make_rational(1, 3), t}, {w, w - make_rational(1, 2)}};
  return hypergeometric_form(4, t - make_rational(2, 3), params, prec);
}

/// Weight-2 cusp forms eta^4 K^{r/n-2/3} 3F2(r/n-2/3, r/n-1/3, r/n; 3r/2n, 3r/2n-1/2; K)
/// for r = (n+1)/2 .. n-1. The form depends on r/n only; when gcd(n, r) > 1
/// it is built on the reduced pair, recorded in reduced_n / reduced_r, and its
/// q_N view still uses N = 2n.
inline std::vector<BasisForm> weight2_basis(int n, std::size_t prec) {
  if (n < 1) fail(ErrorKind::invalid_argument, "n must be positive");
  if (n % 2 == 0) fail(ErrorKind::parity, "weight2_basis needs odd n, got " + std::to_string(n));
  if (is_reducible(n)) fail(ErrorKind::reducible_representation, "n divides 3 (n = " + std::to_string(n) + ")");
  detail::require_prec(prec);
  std::vector<BasisForm> out;
  for (int r = (n + 1) / 2; r <= n - 1; ++r) {
    const int g = std::gcd(n, r);
    QExp series = basis_form_series(n, r, prec);
    QNView view = qn_view(series, 2 * n);
    const CharacterData reduced{n / g, r / g, -1};
    out.push_back({r, n / g, r / g, ComponentExpansion{reduced, 1, std::move(series), std::move(view)}});
  }
  return out;
}

enum class CoeffKind { a, b, c };

inline char to_char(CoeffKind k) { return "abc"[static_cast<int>(k)]; }

inline CoeffKind kind_for_index(int index) {
  if (index < 1 || index > 3) fail(ErrorKind::invalid_argument, "component index must be 1, 2 or 3");
  return static_cast<CoeffKind>(index - 1);
}

/// n^m m! for a; n^{2m} (2m)! for b; n^{2m} (2m+1)! for c.
inline Integer kind_scale(CoeffKind kind, long n, unsigned long m) {
  switch (kind) {
    case CoeffKind::a: return ipow(Integer(n), m) * factorial(m);
    case CoeffKind::b: return ipow(Integer(n), 2 * m) * factorial(2 * m);
    case CoeffKind::c: return ipow(Integer(n), 2 * m) * factorial(2 * m + 1);
  }
  return 0;
}

struct NormalizedCoeffs {
  CoeffKind kind = CoeffKind::a;
  CharacterData chi;
  std::vector<Integer> values;      // index m = 0..M
  std::vector<Rational> unscaled;   // coefficient of q^{shift + m} in f / eta^{2k0}
};

/// Integers a_m, b_m or c_m (m = 0..M) of component `index` of chi.
inline NormalizedCoeffs normalized_coeffs(const CharacterData& chi, int index, std::size_t M) {
  const ExponentData d = exponent_data(chi);
  const auto comp = component(chi, index, M + 1);
  const QExp quotient = comp.series * eta_power(2 * d.k0, M + 1).inverse();
  if (quotient.alpha() != d.shift(index)) throw std::logic_error("quotient has unexpected leading exponent");
  NormalizedCoeffs out;
  out.kind = kind_for_index(index);
  out.chi = chi;
  for (std::size_t m = 0; m <= M; ++m) {
    const Rational scaled = quotient[m] * Rational(kind_scale(out.kind, chi.n, m));
    if (!is_integer(scaled))
      fail(ErrorKind::integrality_violation, std::string("coefficient ") + to_char(out.kind) + "_" +
                                                 std::to_string(m) + " = " + to_string(scaled) + " is not an integer");
    out.values.push_back(scaled.get_num());
    out.unscaled.push_back(quotient[m]);
  }
  return out;
}

}  // namespace noncong
