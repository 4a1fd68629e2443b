#pragma once

// Finite fields F_{p^k}, point counts on y^2 = x^n + 64, zeta numerators,
// and Gauss/Jacobi sums in double precision.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noncong/error.hpp"
#include "noncong/rational.hpp"

namespace noncong {

namespace detail::fp {

// Polynomials over F_p, coefficients low to high, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

inline Poly rem(Poly a, const Poly& m, std::uint64_t p) {
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t f = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - f * m[i] % p) % p;
    trim(a);
  }
  return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = rem(std::move(a), b, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    const auto inv = inv_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = rem(std::move(base), m, p);
  while (e) {
    if (e & 1) r = rem(mul(r, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

/// Rabin's test for a monic f of degree k.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  const Poly x{0, 1};
  auto frob = [&](std::size_t times) {
    Poly h = x;
    for (std::size_t i = 0; i < times; ++i) h = powmod(h, p, f, p);
    return h;
  };
  if (sub(frob(k), x, p) != Poly{} ) return false;
  for (auto l : prime_factors(k)) {
    const Poly g = gcd(f, sub(frob(k / l), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail::fp

/// F_{p^k} given by a monic irreducible modulus (coefficients low to high).
struct FieldSpec {
  std::uint64_t p = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus;

  std::uint64_t order() const {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= p;
    return q;
  }

  bool operator==(const FieldSpec&) const = default;
};

/// Deterministic choice: the monic irreducible of degree k whose lower
/// coefficients, read as base-p digits c_0 + c_1 p + ..., give the smallest integer.
inline FieldSpec make_field_spec(std::uint64_t p, unsigned k) {
  if (!is_prime(p)) fail(ErrorKind::invalid_argument, "field characteristic must be prime");
  if (k < 1) fail(ErrorKind::invalid_argument, "extension degree must be >= 1");
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (count > (1ULL << 32) / p) fail(ErrorKind::precondition, "field too large");
    count *= p;
  }
  for (std::uint64_t code = 0; code < count; ++code) {
    detail::fp::Poly f(k + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < k; ++i, c /= p) f[i] = c % p;
    f[k] = 1;
    if (k > 1 && f[0] == 0) continue;
    if (detail::fp::is_irreducible(f, p)) return {p, k, f};
  }
  fail(ErrorKind::precondition, "no irreducible polynomial found");
}

/// Elements are encoded as integers sum d_i p^i for the polynomial basis
/// 1, a, ..., a^{k-1}; multiplication goes through discrete-log tables over the
/// smallest generator in that encoding.
class FiniteField {
 public:
  using Element = std::uint32_t;
  static constexpr std::uint64_t max_elements = 10'000'000;

  explicit FiniteField(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.order()) {
    if (q_ > max_elements)
      fail(ErrorKind::precondition, "field of order " + std::to_string(q_) + " exceeds the enumeration budget");
    find_generator();
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Element x = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = mul_slow(x, generator_);
    }
    if (x != 1) throw std::logic_error("generator order mismatch");
    build_traces();
  }

  const FieldSpec& spec() const { return spec_; }
  std::uint64_t order() const { return q_; }
  std::uint64_t characteristic() const { return spec_.p; }
  Element generator() const { return generator_; }

  std::vector<std::uint64_t> digits(Element a) const {
    std::vector<std::uint64_t> d(spec_.k, 0);
    for (unsigned i = 0; i < spec_.k; ++i, a /= static_cast<Element>(spec_.p)) d[i] = a % spec_.p;
    return d;
  }

  Element encode(const std::vector<std::uint64_t>& d) const {
    std::uint64_t code = 0;
    for (std::size_t i = d.size(); i-- > 0;) code = code * spec_.p + d[i];
    return static_cast<Element>(code);
  }

  Element add(Element a, Element b) const {
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < spec_.k; ++i) da[i] = (da[i] + db[i]) % spec_.p;
    return encode(da);
  }

  Element neg(Element a) const {
    auto d = digits(a);
    for (auto& c : d) c = (spec_.p - c) % spec_.p;
    return encode(d);
  }

  /// a + c for c in the prime field.
  Element add_scalar(Element a, std::uint64_t c) const {
    const Element low = a % static_cast<Element>(spec_.p);
    return a - low + static_cast<Element>((low + c) % spec_.p);
  }

  Element mul(Element a, Element b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1)];
  }

  Element pow(Element a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1)];
  }

  /// Discrete log to the base generator(); a != 0.
  std::uint32_t log(Element a) const {
    if (a == 0) fail(ErrorKind::invalid_argument, "log of zero");
    return log_[a];
  }

  /// Multiplication straight from the modulus, independent of the tables.
  Element mul_slow(Element a, Element b) const {
    auto pa = digits(a), pb = digits(b);
    detail::fp::trim(pa);
    detail::fp::trim(pb);
    auto r = detail::fp::rem(detail::fp::mul(pa, pb, spec_.p), spec_.modulus, spec_.p);
    r.resize(spec_.k, 0);
    return encode(r);
  }

  Element pow_slow(Element a, std::uint64_t e) const {
    Element r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Absolute trace to F_p, linear in the digits.
  std::uint64_t trace(Element a) const {
    const auto d = digits(a);
    std::uint64_t t = 0;
    for (unsigned i = 0; i < spec_.k; ++i) t = (t + d[i] * basis_trace_[i]) % spec_.p;
    return t;
  }

  /// Quadratic character with kappa(0) = 0.
  int quadratic_character(Element a) const {
    if (a == 0) return 0;
    return log_[a] % 2 == 0 ? 1 : -1;
  }

 private:
  void find_generator() {
    const auto factors = detail::fp::prime_factors(q_ - 1);
    for (Element g = 1; g < q_; ++g) {
      if (q_ == 2 || std::all_of(factors.begin(), factors.end(),
                                 [&](auto l) { return pow_slow(g, (q_ - 1) / l) != 1; })) {
        generator_ = g;
        return;
      }
    }
    throw std::logic_error("no generator");
  }

  void build_traces() {
    basis_trace_.assign(spec_.k, 0);
    for (unsigned i = 0; i < spec_.k; ++i) {
      std::vector<std::uint64_t> d(spec_.k, 0);
      d[i] = 1;
      Element x = encode(d);
      Element sum = 0;
      for (unsigned j = 0; j < spec_.k; ++j) {
        sum = add(sum, x);
        x = pow(x, spec_.p);
      }
      const auto sd = digits(sum);
      if (std::any_of(sd.begin() + 1, sd.end(), [](auto c) { return c != 0; }))
        throw std::logic_error("trace left the prime field");
      basis_trace_[i] = sd[0];
    }
  }

  FieldSpec spec_;
  std::uint64_t q_;
  Element generator_ = 1;
  std::vector<Element> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint64_t> basis_trace_;
};

struct PointCount {
  FieldSpec field;
  std::int64_t affine = 0;
  std::int64_t projective = 0;
};

namespace detail {

inline void require_good_reduction(int n, std::uint64_t p) {
  if (n < 1 || n % 2 == 0) fail(ErrorKind::parity, "curve counting needs odd n, got " + std::to_string(n));
  if (p == 2 || n % static_cast<std::int64_t>(p) == 0)
    fail(ErrorKind::bad_reduction, "p = " + std::to_string(p) + " divides 2n");
  // x^n + 64 squarefree mod p
  fp::Poly f(static_cast<std::size_t>(n) + 1, 0);
  f[0] = 64 % p;
  f[static_cast<std::size_t>(n)] = 1;
  fp::Poly df(static_cast<std::size_t>(n), 0);
  df[static_cast<std::size_t>(n) - 1] = static_cast<std::uint64_t>(n) % p;
  fp::trim(f);
  fp::trim(df);
  if (df.empty() || fp::gcd(f, df, p).size() != 1)
    fail(ErrorKind::bad_reduction, "x^n + 64 is not squarefree mod " + std::to_string(p));
}

}  // namespace detail

/// Affine solutions of y^2 = x^n + 64 from a table of squares, using only
/// multiplication from the modulus.
inline std::int64_t count_affine_naive(int n, const FiniteField& F) {
  std::vector<std::uint32_t> square_count(F.order(), 0);
  for (FiniteField::Element y = 0; y < F.order(); ++y) ++square_count[F.mul_slow(y, y)];
  std::int64_t total = 0;
  for (FiniteField::Element x = 0; x < F.order(); ++x)
    total += square_count[F.add_scalar(F.pow_slow(x, static_cast<std::uint64_t>(n)), 64 % F.characteristic())];
  return total;
}

/// Affine count sum_x (1 + kappa(x^n + 64)).
inline std::int64_t count_affine_character(int n, const FiniteField& F) {
  const std::uint64_t c = 64 % F.characteristic();
  std::int64_t total = 0;
  for (FiniteField::Element x = 0; x < F.order(); ++x)
    total += 1 + F.quadratic_character(F.add_scalar(F.pow(x, static_cast<std::uint64_t>(n)), c));
  return total;
}

inline constexpr std::uint64_t naive_crosscheck_limit = 10'000;

/// Points on the smooth model of y^2 = x^n + 64 over F; one point at infinity for odd n.
inline PointCount count_points(int n, const FiniteField& F) {
  detail::require_good_reduction(n, F.characteristic());
  const std::int64_t affine = count_affine_character(n, F);
  if (F.order() <= naive_crosscheck_limit && count_affine_naive(n, F) != affine)
    fail(ErrorKind::inconsistent_counts, "character-sum and naive counts disagree");
  return {F.spec(), affine, affine + 1};
}

inline PointCount count_points(int n, const FieldSpec& spec) {
  detail::require_good_reduction(n, spec.p);
  return count_points(n, FiniteField(spec));
}

struct LPoly {
  std::vector<Integer> coefficients;  // c_0 = 1, c_1 T, ...

  std::size_t degree() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  bool operator==(const LPoly& o) const { return coefficients == o.coefficients; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
      const auto& c = coefficients[i];
      if (c == 0 && !(i == 0 && coefficients.size() == 1)) continue;
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      const Integer a = abs(c);
      if (i == 0 || a != 1) s += a.get_str();
      if (i >= 1) s += "T";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }
};

/// L(T) of genus (n-1)/2 over F_q from counts N_i over F_{q^i}, i = 1..g (or more).
/// Power sums s_i = q^i + 1 - N_i give the low coefficients by Newton's
/// identities; the functional equation c_{2g-k} = q^{g-k} c_k supplies the rest.
/// Counts beyond g are checked against the completed polynomial.
inline LPoly zeta_numerator(int n, std::uint64_t q, const std::vector<std::int64_t>& counts) {
  if (n < 1 || n % 2 == 0) fail(ErrorKind::parity, "zeta numerator needs odd n");
  const std::size_t g = static_cast<std::size_t>(n - 1) / 2;
  if (counts.size() < g)
    fail(ErrorKind::precondition, "need " + std::to_string(g) + " counts, got " + std::to_string(counts.size()));
  const Integer Q(static_cast<unsigned long>(q));
  auto power_sum = [&](std::size_t i) -> Integer { return ipow(Q, i) + 1 - Integer(static_cast<long>(counts[i - 1])); };

  // e_k: elementary symmetric functions of the reciprocal roots
  std::vector<Integer> e(g + 1);
  e[0] = 1;
  for (std::size_t k = 1; k <= g; ++k) {
    Integer acc = 0;
    for (std::size_t i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[k - i] * power_sum(i);
    if (acc % static_cast<unsigned long>(k) != 0)
      fail(ErrorKind::inconsistent_counts, "Newton identity gives a non-integer coefficient");
    e[k] = acc / static_cast<unsigned long>(k);
  }
  LPoly L;
  L.coefficients.assign(2 * g + 1, 0);
  for (std::size_t k = 0; k <= g; ++k) L.coefficients[k] = (k % 2 == 0 ? 1 : -1) * e[k];
  for (std::size_t k = 0; k < g; ++k) L.coefficients[2 * g - k] = ipow(Q, g - k) * L.coefficients[k];

  if (counts.size() > g) {
    // full power sums of the completed polynomial
    std::vector<Integer> ee(2 * g + 1);
    for (std::size_t k = 0; k <= 2 * g; ++k) ee[k] = (k % 2 == 0 ? 1 : -1) * L.coefficients[k];
    std::vector<Integer> s(counts.size() + 1, 0);
    for (std::size_t m = 1; m <= counts.size(); ++m) {
      Integer acc = m <= 2 * g ? Integer(static_cast<long>(m)) * ee[m] * (m % 2 == 1 ? 1 : -1) : Integer(0);
      for (std::size_t i = 1; i < m; ++i)
        if (m - i <= 2 * g) {
          const Integer term = ee[m - i] * s[i];
          if ((m - i) % 2 == 1) acc += term;
          else acc -= term;
        }
      // s_m = sum_{i=1}^{m-1} (-1)^{m-i-1} e_{m-i} s_i + (-1)^{m-1} m e_m
      s[m] = acc;
      if (s[m] != power_sum(m))
        fail(ErrorKind::inconsistent_counts, "count over degree " + std::to_string(m) + " contradicts the completion");
    }
  }
  return L;
}

/// (1 + pT^2)^{(n-1)/2}, valid for p = -1 mod n.
inline LPoly predicted_lpoly(int n, std::uint64_t p) {
  if (n < 1 || n % 2 == 0) fail(ErrorKind::parity, "needs odd n");
  if (p < 3 || !is_prime(p)) fail(ErrorKind::invalid_argument, "p must be an odd prime");
  if ((p + 1) % static_cast<std::uint64_t>(n) != 0)
    fail(ErrorKind::inapplicable_prime, std::to_string(p) + " is not -1 mod " + std::to_string(n));
  detail::require_good_reduction(n, p);
  const unsigned long g = static_cast<unsigned long>(n - 1) / 2;
  LPoly L;
  L.coefficients.assign(2 * g + 1, 0);
  for (unsigned long i = 0; i <= g; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), g, i);
    L.coefficients[2 * i] = binom * ipow(Integer(static_cast<unsigned long>(p)), i);
  }
  return L;
}

/// Counts over F_{p^{d i}}, i = 1..g, then the zeta numerator over F_{p^d}.
inline LPoly zeta_from_counts(int n, std::uint64_t p, unsigned base_degree = 1) {
  detail::require_good_reduction(n, p);
  const unsigned g = static_cast<unsigned>(n - 1) / 2;
  std::vector<std::int64_t> counts;
  for (unsigned i = 1; i <= g; ++i) counts.push_back(count_points(n, make_field_spec(p, base_degree * i)).projective);
  std::uint64_t q = 1;
  for (unsigned i = 0; i < base_degree; ++i) q *= p;
  return zeta_numerator(n, q, counts);
}

namespace detail {

using QPoly = std::vector<Rational>;  // low to high

inline void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline QPoly rem(QPoly a, const QPoly& b) {
  trim(a);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline QPoly divide_exact(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  QPoly out(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    out[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return out;
}

inline QPoly squarefree_part(const QPoly& f) {
  QPoly df;
  for (std::size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * Rational(static_cast<long>(i)));
  trim(df);
  if (df.empty()) return f;
  QPoly a = f, b = df;
  while (!b.empty()) {
    a = rem(a, b);
    std::swap(a, b);
  }
  return divide_exact(f, a);
}

/// Durand-Kerner on a squarefree polynomial.
inline std::vector<std::complex<double>> polynomial_roots(const QPoly& f) {
  const std::size_t d = f.size() - 1;
  std::vector<std::complex<double>> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = Rational(f[i] / f[d]).get_d();
  auto eval = [&](std::complex<double> z) {
    std::complex<double> v = 0;
    for (std::size_t i = d + 1; i-- > 0;) v = v * z + c[i];
    return v;
  };
  double radius = 1;
  for (std::size_t i = 0; i < d; ++i) radius = std::max(radius, 1 + std::abs(c[i]));
  std::vector<std::complex<double>> z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = std::polar(radius * 0.9, 2 * std::numbers::pi * (i + 0.25) / d);
  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::complex<double> den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != i) den *= z[i] - z[j];
      const auto step = eval(z[i]) / den;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * radius) break;
  }
  return z;
}

}  // namespace detail

/// Reciprocal roots of L(T) (roots of T^{deg} L(1/T)), each listed once.
inline std::vector<std::complex<double>> reciprocal_roots(const LPoly& L) {
  detail::QPoly rev;
  for (std::size_t i = L.coefficients.size(); i-- > 0;) rev.emplace_back(L.coefficients[i]);
  detail::trim(rev);
  if (rev.size() <= 1) return {};
  return detail::polynomial_roots(detail::squarefree_part(rev));
}

/// Largest | |alpha|^2 - q | over the reciprocal roots.
inline double weil_deviation(const LPoly& L, double q) {
  double worst = 0;
  for (const auto& a : reciprocal_roots(L)) worst = std::max(worst, std::abs(std::norm(a) - q));
  return worst;
}

struct CharSumResult {
  std::complex<double> value;
  std::optional<std::complex<double>> predicted;
  double abs_error = 0;
};

/// Multiplicative character chi_j(g^a) = e(j a / (q-1)); chi_j(0) = 1 when chi_j
/// is trivial and 0 otherwise.
inline std::complex<double> character_value(const FiniteField& F, std::uint64_t j, FiniteField::Element u) {
  const std::uint64_t m = F.order() - 1;
  j %= m;
  if (u == 0) return j == 0 ? 1.0 : 0.0;
  const std::uint64_t a = static_cast<std::uint64_t>(F.log(u)) * j % m;
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(m));
}

/// Index j with chi_j of exact order `order`.
inline std::uint64_t character_index(const FiniteField& F, std::uint64_t order) {
  if (order == 0 || (F.order() - 1) % order != 0)
    fail(ErrorKind::order_incompatible,
         "order " + std::to_string(order) + " does not divide q - 1 = " + std::to_string(F.order() - 1));
  return (F.order() - 1) / order;
}

/// G(chi_j) = sum_u chi_j(u) e(Tr(u)/p).
inline std::complex<double> gauss_sum_value(const FiniteField& F, std::uint64_t j) {
  const double p = static_cast<double>(F.characteristic());
  std::complex<double> total = 0;
  for (FiniteField::Element u = 0; u < F.order(); ++u)
    total += character_value(F, j, u) * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(F.trace(u)) / p);
  return total;
}

/// Gauss sum over F_{p^{2t}} of a character of exact order n_order, with the
/// pure value (-1)^{t+1} p^t predicted when p = -1 mod n_order (and 0 for the
/// trivial character).
inline CharSumResult gauss_sum(std::uint64_t p, unsigned t, std::uint64_t n_order) {
  if (t < 1) fail(ErrorKind::invalid_argument, "t must be >= 1");
  if (n_order % 2 == 0) fail(ErrorKind::parity, "character order must be odd");
  const FiniteField F(make_field_spec(p, 2 * t));
  const std::uint64_t j = character_index(F, n_order);
  if ((p + 1) % n_order != 0)
    fail(ErrorKind::inapplicable_prime, std::to_string(p) + " is not -1 mod " + std::to_string(n_order));
  CharSumResult out;
  out.value = gauss_sum_value(F, j);
  const double pt = std::pow(static_cast<double>(p), t);
  out.predicted = n_order == 1 ? 0.0 : (t % 2 == 1 ? pt : -pt);
  out.abs_error = std::abs(out.value - *out.predicted);
  return out;
}

/// J(chi_j1, chi_j2) = sum_{u1 + u2 = 1} chi_j1(u1) chi_j2(u2), predicted by
/// G(chi)G(chi')/G(chi chi'). When both characters are trivial the sum is q and
/// no prediction is made; a trivial product with a nontrivial chi is an error.
inline CharSumResult jacobi_sum(const FiniteField& F, std::uint64_t j1, std::uint64_t j2) {
  const std::uint64_t m = F.order() - 1;
  j1 %= m;
  j2 %= m;
  const bool both_trivial = j1 == 0 && j2 == 0;
  if (!both_trivial && (j1 + j2) % m == 0)
    fail(ErrorKind::identity_inapplicable, "chi chi' is trivial");
  CharSumResult out;
  for (FiniteField::Element u = 0; u < F.order(); ++u)
    out.value += character_value(F, j1, u) * character_value(F, j2, F.add_scalar(F.neg(u), 1));
  if (!both_trivial) {
    out.predicted = gauss_sum_value(F, j1) * gauss_sum_value(F, j2) / gauss_sum_value(F, (j1 + j2) % m);
    out.abs_error = std::abs(out.value - *out.predicted);
  }
  return out;
}

}  // namespace noncong
