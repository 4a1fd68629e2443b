#pragma once

// p-adic checks on coefficient sequences: minimal-weight congruences, the
// exact denominator law, and three-term Atkin--Swinnerton-Dyer congruences.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "noncong/error.hpp"
#include "noncong/grouprep.hpp"
#include "noncong/hyperforms.hpp"
#include "noncong/rational.hpp"

namespace noncong {

struct CongruenceCheck {
  long m = 0;
  std::optional<char> kind;        // a, b, c for minimal-weight checks
  Integer expected_residue;        // residue mod `modulus` (0 for ASD)
  Integer observed_residue;
  Integer modulus;                 // p^required_valuation
  std::optional<long> lhs_valuation;  // nullopt: the checked quantity is exactly zero
  long required_valuation = 0;
  bool pass = false;
  bool vacuous = false;            // every coefficient involved is zero
};

struct ReportParams {
  int n = 0;
  int r = 0;
  int eps = 0;  // 0 when not applicable
  long p = 0;
  long M = 0;
  std::string kind;
};

struct CongruenceReport {
  ReportParams params;
  std::vector<CongruenceCheck> checks;
  bool p_integral = true;
  /// q_N coefficients available to an ASD check (0 for minimal-weight reports).
  long qn_coefficients = 0;
  bool verdict = false;

  std::size_t nonvacuous_count() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.vacuous; }));
  }
};

struct CongruenceTarget {
  Integer value;
  long modulus_exponent = 1;
};

/// Residue class predicted for a_m, b_m, c_m modulo a power of p | n.
/// For p >= 5 the b and c sequences follow (24r)^{2m}: the squared target is
/// the one consistent with the p = 2, 3 cases and with direct computation.
inline CongruenceTarget minweight_target(CoeffKind kind, long p, long r, unsigned long m) {
  const bool first = kind == CoeffKind::a;
  if (p == 3) {
    if (first) return {ipow(Integer(6 * r), m), static_cast<long>(m) + 1};
    return {ipow(Integer(3 * r), 2 * m), 2 * static_cast<long>(m) + 1};
  }
  if (p == 2) {
    if (first) return {ipow(Integer(8), m), 3 * static_cast<long>(m) + 1};
    return {ipow(Integer(2), 6 * m), 6 * static_cast<long>(m) + 1};
  }
  return {ipow(Integer(24 * r), first ? m : 2 * m), 1};
}

/// True when the minimal-weight congruences apply to p | n: p >= 5,
/// or p = 3 with 9 | n, or p = 2 with 16 | n.
inline bool minweight_applies(int n, long p) {
  if (!is_prime(static_cast<std::uint64_t>(p)) || n % p != 0) return false;
  if (p == 3) return n % 9 == 0;
  if (p == 2) return n % 16 == 0;
  return true;
}

namespace detail {

inline CongruenceCheck check_residue(long m, char kind, const Integer& value, const CongruenceTarget& t, long p) {
  CongruenceCheck c;
  c.m = m;
  c.kind = kind;
  c.modulus = ipow(Integer(p), static_cast<unsigned long>(t.modulus_exponent));
  c.expected_residue = mod(t.value, c.modulus);
  c.observed_residue = mod(value, c.modulus);
  c.required_valuation = t.modulus_exponent;
  c.lhs_valuation = valuation(Integer(value - t.value), static_cast<unsigned long>(p));
  c.pass = !c.lhs_valuation || *c.lhs_valuation >= c.required_valuation;
  c.vacuous = value == 0 && t.value == 0;
  return c;
}

}  // namespace detail

inline CongruenceReport verify_minweight_congruences(const CharacterData& chi, long p, std::size_t M,
                                                     std::vector<int> indices = {1, 2, 3}) {
  if (is_reducible(chi.n)) fail(ErrorKind::reducible_representation, "n divides 3");
  if (!minweight_applies(chi.n, p))
    fail(ErrorKind::precondition, "congruences need prime p | n with p >= 5, or p = 3 and 9 | n, or p = 2 and 16 | n");
  CongruenceReport report;
  report.params = {chi.n, chi.r, chi.eps, p, static_cast<long>(M), ""};
  for (int index : indices) {
    const auto coeffs = normalized_coeffs(chi, index, M);
    report.params.kind += to_char(coeffs.kind);
    for (std::size_t m = 0; m <= M; ++m)
      report.checks.push_back(detail::check_residue(static_cast<long>(m), to_char(coeffs.kind), coeffs.values[m],
                                                    minweight_target(coeffs.kind, p, chi.r, m), p));
  }
  report.verdict = std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; });
  return report;
}

enum class DenominatorVerdict { unbounded_confirmed, bounded_within_horizon, law_violated };

inline std::string to_string(DenominatorVerdict v) {
  switch (v) {
    case DenominatorVerdict::unbounded_confirmed: return "unbounded-confirmed";
    case DenominatorVerdict::bounded_within_horizon: return "bounded-within-horizon";
    case DenominatorVerdict::law_violated: return "law-violated";
  }
  return "unknown";
}

struct DenominatorProfile {
  CharacterData chi;
  int index = 1;
  long p = 0;
  /// v_p of the denominator of coefficient m of f / eta^{2k0}, m = 0..M.
  std::vector<long> valuations;
  /// v_p(kind scale_m) - v_p(congruence target_m); empty unless the law applies.
  std::vector<long> predicted;
  long max_valuation = 0;
  /// Largest p-power in a denominator of the component form itself.
  long max_valuation_form = 0;
  DenominatorVerdict verdict = DenominatorVerdict::bounded_within_horizon;
};

inline long denominator_valuation(const Rational& x, long p) {
  return *valuation(x.get_den(), static_cast<unsigned long>(p));
}

inline DenominatorProfile denominator_profile(const CharacterData& chi, int index, long p, std::size_t M) {
  if (is_reducible(chi.n)) fail(ErrorKind::reducible_representation, "n divides 3");
  if (!is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::invalid_argument, "p must be prime");
  const auto coeffs = normalized_coeffs(chi, index, M);
  const auto comp = component(chi, index, M + 1);
  DenominatorProfile out;
  out.chi = chi;
  out.index = index;
  out.p = p;
  for (const auto& q : coeffs.unscaled) out.valuations.push_back(denominator_valuation(q, p));
  out.max_valuation = *std::max_element(out.valuations.begin(), out.valuations.end());
  for (const auto& q : comp.series.coeffs()) out.max_valuation_form = std::max(out.max_valuation_form, denominator_valuation(q, p));

  if (!minweight_applies(chi.n, p)) return out;

  // the law is re-derived from the residues, not assumed
  const auto report = verify_minweight_congruences(chi, p, M, {index});
  bool law = report.verdict;
  for (std::size_t m = 0; m <= M; ++m) {
    const auto target = minweight_target(coeffs.kind, p, chi.r, m);
    const long predicted = *valuation(kind_scale(coeffs.kind, chi.n, m), static_cast<unsigned long>(p)) -
                           *valuation(target.value, static_cast<unsigned long>(p));
    out.predicted.push_back(predicted);
    if (out.valuations[m] != predicted) law = false;
  }
  out.verdict = law ? DenominatorVerdict::unbounded_confirmed : DenominatorVerdict::law_violated;
  return out;
}

/// Number of integer-step terms needed so the q_N view of a form with
/// leading q_N exponent `first` reaches index `top`.
inline std::size_t prec_for_qn_index(long first, int N, long top) {
  if (top < first) return 1;
  return static_cast<std::size_t>((top - first) / N + 1);
}

/// a_{p^2 m} + p a_m = 0 mod p^{2 + v_p(m)} for the q_{2n}-coefficients of the
/// weight-2 basis form f_{n,r}, m = 1..M. The series is built far enough for
/// q_N^{p^2 M}, or to q_N^{min_qn - 1} if that is further.
inline CongruenceReport verify_asd(int n, int r, long p, std::size_t M, std::size_t max_prec = 0,
                                   long min_qn = 0) {
  if (n < 1 || n % 2 == 0) fail(ErrorKind::precondition, "n must be odd");
  if (is_reducible(n)) fail(ErrorKind::reducible_representation, "n divides 3");
  if (r < (n + 1) / 2 || r > n - 1) fail(ErrorKind::precondition, "need (n+1)/2 <= r <= n-1");
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) fail(ErrorKind::precondition, "p must be an odd prime");
  if ((p + 1) % n != 0) fail(ErrorKind::precondition, "need p = -1 mod n");
  if (M < 1) fail(ErrorKind::precondition, "need M >= 1");

  const int N = 2 * n;
  const long first = 2L * r - n;  // leading q_N exponent of f_{n,r}
  const long top = std::max(p * p * static_cast<long>(M), min_qn - 1);
  const std::size_t prec = prec_for_qn_index(first, N, top);
  if (max_prec != 0 && prec > max_prec)
    fail(ErrorKind::insufficient_precision,
         "need " + std::to_string(prec) + " terms, limit is " + std::to_string(max_prec));

  const QNView view = qn_view(basis_form_series(n, r, prec), N);

  CongruenceReport report;
  report.params = {n, r, -1, p, static_cast<long>(M), "asd"};
  report.qn_coefficients = view.limit();
  const unsigned long up = static_cast<unsigned long>(p);
  for (long k = view.first_exponent; k <= top; ++k)
    if (auto v = valuation(view.coefficient(k), up); v && *v < 0) report.p_integral = false;

  for (long m = 1; m <= static_cast<long>(M); ++m) {
    const Rational am = view.coefficient(m);
    const Rational big = view.coefficient(p * p * m);
    const Rational lhs = big + Rational(p) * am;
    CongruenceCheck c;
    c.m = m;
    c.required_valuation = 2 + *valuation(Integer(m), up);
    c.modulus = ipow(Integer(p), static_cast<unsigned long>(c.required_valuation));
    c.expected_residue = 0;
    if (is_integer(lhs)) c.observed_residue = mod(lhs.get_num(), c.modulus);
    c.lhs_valuation = valuation(lhs, up);
    c.pass = !c.lhs_valuation || *c.lhs_valuation >= c.required_valuation;
    c.vacuous = am == 0 && big == 0;
    report.checks.push_back(std::move(c));
  }
  report.verdict = report.p_integral && report.nonvacuous_count() > 0 &&
                   std::all_of(report.checks.begin(), report.checks.end(), [](const auto& c) { return c.pass; });
  return report;
}

}  // namespace noncong
