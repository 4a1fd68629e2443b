#pragma once

// Induced three-dimensional representations of the modular group from
// finite-order characters of the index-3 subgroup Gamma_0(2)-bar, encoded as
// exact monomial matrices over the 2n-th roots of unity.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "noncong/error.hpp"
#include "noncong/rational.hpp"
#include "noncong/smith.hpp"

namespace noncong {

/// chi(U) = exp(2 pi i r / n), chi(V) = eps.
///
/// n = 1 is the trivial-on-U character; it is encoded with r = 0 since no
/// r with 0 < r < 1 exists.
struct CharacterData {
  int n = 0;
  int r = 0;
  int eps = 1;

  static CharacterData make(int n, int r, int eps) {
    if (n < 1) fail(ErrorKind::invalid_argument, "n must be positive");
    if (eps != 1 && eps != -1) fail(ErrorKind::invalid_argument, "eps must be +1 or -1");
    if (n == 1) {
      if (r != 0) fail(ErrorKind::invalid_argument, "n = 1 requires r = 0");
    } else {
      if (r <= 0 || r >= n) fail(ErrorKind::invalid_argument, "need 0 < r < n");
      if (std::gcd(r, n) != 1) fail(ErrorKind::invalid_argument, "need gcd(r, n) = 1");
    }
    return CharacterData{n, r, eps};
  }

  int root_modulus() const { return 2 * n; }

  friend bool operator==(const CharacterData&, const CharacterData&) = default;
};

enum class ReductionCase { A, B, C, D };

inline char to_char(ReductionCase c) { return static_cast<char>('A' + static_cast<int>(c)); }

/// Generalized permutation matrix whose nonzero entries are powers of
/// zeta = exp(2 pi i / modulus). Column j has its single nonzero entry
/// zeta^exps[j] in row perm[j].
class MonomialMatrix {
 public:
  MonomialMatrix(std::array<int, 3> perm, std::array<int, 3> exps, int modulus)
      : perm_(perm), exps_(exps), modulus_(modulus) {
    if (modulus < 1) fail(ErrorKind::invalid_argument, "modulus must be positive");
    std::array<bool, 3> seen{};
    for (int p : perm_) {
      if (p < 0 || p > 2 || seen[p]) fail(ErrorKind::invalid_argument, "perm is not a bijection of {0,1,2}");
      seen[p] = true;
    }
    for (int& e : exps_) e = ((e % modulus_) + modulus_) % modulus_;
  }

  static MonomialMatrix identity(int modulus) { return {{0, 1, 2}, {0, 0, 0}, modulus}; }

  static MonomialMatrix diagonal(std::array<int, 3> exps, int modulus) { return {{0, 1, 2}, exps, modulus}; }

  const std::array<int, 3>& perm() const { return perm_; }
  const std::array<int, 3>& exps() const { return exps_; }
  int modulus() const { return modulus_; }

  /// Exponent of the entry at (row, col), or nullopt for a zero entry.
  std::optional<int> entry(int row, int col) const {
    if (perm_.at(col) != row) return std::nullopt;
    return exps_[col];
  }

  bool is_diagonal() const { return perm_ == std::array<int, 3>{0, 1, 2}; }
  bool is_identity() const { return is_diagonal() && exps_ == std::array<int, 3>{0, 0, 0}; }

  MonomialMatrix operator*(const MonomialMatrix& rhs) const {
    if (modulus_ != rhs.modulus_) fail(ErrorKind::invalid_argument, "modulus mismatch in product");
    std::array<int, 3> perm{}, exps{};
    for (int j = 0; j < 3; ++j) {
      const int mid = rhs.perm_[j];
      perm[j] = perm_[mid];
      exps[j] = exps_[mid] + rhs.exps_[j];
    }
    return {perm, exps, modulus_};
  }

  MonomialMatrix inverse() const {
    std::array<int, 3> perm{}, exps{};
    for (int j = 0; j < 3; ++j) {
      perm[perm_[j]] = j;
      exps[perm_[j]] = -exps_[j];
    }
    return {perm, exps, modulus_};
  }

  MonomialMatrix pow(long k) const {
    MonomialMatrix base = k < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    MonomialMatrix acc = identity(modulus_);
    while (e) {
      if (e & 1u) acc = acc * base;
      base = base * base;
      e >>= 1u;
    }
    return acc;
  }

  /// Multiplicative order, by explicit power iteration.
  long order() const {
    MonomialMatrix acc = *this;
    for (long k = 1;; ++k) {
      if (acc.is_identity()) return k;
      acc = acc * *this;
    }
  }

  /// Eigenvalues as turns t in [0,1) (eigenvalue = exp(2 pi i t)), sorted.
  /// A cycle of length L whose entries multiply to zeta^s contributes the
  /// L roots of x^L = zeta^s.
  std::vector<Rational> eigen_turns() const {
    std::vector<Rational> out;
    std::array<bool, 3> visited{};
    for (int start = 0; start < 3; ++start) {
      if (visited[start]) continue;
      int len = 0;
      long s = 0;
      for (int j = start; !visited[j]; j = perm_[j]) {
        visited[j] = true;
        s += exps_[j];
        ++len;
      }
      for (int t = 0; t < len; ++t) {
        Rational turn = make_rational(s + static_cast<long>(t) * modulus_, static_cast<long>(len) * modulus_);
        turn -= Rational(noncong::floor(turn));
        out.push_back(turn);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

  // strict weak order for set membership during enumeration
  friend bool operator<(const MonomialMatrix& a, const MonomialMatrix& b) {
    return std::tie(a.perm_, a.exps_) < std::tie(b.perm_, b.exps_);
  }

 private:
  std::array<int, 3> perm_;
  std::array<int, 3> exps_;
  int modulus_;
};

struct InducedRep {
  MonomialMatrix R;
  MonomialMatrix S;
  MonomialMatrix T;
  /// sigma = zeta^{-r}: the eigenvalue convention fixing the order of V1, V2.
  int sigma_exp = 0;
};

struct ExponentData {
  Rational r1, r2, r3;
  int e = 0;
  int k0 = 0;
  Rational a, b, c;

  const Rational& shift(int index) const {
    switch (index) {
      case 1: return a;
      case 2: return b;
      case 3: return c;
      default: fail(ErrorKind::invalid_argument, "component index must be 1, 2 or 3");
    }
  }
};

struct ImageStructure {
  long order = 0;                          // 6 |A|
  std::pair<long, long> abelian_invariants;  // A = Z_first x Z_second, second | first
  long a_order_enumerated = 0;             // |<rho(T^2), rho(U)>| by closure
  long image_order_enumerated = 0;         // |<rho(R), rho(S)>| by closure
  std::pair<long, long> invariants_enumerated;  // (exponent, |A| / exponent)
};

struct HyperellipticEquation {
  int degree = 0;     // y^2 = x^degree + constant
  int constant = 64;
};

struct CurveInvariants {
  ReductionCase reduction_case = ReductionCase::A;
  int cusps_H0 = 0;
  int cusps_H1 = 0;
  int genus_H0 = 0;
  int genus_H1 = 0;
  std::optional<int> genus_H;                        // case C only
  std::optional<HyperellipticEquation> hyperelliptic_eq;  // cases A, B, D
};

inline ReductionCase classify_case(const CharacterData& chi) {
  const bool odd = chi.n % 2 != 0;
  if (odd) return chi.eps == -1 ? ReductionCase::A : ReductionCase::B;
  return chi.eps == -1 ? ReductionCase::C : ReductionCase::D;
}

/// rho(R), rho(S), rho(T) for Ind chi. With zeta = exp(pi i / n):
/// lambda = zeta^{2r}, eps = zeta^{n (1-eps)/2}.
inline InducedRep induced_rep(const CharacterData& chi) {
  const int m = chi.root_modulus();
  const int eps = chi.eps == -1 ? chi.n : 0;
  const int lam = 2 * chi.r;
  MonomialMatrix R({2, 0, 1}, {0, 0, 0}, m);
  MonomialMatrix S({2, 1, 0}, {eps - lam, eps, eps + lam}, m);
  MonomialMatrix T({0, 2, 1}, {eps + lam, eps - lam, eps}, m);
  return {R, S, T, ((-chi.r) % m + m) % m};
}

inline bool is_reducible(int n) { return 3 % n == 0; }

inline ExponentData exponent_data(const CharacterData& chi) {
  const int n = chi.n, r = chi.r;
  if (is_reducible(n))
    fail(ErrorKind::reducible_representation, "n divides 3: rho is reducible (n = " + std::to_string(n) + ")");
  const ReductionCase rc = classify_case(chi);
  int e = 0;
  if (rc == ReductionCase::A || rc == ReductionCase::C) e = (2 * r >= n) ? -1 : 1;
  ExponentData d;
  d.e = e;
  d.k0 = 2 * e + 4;
  d.r1 = make_rational(2 * r + e * n, 2 * n);
  d.r2 = make_rational(n - r, 2 * n);
  d.r3 = make_rational(2 * n - r, 2 * n);
  const Rational w = make_rational(d.k0, 12);
  d.a = d.r1 - w;
  d.b = d.r2 - w;
  d.c = d.r3 - w;
  return d;
}

/// Order of the group generated by `gens`, by breadth-first closure.
inline long enumerate_group_order(std::span<const MonomialMatrix> gens) {
  if (gens.empty()) return 1;
  std::set<MonomialMatrix> seen{MonomialMatrix::identity(gens.front().modulus())};
  std::vector<MonomialMatrix> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<MonomialMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = x * g;
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

namespace detail {

inline long element_order_exps(const std::array<int, 3>& exps, int modulus) {
  long ord = 1;
  for (int e : exps) ord = std::lcm(ord, static_cast<long>(modulus / std::gcd(e, modulus)));
  return ord;
}

}  // namespace detail

/// A = rho(Gamma(2)) = <rho(T^2), rho(U)>, with rho(T^2) = diag(lambda^2,
/// lambda^-1, lambda^-1) and rho(U) = diag(lambda, lambda, lambda^-2).
inline ImageStructure image_structure(const CharacterData& chi) {
  const int n = chi.n, r = chi.r;
  ImageStructure out;

  // lattice route: invariant factors of the image of Z^2 in (Z/n)^3
  IntMatrix rel{{2L * r, -r, -r}, {r, r, -2L * r}};
  const auto d = smith_diagonal(rel);
  auto factor = [n](std::int64_t di) { return static_cast<long>(n / std::gcd<std::int64_t>(n, di)); };
  out.abelian_invariants = {factor(d[0]), factor(d[1])};
  out.order = 6 * out.abelian_invariants.first * out.abelian_invariants.second;

  // enumeration route
  const auto rep = induced_rep(chi);
  const MonomialMatrix t2 = rep.T * rep.T;
  const MonomialMatrix u = rep.R * t2.inverse() * rep.R.inverse();
  const std::array<MonomialMatrix, 2> a_gens{t2, u};
  out.a_order_enumerated = enumerate_group_order(a_gens);
  const std::array<MonomialMatrix, 2> full_gens{rep.R, rep.S};
  out.image_order_enumerated = enumerate_group_order(full_gens);

  // A has rank <= 2, so (exponent, order / exponent) are its invariant factors
  long exponent = 1;
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      const auto g = t2.pow(i) * u.pow(j);
      exponent = std::lcm(exponent, detail::element_order_exps(g.exps(), g.modulus()));
    }
  out.invariants_enumerated = {exponent, out.a_order_enumerated / exponent};
  return out;
}

inline bool kernel_is_congruence(int n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "n must be positive");
  return 24 % n == 0;
}

inline CurveInvariants curve_invariants(const CharacterData& chi) {
  CurveInvariants ci;
  ci.reduction_case = classify_case(chi);
  const int n = chi.n;
  if (n % 2 != 0) {
    ci.cusps_H0 = 3;
    ci.genus_H0 = (n - 1) / 2;
  } else {
    ci.cusps_H0 = 4;
    ci.genus_H0 = (n - 2) / 2;
  }
  ci.cusps_H1 = 2;
  ci.genus_H1 = 0;
  if (ci.reduction_case == ReductionCase::C)
    ci.genus_H = n / 4;
  else
    ci.hyperelliptic_eq = HyperellipticEquation{n, 64};
  return ci;
}

}  // namespace noncong
