#pragma once

// The n = 5 picture: the two weight-2 cusp forms f1, f2 (q_10-expansions),
// two auxiliary weight-2 forms f3, f4, their products G1..G6 and eight
// quadratic relations among the G's.

#include <array>
#include <cstddef>
#include <tuple>

#include "noncong/hyperforms.hpp"

namespace noncong {

struct N5Example {
  QExp f1, f2, f3, f4;
  std::array<QExp, 6> G;
  std::array<QExp, 8> quadrics;
};

/// f3 = eta^4 K^{-1/6} 2F1(-1/6, 1/6; 1/2; K).
inline QExp n5_f3(std::size_t prec) {
  return hypergeometric_form(4, make_rational(-1, 6), {{make_rational(-1, 6), make_rational(1, 6)}, {make_rational(1, 2)}},
                             prec);
}

/// f4 = eta^4 K^{1/3} 2F1(1/3, 2/3; 3/2; K).
inline QExp n5_f4(std::size_t prec) {
  return hypergeometric_form(4, make_rational(1, 3), {{make_rational(1, 3), make_rational(2, 3)}, {make_rational(3, 2)}},
                             prec);
}

/// All series to `prec` integer-step terms; the quadric residuals are exact
/// and should vanish up to their absolute precision.
inline N5Example n5_example(std::size_t prec) {
  N5Example ex;
  ex.f1 = basis_form_series(5, 3, prec);
  ex.f2 = basis_form_series(5, 4, prec);
  ex.f3 = n5_f3(prec);
  ex.f4 = n5_f4(prec);
  const auto& [f1, f2, f3, f4] = std::tie(ex.f1, ex.f2, ex.f3, ex.f4);
  ex.G = {f1 * f1, f1 * f2, f2 * f2, f1 * f3, f2 * f3, f2 * f4};
  const auto& [X1, X2, X3, X4, X5, X6] = ex.G;
  const Rational c64(64);
  ex.quadrics = {X1 * X1 - X4 * X5 + c64 * (X3 * X6),
                 X1 * X2 - X5 * X5 + c64 * (X6 * X6),
                 X1 * X3 - X2 * X2,
                 X1 * X5 - X2 * X4,
                 X1 * X6 - X2 * X3,
                 X2 * X5 - X3 * X4,
                 X2 * X6 - X3 * X3,
                 X3 * X5 - X4 * X6};
  return ex;
}

}  // namespace noncong
