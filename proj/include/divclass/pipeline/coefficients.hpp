#pragma once

// Coefficients of [D^2_d] = a lambda + c psi - sum_i b_i delta_i for
// g = 3s, d = 2s + 2, each derived along its own route and checked against
// the closed forms in s.

#include <array>
#include <optional>
#include <string>

#include "divclass/bn/combinatorics.hpp"
#include "divclass/error.hpp"
#include "divclass/pipeline/divisor.hpp"
#include "divclass/pipeline/universal_curve.hpp"
#include "divclass/pipeline/y_locus.hpp"
#include "divclass/rational.hpp"

namespace divclass::pipeline {

/// Closed forms in s; every value carries the factor N_{g,2,d}.
struct ClosedForms {
  Rational a;
  Rational c;
  Rational b0;
  Rational b1;
  Rational b_last;  // b_{g-1}
};

inline ClosedForms closed_forms(int s) {
  const Numerics n = Numerics::of(s);
  const Integer q = s;
  const Integer d1 = 3 * q - 1;
  const Integer d2 = 3 * q - 2;
  const Integer d3 = q + 3;
  const Integer s2 = q * q;
  const Integer s3 = s2 * q;
  const Integer s4 = s3 * q;
  return {
      .a = make_rational(48 * s4 + 80 * s3 - 16 * s2 - 64 * q + 24, d1 * d2 * d3) * n.N,
      .c = make_rational(2 * q * (q - 1), d1) * n.N,
      .b0 = make_rational(24 * s4 + 23 * s3 - 18 * s2 - 11 * q + 6, 3 * d1 * d2 * d3) * n.N,
      .b1 = make_rational(14 * s3 + 6 * s2 - 8 * q, d2 * d3) * n.N,
      .b_last = make_rational(48 * s4 + 12 * s3 - 56 * s2 + 20 * q, d1 * d2 * d3) * n.N,
  };
}

inline void require_equal(const std::string& what, const Rational& expected,
                          const Rational& actual) {
  if (expected != actual) {
    throw VerificationError(what + ": expected " + to_string(expected) + ", got " +
                            to_string(actual));
  }
}

/// (a, c, b0) from (1-d) eta_*(gamma) + eta_*(alpha) - N psi, without the
/// closed-form check.
inline IrreducibleTriple irreducible_part(int s) {
  const Numerics n = Numerics::of(s);
  const PushforwardClasses k = pushforward_classes(s);
  const UniversalReduction red = universal_curve_reduce(n.d);
  // eta_* of the pulled-back psi is deg(eta) * psi = N psi.
  const IrreducibleTriple psi_part{0, red.psi_coefficient * n.N, 0};
  return red.gamma_coefficient * k.eta_gamma + red.alpha_coefficient * k.eta_alpha + psi_part;
}

struct IrreducibleCoefficients {
  Rational a;
  Rational c;
  Rational b0;
};

inline IrreducibleCoefficients class_irr(int s) {
  const IrreducibleTriple t = irreducible_part(s);
  const IrreducibleCoefficients out{t.lambda, t.psi, -t.delta0};
  const ClosedForms cf = closed_forms(s);
  require_equal("a", cf.a, out.a);
  require_equal("c", cf.c, out.c);
  require_equal("b0", cf.b0, out.b0);
  return out;
}

/// c from the curve obtained by moving the marked point on a fixed general
/// curve: 2 * (double points) * N = c (2g - 2).
inline Rational c_from_moving_point(int s) {
  const Numerics n = Numerics::of(s);
  return Rational(2 * bn::plucker_double_points(n.g, n.d)) * n.N / Rational(2 * n.g - 2);
}

inline Rational coeff_c_testcurve(int s) {
  const Rational c = c_from_moving_point(s);
  require_equal("c (closed form)", closed_forms(s).c, c);
  require_equal("c (Porteous psi-coefficient)", irreducible_part(s).psi, c);
  return c;
}

/// b1 from the elliptic-tail test curve: (tail count + deg Y) / (2g - 4).
inline Rational b1_from_test_curve(const Rational& elliptic_tail, const Rational& y_degree, int g) {
  return (elliptic_tail + y_degree) / Rational(2 * g - 4);
}

inline Rational coeff_b1(int s) {
  const Numerics n = Numerics::of(s);
  const Rational b1 = b1_from_test_curve(elliptic_tail_count(s), y_locus_degree(s), n.g);
  require_equal("b1", closed_forms(s).b1, b1);
  return b1;
}

/// b_{g-1} = c + b1 from the moving point on an elliptic tail.
inline Rational coeff_bg1(int s) {
  const Rational b = coeff_c_testcurve(s) + coeff_b1(s);
  require_equal("b_{g-1}", closed_forms(s).b_last, b);
  return b;
}

/// Pencil of plane cubics attached at a point: a - 12 b0 + b_{g-1} = 0.
inline bool check_pencil_relation(int s) {
  const IrreducibleCoefficients irr = class_irr(s);
  return irr.a - 12 * irr.b0 + coeff_bg1(s) == 0;
}

/// Interior coefficient b_{i+1} on the genus-g flag-curve pullback.
inline Rational interior_interpolation(int g, int i, const Rational& b1, const Rational& b_last) {
  return make_rational((g - i - 1) * (g - i - 2), (g - 1) * (g - 2)) * b1 +
         make_rational(i * (g - i - 1), g - 2) * b_last;
}

/// (b2, b3, b4) in genus 6, checked against -7i^2 + 43i - 6.
inline std::array<Rational, 3> interior_coefficients() {
  constexpr int kGenus = 6;
  const Rational b1 = coeff_b1(2);
  const Rational b_last = coeff_bg1(2);
  std::array<Rational, 3> out;
  for (int i = 1; i <= 3; ++i) {
    out[i - 1] = interior_interpolation(kGenus, i, b1, b_last);
    const int idx = i + 1;
    require_equal("b" + std::to_string(idx), Rational(-7 * idx * idx + 43 * idx - 6), out[i - 1]);
  }
  return out;
}

/// Every coefficient the method determines; interior b_i are known only
/// in genus 6 and stay unknown otherwise.
inline DivisorClass full_class(int s) {
  const Numerics n = Numerics::of(s);
  const IrreducibleCoefficients irr = class_irr(s);
  const Rational c = coeff_c_testcurve(s);
  const Rational b1 = coeff_b1(s);
  const Rational b_last = coeff_bg1(s);

  DivisorClass out(n.g);
  out.lambda = irr.a;
  out.psi = c;
  out.deltas[0] = -irr.b0;
  out.deltas[1] = -b1;
  out.deltas[static_cast<std::size_t>(n.g - 1)] = -b_last;
  if (n.g == 6) {
    const auto interior = interior_coefficients();
    for (std::size_t i = 0; i < interior.size(); ++i) out.deltas[i + 2] = -interior[i];
  }
  return out;
}

}  // namespace divclass::pipeline
