#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "divclass/bn/combinatorics.hpp"
#include "divclass/error.hpp"
#include "divclass/rational.hpp"

namespace divclass::pipeline {

/// Genus and degree of the nets g^2_d with Brill-Noether number zero.
struct Numerics {
  int s = 0;
  int g = 0;
  int d = 0;
  Rational N;  // Castelnuovo count N_{g,2,d}

  static Numerics of(int s) {
    if (s < 1) throw InputError("s must be >= 1");
    return {s, 3 * s, 2 * s + 2, bn::castelnuovo(3 * s, 2, 2 * s + 2)};
  }
};

/// A divisor class a*lambda + c*psi + sum_i x_i delta_i on the moduli space of
/// one-pointed genus-g curves. Unknown boundary coefficients are nullopt.
struct DivisorClass {
  int genus = 0;
  Rational lambda;
  Rational psi;
  std::vector<std::optional<Rational>> deltas;

  explicit DivisorClass(int g) : genus(g), deltas(static_cast<std::size_t>(g)) {
    if (g < 1) throw InputError("genus must be >= 1");
  }

  bool complete() const {
    for (const auto& x : deltas) {
      if (!x) return false;
    }
    return true;
  }

  /// (lambda, psi, delta_0, ..., delta_{g-1}); requires every slot known.
  std::vector<Rational> coordinates() const {
    if (!complete()) throw InputError("divisor class has unknown coefficients");
    std::vector<Rational> out{lambda, psi};
    for (const auto& x : deltas) out.push_back(*x);
    return out;
  }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Coefficients on (lambda, psi, delta_0) of a class restricted to the
/// locus of irreducible curves.
struct IrreducibleTriple {
  Rational lambda;
  Rational psi;
  Rational delta0;

  friend IrreducibleTriple operator+(const IrreducibleTriple& a, const IrreducibleTriple& b) {
    return {a.lambda + b.lambda, a.psi + b.psi, a.delta0 + b.delta0};
  }
  friend IrreducibleTriple operator*(const Rational& q, const IrreducibleTriple& a) {
    return {q * a.lambda, q * a.psi, q * a.delta0};
  }
  friend bool operator==(const IrreducibleTriple&, const IrreducibleTriple&) = default;
};

inline Rational xi(int g, int d) {
  if (g - d + 5 == 0) throw InputError("xi is undefined for g - d + 5 = 0");
  return Rational(3 * (g - 1)) + make_rational((g + 3) * (3 * g - 2 * d - 1), g - d + 5);
}

/// Pushforwards eta_*(alpha) and eta_*(gamma) from the space of pointed
/// curves with a g^2_d, where alpha = pi_*(c1(L)^2) and gamma = c1(V).
struct PushforwardClasses {
  IrreducibleTriple eta_alpha;
  IrreducibleTriple eta_gamma;
  Rational xi;
  Rational N;
};

inline PushforwardClasses pushforward_classes(int s) {
  const Numerics n = Numerics::of(s);
  const int g = n.g;
  const int d = n.d;
  const Rational x = xi(g, d);

  // 6(g-1)(g-2)/(d N) eta_*(alpha) = 6(gd - 2g^2 + 8d - 8g + 4) lambda
  //     + (2g^2 - gd + 3g - 4d - 2) delta_0 - 6d(g-2) psi
  const Rational alpha_scale = Rational(d) * n.N / Rational(6 * (g - 1) * (g - 2));
  const IrreducibleTriple alpha_rhs{
      .lambda = 6 * (g * d - 2 * g * g + 8 * d - 8 * g + 4),
      .psi = -6 * d * (g - 2),
      .delta0 = 2 * g * g - g * d + 3 * g - 4 * d - 2,
  };

  // 2(g-1)(g-2)/N eta_*(gamma) = (-(g+3) xi + 40) lambda
  //     + ((g+1) xi - 24)/6 delta_0 - 3d(g-2) psi
  const Rational gamma_scale = n.N / Rational(2 * (g - 1) * (g - 2));
  const IrreducibleTriple gamma_rhs{
      .lambda = -Rational(g + 3) * x + 40,
      .psi = -3 * d * (g - 2),
      .delta0 = (Rational(g + 1) * x - 24) / 6,
  };

  return {alpha_scale * alpha_rhs, gamma_scale * gamma_rhs, x, n.N};
}

}  // namespace divclass::pipeline
