#pragma once

// Porteous class of the rank <= 1 locus of V -> M on the universal pointed
// curve, pushed down to the base. M has character e^{-sigma} + ch(L), so
// c1(M) = L - sigma and c2(M) = -sigma L.

#include <utility>

#include "divclass/chern/chern.hpp"
#include "divclass/error.hpp"
#include "divclass/rational.hpp"
#include "divclass/ring/element.hpp"

namespace divclass::pipeline {

using ring::Monomial;
using ring::PresentationPtr;
using ring::RingElement;

/// Ring on the universal curve: sigma (marked section), L (c1 of the
/// universal line bundle), cV1 and cV2 (pulled back Chern classes of V).
inline PresentationPtr universal_curve_presentation() {
  ring::PresentationBuilder b;
  const auto fibre = b.add_factor("fibre", std::nullopt);
  const auto base = b.add_factor("base", std::nullopt);
  b.add_generator("sigma", 1, {{fibre, 2}});
  b.add_generator("L", 1, {{fibre, 2}});
  b.add_generator("cV1", 1, {{base, 2}});
  b.add_generator("cV2", 2, {{base, 4}});
  return b.build(2);
}

/// Divisor classes on the base: gamma = c1(V), alpha = pi_*(L^2), psi.
inline PresentationPtr universal_base_presentation() {
  ring::PresentationBuilder b;
  const auto base = b.add_factor("base", std::nullopt);
  b.add_generator("cV1", 1, {{base, 2}});
  b.add_generator("cV2", 2, {{base, 4}});
  b.add_generator("alpha", 1, {{base, 2}});
  b.add_generator("psi", 1, {{base, 2}});
  return b.build(1);
}

/// pi_* on monomials sigma^a L^b * (base): the relative-dimension-one table
///   pi_*(1) = 0, pi_*(sigma) = 1, pi_*(L) = d,
///   pi_*(sigma^2) = -psi, pi_*(sigma L) = 0, pi_*(L^2) = alpha.
/// pi_*(sigma L) vanishes because L is trivialised along sigma.
inline RingElement universal_pushforward(const RingElement& x, int d,
                                         const PresentationPtr& base) {
  const auto& src = *x.presentation();
  const std::size_t sigma = src.index("sigma");
  const std::size_t line = src.index("L");
  const std::size_t alpha = base->index("alpha");
  const std::size_t psi = base->index("psi");

  ring::Terms out;
  for (const auto& [m, c] : x.terms()) {
    const int a = m.exponent(sigma);
    const int b = m.exponent(line);
    std::vector<Monomial::Entry> rest;
    for (const auto& [gen, exp] : m.entries()) {
      if (gen != sigma && gen != line) rest.emplace_back(base->index(src.generators()[gen].name), exp);
    }
    Monomial base_part(std::move(rest));
    if (a + b < 1 || (a == 1 && b == 1)) continue;
    if (a == 1 && b == 0) {
      ring::accumulate(out, base_part, c);
    } else if (a == 0 && b == 1) {
      ring::accumulate(out, base_part, c * d);
    } else if (a == 2 && b == 0) {
      ring::accumulate(out, base_part * Monomial::of(psi), -c);
    } else if (a == 0 && b == 2) {
      ring::accumulate(out, base_part * Monomial::of(alpha), c);
    } else {
      throw InternalError("no pushforward for " + src.format(m));
    }
  }
  return RingElement(base, out);
}

struct UniversalReduction {
  RingElement integrand;  // c2(V^ - M^) on the universal curve
  RingElement pushed;     // its pushforward to the base
  Rational gamma_coefficient;
  Rational alpha_coefficient;
  Rational psi_coefficient;
};

/// Expands the Porteous class and pushes it forward; asserts the result is
/// (1 - d) gamma + alpha - psi.
inline UniversalReduction universal_curve_reduce(int d) {
  const PresentationPtr p = universal_curve_presentation();
  const PresentationPtr base = universal_base_presentation();
  const RingElement sigma = RingElement::generator(p, "sigma");
  const RingElement line = RingElement::generator(p, "L");

  const chern::ChernData c_v = chern::ChernData::total(
      3, p, {RingElement::generator(p, "cV1"), RingElement::generator(p, "cV2")});
  const chern::ChernData c_m = chern::ChernData::total(2, p, {line - sigma, -(sigma * line)});

  RingElement integrand = chern::porteous_codim2_quotient(c_v, c_m);
  RingElement pushed = universal_pushforward(integrand, d, base);

  const RingElement expected = RingElement::generator(base, "cV1", 1 - d) +
                               RingElement::generator(base, "alpha") -
                               RingElement::generator(base, "psi");
  if (auto diff = ring::first_difference(expected, pushed)) {
    throw VerificationError("universal curve reduction mismatch at " + *diff);
  }
  return {
      std::move(integrand),
      pushed,
      pushed.coefficient(Monomial::of(base->index("cV1"))),
      pushed.coefficient(Monomial::of(base->index("alpha"))),
      pushed.coefficient(Monomial::of(base->index("psi"))),
  };
}

}  // namespace divclass::pipeline
