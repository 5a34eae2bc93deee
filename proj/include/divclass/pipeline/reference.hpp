#pragma once

// Reference expressions for the intermediate classes of the degeneracy-locus
// computation, with coefficients written as polynomials in g and d. The
// pipeline output is compared against these monomial by monomial.

#include <initializer_list>
#include <string_view>
#include <utility>

#include "divclass/rational.hpp"
#include "divclass/ring/element.hpp"

namespace divclass::pipeline::reference {

using ring::PresentationPtr;
using ring::RingElement;

using Powers = std::initializer_list<std::pair<std::string_view, int>>;

inline RingElement term(const PresentationPtr& p, Powers powers, const Rational& c) {
  return RingElement::monomial(p, p->monomial(powers), c);
}

/// ch(M) = 3 + (d-2) eta1 + (2g+2d-6) eta2 - 2 gamma12 + gamma14 + 2 gamma24
///       - eta1 theta - 2 eta2 theta + (8-2d-4g) eta1 eta2
///       - 2 eta1 gamma24 - 2 eta2 gamma14 + 2 eta1 eta2 theta
inline RingElement chern_character_m(const PresentationPtr& p, int g, int d) {
  return term(p, {}, 3) + term(p, {{"eta1", 1}}, d - 2) + term(p, {{"eta2", 1}}, 2 * g + 2 * d - 6) +
         term(p, {{"gamma12", 1}}, -2) + term(p, {{"gamma14", 1}}, 1) +
         term(p, {{"gamma24", 1}}, 2) + term(p, {{"eta1", 1}, {"theta", 1}}, -1) +
         term(p, {{"eta2", 1}, {"theta", 1}}, -2) +
         term(p, {{"eta1", 1}, {"eta2", 1}}, 8 - 2 * d - 4 * g) +
         term(p, {{"eta1", 1}, {"gamma24", 1}}, -2) + term(p, {{"eta2", 1}, {"gamma14", 1}}, -2) +
         term(p, {{"eta1", 1}, {"eta2", 1}, {"theta", 1}}, 2);
}

inline RingElement c1_m(const PresentationPtr& p, int g, int d) {
  return term(p, {{"eta1", 1}}, d - 2) + term(p, {{"eta2", 1}}, 2 * g + 2 * d - 6) +
         term(p, {{"gamma12", 1}}, -2) + term(p, {{"gamma14", 1}}, 1) +
         term(p, {{"gamma24", 1}}, 2);
}

inline RingElement c2_m(const PresentationPtr& p, int g, int d) {
  return term(p, {{"eta1", 1}, {"eta2", 1}}, 2 * d * d - 8 * d + 2 * g * d + 8 - 4 * g) +
         term(p, {{"eta2", 1}, {"gamma14", 1}}, 2 * g + 2 * d - 8) +
         term(p, {{"eta1", 1}, {"gamma24", 1}}, 2 * d - 4) +
         term(p, {{"gamma14", 1}, {"gamma24", 1}}, 2) + term(p, {{"eta2", 1}, {"theta", 1}}, -2);
}

inline RingElement c3_m(const PresentationPtr& p, int /*g*/, int d) {
  return term(p, {{"eta1", 1}, {"eta2", 1}, {"theta", 1}}, 4 - 2 * d) +
         term(p, {{"eta2", 1}, {"gamma14", 1}, {"theta", 1}}, -2);
}

/// [Y] = eta1 eta2 (c1^2 (2d^2 - 8d + 2dg + 4 - 4(g-1)) + c1 theta (-12d - 4g + 40)
///                  + c2 (-4d + 16 - 8g) + 12 theta^2)
inline RingElement y_bracket(const PresentationPtr& p, int g, int d) {
  return term(p, {{"eta1", 1}, {"eta2", 1}, {"c1", 2}}, 2 * d * d - 8 * d + 2 * d * g + 4 - 4 * (g - 1)) +
         term(p, {{"eta1", 1}, {"eta2", 1}, {"c1", 1}, {"theta", 1}}, -12 * d - 4 * g + 40) +
         term(p, {{"eta1", 1}, {"eta2", 1}, {"c2", 1}}, -4 * d + 16 - 8 * g) +
         term(p, {{"eta1", 1}, {"eta2", 1}, {"theta", 2}}, 12);
}

}  // namespace divclass::pipeline::reference
