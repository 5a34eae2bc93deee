// Prints the class of the divisor of genus-6 curves with a point that is a
// ramification point of type (0, 1, 2) for some net of degree 6, together
// with a few of the intermediate quantities behind it.

#include <iostream>

#include "divclass/divclass.hpp"

int main() {
  using namespace divclass;

  const pipeline::Numerics n = pipeline::Numerics::of(2);
  std::cout << "g = " << n.g << ", d = " << n.d << ", nets on a general curve: " << to_string(n.N)
            << "\n";

  const pipeline::YLocusSteps y = pipeline::compute_y_locus(2);
  std::cout << "c1(M) = " << ring::to_string(y.c_m.part(1)) << "\n";
  std::cout << "deg [Y] = " << to_string(y.degree) << "\n";

  const pipeline::DivisorClass dc = pipeline::full_class(2);
  std::cout << to_string(dc.lambda) << " lambda + " << to_string(dc.psi) << " psi";
  for (std::size_t i = 0; i < dc.deltas.size(); ++i) {
    std::cout << " + (" << to_string(*dc.deltas[i]) << ") delta_" << i;
  }
  std::cout << "\n";

  std::cout << "independent of Weierstrass and Gieseker-Petri: "
            << (pipeline::span_check().independent ? "yes" : "no") << "\n";
}
