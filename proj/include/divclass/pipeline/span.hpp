#pragma once

// Exact linear-independence check of [D^2_6] against the Weierstrass divisor
// and the pulled-back Gieseker-Petri divisor in Pic(M_{6,1}) (x) Q.

#include <cstddef>
#include <utility>
#include <vector>

#include "divclass/error.hpp"
#include "divclass/pipeline/coefficients.hpp"
#include "divclass/rational.hpp"

namespace divclass::pipeline {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

struct Echelon {
  Matrix rows;  // nonzero rows in reduced row-echelon form
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
};

/// Reduced row-echelon form by exact Gaussian elimination.
inline Echelon row_reduce(Matrix m) {
  Echelon out;
  if (m.empty()) return out;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw InputError("ragged matrix");
  }
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[r], m[pivot]);
    const Rational lead = m[r][col];
    for (auto& x : m[r]) x /= lead;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    out.pivots.push_back(col);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t matrix_rank(const Matrix& m) { return row_reduce(m).rank(); }

inline bool in_span(const Vector& target, const Matrix& basis) {
  Matrix extended = basis;
  extended.push_back(target);
  return matrix_rank(extended) == matrix_rank(basis);
}

/// Weierstrass divisor on M_{6,1}, coordinates (lambda, psi, delta_0..delta_5).
inline Vector weierstrass_class_g6() {
  return {-1, 21, 0, -15, -10, -6, -3, -1};
}

/// Gieseker-Petri divisor GP^1_4 on M_6: (lambda, delta_0..delta_3).
inline Vector gieseker_petri_class_g6() { return {94, -12, -50, -78, -88}; }

/// Pullback along M_{6,1} -> M_6: lambda and delta_0 pull back to
/// themselves, delta_i to delta_i + delta_{6-i} for i = 1, 2, delta_3 to
/// delta_3, and psi does not appear.
inline Vector pullback_to_pointed_g6(const Vector& m6) {
  if (m6.size() != 5) throw InputError("expected (lambda, delta_0..delta_3)");
  Vector out(8, 0);
  out[0] = m6[0];
  out[2] = m6[1];
  for (int i = 1; i <= 3; ++i) {
    out[2 + i] += m6[1 + i];
    if (i != 3) out[2 + (6 - i)] += m6[1 + i];
  }
  return out;
}

struct SpanCertificate {
  Vector divisor;
  Vector weierstrass;
  Vector gieseker_petri;
  Echelon echelon;
  bool independent = false;
};

inline SpanCertificate span_check() {
  SpanCertificate cert;
  cert.divisor = full_class(2).coordinates();
  cert.weierstrass = weierstrass_class_g6();
  cert.gieseker_petri = pullback_to_pointed_g6(gieseker_petri_class_g6());
  cert.echelon = row_reduce({cert.gieseker_petri, cert.weierstrass, cert.divisor});
  cert.independent = cert.echelon.rank() == 3;
  return cert;
}

}  // namespace divclass::pipeline
