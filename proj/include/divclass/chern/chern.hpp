#pragma once

// Chern classes and Chern characters over a presented ring: Newton's
// identities in both directions and the Porteous expressions used for
// rank-one degeneracy loci.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "divclass/error.hpp"
#include "divclass/rational.hpp"
#include "divclass/ring/element.hpp"

namespace divclass::chern {

using ring::PresentationPtr;
using ring::RingElement;

enum class ChernKind { TotalChern, Character };

/// Rank plus graded pieces 0..k. For total Chern data part 0 is 1; for a
/// character part 0 is the rank.
class ChernData {
 public:
  ChernData(ChernKind kind, int rank, std::vector<RingElement> parts)
      : kind_(kind), rank_(rank), parts_(std::move(parts)) {
    if (rank_ < 0) throw InputError("negative rank");
    if (parts_.empty()) throw InputError("Chern data needs a degree-0 part");
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (!RingElement::same_presentation(*parts_[j].presentation(), *parts_[0].presentation())) {
        throw InputError("Chern data parts over different presentations");
      }
      if (!parts_[j].is_homogeneous(static_cast<int>(j))) {
        throw InputError("Chern data part " + std::to_string(j) + " is not homogeneous of degree " +
                         std::to_string(j));
      }
    }
    const Rational expected = kind_ == ChernKind::Character ? Rational(rank_) : Rational(1);
    if (parts_[0] != RingElement::constant(presentation(), expected)) {
      throw InputError("degree-0 part must be " + divclass::to_string(expected));
    }
  }

  /// Total Chern class 1 + c_1 + ... + c_k.
  static ChernData total(int rank, const PresentationPtr& p, std::vector<RingElement> classes) {
    classes.insert(classes.begin(), RingElement::constant(p, 1));
    return ChernData(ChernKind::TotalChern, rank, std::move(classes));
  }

  /// Character rank + ch_1 + ... + ch_k.
  static ChernData character(int rank, const PresentationPtr& p, std::vector<RingElement> pieces) {
    pieces.insert(pieces.begin(), RingElement::constant(p, rank));
    return ChernData(ChernKind::Character, rank, std::move(pieces));
  }

  /// Splits a mixed-degree character into graded pieces up to `up_to`.
  static ChernData character_from(const RingElement& ch, int up_to) {
    if (ch.constant_term() < 0 || !is_integer(ch.constant_term())) {
      throw InputError("character with non-integral rank");
    }
    const int rank = static_cast<int>(boost::multiprecision::numerator(ch.constant_term()));
    std::vector<RingElement> parts;
    for (int j = 0; j <= up_to; ++j) parts.push_back(ch.part(j));
    return ChernData(ChernKind::Character, rank, std::move(parts));
  }

  ChernKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int max_degree() const { return static_cast<int>(parts_.size()) - 1; }
  const PresentationPtr& presentation() const { return parts_[0].presentation(); }

  /// Piece of degree j; zero beyond the stored range.
  RingElement part(int j) const {
    if (j < 0) throw InputError("negative degree");
    if (j > max_degree()) return RingElement(presentation());
    return parts_[static_cast<std::size_t>(j)];
  }

  RingElement sum() const {
    RingElement out(presentation());
    for (const auto& p : parts_) out += p;
    return out;
  }

  friend bool operator==(const ChernData&, const ChernData&) = default;

 private:
  ChernKind kind_;
  int rank_;
  std::vector<RingElement> parts_;
};

/// Newton's identities: with p_k = k! ch_k,
/// k c_k = sum_{i=1..k} (-1)^{i-1} c_{k-i} p_i.
inline ChernData character_to_chern(const ChernData& cd, int up_to) {
  if (cd.kind() != ChernKind::Character) throw InputError("expected a Chern character");
  if (up_to < 0) throw InputError("negative degree bound");
  const PresentationPtr& p = cd.presentation();

  std::vector<RingElement> power_sums{RingElement::constant(p, cd.rank())};
  for (int k = 1; k <= up_to; ++k) power_sums.push_back(cd.part(k) * Rational(factorial(k)));

  std::vector<RingElement> c{RingElement::constant(p, 1)};
  for (int k = 1; k <= up_to; ++k) {
    RingElement acc(p);
    for (int i = 1; i <= k; ++i) {
      RingElement t = c[k - i] * power_sums[i];
      acc += (i % 2 == 1) ? t : -t;
    }
    c.push_back(acc * make_rational(1, k));
  }
  return ChernData(ChernKind::TotalChern, cd.rank(), std::move(c));
}

/// Inverse direction: p_k = sum_{i=1..k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
inline ChernData chern_to_character(const ChernData& cd, int up_to) {
  if (cd.kind() != ChernKind::TotalChern) throw InputError("expected total Chern data");
  if (up_to < 0) throw InputError("negative degree bound");
  const PresentationPtr& p = cd.presentation();

  std::vector<RingElement> power_sums{RingElement::constant(p, cd.rank())};
  for (int k = 1; k <= up_to; ++k) {
    RingElement acc = cd.part(k) * Rational(k);
    if (k % 2 == 0) acc = -acc;
    for (int i = 1; i < k; ++i) {
      RingElement t = cd.part(i) * power_sums[k - i];
      acc += (i % 2 == 1) ? t : -t;
    }
    power_sums.push_back(std::move(acc));
  }

  std::vector<RingElement> ch{power_sums[0]};
  for (int k = 1; k <= up_to; ++k) {
    ch.push_back(power_sums[k] * make_rational(Integer(1), factorial(k)));
  }
  return ChernData(ChernKind::Character, cd.rank(), std::move(ch));
}

/// Degree-2 part of c(V^dual) / c(M^dual):
/// c2(V^) + c1(V^) c1(M) + c1(M)^2 - c2(M), with c_i(V^) = (-1)^i c_i(V).
inline RingElement porteous_codim2_quotient(const ChernData& c_v, const ChernData& c_m) {
  if (c_v.kind() != ChernKind::TotalChern || c_m.kind() != ChernKind::TotalChern) {
    throw InputError("Porteous needs total Chern data");
  }
  if (!RingElement::same_presentation(*c_v.presentation(), *c_m.presentation())) {
    throw InputError("Chern data over different presentations");
  }
  const RingElement v1 = -c_v.part(1);
  const RingElement v2 = c_v.part(2);
  const RingElement m1 = c_m.part(1);
  const RingElement m2 = c_m.part(2);
  return v2 + v1 * m1 + m1 * m1 - m2;
}

struct EClasses {
  RingElement e1;
  RingElement e2;
  RingElement e3;
};

/// Chern classes of pi^*E^dual - M^dual, signed so that c(E) enters with
/// positive coefficients:
///   e1 = f1 + m1
///   e2 = f2 + f1 m1 + m1^2 - m2
///   e3 = f3 + f2 m1 + f1 (m1^2 - m2) + (m1^3 + m3 - 2 m1 m2)
inline EClasses porteous_e_classes(const ChernData& c_e, const ChernData& c_m) {
  if (c_e.kind() != ChernKind::TotalChern || c_m.kind() != ChernKind::TotalChern) {
    throw InputError("Porteous needs total Chern data");
  }
  if (c_e.rank() != 3 || c_m.rank() != 3) throw InputError("e-classes are defined for rank 3");
  const RingElement f1 = c_e.part(1);
  const RingElement f2 = c_e.part(2);
  const RingElement f3 = c_e.part(3);
  const RingElement m1 = c_m.part(1);
  const RingElement m2 = c_m.part(2);
  const RingElement m3 = c_m.part(3);
  const RingElement q = m1 * m1 - m2;
  return {
      .e1 = f1 + m1,
      .e2 = f2 + f1 * m1 + q,
      .e3 = f3 + f2 * m1 + f1 * q + (m1 * m1 * m1 + m3 - Rational(2) * m1 * m2),
  };
}

/// det [[e2, e3], [e1, e2]] = e2^2 - e1 e3.
inline RingElement porteous_det_2x2(const RingElement& e1, const RingElement& e2,
                                    const RingElement& e3) {
  if (!e1.is_homogeneous(1) || !e2.is_homogeneous(2) || !e3.is_homogeneous(3)) {
    throw InputError("e-classes must be homogeneous of degrees 1, 2, 3");
  }
  return e2 * e2 - e1 * e3;
}

inline RingElement porteous_det_2x2(const EClasses& e) { return porteous_det_2x2(e.e1, e.e2, e.e3); }

}  // namespace divclass::chern
