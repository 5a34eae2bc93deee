#pragma once

// Closed-form Brill-Noether counts on a general (pointed) curve.

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "divclass/error.hpp"
#include "divclass/rational.hpp"

namespace divclass::bn {

/// Ramification sequence alpha_0 <= ... <= alpha_r, all >= 0.
class RamificationSeq {
 public:
  explicit RamificationSeq(std::vector<int> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw InputError("empty ramification sequence");
    for (std::size_t i = 0; i < alphas_.size(); ++i) {
      if (alphas_[i] < 0) throw InputError("ramification entries must be non-negative");
      if (i > 0 && alphas_[i] < alphas_[i - 1]) {
        throw InputError("ramification sequence must be non-decreasing");
      }
    }
  }

  static RamificationSeq zero(int r) { return RamificationSeq(std::vector<int>(r + 1, 0)); }

  const std::vector<int>& alphas() const { return alphas_; }
  int r() const { return static_cast<int>(alphas_.size()) - 1; }
  int weight() const { return std::accumulate(alphas_.begin(), alphas_.end(), 0); }

  /// Schubert index of type (r, d): additionally alpha_r <= d - r.
  bool is_schubert_index(int r, int d) const { return this->r() == r && alphas_.back() <= d - r; }

  friend bool operator==(const RamificationSeq&, const RamificationSeq&) = default;

 private:
  std::vector<int> alphas_;
};

/// Vanishing sequence 0 <= a_0 < ... < a_r.
class VanishingSeq {
 public:
  explicit VanishingSeq(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) throw InputError("empty vanishing sequence");
    if (orders_.front() < 0) throw InputError("vanishing orders must be non-negative");
    for (std::size_t i = 1; i < orders_.size(); ++i) {
      if (orders_[i] <= orders_[i - 1]) {
        throw InputError("vanishing sequence must be strictly increasing");
      }
    }
  }

  const std::vector<int>& orders() const { return orders_; }
  int r() const { return static_cast<int>(orders_.size()) - 1; }
  bool fits_degree(int d) const { return orders_.back() <= d; }

  friend bool operator==(const VanishingSeq&, const VanishingSeq&) = default;

 private:
  std::vector<int> orders_;
};

inline VanishingSeq vanishing_from_ramification(const RamificationSeq& alpha) {
  std::vector<int> a;
  for (std::size_t i = 0; i < alpha.alphas().size(); ++i) {
    a.push_back(alpha.alphas()[i] + static_cast<int>(i));
  }
  return VanishingSeq(std::move(a));
}

inline RamificationSeq ramification_from_vanishing(const VanishingSeq& a) {
  std::vector<int> alpha;
  for (std::size_t i = 0; i < a.orders().size(); ++i) {
    alpha.push_back(a.orders()[i] - static_cast<int>(i));
  }
  return RamificationSeq(std::move(alpha));
}

struct BNProblem {
  int g = 0;
  int r = 0;
  int d = 0;
  std::vector<RamificationSeq> marked;

  BNProblem(int g_, int r_, int d_, std::vector<RamificationSeq> marked_ = {})
      : g(g_), r(r_), d(d_), marked(std::move(marked_)) {
    if (g < 0 || r < 0 || d < 0) throw InputError("g, r, d must be non-negative");
    for (const auto& m : marked) {
      if (m.r() != r) throw InputError("marked ramification sequence must have length r+1");
    }
  }
};

/// Adjusted Brill-Noether number; may be negative.
inline int rho(const BNProblem& p) {
  int out = p.g - (p.r + 1) * (p.g - p.d + p.r);
  for (const auto& m : p.marked) out -= m.weight();
  return out;
}

inline int rho(int g, int r, int d) { return rho(BNProblem(g, r, d)); }

/// Castelnuovo count g! * prod_i i!/(g-d+r+i)!; zero when some factorial
/// argument is negative.
inline Rational castelnuovo(int g, int r, int d) {
  if (g < 0 || r < 0) throw InputError("castelnuovo needs g, r >= 0");
  Integer num = factorial(g);
  Integer den = 1;
  for (int i = 0; i <= r; ++i) {
    const int k = g - d + r + i;
    if (k < 0) return 0;
    num *= factorial(i);
    den *= factorial(k);
  }
  return make_rational(num, den);
}

/// Count of g^r_d with prescribed ramification alpha at a general point.
inline Rational count_ramified(int g, int r, int d, const RamificationSeq& alpha) {
  if (g < 0 || r < 0 || d < 0) throw InputError("g, r, d must be non-negative");
  if (!alpha.is_schubert_index(r, d)) {
    throw InputError("alpha is not a Schubert index of type (r, d)");
  }
  const auto& a = alpha.alphas();
  if (a[0] + g - d + r < 0) return 0;
  Integer num = factorial(g);
  for (int i = 0; i <= r; ++i) {
    for (int j = i + 1; j <= r; ++j) num *= a[j] - a[i] + j - i;
  }
  Integer den = 1;
  for (int i = 0; i <= r; ++i) den *= factorial(g - d + r + a[i] + i);
  return make_rational(num, den);
}

/// Double points of a plane curve of degree d and geometric genus g.
inline int plucker_double_points(int g, int d) { return (d - 1) * (d - 2) / 2 - g; }

/// Limit-linear-series compatibility at a node: left_i + right_{r-i} >= d.
inline bool limit_compatible(const VanishingSeq& left, const VanishingSeq& right, int d) {
  if (left.r() != right.r()) throw InputError("vanishing sequences differ in length");
  const int r = left.r();
  for (int i = 0; i <= r; ++i) {
    if (left.orders()[i] + right.orders()[r - i] < d) return false;
  }
  return true;
}

}  // namespace divclass::bn
