#pragma once

#include <string>
#include <vector>

#include "tenstab/rational.hpp"

namespace tenstab {

/// Base spaces supported by the closed-form Hilbert polynomial constructors.
enum class Space { P1, P2 };

inline int space_dim(Space s) { return s == Space::P1 ? 1 : 2; }
std::string space_name(Space s);
Space parse_space(const std::string& name);

enum class Ordering { Less, Equal, Greater };

/// Univariate polynomial over Rat with degree at most 2, compared by the
/// "eventually less" order: p < q means p(m) < q(m) for all large m, decided
/// lexicographically from the top coefficient down.
class EvPoly {
 public:
  EvPoly() = default;
  explicit EvPoly(std::vector<Rat> highest_first);
  static EvPoly constant(const Rat& c);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.front(); }
  /// Coefficient of t^k.
  Rat coeff(int k) const;
  /// Coefficients, highest degree first (empty for the zero polynomial).
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& t) const;

  EvPoly& operator+=(const EvPoly& o);
  EvPoly& operator-=(const EvPoly& o);
  friend EvPoly operator+(EvPoly a, const EvPoly& b) { return a += b; }
  friend EvPoly operator-(EvPoly a, const EvPoly& b) { return a -= b; }
  friend EvPoly operator*(const Rat& c, const EvPoly& p);
  friend EvPoly operator-(const EvPoly& p) { return Rat(-1) * p; }
  friend bool operator==(const EvPoly& a, const EvPoly& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  std::vector<Rat> c_;  // highest degree first, no leading zeros
};

Ordering poly_cmp_eventual(const EvPoly& p, const EvPoly& q);
/// Sign of p in the eventual order: -1 if p < 0, 0 if p == 0, +1 if p > 0.
int sign_eventual(const EvPoly& p);
inline bool precedes(const EvPoly& p, const EvPoly& q) {
  return poly_cmp_eventual(p, q) == Ordering::Less;
}
inline bool precedes_eq(const EvPoly& p, const EvPoly& q) {
  return poly_cmp_eventual(p, q) != Ordering::Greater;
}

/// Hilbert polynomial of the structure sheaf: t+1 on P1, (t+1)(t+2)/2 on P2.
EvPoly structure_sheaf_poly(Space space);

/// Hilbert polynomial from rank and Chern data. On P2 this is
/// rank*(t+1)(t+2)/2 + c1*t + c1(c1+3)/2 - c2; on P1 it is rank*(t+1) + c1
/// and c2 must be 0.
EvPoly hilbert_from_chern(Space space, int rank, int c1, int c2);

/// Degree of a sheaf recovered from its Hilbert polynomial:
/// (n-1)! * (coeff_{n-1}(p) - rank * coeff_{n-1}(P_O)). Requires deg p == n.
Rat degree_of(const EvPoly& p, int rank, Space space);

/// Stability parameter: polynomial of degree < n that is eventually positive.
/// tau is the slope-level parameter (n-1)! times the t^{n-1} coefficient.
class DeltaPoly {
 public:
  DeltaPoly(EvPoly p, Space space);
  const EvPoly& poly() const { return p_; }
  const Rat& tau() const { return tau_; }
  Space space() const { return space_; }

 private:
  EvPoly p_;
  Rat tau_;
  Space space_;
};

}  // namespace tenstab
