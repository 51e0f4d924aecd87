#include "tenstab/poly.hpp"

#include <sstream>

#include "tenstab/errors.hpp"

namespace tenstab {

std::string space_name(Space s) { return s == Space::P1 ? "P1" : "P2"; }

Space parse_space(const std::string& name) {
  if (name == "P1") return Space::P1;
  if (name == "P2") return Space::P2;
  fail(Errc::UnsupportedSpace, "only P1 and P2 are supported, got '" + name + "'");
}

EvPoly::EvPoly(std::vector<Rat> highest_first) : c_(std::move(highest_first)) {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == Rat(0)) ++lead;
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
  if (c_.size() > 3) fail(Errc::DegreeMismatch, "polynomial degree above 2 is not supported");
}

EvPoly EvPoly::constant(const Rat& c) { return EvPoly(std::vector<Rat>{c}); }

Rat EvPoly::coeff(int k) const {
  int idx = degree() - k;
  if (k < 0 || idx < 0) return Rat(0);
  return c_[static_cast<size_t>(idx)];
}

Rat EvPoly::operator()(const Rat& t) const {
  Rat v(0);
  for (const Rat& c : c_) v = v * t + c;
  return v;
}

EvPoly& EvPoly::operator+=(const EvPoly& o) {
  std::vector<Rat> out;
  int deg = std::max(degree(), o.degree());
  for (int k = deg; k >= 0; --k) out.push_back(coeff(k) + o.coeff(k));
  *this = EvPoly(std::move(out));
  return *this;
}

EvPoly& EvPoly::operator-=(const EvPoly& o) { return *this += Rat(-1) * o; }

EvPoly operator*(const Rat& c, const EvPoly& p) {
  std::vector<Rat> out;
  out.reserve(p.c_.size());
  for (const Rat& x : p.c_) out.push_back(c * x);
  return EvPoly(std::move(out));
}

std::string EvPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat c = coeff(k);
    if (c == Rat(0)) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rat a = abs(c);
    if (k == 0 || a != Rat(1)) os << a.str();
    if (k >= 1) os << (k == 1 ? "t" : "t^" + std::to_string(k));
    first = false;
  }
  return os.str();
}

Ordering poly_cmp_eventual(const EvPoly& p, const EvPoly& q) {
  EvPoly d = p - q;
  if (d.is_zero()) return Ordering::Equal;
  return d.leading().sign() > 0 ? Ordering::Greater : Ordering::Less;
}

int sign_eventual(const EvPoly& p) {
  if (p.is_zero()) return 0;
  return p.leading().sign();
}

EvPoly structure_sheaf_poly(Space space) {
  if (space == Space::P1) return EvPoly({Rat(1), Rat(1)});
  return EvPoly({Rat(1, 2), Rat(3, 2), Rat(1)});
}

EvPoly hilbert_from_chern(Space space, int rank, int c1, int c2) {
  if (rank < 1) fail(Errc::RankOrder, "rank must be at least 1");
  if (space == Space::P1) {
    if (c2 != 0) fail(Errc::UnsupportedSpace, "c2 must be 0 on P1");
    return EvPoly({Rat(rank), Rat(rank + c1)});
  }
  // rank*(t^2+3t+2)/2 + c1*t + c1(c1+3)/2 - c2
  Rat a(rank, 2);
  Rat b = Rat(3 * rank, 2) + Rat(c1);
  Rat c = Rat(rank) + Rat(static_cast<long long>(c1) * (c1 + 3), 2) - Rat(c2);
  return EvPoly({a, b, c});
}

Rat degree_of(const EvPoly& p, int rank, Space space) {
  int n = space_dim(space);
  if (p.degree() != n)
    fail(Errc::DegreeMismatch, "expected a Hilbert polynomial of degree " + std::to_string(n));
  Rat fact(1);
  for (int k = 2; k <= n - 1; ++k) fact *= Rat(k);
  return fact * (p.coeff(n - 1) - Rat(rank) * structure_sheaf_poly(space).coeff(n - 1));
}

DeltaPoly::DeltaPoly(EvPoly p, Space space) : p_(std::move(p)), space_(space) {
  int n = space_dim(space);
  if (p_.is_zero()) fail(Errc::DegreeMismatch, "delta must be eventually positive, got 0");
  if (p_.degree() >= n)
    fail(Errc::DegreeMismatch, "delta must have degree below " + std::to_string(n));
  if (p_.leading().sign() <= 0)
    fail(Errc::DegreeMismatch, "delta must be eventually positive");
  Rat fact(1);
  for (int k = 2; k <= n - 1; ++k) fact *= Rat(k);
  tau_ = fact * p_.coeff(n - 1);
}

}  // namespace tenstab
