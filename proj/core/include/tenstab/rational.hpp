#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "tenstab/errors.hpp"

namespace tenstab {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always kept in canonical reduced form with a
/// positive denominator; there is no floating point anywhere in this library.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long long n) : v_(n) {}
  Rat(const Int& n) : v_(n) {}
  Rat(const Int& num, const Int& den) {
    if (den == 0) fail(Errc::ZeroDenominator, "rational with denominator 0");
    v_ = boost::multiprecision::cpp_rational(num, den);
  }
  Rat(long long num, long long den) : Rat(Int(num), Int(den)) {}

  static Rat parse(const std::string& s);

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  std::string str() const {
    std::string out = numerator().str();
    if (!is_integer()) out += "/" + denominator().str();
    return out;
  }

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.v_ == 0) fail(Errc::ZeroDenominator, "division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { Rat r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

 private:
  boost::multiprecision::cpp_rational v_;
};

inline Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

inline Rat Rat::parse(const std::string& s) {
  auto strip = [](const std::string& t) {
    size_t b = t.find_first_not_of(" \t");
    size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return t.substr(b, e - b + 1);
  };
  std::string body = strip(s);
  if (body.empty()) fail(Errc::ParseError, "empty rational literal");
  try {
    size_t slash = body.find('/');
    if (slash == std::string::npos) return Rat(Int(body));
    Int num(strip(body.substr(0, slash)));
    Int den(strip(body.substr(slash + 1)));
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "bad rational literal '" + body + "'");
  }
}

}  // namespace tenstab
