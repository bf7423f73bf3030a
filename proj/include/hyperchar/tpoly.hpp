#pragma once

#include <map>
#include <string>

#include "hyperchar/rational.hpp"

namespace hyperchar {

/// Laurent polynomial in the grading variable t with Rational coefficients.
/// Zero coefficients are never stored; the map order gives a canonical term order.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(Rational c);
  TPoly(int c) : TPoly(Rational(c)) {}

  static TPoly t(int e = 1);                     // t^e
  static TPoly monomial(int e, Rational coeff);  // coeff * t^e

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const;
  const std::map<int, Rational>& terms() const { return c_; }
  Rational coeff(int e) const;
  int min_exponent() const;  // requires nonzero
  int max_exponent() const;  // requires nonzero

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator*=(const Rational& r);
  friend TPoly operator*(TPoly a, const Rational& r) { return a *= r; }

  TPoly times_t(int e) const;   // multiply by t^e (shift all exponents)
  TPoly stretched(int k) const; // t -> t^k, k >= 1
  TPoly at_minus_t() const;     // t -> -t
  TPoly pow(int k) const;       // k >= 0
  Rational eval(const Rational& v) const;

  bool operator==(const TPoly&) const = default;

  std::string str(const std::string& var = "t") const;  // ascending exponents

 private:
  std::map<int, Rational> c_;
};

}  // namespace hyperchar
