#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperchar/rational.hpp"
#include "hyperchar/tpoly.hpp"

namespace hyperchar {

/// Exponent vector of one monomial: t^t_exp * s^s_exp * prod_i u_i^{u_exp[i-2]}.
/// t may be negative (Laurent); s and the u exponents are nonnegative.
/// The u vector stores the exponent of u_{j+2} at index j and never keeps
/// trailing zeros, so equal monomials compare equal and the ordering
/// (t, s, u lexicographic) is a total canonical term order.
struct Monomial {
  int t = 0;
  int s = 0;
  std::vector<int> u;

  void trim();
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse multivariate polynomial over Rational in t (Laurent), s, u_2, u_3, ...
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(Rational c);
  MultiPoly(int c) : MultiPoly(Rational(c)) {}

  static MultiPoly var_t(int e = 1);
  static MultiPoly var_s(int e = 1);
  static MultiPoly var_u(int index);  // u_index, index >= 2
  static MultiPoly monomial(Monomial m, Rational coeff);
  static MultiPoly from_tpoly(const TPoly& p);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;  // coefficient of the trivial monomial
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& r);
  friend MultiPoly operator*(MultiPoly a, const Rational& r) { return a *= r; }

  MultiPoly times_t(int e) const;  // multiply by t^e, e may be negative

  MultiPoly subst_u_one() const;            // u_i -> 1 for all i
  MultiPoly subst_t(const Rational& v) const;  // t -> v (v != 0 if Laurent terms)
  TPoly to_tpoly() const;  // requires: no s, no u variables

  bool operator==(const MultiPoly&) const = default;

  std::string str() const;
  nlohmann::ordered_json to_json() const;

 private:
  std::map<Monomial, Rational> terms_;
  void add_term(Monomial m, Rational c);
};

}  // namespace hyperchar
