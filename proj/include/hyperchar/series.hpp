#pragma once

#include <functional>
#include <vector>

#include <json.hpp>

#include "hyperchar/multipoly.hpp"

namespace hyperchar {

/// Truncated exponential generating series sum_{n=0..order} c_n x^n / n!
/// with MultiPoly coefficients.  All arithmetic respects the EGF convention,
/// so the product is the binomial convolution.
class Series {
 public:
  explicit Series(int order);  // zero series
  static Series x(int order);
  static Series constant(MultiPoly c, int order);

  int order() const { return order_; }
  const MultiPoly& coeff(int n) const;
  void set_coeff(int n, MultiPoly c);
  bool is_zero() const;
  /// Smallest n with c_n != 0, or order()+1 for the zero series.
  int valuation() const;

  bool operator==(const Series&) const = default;

  // Arithmetic requires matching truncation orders.
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  Series operator-() const;
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }
  Series scaled(const MultiPoly& c) const;
  Series scaled(const Rational& r) const;

  Series times_x() const;   // multiply by x (degree-order coefficient falls off)
  Series div_x() const;     // divide by x; requires c_0 = 0
  Series times_t(int e) const;
  Series derivative() const;  // d/dx, order drops by one
  Series x_ddx() const;       // x * d/dx
  Series truncated(int new_order) const;  // new_order <= order

  Series exp() const;  // requires c_0 = 0
  Series log() const;  // requires c_0 = 1

  /// 1/(1 - w) = sum w^k for w with zero constant term.
  static Series inv_one_minus(const Series& w);

  Series subst_u_one() const;
  Series subst_t(const Rational& v) const;

  nlohmann::ordered_json to_json() const;

 private:
  int order_;
  std::vector<MultiPoly> c_;
  void check_same_order(const Series& o) const;
};

/// sum_{n>=1, n+1 <= u_cap} u_{n+1} z^n / n!        (shift = 0)
/// sum_{n>=1, n+1 <= u_cap} u_{n+1} z^{n+1} / (n+1)! (shift = 1)
/// z must have zero constant term; u_cap defaults to order+1 and must be
/// at least order (indices above order+1 cannot contribute below the cutoff).
Series edge_sum(const Series& z, int shift, int u_cap = -1);

/// Degree-by-degree fixpoint of a contractive update map (the degree-n output
/// coefficient may depend only on input degrees < n).  Starts from zero,
/// iterates until stable, and verifies with one extra application; a
/// non-contractive map is reported with the first still-changing degree.
Series solve_fixpoint(const std::function<Series(const Series&)>& update, int order);

}  // namespace hyperchar
