#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperchar/partition.hpp"
#include "hyperchar/series.hpp"
#include "hyperchar/tpoly.hpp"

namespace hyperchar {

/// Symmetric function truncated above a fixed degree, written in the
/// power-sum basis: a map from partitions lambda to Laurent-polynomial (in t)
/// coefficients of p_lambda.  The empty partition carries the degree-0 term.
///
/// Plethysm follows the rule p_k . t = t^k: composing with g substitutes
/// p_i -> p_{ik} and t -> t^k inside g for every part k of the outer
/// partition, while coefficients of the outer function are untouched.
class SymFunc {
 public:
  explicit SymFunc(int cap);
  static SymFunc zero(int cap) { return SymFunc(cap); }
  static SymFunc one(int cap);
  static SymFunc p(int k, int cap);  // the power sum p_k
  static SymFunc term(const Partition& lambda, TPoly coeff, int cap);

  int cap() const { return cap_; }
  TPoly coeff(const Partition& lambda) const;
  const std::map<Partition, TPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  SymFunc homogeneous(int n) const;  // degree-n component, same cap
  SymFunc truncated(int cap) const;

  bool operator==(const SymFunc&) const = default;
  /// Smallest degree where a and b differ, or -1 if equal.
  static int first_difference(const SymFunc& a, const SymFunc& b);

  SymFunc operator-() const;
  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
  SymFunc scaled(const TPoly& c) const;
  SymFunc scaled(const Rational& r) const;
  SymFunc times_t(int e) const;  // multiply every coefficient by t^e

  SymFunc stretched(int k) const;  // p_i -> p_{ik}, t -> t^k
  SymFunc plethysm(const SymFunc& g) const;  // this . g; g needs no degree-0 term

  /// Suspension with formal t: maps c(t) p_lambda to
  /// (-1)^{len(lambda)+1} t^{|lambda|-1} c(t) p_lambda.
  SymFunc suspension() const;

  SymFunc eval_t(const Rational& v) const;
  SymFunc d_p1() const;         // partial derivative in p_1
  SymFunc invert_unit() const;  // reciprocal; requires degree-0 term exactly 1

  /// Exponential specialization p_1 -> x, p_k -> 0 (k >= 2) as an EGF:
  /// the x^n/n! coefficient is n! times the coefficient of p_1^n.
  Series exp_specialize() const;

  std::string str() const;
  nlohmann::ordered_json degree_json(int n) const;

 private:
  int cap_;
  std::map<Partition, TPoly> terms_;
  void add_term(const Partition& lambda, TPoly c);
};

SymFunc solve_symfunc_fixpoint(const std::function<SymFunc(const SymFunc&)>& update,
                               int cap);

// Operad characters (cycle-index series), t-free.
SymFunc operad_comm(int cap);
SymFunc operad_assoc(int cap);
SymFunc operad_lie(int cap);
SymFunc operad_cyc(int cap);
SymFunc operad_perm(int cap);
SymFunc operad_prelie(int cap);
/// Dispatch by name: Comm, Assoc, Lie, Cyc, Perm, PreLie.
SymFunc operad(const std::string& name, int cap);

struct IdentityCheck {
  std::string name;
  bool pass = false;
  int first_bad_degree = -1;
};

/// Cross-validates the operad characters against each other:
/// suspended Lie . Comm = p1; Comm . Lie = Assoc; the two Koszul relations of
/// PreLie with Perm; p1 d/dp1 PreLie = Assoc . PreLie; the geometric-series
/// relation of suspended PreLie; and the derivative sum identity.
std::vector<IdentityCheck> verify_identities(int cap);

}  // namespace hyperchar
