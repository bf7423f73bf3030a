#include "hyperchar/series.hpp"

#include <string>

namespace hyperchar {

Series::Series(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("Series: order must be nonnegative");
  c_.resize(order + 1);
}

Series Series::x(int order) {
  Series s(order);
  if (order >= 1) s.c_[1] = MultiPoly(1);
  return s;
}

Series Series::constant(MultiPoly c, int order) {
  Series s(order);
  s.c_[0] = std::move(c);
  return s;
}

const MultiPoly& Series::coeff(int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("Series::coeff: degree out of range");
  return c_[n];
}

void Series::set_coeff(int n, MultiPoly c) {
  if (n < 0 || n > order_) throw std::out_of_range("Series::set_coeff: degree out of range");
  c_[n] = std::move(c);
}

bool Series::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

int Series::valuation() const {
  for (int n = 0; n <= order_; ++n)
    if (!c_[n].is_zero()) return n;
  return order_ + 1;
}

void Series::check_same_order(const Series& o) const {
  if (order_ != o.order_)
    throw std::invalid_argument("Series: truncation order mismatch (" +
                                std::to_string(order_) + " vs " +
                                std::to_string(o.order_) + ")");
}

Series operator+(const Series& a, const Series& b) {
  a.check_same_order(b);
  Series r(a.order_);
  for (int n = 0; n <= a.order_; ++n) r.c_[n] = a.c_[n] + b.c_[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  a.check_same_order(b);
  Series r(a.order_);
  for (int n = 0; n <= a.order_; ++n) r.c_[n] = a.c_[n] - b.c_[n];
  return r;
}

Series operator*(const Series& a, const Series& b) {
  a.check_same_order(b);
  Series r(a.order_);
  for (int n = 0; n <= a.order_; ++n) {
    MultiPoly acc;
    for (int k = 0; k <= n; ++k) {
      if (a.c_[k].is_zero() || b.c_[n - k].is_zero()) continue;
      acc += (a.c_[k] * b.c_[n - k]) * Rational(binomial(n, k));
    }
    r.c_[n] = std::move(acc);
  }
  return r;
}

Series Series::operator-() const {
  Series r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = -c_[n];
  return r;
}

Series Series::scaled(const MultiPoly& c) const {
  Series r(order_);
  for (int n = 0; n <= order_; ++n)
    if (!c_[n].is_zero()) r.c_[n] = c_[n] * c;
  return r;
}

Series Series::scaled(const Rational& r0) const {
  Series r(order_);
  for (int n = 0; n <= order_; ++n) {
    r.c_[n] = c_[n];
    r.c_[n] *= r0;
  }
  return r;
}

Series Series::times_x() const {
  // x * sum c_n x^n/n! = sum n c_{n-1} x^n/n!
  Series r(order_);
  for (int n = 1; n <= order_; ++n) {
    r.c_[n] = c_[n - 1];
    r.c_[n] *= Rational(n);
  }
  return r;
}

Series Series::div_x() const {
  if (!c_[0].is_zero())
    throw std::invalid_argument("Series::div_x: nonzero constant term");
  Series r(order_);
  for (int n = 0; n < order_; ++n) {
    r.c_[n] = c_[n + 1];
    r.c_[n] *= Rational(1, n + 1);
  }
  return r;
}

Series Series::times_t(int e) const {
  Series r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n].times_t(e);
  return r;
}

Series Series::derivative() const {
  if (order_ == 0) throw std::invalid_argument("Series::derivative: order 0");
  Series r(order_ - 1);
  for (int n = 0; n < order_; ++n) r.c_[n] = c_[n + 1];
  return r;
}

Series Series::x_ddx() const {
  Series r(order_);
  for (int n = 1; n <= order_; ++n) {
    r.c_[n] = c_[n];
    r.c_[n] *= Rational(n);
  }
  return r;
}

Series Series::truncated(int new_order) const {
  if (new_order < 0 || new_order > order_)
    throw std::invalid_argument("Series::truncated: bad order");
  Series r(new_order);
  for (int n = 0; n <= new_order; ++n) r.c_[n] = c_[n];
  return r;
}

Series Series::exp() const {
  if (!c_[0].is_zero())
    throw std::invalid_argument("Series::exp: nonzero constant term");
  // F' = G' F with F_0 = 1.
  Series f(order_);
  f.c_[0] = MultiPoly(1);
  for (int n = 1; n <= order_; ++n) {
    MultiPoly acc;
    for (int j = 0; j < n; ++j) {
      if (c_[j + 1].is_zero() || f.c_[n - 1 - j].is_zero()) continue;
      acc += (c_[j + 1] * f.c_[n - 1 - j]) * Rational(binomial(n - 1, j));
    }
    f.c_[n] = std::move(acc);
  }
  return f;
}

Series Series::log() const {
  if (c_[0] != MultiPoly(1))
    throw std::invalid_argument("Series::log: constant term must be 1");
  // Inverts exp: G_n = F_n - sum_{j<n-1} C(n-1,j) G_{j+1} F_{n-1-j}.
  Series g(order_);
  for (int n = 1; n <= order_; ++n) {
    MultiPoly acc = c_[n];
    for (int j = 0; j < n - 1; ++j) {
      if (g.c_[j + 1].is_zero() || c_[n - 1 - j].is_zero()) continue;
      acc -= (g.c_[j + 1] * c_[n - 1 - j]) * Rational(binomial(n - 1, j));
    }
    g.c_[n] = std::move(acc);
  }
  return g;
}

Series Series::inv_one_minus(const Series& w) {
  if (!w.coeff(0).is_zero())
    throw std::invalid_argument("Series::inv_one_minus: nonzero constant term");
  Series r = Series::constant(MultiPoly(1), w.order());
  Series p = Series::constant(MultiPoly(1), w.order());
  for (int k = 1; k <= w.order(); ++k) {
    p *= w;
    if (p.is_zero()) break;
    r += p;
  }
  return r;
}

Series Series::subst_u_one() const {
  Series r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n].subst_u_one();
  return r;
}

Series Series::subst_t(const Rational& v) const {
  Series r(order_);
  for (int n = 0; n <= order_; ++n) r.c_[n] = c_[n].subst_t(v);
  return r;
}

nlohmann::ordered_json Series::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order_;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : c_) coeffs.push_back(c.to_json());
  j["coeffs"] = std::move(coeffs);
  return j;
}

Series edge_sum(const Series& z, int shift, int u_cap) {
  if (shift != 0 && shift != 1)
    throw std::invalid_argument("edge_sum: shift must be 0 or 1");
  if (!z.coeff(0).is_zero())
    throw std::invalid_argument("edge_sum: z must have zero constant term");
  const int order = z.order();
  if (u_cap < 0) u_cap = order + 1;
  if (u_cap < order)
    throw std::invalid_argument("edge_sum: u cap must be at least the truncation order");
  Series acc(order);
  Series zpow = Series::constant(MultiPoly(1), order);
  for (int n = 1; n + 1 <= u_cap; ++n) {
    zpow *= z;
    if (zpow.is_zero()) break;
    const int extra = shift == 0 ? 0 : 1;
    Series term = zpow;
    if (extra) term *= z;
    if (term.is_zero() && extra) break;
    acc += term.scaled(MultiPoly::var_u(n + 1)).scaled(
        Rational(Int(1), factorial(n + extra)));
  }
  return acc;
}

Series solve_fixpoint(const std::function<Series(const Series&)>& update, int order) {
  Series f(order);
  for (int i = 0; i <= order + 1; ++i) {
    Series g = update(f);
    if (g.order() != order)
      throw std::invalid_argument("solve_fixpoint: update changed the truncation order");
    if (g == f) return f;
    f = std::move(g);
  }
  Series g = update(f);
  if (g == f) return f;
  int bad = 0;
  while (g.coeff(bad) == f.coeff(bad)) ++bad;
  throw ConsistencyError(
      "solve_fixpoint: update is not contractive; coefficient at degree " +
      std::to_string(bad) + " is still changing after " +
      std::to_string(order + 2) + " iterations");
}

}  // namespace hyperchar
