#include "hyperchar/genseries.hpp"

#include <sstream>

namespace hyperchar {

namespace {

void require_order(int order) {
  if (order < 2)
    throw std::invalid_argument("truncation order must be at least 2");
}

// Dense polynomials in s with ascending coefficients, local to the
// characteristic-polynomial recursion.
using SPoly = std::vector<Rational>;

SPoly spoly_mul(const SPoly& a, const SPoly& b) {
  if (a.empty() || b.empty()) return {};
  SPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

SPoly spoly_pow(const SPoly& a, int k) {
  SPoly r{Rational(1)};
  for (int i = 0; i < k; ++i) r = spoly_mul(r, a);
  return r;
}

void spoly_sub(SPoly& a, const SPoly& b, const Rational& scale) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= scale * b[i];
}

}  // namespace

HypertreeSeriesBundle solve_hypertree_system(int order) {
  require_order(order);
  const Series x = Series::x(order);
  const Series one = Series::constant(MultiPoly(1), order);
  // Vertex-pointed series: the point carries a nonempty set of edges (each
  // edge weighted t, one global t cancelled), and every edge is a set of
  // >= 1 further vertices carrying their own vertex-pointed structure.
  Series ha_p = solve_fixpoint(
      [&](const Series& f) {
        Series y = edge_sum(x + f.times_t(1), 0);
        return (y.times_t(1).exp() - one).times_t(-1).times_x();
      },
      order);
  Series z = x + ha_p.times_t(1);
  Series y = edge_sum(z, 0);
  Series ha_a = edge_sum(z, 1);
  Series ha_pa = (y * y.times_t(1).exp()).times_x();
  Series ha = ha_p + ha_a - ha_pa;
  return {std::move(ha), std::move(ha_p), std::move(ha_a), std::move(ha_pa),
          std::move(y)};
}

CyclicSeriesBundle solve_cyclic_system(int order, bool weighted) {
  require_order(order);
  const Series x = Series::x(order);
  const Series one = Series::constant(MultiPoly(1), order);
  // Edge neighborhood of a vertex given the flag-pointed series; the
  // simplified system drops the edge-size variables (u_k = 1).
  auto neighborhood = [&](const Series& f) {
    Series z = x + f.times_t(1);
    if (weighted) return edge_sum(z, 0);
    return z.exp() - one;
  };
  // Flag-pointed: the marked vertex carries a linear order of further edges,
  // i.e. a geometric series in t * yc beyond the marked edge.
  Series hac_pa = solve_fixpoint(
      [&](const Series& f) {
        Series yc = neighborhood(f);
        return (yc * Series::inv_one_minus(yc.times_t(1))).times_x();
      },
      order);
  Series yc = neighborhood(hac_pa);
  Series z = x + hac_pa.times_t(1);
  Series hac_p = -(one - yc.times_t(1)).log().times_t(-1).times_x();
  Series hac_a = weighted ? edge_sum(z, 1) : z.exp() - one - z;
  Series hac = hac_p + hac_a - hac_pa;
  return {std::move(hac), std::move(hac_p), std::move(hac_a),
          std::move(hac_pa), std::move(yc), weighted};
}

TPoly tau(const CyclicSeriesBundle& simplified, int n) {
  if (simplified.weighted)
    throw std::invalid_argument("tau: expects the simplified (u = 1) bundle");
  if (n < 2 || n > simplified.hac.order())
    throw std::invalid_argument("tau: need 2 <= n <= truncation order");
  return simplified.hac.coeff(n).to_tpoly();
}

TPoly tau(int n) {
  if (n < 2) throw std::invalid_argument("tau: need n >= 2");
  return tau(solve_cyclic_system(n, false), n);
}

Rational CharPoly::eval(const Rational& v) const {
  Rational r = 0;
  Rational power = 1;
  for (const Rational& c : coeffs) {
    r += c * power;
    power *= v;
  }
  return r;
}

std::string CharPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j) {
    const Rational& c = coeffs[j];
    if (c == 0 && !(first && j == 0)) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << rational_str(mag);
      continue;
    }
    if (mag != 1) os << rational_str(mag) << "*";
    os << "s";
    if (j != 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

MultiPoly CharPoly::to_multipoly() const {
  MultiPoly r;
  for (size_t j = 0; j < coeffs.size(); ++j)
    r += MultiPoly::var_s(static_cast<int>(j)) * coeffs[j];
  return r;
}

namespace {

CharPoly chi_via_tau(int n) {
  // chi_n(s) = s^{n-2} tau_n(-1/s): the t^k coefficient of tau lands on
  // s^{n-2-k} with sign (-1)^k.
  TPoly t = tau(n);
  CharPoly chi;
  chi.n = n;
  chi.coeffs.assign(n - 1, Rational(0));
  for (int k = 0; k <= n - 2; ++k) {
    Rational c = t.coeff(k);
    chi.coeffs[n - 2 - k] = (k % 2 == 0) ? c : -c;
  }
  return chi;
}

CharPoly chi_triangular(int n) {
  // The weighted hypertree series turns sum_T chi_T = s^{n-2} (chi_T the
  // product of chi_{|edge|} over edges of T) into a triangular system: the
  // u_n-linear monomial of n![x^n] ha is the single-edge hypertree, so
  // chi_n = s^{n-2} - sum over the other monomials of their chi products.
  HypertreeSeriesBundle b = solve_hypertree_system(n);
  std::vector<SPoly> chis(n + 1);
  chis[2] = {Rational(1)};
  for (int m = 3; m <= n; ++m) {
    SPoly acc(m - 1, Rational(0));
    acc[m - 2] = 1;  // s^{m-2}
    bool saw_linear = false;
    for (const auto& [mono, coef] : b.ha.coeff(m).terms()) {
      if (mono.s != 0)
        throw ConsistencyError("chi: unexpected s variable in the hypertree series");
      int edges = 0;
      for (int e : mono.u) edges += e;
      if (mono.t != edges - 1)
        throw ConsistencyError("chi: t-grading of the hypertree series is off");
      if (edges == 1 && static_cast<int>(mono.u.size()) == m - 1 &&
          mono.u.back() == 1) {
        if (coef != 1)
          throw ConsistencyError("chi: single-edge hypertree has weight != 1");
        saw_linear = true;
        continue;  // the unknown chi_m itself
      }
      SPoly prod{Rational(1)};
      for (size_t i = 0; i < mono.u.size(); ++i)
        if (mono.u[i] > 0) prod = spoly_mul(prod, spoly_pow(chis[i + 2], mono.u[i]));
      spoly_sub(acc, prod, coef);
    }
    if (!saw_linear)
      throw ConsistencyError("chi: missing single-edge monomial at degree " +
                             std::to_string(m));
    acc.resize(m - 1, Rational(0));
    chis[m] = std::move(acc);
  }
  CharPoly chi;
  chi.n = n;
  chi.coeffs = chis[n];
  return chi;
}

}  // namespace

CharPoly chi(int n, ChiMethod method) {
  if (n < 2) throw std::invalid_argument("chi: need n >= 2");
  return method == ChiMethod::ViaTau ? chi_via_tau(n) : chi_triangular(n);
}

CharPoly chi_checked(int n) {
  CharPoly a = chi(n, ChiMethod::ViaTau);
  CharPoly b = chi(n, ChiMethod::Triangular);
  if (!(a == b))
    throw ConsistencyError("chi: methods disagree at n = " + std::to_string(n) +
                           ": " + a.str() + " vs " + b.str());
  return a;
}

Rational mobius_hat(int n) {
  if (n < 3) throw std::invalid_argument("mobius_hat: need n >= 3");
  return -chi(n, ChiMethod::ViaTau).eval(1);
}

Theorem1Report verify_functional_equation(int order) {
  require_order(order);
  Theorem1Report rep;
  rep.order = order;
  CyclicSeriesBundle b = solve_cyclic_system(order + 1, false);
  const Series B = Series::x(order);
  const Series one = Series::constant(MultiPoly(1), order);
  Series A = b.hac.derivative();
  // Build z one order higher so z/B keeps an exact top coefficient.
  Series zfull = Series::x(order + 1) + b.hac_pa.times_t(1);
  Series z = zfull.truncated(order);
  // A = -(1/t) ln(B/z) = (1/t) ln(z/B), and B = z - t z (exp(z) - 1).
  Series r1 = A - zfull.div_x().truncated(order).log().times_t(-1);
  Series r2 = B - z + (z * (z.exp() - one)).times_t(1);
  rep.system_ok = r1.is_zero() && r2.is_zero();
  if (!rep.system_ok) {
    for (int n = 0; n <= order; ++n)
      if (!r1.coeff(n).is_zero() || !r2.coeff(n).is_zero()) {
        rep.system_bad_degree = n;
        break;
      }
  }
  // At t = -1 both A and z collapse to the rooted-tree series
  // W(B) = sum_n (-1)^{n-1} n^{n-1} B^n / n!.
  Series w(order);
  for (int n = 1; n <= order; ++n) {
    Rational c = rational_pow(Rational(n), n - 1);
    if (n % 2 == 0) c = -c;
    w.set_coeff(n, MultiPoly(c));
  }
  Series a1 = A.subst_t(Rational(-1));
  Series z1 = z.subst_t(Rational(-1));
  rep.lambert_ok = a1 == w && z1 == w;
  if (!rep.lambert_ok) {
    for (int n = 0; n <= order; ++n)
      if (a1.coeff(n) != w.coeff(n) || z1.coeff(n) != w.coeff(n)) {
        rep.lambert_bad_degree = n;
        break;
      }
  }
  return rep;
}

}  // namespace hyperchar
