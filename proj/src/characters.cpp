#include "hyperchar/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hyperchar {

namespace {

// (1/t) f(t p1, t^2 p2, ...): multiplies the degree-n component by t^{n-1}.
// This is the unsigned companion of the suspension; the pointed character
// systems use it to charge one t per edge around the distinguished vertex.
SymFunc graded_twist(const SymFunc& f) {
  if (!f.coeff(Partition()).is_zero())
    throw std::invalid_argument("graded_twist: degree-0 term present");
  SymFunc out(f.cap());
  for (int n = 1; n <= f.cap(); ++n) out += f.homogeneous(n).times_t(n - 1);
  return out;
}

TPoly dimension_polynomial(const SymFunc& f, int n) {
  return f.exp_specialize().coeff(n).to_tpoly();
}

int first_series_difference(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  for (int k = 0; k <= order; ++k)
    if (!(a.coeff(k) == b.coeff(k))) return k;
  return -1;
}

}  // namespace

HalBundle hal(int cap) {
  if (cap < 2) throw std::invalid_argument("hal: cap must be at least 2");
  const SymFunc p1 = SymFunc::p(1, cap);
  const SymFunc comm = operad_comm(cap);
  const SymFunc g_assoc = operad_assoc(cap).suspension().plethysm(comm);
  const SymFunc g_lie = operad_lie(cap).suspension().plethysm(comm);

  SymFunc hal_pa = solve_symfunc_fixpoint(
      [&](const SymFunc& h) { return p1 * g_assoc.plethysm(p1 - h.times_t(1)); },
      cap);
  const SymFunc x = p1 - hal_pa.times_t(1);
  SymFunc hal_p = p1 * g_lie.plethysm(x);
  SymFunc hal_a = (comm - p1).plethysm(x);
  SymFunc hal_full = hal_p + hal_a - hal_pa;
  if (int bad = SymFunc::first_difference(hal_p, p1 * hal_full.d_p1()); bad >= 0)
    throw ConsistencyError("hal: pointing relation fails at degree " +
                           std::to_string(bad));
  return {std::move(hal_pa), std::move(hal_p), std::move(hal_a),
          std::move(hal_full), cap};
}

HalBarBundle hal_bar(int cap) {
  HalBundle h = hal(cap);
  HalBarBundle out{h.hal_pa.eval_t(1), h.hal_p.eval_t(1), h.hal_a.eval_t(1),
                   h.hal.eval_t(1), cap};

  const SymFunc p1 = SymFunc::p(1, cap);
  const SymFunc sprelie = operad_prelie(cap).suspension().eval_t(1);
  const SymFunc comm_sprelie = operad_comm(cap).plethysm(sprelie);
  auto expect = [](const char* name, const SymFunc& got, const SymFunc& want) {
    if (int bad = SymFunc::first_difference(got, want); bad >= 0)
      throw ConsistencyError(std::string("hal_bar: ") + name +
                             " differs from its closed form at degree " +
                             std::to_string(bad));
  };
  expect("hal_pa", out.hal_pa, p1 - sprelie);
  expect("hal_p", out.hal_p, p1 * sprelie);
  expect("hal_a", out.hal_a, comm_sprelie - sprelie);
  expect("hal", out.hal, comm_sprelie + p1 * sprelie - p1);
  expect("hal against -suspension(M)", out.hal,
         -anticyclic_m(cap).suspension().eval_t(1));
  return out;
}

SymFunc anticyclic_m(int cap) {
  const SymFunc one = SymFunc::one(cap);
  const SymFunc p1 = SymFunc::p(1, cap);
  const SymFunc prelie = operad_prelie(cap);
  return p1 + p1 * prelie +
         (one + operad_comm(cap).plethysm(prelie)).invert_unit() - one;
}

SymFunc wh_pp(int cap) {
  return operad_comm(cap).plethysm(operad_prelie(cap).suspension());
}

SymFunc ce_formula(int cap) {
  SymFunc out(cap);
  for (int n = 1; n <= cap; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      const int m1 = lam.mult(1);
      TPoly term = m1 == 0 ? TPoly::monomial(-1, Rational(-1))
                           : (TPoly(m1) - TPoly::t()).pow(m1 - 1);
      for (int k = 2; k <= n; ++k) {
        const int mk = lam.mult(k);
        if (mk == 0) continue;
        Rational fk = 0;
        for (int d = 1; d <= k; ++d)
          if (k % d == 0) fk += Rational(d * lam.mult(d));
        const TPoly base = TPoly(fk) - TPoly::t(k);
        term *= base.pow(mk) - base.pow(mk - 1) * Rational(k * mk);
      }
      out += SymFunc::term(lam, term * Rational(Int(1), lam.z()), cap);
    }
  }

  const SymFunc via_plethysm =
      operad_comm(cap).suspension().plethysm(operad_prelie(cap));
  if (int bad = SymFunc::first_difference(out, via_plethysm); bad >= 0) {
    std::string where = "?";
    for (const Partition& lam : partitions_of(bad))
      if (!(out.coeff(lam) == via_plethysm.coeff(lam))) {
        where = lam.str();
        break;
      }
    throw ConsistencyError("ce_formula: differs from the plethysm at degree " +
                           std::to_string(bad) + ", partition " + where);
  }
  return out;
}

SymFunc euler_generators(int cap) {
  return operad_comm(cap).plethysm(operad_prelie(cap).suspension().eval_t(1));
}

int euler_generators_check(int cap) {
  const SymFunc eg = euler_generators(cap);
  const SymFunc hb = hal_bar(cap).hal;
  const SymFunc p1 = SymFunc::p(1, cap);
  return SymFunc::first_difference(eg, p1 - (p1 * hb.d_p1() - hb));
}

AnnexeBundle annexe_characters(int cap) {
  if (cap < 2)
    throw std::invalid_argument("annexe_characters: cap must be at least 2");
  const SymFunc p1 = SymFunc::p(1, cap);
  const SymFunc one = SymFunc::one(cap);
  const SymFunc comm = operad_comm(cap);
  const SymFunc tw_comm = graded_twist(comm);
  const SymFunc tw_assoc = graded_twist(operad_assoc(cap));
  const SymFunc tw_cyc = graded_twist(operad_cyc(cap));

  SymFunc ha_p = solve_symfunc_fixpoint(
      [&](const SymFunc& h) {
        return p1 * tw_comm.plethysm(comm.plethysm(p1 + h.times_t(1)));
      },
      cap);
  const SymFunc x = p1 + ha_p.times_t(1);
  const SymFunc e = comm.plethysm(x);
  const SymFunc root = tw_comm.plethysm(e);
  SymFunc ha_pa = p1 * e * (one + root.times_t(1));
  SymFunc ha_a = (comm - p1).plethysm(x);
  SymFunc ha = ha_p + ha_a - ha_pa;

  SymFunc hac_pa = solve_symfunc_fixpoint(
      [&](const SymFunc& h) {
        return p1 * tw_assoc.plethysm(comm.plethysm(p1 + h.times_t(1)));
      },
      cap);
  const SymFunc xc = p1 + hac_pa.times_t(1);
  const SymFunc ec = comm.plethysm(xc);
  SymFunc hac_p = p1 * tw_cyc.plethysm(ec);
  SymFunc hac_a = (comm - p1).plethysm(xc);
  SymFunc hac = hac_p + hac_a - hac_pa;

  if (int bad = SymFunc::first_difference(ha_p, p1 * ha.d_p1()); bad >= 0)
    throw ConsistencyError(
        "annexe_characters: hypertree pointing relation fails at degree " +
        std::to_string(bad));
  if (int bad = SymFunc::first_difference(hac_p, p1 * hac.d_p1()); bad >= 0)
    throw ConsistencyError(
        "annexe_characters: cyclic pointing relation fails at degree " +
        std::to_string(bad));

  return {std::move(ha),     std::move(ha_p),  std::move(ha_a),
          std::move(ha_pa),  std::move(hac),   std::move(hac_p),
          std::move(hac_a),  std::move(hac_pa), cap};
}

std::vector<IdentityCheck> annexe_check(int max_n, int egf_order) {
  const int cap = std::max({max_n, egf_order, 2});
  const AnnexeBundle b = annexe_characters(cap);
  std::vector<IdentityCheck> out;

  for (int n = 2; n <= max_n; ++n) {
    int bad = SymFunc::first_difference(
        b.ha.homogeneous(n), perm_character(Family::Hypertree, n, max_n));
    out.push_back({"ha_perm_char_n" + std::to_string(n), bad < 0, bad});
    bad = SymFunc::first_difference(
        b.hac.homogeneous(n),
        perm_character(Family::CyclicHypertree, n, max_n));
    out.push_back({"hac_perm_char_n" + std::to_string(n), bad < 0, bad});
  }

  const HypertreeSeriesBundle hs = solve_hypertree_system(egf_order);
  const CyclicSeriesBundle cs = solve_cyclic_system(egf_order, false);
  auto egf = [&](const std::string& name, const SymFunc& f, const Series& s) {
    int bad = first_series_difference(f.exp_specialize(), s);
    out.push_back({name + "_egf", bad < 0, bad});
  };
  egf("ha", b.ha, hs.ha.subst_u_one());
  egf("ha_p", b.ha_p, hs.ha_p.subst_u_one());
  egf("ha_a", b.ha_a, hs.ha_a.subst_u_one());
  egf("ha_pa", b.ha_pa, hs.ha_pa.subst_u_one());
  egf("hac", b.hac, cs.hac);
  egf("hac_p", b.hac_p, cs.hac_p);
  egf("hac_a", b.hac_a, cs.hac_a);
  egf("hac_pa", b.hac_pa, cs.hac_pa);
  return out;
}

nlohmann::ordered_json ConjectureReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["equal"] = equal;
  j["dimension_check"] = dimension_check;
  j["difference"] = difference.degree_json(n);
  return j;
}

ConjectureReport conjecture_report(int n, int max_n) {
  if (n < 2) throw std::invalid_argument("conjecture_report: need n >= 2");
  SymFunc lhs = whitney_character(Family::Hypertree, n, max_n);
  SymFunc rhs = hal(n).hal.homogeneous(n);
  SymFunc diff = lhs - rhs;
  const bool equal = diff.is_zero();
  const TPoly want = tau(n).at_minus_t();
  const bool dims = dimension_polynomial(lhs, n) == want &&
                    dimension_polynomial(rhs, n) == want;
  return {n, std::move(lhs), std::move(rhs), std::move(diff), equal, dims};
}

}  // namespace hyperchar
