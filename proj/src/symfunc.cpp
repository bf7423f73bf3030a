#include "hyperchar/symfunc.hpp"

#include <sstream>

namespace hyperchar {

SymFunc::SymFunc(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("SymFunc: cap must be nonnegative");
}

SymFunc SymFunc::one(int cap) {
  SymFunc f(cap);
  f.terms_.emplace(Partition(), TPoly(1));
  return f;
}

SymFunc SymFunc::p(int k, int cap) {
  if (k < 1) throw std::invalid_argument("SymFunc::p: index must be positive");
  SymFunc f(cap);
  if (k <= cap) f.terms_.emplace(Partition({k}), TPoly(1));
  return f;
}

SymFunc SymFunc::term(const Partition& lambda, TPoly coeff, int cap) {
  SymFunc f(cap);
  if (lambda.weight() <= cap && !coeff.is_zero())
    f.terms_.emplace(lambda, std::move(coeff));
  return f;
}

TPoly SymFunc::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? TPoly() : it->second;
}

SymFunc SymFunc::homogeneous(int n) const {
  SymFunc f(cap_);
  for (const auto& [l, c] : terms_)
    if (l.weight() == n) f.terms_.emplace(l, c);
  return f;
}

SymFunc SymFunc::truncated(int cap) const {
  SymFunc f(cap);
  for (const auto& [l, c] : terms_)
    if (l.weight() <= cap) f.terms_.emplace(l, c);
  return f;
}

int SymFunc::first_difference(const SymFunc& a, const SymFunc& b) {
  int cap = std::min(a.cap_, b.cap_);
  for (int n = 0; n <= cap; ++n)
    if (a.homogeneous(n).terms_ != b.homogeneous(n).terms_) return n;
  return -1;
}

void SymFunc::add_term(const Partition& lambda, TPoly c) {
  if (c.is_zero() || lambda.weight() > cap_) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFunc SymFunc::operator-() const {
  SymFunc f(cap_);
  for (const auto& [l, c] : terms_) f.terms_.emplace(l, -c);
  return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
  if (cap_ != o.cap_) throw std::invalid_argument("SymFunc: cap mismatch");
  for (const auto& [l, c] : o.terms_) add_term(l, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
  if (cap_ != o.cap_) throw std::invalid_argument("SymFunc: cap mismatch");
  for (const auto& [l, c] : o.terms_) add_term(l, -c);
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) {
  if (a.cap_ != b.cap_) throw std::invalid_argument("SymFunc: cap mismatch");
  SymFunc r(a.cap_);
  for (const auto& [la, ca] : a.terms_)
    for (const auto& [lb, cb] : b.terms_) {
      if (la.weight() + lb.weight() > a.cap_) continue;
      r.add_term(la.merged(lb), ca * cb);
    }
  return r;
}

SymFunc SymFunc::scaled(const TPoly& c) const {
  SymFunc r(cap_);
  for (const auto& [l, co] : terms_) r.add_term(l, co * c);
  return r;
}

SymFunc SymFunc::scaled(const Rational& v) const {
  SymFunc r(cap_);
  for (const auto& [l, co] : terms_) r.add_term(l, co * v);
  return r;
}

SymFunc SymFunc::times_t(int e) const {
  SymFunc r(cap_);
  for (const auto& [l, co] : terms_) r.terms_.emplace(l, co.times_t(e));
  return r;
}

SymFunc SymFunc::stretched(int k) const {
  SymFunc r(cap_);
  for (const auto& [l, co] : terms_) {
    if (l.weight() * k > cap_) continue;
    r.terms_.emplace(l.stretched(k), co.stretched(k));
  }
  return r;
}

SymFunc SymFunc::plethysm(const SymFunc& g) const {
  if (cap_ != g.cap_) throw std::invalid_argument("SymFunc: cap mismatch");
  if (!g.coeff(Partition()).is_zero())
    throw std::invalid_argument("SymFunc::plethysm: inner function has a degree-0 term");
  SymFunc result(cap_);
  std::map<int, SymFunc> stretched_g;
  for (const auto& [lambda, c] : terms_) {
    if (lambda.empty()) {
      result.add_term(Partition(), c);
      continue;
    }
    if (lambda.weight() > cap_) continue;
    SymFunc prod = SymFunc::one(cap_);
    for (int k : lambda.parts()) {
      auto it = stretched_g.find(k);
      if (it == stretched_g.end())
        it = stretched_g.emplace(k, g.stretched(k)).first;
      prod = prod * it->second;
      if (prod.is_zero()) break;
    }
    result += prod.scaled(c);
  }
  return result;
}

SymFunc SymFunc::suspension() const {
  SymFunc r(cap_);
  for (const auto& [l, c] : terms_) {
    TPoly nc = c.times_t(l.weight() - 1);
    if ((l.length() + 1) % 2 != 0) nc = -nc;
    r.terms_.emplace(l, std::move(nc));
  }
  return r;
}

SymFunc SymFunc::eval_t(const Rational& v) const {
  SymFunc r(cap_);
  for (const auto& [l, c] : terms_) r.add_term(l, TPoly(c.eval(v)));
  return r;
}

SymFunc SymFunc::d_p1() const {
  SymFunc r(cap_);
  for (const auto& [l, c] : terms_) {
    int m = l.mult(1);
    if (m == 0) continue;
    r.add_term(l.without_one_part_one(), c * Rational(m));
  }
  return r;
}

SymFunc SymFunc::invert_unit() const {
  if (coeff(Partition()) != TPoly(1))
    throw std::invalid_argument("SymFunc::invert_unit: degree-0 term must be 1");
  SymFunc g = *this - SymFunc::one(cap_);  // no degree-0 term now
  SymFunc r = SymFunc::one(cap_);
  SymFunc pow = SymFunc::one(cap_);
  for (int k = 1; k <= cap_; ++k) {
    pow = pow * g;
    if (pow.is_zero()) break;
    if (k % 2 == 0)
      r += pow;
    else
      r -= pow;
  }
  return r;
}

Series SymFunc::exp_specialize() const {
  Series s(cap_);
  s.set_coeff(0, MultiPoly::from_tpoly(coeff(Partition())));
  std::vector<int> ones;
  for (int n = 1; n <= cap_; ++n) {
    ones.push_back(1);
    TPoly c = coeff(Partition(ones));
    if (c.is_zero()) continue;
    MultiPoly m = MultiPoly::from_tpoly(c);
    m *= Rational(factorial(n));
    s.set_coeff(n, std::move(m));
  }
  return s;
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!l.empty()) {
      os << "*p" << l.str();
    }
  }
  return os.str();
}

nlohmann::ordered_json SymFunc::degree_json(int n) const {
  nlohmann::ordered_json j;
  j["degree"] = n;
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [l, c] : terms_) {
    if (l.weight() != n) continue;
    nlohmann::ordered_json coef;
    for (const auto& [e, q] : c.terms())
      coef["t^" + std::to_string(e)] = rational_str(q);
    terms.push_back({{"partition", l.parts()}, {"coef", std::move(coef)}});
  }
  j["terms"] = std::move(terms);
  return j;
}

SymFunc solve_symfunc_fixpoint(const std::function<SymFunc(const SymFunc&)>& update,
                               int cap) {
  SymFunc f(cap);
  for (int i = 0; i <= cap + 1; ++i) {
    SymFunc g = update(f);
    if (g.cap() != cap)
      throw std::invalid_argument("solve_symfunc_fixpoint: update changed the cap");
    if (g == f) return f;
    f = std::move(g);
  }
  SymFunc g = update(f);
  if (g == f) return f;
  throw ConsistencyError(
      "solve_symfunc_fixpoint: update is not contractive; degree " +
      std::to_string(SymFunc::first_difference(f, g)) + " is still changing");
}

SymFunc operad_comm(int cap) {
  SymFunc f(cap);
  for (int n = 1; n <= cap; ++n)
    for (const Partition& l : partitions_of(n))
      f += SymFunc::term(l, TPoly(Rational(Int(1), l.z())), cap);
  return f;
}

SymFunc operad_assoc(int cap) {
  SymFunc f(cap);
  std::vector<int> ones;
  for (int n = 1; n <= cap; ++n) {
    ones.push_back(1);
    f += SymFunc::term(Partition(ones), TPoly(1), cap);
  }
  return f;
}

namespace {

SymFunc necklace_like(int cap, int coeff_fn(int)) {
  SymFunc f(cap);
  for (int n = 1; n <= cap; ++n)
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      int w = coeff_fn(d);
      if (w == 0) continue;
      std::vector<int> parts(n / d, d);
      f += SymFunc::term(Partition(std::move(parts)), TPoly(Rational(w, n)), cap);
    }
  return f;
}

}  // namespace

SymFunc operad_lie(int cap) { return necklace_like(cap, moebius_int); }

SymFunc operad_cyc(int cap) { return necklace_like(cap, euler_phi); }

SymFunc operad_perm(int cap) {
  return SymFunc::p(1, cap) * (SymFunc::one(cap) + operad_comm(cap));
}

SymFunc operad_prelie(int cap) {
  SymFunc comm = operad_comm(cap);
  SymFunc p1 = SymFunc::p(1, cap);
  SymFunc one = SymFunc::one(cap);
  return solve_symfunc_fixpoint(
      [&](const SymFunc& f) { return p1 * (one + comm.plethysm(f)); }, cap);
}

SymFunc operad(const std::string& name, int cap) {
  if (name == "Comm") return operad_comm(cap);
  if (name == "Assoc") return operad_assoc(cap);
  if (name == "Lie") return operad_lie(cap);
  if (name == "Cyc") return operad_cyc(cap);
  if (name == "Perm") return operad_perm(cap);
  if (name == "PreLie") return operad_prelie(cap);
  throw std::invalid_argument("operad: unknown name '" + name + "'");
}

std::vector<IdentityCheck> verify_identities(int cap) {
  // Work one degree above the requested cap so d_p1 (which lowers degree)
  // stays exact at the cap itself; comparisons are truncated back down.
  const int inner = cap + 1;
  SymFunc p1 = SymFunc::p(1, inner);
  SymFunc one = SymFunc::one(inner);
  SymFunc comm = operad_comm(inner);
  SymFunc assoc = operad_assoc(inner);
  SymFunc lie = operad_lie(inner);
  SymFunc perm = operad_perm(inner);
  SymFunc prelie = operad_prelie(inner);
  SymFunc slie = lie.suspension().eval_t(1);
  SymFunc sprelie = prelie.suspension().eval_t(1);
  SymFunc comm_sprelie = comm.plethysm(sprelie);

  std::vector<IdentityCheck> out;
  auto check = [&](const std::string& name, const SymFunc& lhs, const SymFunc& rhs) {
    int bad = SymFunc::first_difference(lhs.truncated(cap), rhs.truncated(cap));
    out.push_back({name, bad < 0, bad});
  };
  check("koszul_comm", slie.plethysm(comm), p1);
  check("poisson", comm.plethysm(lie), assoc);
  {
    // Both Koszul composites of the PreLie/Perm pair must reduce to p1.
    SymFunc tp1 = p1.truncated(cap);
    int bad1 = SymFunc::first_difference(sprelie.plethysm(perm).truncated(cap), tp1);
    int bad2 = SymFunc::first_difference(perm.plethysm(sprelie).truncated(cap), tp1);
    int bad = bad1 < 0 ? bad2 : (bad2 < 0 ? bad1 : std::min(bad1, bad2));
    out.push_back({"koszul_perm", bad < 0, bad});
  }
  check("vertebres", p1 * prelie.d_p1(), assoc.plethysm(prelie));
  check("prelie_product", sprelie * comm_sprelie, p1 - sprelie);
  check("somme1", p1 * sprelie.d_p1() + comm_sprelie.d_p1(), one);
  return out;
}

}  // namespace hyperchar
