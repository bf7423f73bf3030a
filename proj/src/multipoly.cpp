#include "hyperchar/multipoly.hpp"

#include <sstream>

namespace hyperchar {

void Monomial::trim() {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

MultiPoly::MultiPoly(Rational c) {
  if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

MultiPoly MultiPoly::var_t(int e) { return monomial(Monomial{e, 0, {}}, Rational(1)); }

MultiPoly MultiPoly::var_s(int e) {
  if (e < 0) throw std::invalid_argument("MultiPoly: s exponent must be nonnegative");
  return monomial(Monomial{0, e, {}}, Rational(1));
}

MultiPoly MultiPoly::var_u(int index) {
  if (index < 2) throw std::invalid_argument("MultiPoly: u index must be >= 2");
  Monomial m;
  m.u.assign(index - 1, 0);
  m.u[index - 2] = 1;
  return monomial(std::move(m), Rational(1));
}

MultiPoly MultiPoly::monomial(Monomial m, Rational coeff) {
  MultiPoly p;
  m.trim();
  if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
  return p;
}

MultiPoly MultiPoly::from_tpoly(const TPoly& p) {
  MultiPoly r;
  for (const auto& [e, c] : p.terms()) r.terms_.emplace(Monomial{e, 0, {}}, c);
  return r;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(Monomial m, Rational c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(m), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.t = ma.t + mb.t;
      m.s = ma.s + mb.s;
      m.u.assign(std::max(ma.u.size(), mb.u.size()), 0);
      for (size_t i = 0; i < ma.u.size(); ++i) m.u[i] += ma.u[i];
      for (size_t i = 0; i < mb.u.size(); ++i) m.u[i] += mb.u[i];
      r.add_term(std::move(m), ca * cb);
    }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

MultiPoly MultiPoly::times_t(int e) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial n = m;
    n.t += e;
    r.terms_.emplace(std::move(n), c);
  }
  return r;
}

MultiPoly MultiPoly::subst_u_one() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(Monomial{m.t, m.s, {}}, c);
  return r;
}

MultiPoly MultiPoly::subst_t(const Rational& v) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_)
    r.add_term(Monomial{0, m.s, m.u}, c * rational_pow(v, m.t));
  return r;
}

TPoly MultiPoly::to_tpoly() const {
  TPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.s != 0 || !m.u.empty())
      throw std::invalid_argument("MultiPoly::to_tpoly: term involves s or u variables");
    r += TPoly::monomial(m.t, c);
  }
  return r;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::ostringstream vars;
    bool any = false;
    auto piece = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (any) vars << "*";
      any = true;
      vars << v;
      if (e != 1) vars << "^" << e;
    };
    piece("t", m.t);
    piece("s", m.s);
    for (size_t i = 0; i < m.u.size(); ++i)
      piece("u" + std::to_string(i + 2), m.u[i]);
    if (!any) {
      os << rational_str(mag);
    } else {
      if (mag != 1) os << rational_str(mag) << "*";
      os << vars.str();
    }
  }
  return os.str();
}

nlohmann::ordered_json MultiPoly::to_json() const {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::ordered_json exp;
    exp["t"] = m.t;
    exp["s"] = m.s;
    exp["u"] = m.u;
    terms.push_back({{"exp", std::move(exp)}, {"coef", rational_str(c)}});
  }
  return terms;
}

}  // namespace hyperchar
