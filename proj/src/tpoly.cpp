#include "hyperchar/tpoly.hpp"

#include <sstream>

namespace hyperchar {

TPoly::TPoly(Rational c) {
  if (c != 0) c_.emplace(0, std::move(c));
}

TPoly TPoly::t(int e) { return monomial(e, Rational(1)); }

TPoly TPoly::monomial(int e, Rational coeff) {
  TPoly p;
  if (coeff != 0) p.c_.emplace(e, std::move(coeff));
  return p;
}

bool TPoly::is_constant() const {
  return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rational TPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rational(0) : it->second;
}

int TPoly::min_exponent() const {
  if (c_.empty()) throw std::logic_error("TPoly::min_exponent on zero");
  return c_.begin()->first;
}

int TPoly::max_exponent() const {
  if (c_.empty()) throw std::logic_error("TPoly::max_exponent on zero");
  return c_.rbegin()->first;
}

TPoly TPoly::operator-() const {
  TPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto [it, inserted] = c_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  for (const auto& [e, c] : o.c_) {
    auto [it, inserted] = c_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      auto [it, inserted] = r.c_.try_emplace(ea + eb, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.c_.erase(it);
      }
    }
  return r;
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(const Rational& r) {
  if (r == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, c] : c_) c *= r;
  return *this;
}

TPoly TPoly::times_t(int e) const {
  TPoly r;
  for (const auto& [ex, c] : c_) r.c_.emplace(ex + e, c);
  return r;
}

TPoly TPoly::stretched(int k) const {
  if (k < 1) throw std::invalid_argument("TPoly::stretched: k must be >= 1");
  TPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e * k, c);
  return r;
}

TPoly TPoly::at_minus_t() const {
  TPoly r;
  for (const auto& [e, c] : c_) r.c_.emplace(e, (e % 2 == 0) ? c : -c);
  return r;
}

TPoly TPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("TPoly::pow: negative exponent");
  TPoly r{Rational(1)};
  TPoly b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    if (k >>= 1) b *= b;
  }
  return r;
}

Rational TPoly::eval(const Rational& v) const {
  Rational r = 0;
  for (const auto& [e, c] : c_) r += c * rational_pow(v, e);
  return r;
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rational& c,
                 const std::string& var, int e) {
  Rational mag = c < 0 ? Rational(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (e == 0) {
    os << rational_str(mag);
    return;
  }
  if (mag != 1) os << rational_str(mag) << "*";
  os << var;
  if (e != 1) os << "^" << e;
}

}  // namespace

std::string TPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : c_) {
    append_term(os, first, c, var, e);
    first = false;
  }
  return os.str();
}

}  // namespace hyperchar
