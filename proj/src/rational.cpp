#include "hyperchar/rational.hpp"

namespace hyperchar {

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

int moebius_int(int n) {
  if (n <= 0) throw std::invalid_argument("moebius_int: argument must be positive");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

int euler_phi(int n) {
  if (n <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

Rational rational_pow(const Rational& base, int e) {
  if (e == 0) return Rational(1);
  if (base == 0 && e < 0) throw std::domain_error("rational_pow: zero to a negative power");
  Rational b = e > 0 ? base : Rational(1) / base;
  int k = e > 0 ? e : -e;
  Rational r = 1;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

std::string rational_str(const Rational& q) {
  return q.str();
}

}  // namespace hyperchar
