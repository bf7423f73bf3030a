#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hyperchar {

// Exact arithmetic kernel.  Rational is always reduced with positive
// denominator (the backend canonicalizes on every operation), zero is 0/1.
// Expression templates are disabled so arithmetic results are plain values
// and forward cleanly into containers.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Raised when two independently computed values that must agree do not.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int factorial(int n);
Int binomial(int n, int k);

// Number-theoretic helpers on small arguments.
int moebius_int(int n);
int euler_phi(int n);

Rational rational_pow(const Rational& base, int e);  // e may be negative

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& q);

}  // namespace hyperchar
