#ifndef RIGID_RATIONAL_HPP
#define RIGID_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rigid {

// Every scalar in the library is an exact rational. There are no
// floating-point numbers anywhere in the system.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b" (base 10) into a canonicalized rational.
inline Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("rational literal is empty");
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

/// Canonical text form: "a" for integers, "a/b" otherwise, b > 0.
inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace rigid

#endif  // RIGID_RATIONAL_HPP
