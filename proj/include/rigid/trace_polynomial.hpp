#ifndef RIGID_TRACE_POLYNOMIAL_HPP
#define RIGID_TRACE_POLYNOMIAL_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "rigid/group_algebra.hpp"
#include "rigid/rational.hpp"

namespace rigid {

/// Univariate polynomial in the dimension parameter t with exact
/// rational coefficients, kept canonical (no trailing zero coefficient).
class TracePolynomial {
 public:
  TracePolynomial() = default;  // zero polynomial

  explicit TracePolynomial(std::vector<Rational> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  static TracePolynomial monomial(int power, const Rational& coeff = 1) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1);
    c.back() = coeff;
    return TracePolynomial(std::move(c));
  }

  static TracePolynomial variable() { return monomial(1); }
  static TracePolynomial constant(const Rational& value) { return monomial(0, value); }

  bool is_zero() const { return coefficients_.empty(); }

  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  Rational coefficient(std::size_t power) const {
    return power < coefficients_.size() ? coefficients_[power] : Rational(0);
  }

  const std::vector<Rational>& coefficients() const { return coefficients_; }

  friend TracePolynomial operator+(const TracePolynomial& a, const TracePolynomial& b) {
    std::vector<Rational> c(std::max(a.coefficients_.size(), b.coefficients_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
    return TracePolynomial(std::move(c));
  }

  friend TracePolynomial operator-(const TracePolynomial& a, const TracePolynomial& b) {
    return a + (b * Rational(-1));
  }

  friend TracePolynomial operator*(const TracePolynomial& a, const TracePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return TracePolynomial();
    std::vector<Rational> c(a.coefficients_.size() + b.coefficients_.size() - 1);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
        c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return TracePolynomial(std::move(c));
  }

  friend TracePolynomial operator*(const TracePolynomial& a, const Rational& s) {
    std::vector<Rational> c(a.coefficients_.size());
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficients_[k] * s;
    return TracePolynomial(std::move(c));
  }

  bool operator==(const TracePolynomial&) const = default;

  /// Exact Horner evaluation.
  Rational eval_at(const Rational& t0) const {
    Rational value = 0;
    for (std::size_t k = coefficients_.size(); k-- > 0;) value = value * t0 + coefficients_[k];
    return value;
  }

  std::vector<std::string> coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coefficients_.size());
    for (const Rational& c : coefficients_) out.push_back(rational_to_string(c));
    return out;
  }

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  }

  std::vector<Rational> coefficients_;
};

/// Categorical trace of a group algebra element: closing all strands of
/// a permutation diagram leaves one loop per cycle, and every loop
/// contributes a factor t.
inline TracePolynomial closure_trace(const GroupAlgebraElement& a) {
  TracePolynomial out;
  for (const auto& [p, coeff] : a.terms())
    out = out + TracePolynomial::monomial(p.cycle_count(), coeff);
  return out;
}

/// t(t-1)···(t-n+1)/n!, the dimension of the n-th exterior power of an
/// object of dimension t.
inline TracePolynomial falling_binomial(int n) {
  TracePolynomial out = TracePolynomial::constant(Rational(1, factorial(n)));
  for (int k = 0; k < n; ++k)
    out = out * (TracePolynomial::variable() - TracePolynomial::constant(k));
  return out;
}

/// t(t+1)···(t+n-1)/n!, the symmetric-power mirror.
inline TracePolynomial rising_binomial(int n) {
  TracePolynomial out = TracePolynomial::constant(Rational(1, factorial(n)));
  for (int k = 0; k < n; ++k)
    out = out * (TracePolynomial::variable() + TracePolynomial::constant(k));
  return out;
}

/// Closure trace of the degree-n mode idempotent, checked against its
/// closed binomial form before being returned. The fermionic closed form
/// was fixed by the cross-backend oracle in the test suite.
inline TracePolynomial dim_power_poly(int n, Mode mode) {
  const TracePolynomial traced = closure_trace(mode_idempotent(n, mode));
  const TracePolynomial closed = mode == Mode::bosonic ? falling_binomial(n) : rising_binomial(n);
  if (traced != closed)
    throw std::logic_error("dim_power_poly: closure trace disagrees with the closed form");
  return traced;
}

/// All integers t with |t| <= bound whose falling binomial has absolute
/// value 1, by exact integer scan; returned in descending order.
inline std::vector<Integer> solve_dimension_equation(int n, const Integer& bound) {
  if (n < 2) throw std::invalid_argument("solve_dimension_equation: need n >= 2");
  if (bound < n) throw std::invalid_argument("solve_dimension_equation: bound must be >= n");
  const Integer target = factorial(n);
  const Integer low = -bound;
  std::vector<Integer> solutions;
  for (Integer t = bound; t >= low; --t) {
    Integer product = 1;
    for (int k = 0; k < n && product != 0; ++k) product *= t - k;
    if (product < 0) product = -product;
    if (product == target) solutions.push_back(t);
  }
  return solutions;
}

}  // namespace rigid

#endif  // RIGID_TRACE_POLYNOMIAL_HPP
