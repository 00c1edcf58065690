#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace nmr {

using Rational = boost::rational<std::int64_t>;

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in polynomial arithmetic");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("integer overflow in polynomial arithmetic");
  }
  return r;
}

Rational rational_pow(const Rational& base, std::size_t exponent);

std::string rational_str(const Rational& r);

/// Dense integer polynomial, coefficients in ascending degree order.
/// Arithmetic is exact 64-bit with overflow detection.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<std::int64_t> ascending);

  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  // c0 + c1*x
  static IntPolynomial linear(std::int64_t c0, std::int64_t c1) { return IntPolynomial({c0, c1}); }
  static IntPolynomial monomial(std::size_t degree, std::int64_t c = 1);

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::int64_t coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator-() const;

  double eval(double x) const;
  Rational eval(const Rational& x) const;

  bool operator==(const IntPolynomial& other) const = default;

  // Human-readable form like "x^4 - 4x^3 + 3x^2".
  std::string str() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

}  // namespace nmr
