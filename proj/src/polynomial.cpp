#include "nmr/polynomial.hpp"

namespace nmr {

Rational rational_pow(const Rational& base, std::size_t exponent) {
  Rational result(1);
  for (std::size_t i = 0; i < exponent; ++i) {
    result *= base;
  }
  return result;
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) {
    return std::to_string(r.numerator());
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) {
    coeffs_.push_back(0);
  }
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, std::int64_t c) {
  std::vector<std::int64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<std::int64_t> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = checked_add(coeff(k), other.coeff(k));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  return *this + (-other);
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<std::int64_t> out(coeffs_);
  for (auto& c : out) c = checked_mul(c, -1);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) {
    return IntPolynomial();
  }
  std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  return IntPolynomial(std::move(out));
}

double IntPolynomial::eval(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * x + static_cast<double>(coeffs_[k]);
  }
  return acc;
}

Rational IntPolynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * x + Rational(coeffs_[k]);
  }
  return acc;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const std::int64_t abs_c = c < 0 ? -c : c;
    if (abs_c != 1 || k == 0) {
      out += std::to_string(abs_c);
    }
    if (k >= 1) {
      out += "x";
      if (k >= 2) {
        out += "^" + std::to_string(k);
      }
    }
  }
  return out;
}

}  // namespace nmr
