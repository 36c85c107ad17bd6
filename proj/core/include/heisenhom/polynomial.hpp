#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "heisenhom/errors.hpp"

namespace heisenhom {

using BigInt = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in t with arbitrary-precision integer
/// coefficients. Canonical form: no trailing zero coefficient, so the zero
/// polynomial has no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coefficients);
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(BigInt c);
  /// c * t^k
  static IntPolynomial monomial(BigInt c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^k (zero past the degree).
  BigInt coefficient(std::size_t k) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

class ExactDivisionFailed : public Error {
 public:
  explicit ExactDivisionFailed(IntPolynomial remainder);
  const IntPolynomial& remainder() const { return remainder_; }

 private:
  IntPolynomial remainder_;
};

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

/// a^k by binary exponentiation.
IntPolynomial poly_pow(const IntPolynomial& a, unsigned k);

/// Quotient q with num = den * q. The leading coefficient of den must be +-1;
/// throws ExactDivisionFailed carrying the remainder when it is nonzero.
IntPolynomial poly_exact_div(const IntPolynomial& num, const IntPolynomial& den);

}  // namespace heisenhom
