#pragma once

// Exact arithmetic kernel: big integers, rationals and Laurent polynomials in q.

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "lozenge/error.hpp"

namespace lozenge {

/// Arbitrary-precision tiling count.
using Count = mpz_class;

/// Exact rational in lowest terms with positive denominator (GMP keeps
/// mpq_class canonical after every arithmetic operation).
using Ratio = mpq_class;

std::string to_string(const Count& c);
std::string to_string(const Ratio& r);

/// Builds num/den in canonical form. Throws ZeroDenominator.
Ratio make_ratio(const Count& num, const Count& den);

/// Laurent polynomial in q with integer coefficients.
///
/// Stored densely from the lowest nonzero exponent: coefficient of
/// q^(low_ + i) is coeffs_[i]. The first and last stored coefficients are
/// always nonzero; the zero polynomial has no coefficients.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit QPoly(const mpz_class& constant);

  static QPoly monomial(const mpz_class& coeff, int exponent);
  static QPoly q_power(int exponent) { return monomial(1, exponent); }
  /// q^hi - q^lo
  static QPoly binomial_difference(int hi, int lo);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest / highest exponent with nonzero coefficient. Undefined on zero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int exponent) const;
  std::size_t term_count() const;
  /// Nonzero terms in ascending exponent order.
  std::vector<std::pair<int, mpz_class>> terms() const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);

  friend QPoly operator+(QPoly lhs, const QPoly& rhs) { return lhs += rhs; }
  friend QPoly operator-(QPoly lhs, const QPoly& rhs) { return lhs -= rhs; }
  friend QPoly operator*(const QPoly& lhs, const QPoly& rhs);
  friend QPoly operator-(QPoly p);
  friend bool operator==(const QPoly& lhs, const QPoly& rhs) {
    return lhs.low_ == rhs.low_ && lhs.coeffs_ == rhs.coeffs_;
  }

  /// Multiplies by q^shift.
  QPoly shifted(int shift) const;

  /// "c*q^e" terms in ascending exponent order joined by " + "; the constant
  /// term prints as a bare coefficient and the zero polynomial as "0".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;

  friend QPoly divexact(const QPoly& numerator, const QPoly& divisor);
};

QPoly qp_add(const QPoly& p, const QPoly& r);
QPoly qp_mul(const QPoly& p, const QPoly& r);

/// Sum of coefficients, i.e. the value at q = 1.
mpz_class qp_eval_one(const QPoly& p);

/// Substitutes q -> 1/q (exponent e becomes -e).
QPoly qp_invert_variable(const QPoly& p);

/// Exact quotient numerator / divisor. Throws ZeroDenominator for a zero
/// divisor and NotExact when the division leaves a remainder.
QPoly divexact(const QPoly& numerator, const QPoly& divisor);

/// Ratio of two Laurent polynomials. Never reduced; equality is decided by
/// cross-multiplication.
class QRatio {
 public:
  QRatio() : num_(0), den_(1) {}
  QRatio(QPoly num, QPoly den);  // throws ZeroDenominator

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }

  /// Value at q = 1. Throws ZeroDenominator if the denominator vanishes there.
  Ratio eval_one() const;
  std::string to_string() const;

 private:
  QPoly num_;
  QPoly den_;
};

/// a.num * b.den == b.num * a.den
bool qratio_eq(const QRatio& a, const QRatio& b);

}  // namespace lozenge
