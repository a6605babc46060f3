#include "lozenge/exactnum.hpp"

#include <algorithm>
#include <sstream>

namespace lozenge {

std::string to_string(const Count& c) { return c.get_str(); }

std::string to_string(const Ratio& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Ratio make_ratio(const Count& num, const Count& den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "ratio with zero denominator");
  Ratio r(num, den);
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------------------
// QPoly

QPoly::QPoly(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

QPoly::QPoly(const mpz_class& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly QPoly::monomial(const mpz_class& coeff, int exponent) {
  QPoly p;
  if (coeff != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(coeff);
  }
  return p;
}

QPoly QPoly::binomial_difference(int hi, int lo) {
  return monomial(1, hi) - monomial(1, lo);
}

mpz_class QPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t QPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

std::vector<std::pair<int, mpz_class>> QPoly::terms() const {
  std::vector<std::pair<int, mpz_class>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_degree(), other.high_degree());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), mpz_class(0));
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[static_cast<std::size_t>(other.low_ - low_) + i] += other.coeffs_[i];
  }
  normalize();
  return *this;
}

QPoly operator-(QPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly& QPoly::operator-=(const QPoly& other) { return *this += -other; }

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  QPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.low_ = lhs.low_ + rhs.low_;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  out.normalize();
  return out;
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly QPoly::shifted(int shift) const {
  QPoly out = *this;
  if (!out.is_zero()) out.low_ += shift;
  return out;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    if (e == 0) {
      os << c.get_str();
    } else {
      os << c.get_str() << "*q^" << e;
    }
  }
  return os.str();
}

QPoly qp_add(const QPoly& p, const QPoly& r) { return p + r; }
QPoly qp_mul(const QPoly& p, const QPoly& r) { return p * r; }

mpz_class qp_eval_one(const QPoly& p) {
  mpz_class sum = 0;
  for (const auto& [e, c] : p.terms()) sum += c;
  return sum;
}

QPoly qp_invert_variable(const QPoly& p) {
  QPoly out;
  for (const auto& [e, c] : p.terms()) out += QPoly::monomial(c, -e);
  return out;
}

QPoly divexact(const QPoly& numerator, const QPoly& divisor) {
  if (divisor.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero polynomial");
  if (numerator.is_zero()) return QPoly();

  const int dspan = divisor.high_degree() - divisor.low_degree();
  const int nspan = numerator.high_degree() - numerator.low_degree();
  if (nspan < dspan) throw Error(ErrorKind::NotExact, "divisor has larger span than numerator");

  // Work on dense copies anchored at the lowest exponents.
  std::vector<mpz_class> rem = numerator.coeffs_;
  const std::vector<mpz_class>& d = divisor.coeffs_;
  const mpz_class& lead = d.back();
  std::vector<mpz_class> quot(static_cast<std::size_t>(nspan - dspan + 1));

  for (int k = nspan - dspan; k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k + dspan)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorKind::NotExact, "leading coefficient does not divide");
    }
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= dspan; ++j) {
      if (d[static_cast<std::size_t>(j)] == 0) continue;
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), qc.get_mpz_t(),
                 d[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(k)] = std::move(qc);
  }
  for (const auto& c : rem) {
    if (c != 0) throw Error(ErrorKind::NotExact, "nonzero remainder");
  }

  QPoly out;
  out.low_ = numerator.low_degree() - divisor.low_degree();
  out.coeffs_ = std::move(quot);
  out.normalize();
  return out;
}

// ---------------------------------------------------------------------------
// QRatio

QRatio::QRatio(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::ZeroDenominator, "QRatio with zero denominator");
}

Ratio QRatio::eval_one() const { return make_ratio(qp_eval_one(num_), qp_eval_one(den_)); }

std::string QRatio::to_string() const { return "(" + num_.to_string() + ")/(" + den_.to_string() + ")"; }

bool qratio_eq(const QRatio& a, const QRatio& b) { return a.num() * b.den() == b.num() * a.den(); }

}  // namespace lozenge
