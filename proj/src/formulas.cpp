#include "lozenge/formulas.hpp"

#include <algorithm>
#include <iterator>

namespace lozenge {

namespace {

Count exact_quotient(const Count& num, const Count& den, const char* what) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, what);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
    throw Error(ErrorKind::NotExact, std::string(what) + " is not an integer");
  }
  Count q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Positions first_n(int a) {
  Positions p(static_cast<std::size_t>(std::max(a, 0)));
  for (int i = 0; i < a; ++i) p[static_cast<std::size_t>(i)] = i + 1;
  return p;
}

/// Divides by prod_{i<j} (q^{s_j} - q^{s_i}) one factor at a time. Each step
/// is exact whenever the full product divides the numerator.
QPoly divide_by_delta_q(QPoly num, const Positions& s) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) num = divexact(num, QPoly::binomial_difference(s[j], s[i]));
  }
  return num;
}

long binom2(long n) { return n * (n - 1) / 2; }

Positions sorted_union(const Positions& a, const Positions& b) {
  Positions out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Positions sorted_intersection(const Positions& a, const Positions& b) {
  Positions out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Count pp(int a, int b, int c) {
  Count num = 1;
  Count den = 1;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      for (int k = 1; k <= c; ++k) {
        num *= i + j + k - 1;
        den *= i + j + k - 2;
      }
    }
  }
  return exact_quotient(num, den, "PP(a,b,c)");
}

QPoly pp_q(int a, int b, int c) {
  // The product over k telescopes to (1 - q^{i+j+c-1}) / (1 - q^{i+j-1}).
  if (a <= 0 || b <= 0 || c <= 0) return QPoly(1);
  QPoly num(1);
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) num *= QPoly(1) - QPoly::q_power(i + j + c - 1);
  }
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) num = divexact(num, QPoly(1) - QPoly::q_power(i + j - 1));
  }
  return num;
}

Count delta(const Positions& s) {
  Count out = 1;
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) out *= s[j] - s[i];
  }
  return out;
}

QPoly delta_q(const Positions& s) {
  QPoly out(1);
  for (std::size_t j = 0; j < s.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) out *= QPoly::binomial_difference(s[j], s[i]);
  }
  return out;
}

Count superfactorial(int a) { return delta(first_n(a)); }

Count clp(const Positions& dents) {
  return exact_quotient(delta(dents), superfactorial(static_cast<int>(dents.size())), "CLP product");
}

Count clp(const SemihexSpec& s) {
  validate_semihex(s);
  return clp(s.dents);
}

QPoly clp_q(const Positions& dents) {
  long shift = 0;
  for (std::size_t i = 0; i < dents.size(); ++i) shift += dents[i] - static_cast<long>(i + 1);
  QPoly body = divide_by_delta_q(delta_q(dents), first_n(static_cast<int>(dents.size())));
  return body.shifted(static_cast<int>(shift));
}

QPoly clp_q(const SemihexSpec& s) {
  validate_semihex(s);
  return clp_q(s.dents);
}

Partition lambda_of(const Positions& s) {
  const int u = static_cast<int>(s.size());
  Partition lambda(s.size());
  for (int i = 1; i <= u; ++i) {
    lambda[static_cast<std::size_t>(i - 1)] = s[static_cast<std::size_t>(u - i)] - (u - i);
  }
  return lambda;
}

Count schur_ones(const Partition& lambda, int len) {
  if (static_cast<int>(lambda.size()) > len) return 0;
  std::vector<long> parts(static_cast<std::size_t>(len), 0);
  std::copy(lambda.begin(), lambda.end(), parts.begin());
  Count num = 1;
  Count den = 1;
  for (int i = 0; i < len; ++i) {
    for (int j = i + 1; j < len; ++j) {
      num *= parts[static_cast<std::size_t>(i)] - parts[static_cast<std::size_t>(j)] + (j - i);
      den *= j - i;
    }
  }
  return exact_quotient(num, den, "Schur dimension formula");
}

Count schur_ones(const Positions& s) { return schur_ones(lambda_of(s), static_cast<int>(s.size())); }

// ---------------------------------------------------------------------------

void validate_shuffle(const ShuffleInstance& inst, bool same_sizes) {
  validate_spec(inst.lhs_spec());
  validate_spec(inst.rhs_spec());
  if (sorted_union(inst.U, inst.D) != sorted_union(inst.U_prime, inst.D_prime)) {
    throw Error(ErrorKind::InvalidInput, "U u D differs from U' u D'");
  }
  if (sorted_intersection(inst.U, inst.D) != sorted_intersection(inst.U_prime, inst.D_prime)) {
    throw Error(ErrorKind::InvalidInput, "U n D differs from U' n D'");
  }
  if (same_sizes && (inst.U.size() != inst.U_prime.size() || inst.D.size() != inst.D_prime.size())) {
    throw Error(ErrorKind::InvalidInput, "shuffle must keep |U| and |D|");
  }
}

Ratio shuffle_rhs(const ShuffleInstance& inst) {
  validate_shuffle(inst, true);
  return make_ratio(delta(inst.U) * delta(inst.D), delta(inst.U_prime) * delta(inst.D_prime));
}

Ratio gen_shuffle_rhs(const ShuffleInstance& inst, PpReading reading) {
  validate_shuffle(inst, false);
  const int u = static_cast<int>(inst.U.size());
  const int d = static_cast<int>(inst.D.size());
  const int u2 = static_cast<int>(inst.U_prime.size());
  const int d2 = static_cast<int>(inst.D_prime.size());
  const Count box_prime = reading == PpReading::corrected ? pp(u2, d2, inst.y) : pp(u2 * d2, 1, inst.y);
  return make_ratio(clp(inst.U) * clp(inst.D) * pp(u, d, inst.y),
                    clp(inst.U_prime) * clp(inst.D_prime) * box_prime);
}

long q_shuffle_exponent(const ShuffleInstance& inst, ExponentReading reading) {
  const long u = static_cast<long>(inst.U.size());
  const long d = static_cast<long>(inst.D.size());
  const long u2 = static_cast<long>(inst.U_prime.size());
  const long d2 = static_cast<long>(inst.D_prime.size());
  const long n = static_cast<long>(sorted_union(inst.U, inst.D).size());
  const long x = inst.x;
  const long y = inst.y;
  long c = (d - x - n) * binom2(y + d + 1) - (d2 - x - n) * binom2(y + d2 + 1) + u * d * y - u2 * d2 * y;
  if (reading == ExponentReading::derived) {
    c += binom2(u2 + 1) + binom2(d2 + 1) - binom2(u + 1) - binom2(d + 1);
  }
  return c;
}

QRatio q_shuffle_rhs(const ShuffleInstance& inst, QShuffleOptions options) {
  validate_shuffle(inst, false);
  const int u = static_cast<int>(inst.U.size());
  const int d = static_cast<int>(inst.D.size());
  const int u2 = static_cast<int>(inst.U_prime.size());
  const int d2 = static_cast<int>(inst.D_prime.size());

  // Every bracket denominator is cross-multiplied to the other side.
  QPoly num = delta_q(inst.U) * delta_q(inst.D) * pp_q(u, d, inst.y) * delta_q(first_n(u2)) *
              delta_q(first_n(d2));
  QPoly den = delta_q(first_n(u)) * delta_q(inst.U_prime) * delta_q(inst.D_prime) * pp_q(u2, d2, inst.y);
  if (options.bracket == QBracketReading::q_bracket) {
    den *= delta_q(first_n(d));
  } else {
    den *= QPoly(superfactorial(d));
  }
  num = num.shifted(static_cast<int>(q_shuffle_exponent(inst, options.exponent)));
  return QRatio(std::move(num), std::move(den));
}

// ---------------------------------------------------------------------------

ClusterStats cluster_s_values(const std::vector<Token>& cluster) {
  Positions ups;
  Positions downs;
  for (std::size_t i = 0; i < cluster.size(); ++i) {
    (cluster[i] == Token::up ? ups : downs).push_back(static_cast<int>(i + 1));
  }
  return {clp(ups), clp(downs)};
}

Ratio asym_rhs(const ClusterSpec& c, const ClusterSpec& c_prime) {
  if (c.clusters.size() != c_prime.clusters.size() || c.gaps != c_prime.gaps) {
    throw Error(ErrorKind::IncompatibleClusters, "cluster specs differ in shape");
  }
  Count num = 1;
  Count den = 1;
  for (std::size_t i = 0; i < c.clusters.size(); ++i) {
    if (c.clusters[i].size() != c_prime.clusters[i].size()) {
      throw Error(ErrorKind::IncompatibleClusters, "cluster " + std::to_string(i + 1) + " changes length");
    }
    const ClusterStats a = cluster_s_values(c.clusters[i]);
    const ClusterStats b = cluster_s_values(c_prime.clusters[i]);
    num *= a.s_plus * a.s_minus;
    den *= b.s_plus * b.s_minus;
  }
  return make_ratio(num, den);
}

}  // namespace lozenge
