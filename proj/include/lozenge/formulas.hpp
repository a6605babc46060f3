#pragma once

// Closed-form products: plane partitions in a box, dented semihexagons
// (plain and q-weighted), Vandermonde-type products, Schur specializations at
// all-ones, and the predicted ratios of the shuffling theorems.

#include <vector>

#include "lozenge/exactnum.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

/// Weakly decreasing list of nonnegative parts.
using Partition = std::vector<int>;

/// Number of plane partitions in an a x b x c box (tilings of the hexagon
/// with sides a, b, c, a, b, c).
Count pp(int a, int b, int c);
QPoly pp_q(int a, int b, int c);

/// Tilings of S_{a,b}(dents): prod_{i<j} (s_j - s_i) / (j - i).
Count clp(const SemihexSpec& s);
Count clp(const Positions& dents);
/// q^{sum(s_i - i)} prod_{i<j} (q^{s_j} - q^{s_i}) / (q^j - q^i).
QPoly clp_q(const SemihexSpec& s);
QPoly clp_q(const Positions& dents);

/// prod_{i<j} (s_j - s_i)
Count delta(const Positions& s);
/// prod_{i<j} (q^{s_j} - q^{s_i})
QPoly delta_q(const Positions& s);
/// prod_{k=1}^{a-1} k!  (= delta of {1..a})
Count superfactorial(int a);

/// lambda(S) = (s_u - u + 1, ..., s_2 - 1, s_1).
Partition lambda_of(const Positions& s);
/// s_lambda(1^len) by the Weyl dimension formula.
Count schur_ones(const Partition& lambda, int len);
/// s_{lambda(S)}(1^{|S|}).
Count schur_ones(const Positions& s);

/// Two regions H_{x,y}(U;D;B) and H_{x,y}(U';D';B) related by shuffling
/// (and, for the generalized theorems, flipping) dents in U delta D.
struct ShuffleInstance {
  int x = 0;
  int y = 0;
  Positions U;
  Positions D;
  Positions U_prime;
  Positions D_prime;
  Positions B;

  RegionSpec lhs_spec() const { return {x, y, U, D, B}; }
  RegionSpec rhs_spec() const { return {x, y, U_prime, D_prime, B}; }
  /// Same instance with primed and unprimed sides exchanged.
  ShuffleInstance inverse() const { return {x, y, U_prime, D_prime, U, D, B}; }
};

/// Checks both sides validate, U u D = U' u D', U n D = U' n D', and with
/// same_sizes also |U| = |U'|, |D| = |D'|. Throws InvalidInput otherwise.
void validate_shuffle(const ShuffleInstance& inst, bool same_sizes);

/// delta(U) delta(D) / (delta(U') delta(D')). Requires same sizes.
Ratio shuffle_rhs(const ShuffleInstance& inst);

/// How the second plane-partition factor in the denominator is read.
enum class PpReading {
  corrected,  ///< PP(u', d', y)
  literal,    ///< PP(u' * d', 1, y): the product of u' and d' as one box side
};

Ratio gen_shuffle_rhs(const ShuffleInstance& inst, PpReading reading = PpReading::corrected);

/// How the down-dent product in the numerator of the q-ratio is normalized.
enum class QBracketReading {
  q_bracket,    ///< (q^{t_j} - q^{t_i}) / (q^j - q^i), as for every other product
  integer_gap,  ///< (q^{t_j} - q^{t_i}) / (j - i)
};

/// Which power-of-q prefactor multiplies the q-ratio.
enum class ExponentReading {
  printed,  ///< (d-x-n) C(y+d+1,2) - (d'-x-n) C(y+d'+1,2) + u d y - u' d' y
  derived,  ///< printed + C(u'+1,2) + C(d'+1,2) - C(u+1,2) - C(d+1,2)
};

struct QShuffleOptions {
  QBracketReading bracket = QBracketReading::q_bracket;
  ExponentReading exponent = ExponentReading::derived;
};

/// Exponent of the q-power prefactor under the given reading.
long q_shuffle_exponent(const ShuffleInstance& inst, ExponentReading reading);

QRatio q_shuffle_rhs(const ShuffleInstance& inst, QShuffleOptions options = {});

/// Semihexagon counts attached to one cluster (positions local, 1-based).
struct ClusterStats {
  Count s_plus;   ///< tilings of S_{u_i, f_i - u_i}(U_i)
  Count s_minus;  ///< tilings of S_{d_i, f_i - d_i}(D_i)
};

ClusterStats cluster_s_values(const std::vector<Token>& cluster);

/// prod_i s+(C_i) s-(C_i) / (s+(C'_i) s-(C'_i)). Throws IncompatibleClusters
/// unless both specs have the same cluster lengths and gaps.
Ratio asym_rhs(const ClusterSpec& c, const ClusterSpec& c_prime);

}  // namespace lozenge
