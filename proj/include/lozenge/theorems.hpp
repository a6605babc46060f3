#pragma once

// Verification harness. Every check compares exact values computed by the
// counting engines against the closed forms in formulas.hpp; a report passes
// only on exact equality.

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "lozenge/engines.hpp"
#include "lozenge/formulas.hpp"

namespace lozenge {

struct CheckReport {
  std::string name;
  nlohmann::json instance;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::chrono::nanoseconds elapsed{0};
  /// Secondary verdicts reported next to the main one (null when unused).
  nlohmann::json extra;
};

/// One JSON object per line; keys sorted. `elapsed_ms` only with timing.
std::string to_json_line(const CheckReport& report, bool with_timing = false);

struct CheckOptions {
  Engine engine = Engine::axis;
};

/// Core of the ratio checks: passes iff lhs_num * rhs.den == lhs_den * rhs.num.
CheckReport check_ratio_identity(std::string name, nlohmann::json instance, const Count& lhs_num,
                                 const Count& lhs_den, const Ratio& rhs);

/// M(H(U;D)) delta(U') delta(D') == M(H(U';D')) delta(U) delta(D).
CheckReport check_thm1(const ShuffleInstance& inst, CheckOptions options = {});

/// M(H_{x,y}(U;D)) M(H_{x+y,0}(U';D')) == M(H_{x,y}(U';D')) M(H_{x+y,0}(U;D)).
CheckReport check_pair_product(const ShuffleInstance& inst, CheckOptions options = {});

CheckReport check_thm2(const ShuffleInstance& inst, PpReading reading = PpReading::corrected,
                       CheckOptions options = {});

/// The count ratio for U;D vs U';D' must agree across all barrier sets
/// (inst.B is ignored).
CheckReport check_barrier_independence(const ShuffleInstance& inst, const std::vector<Positions>& barrier_sets,
                                       CheckOptions options = {});

/// Main verdict uses `q_options`. `extra` records the verdicts for the printed
/// and derived exponents and the q = 1 shadow against gen_shuffle_rhs.
CheckReport check_thm3(const ShuffleInstance& inst, QShuffleOptions q_options = {}, CheckOptions options = {});

/// alpha / beta: first and last position of [1..L] - (U u D u B).
struct KuoPositions {
  int alpha;
  int beta;
};
KuoPositions kuo_positions(const ValidatedSpec& spec);  // throws NoDistinctAlphaBeta

/// M(H_{x,y}(U)) M(H_{x-1,y-1}(abU)) == M(H_{x-1,y}(bU)) M(H_{x,y-1}(aU))
///                                   + M(H_{x-1,y}(aU)) M(H_{x,y-1}(bU)),
/// as Laurent polynomials, D and B fixed.
CheckReport check_kuo(const RegionSpec& spec, CheckOptions options = {});

/// count_brute(region) == sum over y-subsets S of the complement of U u D of
/// s_{lambda(U u S)}(1^{u+y}) s_{lambda(D u S)}(1^{d+y}). Requires B empty.
CheckReport check_schur_sum(const RegionSpec& spec, BruteOptions brute = {});

struct AsymRow {
  int N = 0;
  Ratio ratio;             ///< M(H_{Nx,Ny}(C; N d)) / M(H_{Nx,Ny}(C'; N d))
  Ratio ratio_over_limit;  ///< ratio / limit
  Ratio deviation;         ///< |ratio / limit - 1|
};

struct AsymTable {
  Ratio limit;  ///< asym_rhs(c, c')
  std::vector<AsymRow> rows;
};

/// Throws IncompatibleClusters (shapes differ, or the total up/down counts
/// differ) and TermBudgetExceeded when some N needs more than
/// `term_budget` axis-cut terms.
AsymTable asym_table(const ClusterSpec& c, const ClusterSpec& c_prime, int x, int y, int n_max,
                     std::uint64_t term_budget = 5'000'000, unsigned jobs = 1);

/// Exact equality of every row ratio with the limit.
bool rows_equal_limit(const AsymTable& t);

// ---------------------------------------------------------------------------
// Random instances and suites

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], independent of the standard library's
/// distribution implementation.
int uniform_int(Rng& rng, int lo, int hi);

enum class ShuffleShape { theorem1, general };

/// Random pair of regions on an axis of length at most max_L (>= 2).
ShuffleInstance random_shuffle_instance(Rng& rng, int max_L, ShuffleShape shape, int max_barriers);

/// Random spec with x > |B| and y >= 1 (Kuo preconditions).
RegionSpec random_kuo_spec(Rng& rng, int max_L, int max_barriers);

/// Random barrier-free spec whose region fits the brute-force limit.
RegionSpec random_small_spec(Rng& rng, int max_L, std::size_t max_triangles = 120);

struct CorpusOptions {
  int max_L = 8;
  int max_y = 2;
  int max_u = 2;
  int max_d = 2;
  int max_barriers = 1;
};

/// Every valid spec within the bounds, ordered by (L, y, U, D, B).
std::vector<RegionSpec> small_corpus(const CorpusOptions& options = {});

/// `k` distinct corpus members chosen by a seeded shuffle, in corpus order.
/// k = 0 or k >= size returns the whole corpus.
std::vector<RegionSpec> sample_corpus(const std::vector<RegionSpec>& corpus, std::uint64_t seed, std::size_t k);

enum class Suite { thm1, thm2, thm3, kuo, schur, barrier, asym, all };

std::optional<Suite> parse_suite(const std::string& name);
std::string suite_name(Suite s);

struct SuiteOptions {
  std::uint64_t seed = 7;
  int max_L = 10;
  unsigned jobs = 1;
  /// Instances per random suite; 0 selects the default for each suite.
  int count = 0;
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  /// Negative controls: deliberately wrong identities that must fail.
  std::vector<CheckReport> controls;

  std::size_t passed() const;
  std::size_t failed() const;
  /// Controls that failed as intended.
  std::size_t controls_rejected() const;
  const CheckReport* first_failure() const;
};

SuiteResult run_suite(Suite suite, const SuiteOptions& options);

/// Summary object: counts plus the first failing instance verbatim.
nlohmann::json suite_summary(const SuiteResult& result);

}  // namespace lozenge
