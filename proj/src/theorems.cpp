#include "lozenge/theorems.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <limits>

#include "lozenge/json_io.hpp"
#include "lozenge/parallel.hpp"

namespace lozenge {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return Clock::now() - start_; }

 private:
  Clock::time_point start_ = Clock::now();
};

std::string ratio_text(const Count& num, const Count& den) {
  if (den == 0) return num.get_str() + "/0";
  return to_string(make_ratio(num, den));
}

Positions with(Positions p, std::initializer_list<int> extra) {
  p.insert(p.end(), extra);
  std::sort(p.begin(), p.end());
  return p;
}

Positions set_union(const Positions& a, const Positions& b) {
  Positions out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Positions set_difference(const Positions& a, const Positions& b) {
  Positions out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Calls visit(S) for every k-subset S of pool, in lexicographic order.
template <typename Visit>
void for_each_subset(const Positions& pool, int k, Visit&& visit) {
  Positions current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(current.size()) == k) {
      visit(current);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      if (pool.size() - i < static_cast<std::size_t>(k) - current.size()) break;
      current.push_back(pool[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::string to_json_line(const CheckReport& report, bool with_timing) {
  json j{{"name", report.name}, {"instance", report.instance}, {"lhs", report.lhs},
         {"rhs", report.rhs},   {"pass", report.pass}};
  if (!report.extra.is_null()) j["extra"] = report.extra;
  if (with_timing) {
    j["elapsed_ms"] = std::chrono::duration<double, std::milli>(report.elapsed).count();
  }
  return j.dump();
}

CheckReport check_ratio_identity(std::string name, json instance, const Count& lhs_num, const Count& lhs_den,
                                 const Ratio& rhs) {
  CheckReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.lhs = ratio_text(lhs_num, lhs_den);
  r.rhs = to_string(rhs);
  r.pass = lhs_num * rhs.get_den() == lhs_den * rhs.get_num();
  return r;
}

CheckReport check_thm1(const ShuffleInstance& inst, CheckOptions options) {
  Stopwatch sw;
  const Ratio rhs = shuffle_rhs(inst);
  const Count a = count(validate_spec(inst.lhs_spec()), options.engine);
  const Count b = count(validate_spec(inst.rhs_spec()), options.engine);
  CheckReport r = check_ratio_identity("thm1", to_json(inst), a, b, rhs);
  r.elapsed = sw.elapsed();
  return r;
}

CheckReport check_pair_product(const ShuffleInstance& inst, CheckOptions options) {
  Stopwatch sw;
  validate_shuffle(inst, true);
  const auto m = [&](const Positions& U, const Positions& D, int x, int y) {
    return count(validate_spec({x, y, U, D, inst.B}), options.engine);
  };
  const Count lhs = m(inst.U, inst.D, inst.x, inst.y) * m(inst.U_prime, inst.D_prime, inst.x + inst.y, 0);
  const Count rhs = m(inst.U_prime, inst.D_prime, inst.x, inst.y) * m(inst.U, inst.D, inst.x + inst.y, 0);
  CheckReport r;
  r.name = "pair_product";
  r.instance = to_json(inst);
  r.lhs = lhs.get_str();
  r.rhs = rhs.get_str();
  r.pass = lhs == rhs;
  r.elapsed = sw.elapsed();
  return r;
}

CheckReport check_thm2(const ShuffleInstance& inst, PpReading reading, CheckOptions options) {
  Stopwatch sw;
  const Ratio rhs = gen_shuffle_rhs(inst, reading);
  const Count a = count(validate_spec(inst.lhs_spec()), options.engine);
  const Count b = count(validate_spec(inst.rhs_spec()), options.engine);
  CheckReport r = check_ratio_identity(reading == PpReading::corrected ? "thm2" : "thm2_literal_pp", to_json(inst),
                                       a, b, rhs);
  r.elapsed = sw.elapsed();
  return r;
}

CheckReport check_barrier_independence(const ShuffleInstance& inst, const std::vector<Positions>& barrier_sets,
                                       CheckOptions options) {
  Stopwatch sw;
  std::vector<Count> lhs_counts;
  std::vector<Count> rhs_counts;
  json ratios = json::array();
  for (const Positions& b : barrier_sets) {
    ShuffleInstance with_b = inst;
    with_b.B = b;
    validate_shuffle(with_b, false);
    lhs_counts.push_back(count(validate_spec(with_b.lhs_spec()), options.engine));
    rhs_counts.push_back(count(validate_spec(with_b.rhs_spec()), options.engine));
    ratios.push_back(ratio_text(lhs_counts.back(), rhs_counts.back()));
  }
  bool pass = true;
  for (std::size_t i = 0; i < barrier_sets.size(); ++i) {
    for (std::size_t j = i + 1; j < barrier_sets.size(); ++j) {
      pass = pass && lhs_counts[i] * rhs_counts[j] == rhs_counts[i] * lhs_counts[j];
    }
  }
  ShuffleInstance shown = inst;
  shown.B.clear();
  json instance = to_json(shown);
  instance.erase("B");
  instance["barrier_sets"] = barrier_sets;

  CheckReport r;
  r.name = "barrier_independence";
  r.instance = std::move(instance);
  r.lhs = ratios.dump();
  r.rhs = ratios.empty() ? "" : ratios.front().get<std::string>();
  r.pass = pass;
  r.elapsed = sw.elapsed();
  return r;
}

CheckReport check_thm3(const ShuffleInstance& inst, QShuffleOptions q_options, CheckOptions options) {
  Stopwatch sw;
  const QPoly a = qcount(validate_spec(inst.lhs_spec()), options.engine);
  const QPoly b = qcount(validate_spec(inst.rhs_spec()), options.engine);
  const QRatio lhs(a, b);
  const QRatio rhs = q_shuffle_rhs(inst, q_options);

  QShuffleOptions printed = q_options;
  printed.exponent = ExponentReading::printed;
  QShuffleOptions derived = q_options;
  derived.exponent = ExponentReading::derived;

  CheckReport r;
  r.name = q_options.bracket == QBracketReading::q_bracket ? "thm3" : "thm3_integer_gap";
  r.instance = to_json(inst);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.pass = qratio_eq(lhs, rhs);
  r.extra = json{
      {"printed_C", q_shuffle_exponent(inst, ExponentReading::printed)},
      {"derived_C", q_shuffle_exponent(inst, ExponentReading::derived)},
      {"printed_C_pass", qratio_eq(lhs, q_shuffle_rhs(inst, printed))},
      {"derived_C_pass", qratio_eq(lhs, q_shuffle_rhs(inst, derived))},
      {"q1_shadow_pass", lhs.eval_one() == gen_shuffle_rhs(inst)},
  };
  r.elapsed = sw.elapsed();
  return r;
}

KuoPositions kuo_positions(const ValidatedSpec& spec) {
  const Positions& free = spec.free_positions();
  if (free.size() < 2) {
    throw Error(ErrorKind::NoDistinctAlphaBeta, "need two free axis positions for condensation");
  }
  return {free.front(), free.back()};
}

CheckReport check_kuo(const RegionSpec& raw, CheckOptions options) {
  Stopwatch sw;
  const ValidatedSpec spec = validate_spec(raw);
  if (spec.x() < 1 || spec.y() < 1) throw Error(ErrorKind::InvalidInput, "condensation needs x >= 1 and y >= 1");
  const auto [alpha, beta] = kuo_positions(spec);

  std::vector<RegionSpec> parts = {
      raw,
      {raw.x - 1, raw.y - 1, with(raw.U, {alpha, beta}), raw.D, raw.B},
      {raw.x - 1, raw.y, with(raw.U, {beta}), raw.D, raw.B},
      {raw.x, raw.y - 1, with(raw.U, {alpha}), raw.D, raw.B},
      {raw.x - 1, raw.y, with(raw.U, {alpha}), raw.D, raw.B},
      {raw.x, raw.y - 1, with(raw.U, {beta}), raw.D, raw.B},
  };
  std::vector<QPoly> m;
  for (const RegionSpec& p : parts) m.push_back(qcount(validate_spec(p), options.engine));

  const QPoly lhs = m[0] * m[1];
  const QPoly rhs = m[2] * m[3] + m[4] * m[5];
  std::vector<Count> ones;
  for (const QPoly& p : m) ones.push_back(qp_eval_one(p));

  CheckReport r;
  r.name = "kuo";
  r.instance = to_json(raw);
  r.instance["alpha"] = alpha;
  r.instance["beta"] = beta;
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.pass = lhs == rhs;
  r.extra = json{{"q1_shadow_pass", ones[0] * ones[1] == ones[2] * ones[3] + ones[4] * ones[5]}};
  r.elapsed = sw.elapsed();
  return r;
}

CheckReport check_schur_sum(const RegionSpec& raw, BruteOptions brute) {
  Stopwatch sw;
  const ValidatedSpec spec = validate_spec(raw);
  if (!spec.B().empty()) throw Error(ErrorKind::InvalidInput, "Schur sum is stated without barriers");

  Positions all(static_cast<std::size_t>(spec.L()));
  for (int k = 1; k <= spec.L(); ++k) all[static_cast<std::size_t>(k - 1)] = k;
  const Positions pool = set_difference(all, set_union(spec.U(), spec.D()));

  Count sum = 0;
  for_each_subset(pool, spec.y(), [&](const Positions& s) {
    sum += schur_ones(set_union(spec.U(), s)) * schur_ones(set_union(spec.D(), s));
  });
  const Count brute_count = count_brute(build_region(spec), brute);

  CheckReport r;
  r.name = "schur_sum";
  r.instance = to_json(raw);
  r.lhs = brute_count.get_str();
  r.rhs = sum.get_str();
  r.pass = brute_count == sum;
  r.elapsed = sw.elapsed();
  return r;
}

AsymTable asym_table(const ClusterSpec& c, const ClusterSpec& c_prime, int x, int y, int n_max,
                     std::uint64_t term_budget, unsigned jobs) {
  AsymTable table;
  table.limit = asym_rhs(c, c_prime);
  for (int N = 1; N <= n_max; ++N) {
    const ValidatedSpec a = clusters_to_spec(scale_gaps(c, N), N * x, N * y);
    const ValidatedSpec b = clusters_to_spec(scale_gaps(c_prime, N), N * x, N * y);
    if (a.u() != b.u() || a.d() != b.d()) {
      throw Error(ErrorKind::IncompatibleClusters, "shuffled clusters must keep the total up/down counts");
    }
    for (const ValidatedSpec* s : {&a, &b}) {
      if (axis_term_count(*s) > term_budget) {
        throw Error(ErrorKind::TermBudgetExceeded,
                    "N = " + std::to_string(N) + " needs " + axis_term_count(*s).get_str() + " terms");
      }
    }
    AsymRow row;
    row.N = N;
    row.ratio = make_ratio(count_axis(a, jobs), count_axis(b, jobs));
    row.ratio_over_limit = row.ratio / table.limit;
    row.deviation = abs(row.ratio_over_limit - 1);
    table.rows.push_back(std::move(row));
  }
  return table;
}

bool rows_equal_limit(const AsymTable& t) {
  return std::all_of(t.rows.begin(), t.rows.end(), [&](const AsymRow& r) { return r.ratio == t.limit; });
}

// ---------------------------------------------------------------------------
// Random instances

int uniform_int(Rng& rng, int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return lo + static_cast<int>(v % range);
}

namespace {

template <typename T>
void shuffle_in_place(Rng& rng, std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  }
}

/// Random k-subset of [1..L], ascending.
Positions random_subset(Rng& rng, const Positions& pool, int k) {
  Positions p = pool;
  shuffle_in_place(rng, p);
  p.resize(static_cast<std::size_t>(k));
  std::sort(p.begin(), p.end());
  return p;
}

Positions iota_positions(int L) {
  Positions p(static_cast<std::size_t>(L));
  for (int k = 1; k <= L; ++k) p[static_cast<std::size_t>(k - 1)] = k;
  return p;
}

enum class Role { both, up_only, down_only };

struct DentLayout {
  Positions dents;
  std::vector<Role> roles;
};

DentLayout random_dents(Rng& rng, int L, int n) {
  DentLayout out;
  out.dents = random_subset(rng, iota_positions(L), n);
  for (std::size_t i = 0; i < out.dents.size(); ++i) {
    const int r = uniform_int(rng, 0, 4);
    out.roles.push_back(r == 0 ? Role::both : r <= 2 ? Role::up_only : Role::down_only);
  }
  return out;
}

void split_roles(const DentLayout& layout, const std::vector<Role>& roles, Positions& U, Positions& D) {
  U.clear();
  D.clear();
  for (std::size_t i = 0; i < layout.dents.size(); ++i) {
    if (roles[i] != Role::down_only) U.push_back(layout.dents[i]);
    if (roles[i] != Role::up_only) D.push_back(layout.dents[i]);
  }
}

}  // namespace

ShuffleInstance random_shuffle_instance(Rng& rng, int max_L, ShuffleShape shape, int max_barriers) {
  ShuffleInstance inst;
  const int L = uniform_int(rng, 2, std::max(2, max_L));
  inst.y = uniform_int(rng, 0, std::min(3, L));
  const int n = uniform_int(rng, 0, L - inst.y);
  inst.x = L - inst.y - n;
  const DentLayout layout = random_dents(rng, L, n);
  split_roles(layout, layout.roles, inst.U, inst.D);

  // Reassign orientations inside the symmetric difference.
  std::vector<Role> primed = layout.roles;
  if (shape == ShuffleShape::theorem1) {
    std::vector<Role> single;
    for (Role r : primed) {
      if (r != Role::both) single.push_back(r);
    }
    shuffle_in_place(rng, single);
    std::size_t next = 0;
    for (Role& r : primed) {
      if (r != Role::both) r = single[next++];
    }
  } else {
    for (Role& r : primed) {
      if (r != Role::both) r = uniform_int(rng, 0, 1) == 0 ? Role::up_only : Role::down_only;
    }
  }
  split_roles(layout, primed, inst.U_prime, inst.D_prime);

  const Positions pool = set_difference(iota_positions(L), layout.dents);
  const int nb = uniform_int(rng, 0, std::min({max_barriers, inst.x, static_cast<int>(pool.size())}));
  inst.B = random_subset(rng, pool, nb);
  return inst;
}

RegionSpec random_kuo_spec(Rng& rng, int max_L, int max_barriers) {
  RegionSpec spec;
  const int L = uniform_int(rng, 3, std::max(3, max_L));
  spec.y = uniform_int(rng, 1, std::min(3, L - 1));
  const int n = uniform_int(rng, 0, L - spec.y - 1);
  spec.x = L - spec.y - n;
  const DentLayout layout = random_dents(rng, L, n);
  split_roles(layout, layout.roles, spec.U, spec.D);
  const Positions pool = set_difference(iota_positions(L), layout.dents);
  const int nb = uniform_int(rng, 0, std::min(max_barriers, spec.x - 1));
  spec.B = random_subset(rng, pool, nb);
  return spec;
}

RegionSpec random_small_spec(Rng& rng, int max_L, std::size_t max_triangles) {
  for (;;) {
    RegionSpec spec;
    const int L = uniform_int(rng, 1, std::max(1, max_L));
    spec.y = uniform_int(rng, 0, std::min(2, L));
    const int n = uniform_int(rng, 0, L - spec.y);
    spec.x = L - spec.y - n;
    const DentLayout layout = random_dents(rng, L, n);
    split_roles(layout, layout.roles, spec.U, spec.D);
    if (build_region(validate_spec(spec)).size() <= max_triangles) return spec;
  }
}

std::vector<RegionSpec> small_corpus(const CorpusOptions& options) {
  std::vector<RegionSpec> out;
  for (int L = 1; L <= options.max_L; ++L) {
    const Positions axis = iota_positions(L);
    for (int y = 0; y <= std::min(options.max_y, L); ++y) {
      for (int u = 0; u <= options.max_u; ++u) {
        for_each_subset(axis, u, [&](const Positions& U) {
          for (int d = 0; d <= options.max_d; ++d) {
            for_each_subset(axis, d, [&](const Positions& D) {
              const Positions dents = set_union(U, D);
              const int x = L - y - static_cast<int>(dents.size());
              if (x < 0) return;
              const Positions pool = set_difference(axis, dents);
              for (int nb = 0; nb <= std::min(options.max_barriers, x); ++nb) {
                for_each_subset(pool, nb, [&](const Positions& B) { out.push_back({x, y, U, D, B}); });
              }
            });
          }
        });
      }
    }
  }
  return out;
}

std::vector<RegionSpec> sample_corpus(const std::vector<RegionSpec>& corpus, std::uint64_t seed, std::size_t k) {
  if (k == 0 || k >= corpus.size()) return corpus;
  std::vector<std::size_t> idx(corpus.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(seed);
  shuffle_in_place(rng, idx);
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  std::vector<RegionSpec> out;
  for (std::size_t i : idx) out.push_back(corpus[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Suites

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::thm1, Suite::thm2, Suite::thm3, Suite::kuo, Suite::schur, Suite::barrier, Suite::asym,
                  Suite::all}) {
    if (suite_name(s) == name) return s;
  }
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::thm1: return "thm1";
    case Suite::thm2: return "thm2";
    case Suite::thm3: return "thm3";
    case Suite::kuo: return "kuo";
    case Suite::schur: return "schur";
    case Suite::barrier: return "barrier";
    case Suite::asym: return "asym";
    case Suite::all: return "all";
  }
  return "?";
}

std::size_t SuiteResult::passed() const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; }));
}

std::size_t SuiteResult::failed() const { return reports.size() - passed(); }

std::size_t SuiteResult::controls_rejected() const {
  return static_cast<std::size_t>(
      std::count_if(controls.begin(), controls.end(), [](const CheckReport& r) { return !r.pass; }));
}

const CheckReport* SuiteResult::first_failure() const {
  auto it = std::find_if(reports.begin(), reports.end(), [](const CheckReport& r) { return !r.pass; });
  return it == reports.end() ? nullptr : &*it;
}

namespace {

/// One unit of work: produces reports and controls, evaluated in parallel,
/// collected in task order.
struct Task {
  std::function<void(std::vector<CheckReport>&, std::vector<CheckReport>&)> run;
};

void run_tasks(const std::vector<Task>& tasks, unsigned jobs, SuiteResult& out) {
  std::vector<std::vector<CheckReport>> reports(tasks.size());
  std::vector<std::vector<CheckReport>> controls(tasks.size());
  parallel_for(tasks.size(), jobs, [&](std::size_t i) { tasks[i].run(reports[i], controls[i]); });
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::move(reports[i].begin(), reports[i].end(), std::back_inserter(out.reports));
    std::move(controls[i].begin(), controls[i].end(), std::back_inserter(out.controls));
  }
}

int count_or(const SuiteOptions& o, int fallback) { return o.count > 0 ? o.count : fallback; }

void add_thm1(std::vector<Task>& tasks, Rng& rng, const SuiteOptions& o) {
  const int n = count_or(o, 100);
  for (int i = 0; i < n; ++i) {
    const ShuffleInstance inst = random_shuffle_instance(rng, o.max_L, ShuffleShape::theorem1, 0);
    const bool control = i < 5;
    tasks.push_back({[inst, control](auto& reports, auto& controls) {
      reports.push_back(check_thm1(inst));
      reports.push_back(check_pair_product(inst));
      if (control) {
        const Count a = count_axis(validate_spec(inst.lhs_spec()));
        const Count b = count_axis(validate_spec(inst.rhs_spec()));
        controls.push_back(check_ratio_identity("thm1_corrupted_rhs", to_json(inst), a, b, shuffle_rhs(inst) * 2));
      }
    }});
  }
}

void add_thm2(std::vector<Task>& tasks, Rng& rng, const SuiteOptions& o) {
  const int n = count_or(o, 100);
  for (int i = 0; i < n; ++i) {
    const ShuffleInstance inst = random_shuffle_instance(rng, o.max_L, ShuffleShape::general, 2);
    tasks.push_back({[inst](auto& reports, auto& controls) {
      reports.push_back(check_thm2(inst, PpReading::corrected));
      controls.push_back(check_thm2(inst, PpReading::literal));
    }});
  }
}

void add_thm3(std::vector<Task>& tasks, Rng& rng, const SuiteOptions& o) {
  const int n = count_or(o, 50);
  for (int i = 0; i < n; ++i) {
    const ShuffleInstance inst = random_shuffle_instance(rng, o.max_L, ShuffleShape::general, 2);
    tasks.push_back({[inst](auto& reports, auto& controls) {
      reports.push_back(check_thm3(inst));
      controls.push_back(check_thm3(inst, {QBracketReading::integer_gap, ExponentReading::derived}));
    }});
  }
}

void add_kuo(std::vector<Task>& tasks, Rng& rng, const SuiteOptions& o) {
  tasks.push_back({[](auto& reports, auto&) {
    reports.push_back(check_kuo(RegionSpec{1, 1, {}, {}, {}}, {Engine::brute}));
  }});
  const int n = count_or(o, 20);
  for (int i = 0; i < n; ++i) {
    const RegionSpec spec = random_kuo_spec(rng, o.max_L, 2);
    tasks.push_back({[spec](auto& reports, auto&) { reports.push_back(check_kuo(spec)); }});
  }
}

void add_schur(std::vector<Task>& tasks, Rng& rng, const SuiteOptions& o) {
  const int n = count_or(o, 30);
  for (int i = 0; i < n; ++i) {
    const RegionSpec spec = random_small_spec(rng, std::min(o.max_L, 8));
    tasks.push_back({[spec](auto& reports, auto&) { reports.push_back(check_schur_sum(spec)); }});
  }
}

/// Reference region H_{4,3}(2,4,5,8,11; 4,9,11,12) against the variant with
/// the up-dent at 2 flipped down.
ShuffleInstance reference_flip_instance() {
  return ShuffleInstance{4, 3, {2, 4, 5, 8, 11}, {4, 9, 11, 12}, {4, 5, 8, 11}, {2, 4, 9, 11, 12}, {}};
}

void add_barrier(std::vector<Task>& tasks, Rng& rng, const SuiteOptions& o) {
  tasks.push_back({[](auto& reports, auto& controls) {
    const ShuffleInstance inst = reference_flip_instance();
    const std::vector<Positions> sets = {{}, {6}, {6, 13}};
    reports.push_back(check_barrier_independence(inst, sets));
    // Corrupt one count: the pairwise cross-products must then disagree.
    const Count a0 = count_axis(validate_spec({inst.x, inst.y, inst.U, inst.D, sets[0]}));
    const Count b0 = count_axis(validate_spec({inst.x, inst.y, inst.U_prime, inst.D_prime, sets[0]}));
    const Count a1 = count_axis(validate_spec({inst.x, inst.y, inst.U, inst.D, sets[1]}));
    const Count b1 = count_axis(validate_spec({inst.x, inst.y, inst.U_prime, inst.D_prime, sets[1]}));
    controls.push_back(check_ratio_identity("barrier_corrupted_count", to_json(inst), (a0 + 1) * b1, b0,
                                            make_ratio(a1, 1)));
  }});
  const int n = count_or(o, 10);
  for (int i = 0; i < n; ++i) {
    ShuffleInstance inst = random_shuffle_instance(rng, o.max_L, ShuffleShape::general, 0);
    Positions blocked = set_union(inst.U, inst.D);
    const Positions pool = set_difference(iota_positions(inst.x + inst.y + static_cast<int>(blocked.size())), blocked);
    std::vector<Positions> sets = {{}};
    for (int s = 0; s < 2; ++s) {
      sets.push_back(random_subset(rng, pool, uniform_int(rng, 0, std::min(inst.x, static_cast<int>(pool.size())))));
    }
    tasks.push_back({[inst, sets](auto& reports, auto&) { reports.push_back(check_barrier_independence(inst, sets)); }});
  }
}

ClusterSpec clusters(std::vector<std::vector<Token>> c, std::vector<int> gaps) { return {std::move(c), std::move(gaps)}; }

CheckReport asym_report(const std::string& name, const ClusterSpec& a, const ClusterSpec& b, int x, int y, int n_max,
                        bool require_convergence) {
  const auto t0 = Clock::now();
  const AsymTable t = asym_table(a, b, x, y, n_max);
  CheckReport r;
  r.name = name;
  r.instance = json{{"C", to_json(a)}, {"C'", to_json(b)}, {"x", x}, {"y", y}, {"Nmax", n_max}};
  json devs = json::array();
  for (const AsymRow& row : t.rows) devs.push_back(to_string(row.deviation));
  r.lhs = devs.dump();
  r.rhs = to_string(t.limit);
  r.pass = require_convergence ? t.rows.back().deviation < t.rows.front().deviation : rows_equal_limit(t);
  r.elapsed = Clock::now() - t0;
  return r;
}

/// Cluster limit vs the per-cluster Vandermonde ratios.
CheckReport asym_limit_report(const ClusterSpec& a, const ClusterSpec& b) {
  Count num = 1;
  Count den = 1;
  for (std::size_t i = 0; i < a.clusters.size(); ++i) {
    const auto local = [](const std::vector<Token>& c, Token want) {
      Positions p;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == want) p.push_back(static_cast<int>(k + 1));
      }
      return p;
    };
    num *= delta(local(a.clusters[i], Token::up)) * delta(local(a.clusters[i], Token::down));
    den *= delta(local(b.clusters[i], Token::up)) * delta(local(b.clusters[i], Token::down));
  }
  return check_ratio_identity("asym_limit", json{{"C", to_json(a)}, {"C'", to_json(b)}}, num, den, asym_rhs(a, b));
}

void add_asym(std::vector<Task>& tasks) {
  using enum Token;
  // Two singleton clusters pinned to the west and east vertices.
  const ClusterSpec pair_a = clusters({{up}, {down}}, {2});
  const ClusterSpec pair_b = clusters({{down}, {up}}, {2});
  // One interior cluster shuffled in place: the ratio is N-independent.
  const ClusterSpec mid_a = clusters({{}, {up, down, up}, {}}, {1, 1});
  const ClusterSpec mid_b = clusters({{}, {up, up, down}, {}}, {1, 1});
  // Shuffle inside the west cluster while an up-dent sits in the east cluster.
  const ClusterSpec split_a = clusters({{up, down}, {up}}, {2});
  const ClusterSpec split_b = clusters({{down, up}, {up}}, {2});

  tasks.push_back({[=](auto& reports, auto&) {
    reports.push_back(asym_limit_report(pair_a, pair_b));
    reports.push_back(asym_report("asym_rows_equal_limit", pair_a, pair_b, 1, 1, 6, false));
  }});
  tasks.push_back({[=](auto& reports, auto&) {
    reports.push_back(asym_limit_report(mid_a, mid_b));
    reports.push_back(asym_report("asym_rows_equal_limit", mid_a, mid_b, 1, 1, 6, false));
  }});
  tasks.push_back({[=](auto& reports, auto&) {
    reports.push_back(asym_limit_report(split_a, split_b));
    reports.push_back(asym_report("asym_convergence", split_a, split_b, 1, 1, 6, true));
  }});
}

}  // namespace

SuiteResult run_suite(Suite suite, const SuiteOptions& options) {
  // Each suite draws from its own stream so adding one does not perturb others.
  const auto stream = [&](Suite s) { return Rng(options.seed * 1000003u + static_cast<std::uint64_t>(s)); };
  std::vector<Task> tasks;
  const auto add = [&](Suite s) {
    Rng rng = stream(s);
    switch (s) {
      case Suite::thm1: add_thm1(tasks, rng, options); break;
      case Suite::thm2: add_thm2(tasks, rng, options); break;
      case Suite::thm3: add_thm3(tasks, rng, options); break;
      case Suite::kuo: add_kuo(tasks, rng, options); break;
      case Suite::schur: add_schur(tasks, rng, options); break;
      case Suite::barrier: add_barrier(tasks, rng, options); break;
      case Suite::asym: add_asym(tasks); break;
      case Suite::all: break;
    }
  };
  if (suite == Suite::all) {
    for (Suite s : {Suite::thm1, Suite::thm2, Suite::thm3, Suite::kuo, Suite::schur, Suite::barrier, Suite::asym}) {
      add(s);
    }
  } else {
    add(suite);
  }
  SuiteResult result;
  run_tasks(tasks, options.jobs, result);
  return result;
}

json suite_summary(const SuiteResult& result) {
  json j{{"summary", true},
         {"checks", result.reports.size()},
         {"passed", result.passed()},
         {"failed", result.failed()},
         {"controls", result.controls.size()},
         {"controls_rejected", result.controls_rejected()}};
  if (const CheckReport* f = result.first_failure()) {
    j["first_failure"] = json::parse(to_json_line(*f));
  }
  return j;
}

}  // namespace lozenge
