#include "lozenge/engines.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <unordered_map>

#include "lozenge/formulas.hpp"
#include "lozenge/parallel.hpp"

namespace lozenge {

TriangleId Lozenge::down_half() const {
  switch (kind) {
    case LozengeKind::R: return down(a, b);
    case LozengeKind::L: return down(a - 1, b);
    case LozengeKind::V: return down(a, b - 1);
  }
  return down(a, b);
}

int lozenge_q_exponent(const Lozenge& l) {
  if (l.kind != LozengeKind::R) return 0;
  return l.b >= 0 ? l.b + 1 : l.b;
}

QPoly tiling_qweight(const Tiling& t) {
  int e = 0;
  for (const Lozenge& l : t.lozenges) e += lozenge_q_exponent(l);
  return QPoly::q_power(e);
}

namespace {

// Dual graph with triangles indexed in TriangleId order.
struct DualGraph {
  struct Edge {
    int partner;
    Lozenge lozenge;
  };
  std::vector<std::vector<Edge>> edges;
};

DualGraph make_dual_graph(const TriangularRegion& region) {
  DualGraph g;
  const auto& tris = region.triangles();
  g.edges.resize(tris.size());
  const auto crosses_forbidden = [&](const Lozenge& l) {
    return l.kind == LozengeKind::V && l.b == 0 && region.is_forbidden_vertical(l.a + 1);
  };
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const TriangleId& t = tris[i];
    std::array<Lozenge, 3> candidates;
    if (t.orient == Orient::up) {
      candidates = {Lozenge{LozengeKind::R, t.a, t.b}, Lozenge{LozengeKind::L, t.a, t.b},
                    Lozenge{LozengeKind::V, t.a, t.b}};
    } else {
      candidates = {Lozenge{LozengeKind::R, t.a, t.b}, Lozenge{LozengeKind::L, t.a + 1, t.b},
                    Lozenge{LozengeKind::V, t.a, t.b + 1}};
    }
    for (const Lozenge& l : candidates) {
      if (crosses_forbidden(l)) continue;
      const TriangleId other = t.orient == Orient::up ? l.down_half() : l.up_half();
      const int j = region.index_of(other);
      if (j >= 0) g.edges[i].push_back({j, l});
    }
  }
  return g;
}

void check_size(const TriangularRegion& region, const BruteOptions& options) {
  if (region.size() > options.max_triangles) {
    throw Error(ErrorKind::RegionTooLarge, "region has " + std::to_string(region.size()) +
                                               " triangles; brute-force limit is " +
                                               std::to_string(options.max_triangles));
  }
}

template <std::size_t Words>
struct Mask {
  std::array<std::uint64_t, Words> w{};

  bool test(int i) const { return (w[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u; }
  void set(int i) { w[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64); }
  /// Lowest clear bit below `size`, or -1.
  int lowest_clear(int size) const {
    for (std::size_t k = 0; k < Words; ++k) {
      const std::uint64_t inv = ~w[k];
      if (inv != 0) {
        const int i = static_cast<int>(k * 64) + std::countr_zero(inv);
        return i < size ? i : -1;
      }
    }
    return -1;
  }
  friend bool operator==(const Mask&, const Mask&) = default;
};

template <std::size_t Words>
struct MaskHash {
  std::size_t operator()(const Mask<Words>& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t x : m.w) {
      h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct CountWeights {
  using Value = Count;
  static Value one() { return 1; }
  static void add_branch(Value& acc, const Value& sub, const Lozenge&) { acc += sub; }
};

struct QWeights {
  using Value = QPoly;
  static Value one() { return QPoly(1); }
  static void add_branch(Value& acc, const Value& sub, const Lozenge& l) {
    if (!sub.is_zero()) acc += sub.shifted(lozenge_q_exponent(l));
  }
};

template <typename Weights, std::size_t Words>
class MatchingCounter {
 public:
  using Value = typename Weights::Value;

  explicit MatchingCounter(const DualGraph& g) : g_(g), size_(static_cast<int>(g.edges.size())) {}

  Value run() { return solve(Mask<Words>{}); }

 private:
  Value solve(const Mask<Words>& covered) {
    const int i = covered.lowest_clear(size_);
    if (i < 0) return Weights::one();
    if (auto it = memo_.find(covered); it != memo_.end()) return it->second;

    Value total{};
    for (const auto& e : g_.edges[static_cast<std::size_t>(i)]) {
      if (covered.test(e.partner)) continue;
      Mask<Words> next = covered;
      next.set(i);
      next.set(e.partner);
      Weights::add_branch(total, solve(next), e.lozenge);
    }
    memo_.emplace(covered, total);
    return total;
  }

  const DualGraph& g_;
  int size_;
  std::unordered_map<Mask<Words>, Value, MaskHash<Words>> memo_;
};

template <typename Weights>
typename Weights::Value count_matchings(const TriangularRegion& region, const BruteOptions& options) {
  check_size(region, options);
  const DualGraph g = make_dual_graph(region);
  const std::size_t n = region.size();
  if (n <= 64) return MatchingCounter<Weights, 1>(g).run();
  if (n <= 128) return MatchingCounter<Weights, 2>(g).run();
  if (n <= 256) return MatchingCounter<Weights, 4>(g).run();
  throw Error(ErrorKind::RegionTooLarge, "brute-force engine supports at most 256 triangles");
}

class TilingCollector {
 public:
  TilingCollector(const DualGraph& g, std::size_t limit)
      : g_(g), limit_(limit), covered_(g.edges.size(), false) {}

  std::vector<Tiling> run() {
    if (limit_ > 0) dfs();
    return std::move(out_);
  }

 private:
  void dfs() {
    const auto it = std::find(covered_.begin(), covered_.end(), false);
    if (it == covered_.end()) {
      Tiling t{current_};
      std::sort(t.lozenges.begin(), t.lozenges.end());
      out_.push_back(std::move(t));
      return;
    }
    const std::size_t i = static_cast<std::size_t>(it - covered_.begin());
    for (const auto& e : g_.edges[i]) {
      const auto j = static_cast<std::size_t>(e.partner);
      if (covered_[j]) continue;
      covered_[i] = covered_[j] = true;
      current_.push_back(e.lozenge);
      dfs();
      current_.pop_back();
      covered_[i] = covered_[j] = false;
      if (out_.size() >= limit_) return;
    }
  }

  const DualGraph& g_;
  std::size_t limit_;
  std::vector<bool> covered_;
  std::vector<Lozenge> current_;
  std::vector<Tiling> out_;
};

// ---------------------------------------------------------------------------
// Axis-cut helpers

unsigned long binomial_ul(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  if (!b.fits_ulong_p()) throw Error(ErrorKind::TermBudgetExceeded, "axis-cut subset count overflows");
  return b.get_ui();
}

/// k-subset of {0..m-1} with the given colexicographic rank.
std::vector<int> unrank_colex(unsigned long rank, int m, int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    int v = i;
    while (v + 1 < m && binomial_ul(static_cast<unsigned long>(v + 1), static_cast<unsigned long>(i + 1)) <= rank) {
      ++v;
    }
    c[static_cast<std::size_t>(i)] = v;
    rank -= binomial_ul(static_cast<unsigned long>(v), static_cast<unsigned long>(i + 1));
  }
  return c;
}

/// Advances to the colex successor; false after the last subset.
bool next_colex(std::vector<int>& c, int m) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    const int limit = i + 1 < k ? c[static_cast<std::size_t>(i + 1)] : m;
    if (c[static_cast<std::size_t>(i)] + 1 < limit) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
      return true;
    }
  }
  return false;
}

template <typename Value, typename Term>
Value axis_sum(const ValidatedSpec& spec, unsigned jobs, Term term) {
  const Positions& free = spec.free_positions();
  const int m = static_cast<int>(free.size());
  const int k = spec.y();
  if (k > m) return Value{};
  const unsigned long total = binomial_ul(static_cast<unsigned long>(m), static_cast<unsigned long>(k));

  const unsigned long chunks = jobs <= 1 ? 1 : std::min<unsigned long>(total, jobs * 8ul);
  std::vector<Value> partial(chunks);
  parallel_for(chunks, jobs, [&](std::size_t chunk) {
    const unsigned long begin = total * chunk / chunks;
    const unsigned long end = total * (chunk + 1) / chunks;
    if (begin == end) return;
    std::vector<int> c = unrank_colex(begin, m, k);
    Positions crossing(static_cast<std::size_t>(k));
    Value acc{};
    for (unsigned long r = begin; r < end; ++r) {
      for (int i = 0; i < k; ++i) crossing[static_cast<std::size_t>(i)] = free[static_cast<std::size_t>(c[static_cast<std::size_t>(i)])];
      acc += term(crossing);
      next_colex(c, m);
    }
    partial[chunk] = std::move(acc);
  });
  Value sum{};
  for (auto& p : partial) sum += p;
  return sum;
}

Positions merged(const Positions& a, const Positions& b) {
  Positions out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Count count_brute(const TriangularRegion& region, BruteOptions options) {
  return count_matchings<CountWeights>(region, options);
}

QPoly qcount_brute(const TriangularRegion& region, BruteOptions options) {
  return count_matchings<QWeights>(region, options);
}

Count count_brute(const ValidatedSpec& spec, BruteOptions options) {
  return count_brute(build_region(spec), options);
}

QPoly qcount_brute(const ValidatedSpec& spec, BruteOptions options) {
  return qcount_brute(build_region(spec), options);
}

std::vector<Tiling> enumerate_tilings(const TriangularRegion& region, std::size_t limit, BruteOptions options) {
  check_size(region, options);
  const DualGraph g = make_dual_graph(region);
  return TilingCollector(g, limit).run();
}

bool is_tiling_of(const TriangularRegion& region, const Tiling& t) {
  std::vector<TriangleId> covered;
  covered.reserve(t.lozenges.size() * 2);
  for (const Lozenge& l : t.lozenges) {
    if (l.kind == LozengeKind::V && l.b == 0 && region.is_forbidden_vertical(l.a + 1)) return false;
    covered.push_back(l.up_half());
    covered.push_back(l.down_half());
  }
  std::sort(covered.begin(), covered.end());
  return covered == region.triangles();
}

Count axis_term_count(const ValidatedSpec& spec) {
  Count c;
  mpz_bin_uiui(c.get_mpz_t(), spec.free_positions().size(), static_cast<unsigned long>(spec.y()));
  return c;
}

Count count_axis(const ValidatedSpec& spec, unsigned jobs) {
  return axis_sum<Count>(spec, jobs, [&](const Positions& crossing) -> Count {
    return clp(merged(spec.U(), crossing)) * clp(merged(spec.D(), crossing));
  });
}

QPoly qcount_axis(const ValidatedSpec& spec, unsigned jobs) {
  const int L = spec.L();
  return axis_sum<QPoly>(spec, jobs, [&](const Positions& crossing) -> QPoly {
    // The lower half, turned 180 degrees, is a dented semihexagon with the
    // reflected dents and q replaced by 1/q.
    const QPoly upper = clp_q(merged(spec.U(), crossing));
    const QPoly lower = qp_invert_variable(clp_q(reflect_positions(merged(spec.D(), crossing), L)));
    return upper * lower;
  });
}

Count count(const ValidatedSpec& spec, Engine engine, unsigned jobs) {
  return engine == Engine::axis ? count_axis(spec, jobs) : count_brute(spec);
}

QPoly qcount(const ValidatedSpec& spec, Engine engine, unsigned jobs) {
  return engine == Engine::axis ? qcount_axis(spec, jobs) : qcount_brute(spec);
}

}  // namespace lozenge
