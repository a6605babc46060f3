#pragma once

// Two independent ways to count (weighted) lozenge tilings of H_{x,y}(U;D;B):
//
//  * brute:  perfect matchings of the dual graph, found by branching on the
//            lowest-indexed uncovered triangle (memoized on the covered set);
//  * axis:   sum over the y axis positions crossed by vertical lozenges of
//            products of the two dented-semihexagon counts on either side.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lozenge/exactnum.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

enum class LozengeKind : std::uint8_t {
  R,  ///< {up(a,b), down(a,b)}: right-tilting
  L,  ///< {up(a,b), down(a-1,b)}: left-tilting
  V,  ///< {up(a,b), down(a,b-1)}: vertical
};

struct Lozenge {
  LozengeKind kind = LozengeKind::R;
  int a = 0;  ///< anchor: the up triangle is up(a, b)
  int b = 0;

  TriangleId up_half() const { return up(a, b); }
  TriangleId down_half() const;

  friend auto operator<=>(const Lozenge&, const Lozenge&) = default;
};

struct Tiling {
  std::vector<Lozenge> lozenges;  // sorted
};

struct BruteOptions {
  std::size_t max_triangles = 120;
};

/// Throw RegionTooLarge when the region exceeds options.max_triangles.
Count count_brute(const TriangularRegion& region, BruteOptions options = {});
QPoly qcount_brute(const TriangularRegion& region, BruteOptions options = {});

/// Tilings in DFS order, at most `limit` of them.
std::vector<Tiling> enumerate_tilings(const TriangularRegion& region, std::size_t limit,
                                      BruteOptions options = {});

/// Lozenge weight: R-lozenges in row b weigh q^{b+1} above the axis and
/// q^{b} below it; L and V lozenges weigh 1.
int lozenge_q_exponent(const Lozenge& l);
QPoly tiling_qweight(const Tiling& t);

/// True when the lozenges cover exactly the region's triangles, each once,
/// and no vertical lozenge crosses the axis at a forbidden position.
bool is_tiling_of(const TriangularRegion& region, const Tiling& t);

/// Number of crossing subsets the axis-cut sum visits: C(|free|, y).
Count axis_term_count(const ValidatedSpec& spec);

/// `jobs` splits the subset range into chunks summed on worker threads;
/// the result is independent of it.
Count count_axis(const ValidatedSpec& spec, unsigned jobs = 1);
QPoly qcount_axis(const ValidatedSpec& spec, unsigned jobs = 1);

/// Convenience wrappers: build the region and count by brute force.
Count count_brute(const ValidatedSpec& spec, BruteOptions options = {});
QPoly qcount_brute(const ValidatedSpec& spec, BruteOptions options = {});

enum class Engine { axis, brute };

Count count(const ValidatedSpec& spec, Engine engine, unsigned jobs = 1);
QPoly qcount(const ValidatedSpec& spec, Engine engine, unsigned jobs = 1);

}  // namespace lozenge
