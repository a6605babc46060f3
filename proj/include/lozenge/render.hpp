#pragma once

// SVG pictures of regions and tilings. Oblique lattice point (a, b) is drawn
// at (a + b/2, -b * sqrt(3)/2) * unit, so the axis is horizontal.
//
// Removed triangles carry class="dent", barriers class="barrier", lozenges
// class="lozenge R|L|V"; the renderer's tests count these attributes.

#include <cstddef>
#include <string>

#include "lozenge/engines.hpp"
#include "lozenge/lattice.hpp"

namespace lozenge {

struct RenderOptions {
  double unit = 24.0;
};

/// Region outline: every unit triangle, dents filled dark, barriers thick.
std::string render_region_svg(const ValidatedSpec& spec, RenderOptions options = {});

/// Tiling number `index` in enumerate_tilings order. Throws RegionTooLarge
/// past the brute-force limit and InvalidInput when index is out of range.
std::string render_tiling_svg(const ValidatedSpec& spec, std::size_t index, RenderOptions options = {},
                              BruteOptions brute = {});

}  // namespace lozenge
