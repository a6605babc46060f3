#pragma once

// Doubly-dented hexagons H_{x,y}(U; D; B) and dented semihexagons as explicit
// sets of unit triangles on the triangular lattice.
//
// Coordinates use the oblique basis e1 = (1, 0), e2 = (1/2, sqrt(3)/2).
//   up(a, b)   has vertices (a, b), (a+1, b), (a, b+1)
//   down(a, b) has vertices (a+1, b), (a, b+1), (a+1, b+1)
// The axis l is the lattice line between rows b = 0 and b = -1. Axis
// position k (1-based) is the unit segment from (k-1, 0) to (k, 0).

#include <compare>
#include <cstdint>
#include <vector>

#include "lozenge/error.hpp"

namespace lozenge {

/// Strictly increasing list of 1-based axis positions.
using Positions = std::vector<int>;

enum class Orient : std::uint8_t { up = 0, down = 1 };

struct TriangleId {
  int a = 0;
  int b = 0;
  Orient orient = Orient::up;

  // Row-major, left to right: (b, a, orient) puts up(a,b) just left of down(a,b).
  friend auto operator<=>(const TriangleId&, const TriangleId&) = default;
};

inline TriangleId up(int a, int b) { return {a, b, Orient::up}; }
inline TriangleId down(int a, int b) { return {a, b, Orient::down}; }

/// Raw, unchecked region parameters as they arrive from callers or JSON.
struct RegionSpec {
  int x = 0;
  int y = 0;
  Positions U;
  Positions D;
  Positions B;

  friend bool operator==(const RegionSpec&, const RegionSpec&) = default;
};

/// A RegionSpec that passed validation, plus derived quantities. Only
/// validate_spec can produce one.
class ValidatedSpec {
 public:
  int x() const { return raw_.x; }
  int y() const { return raw_.y; }
  const Positions& U() const { return raw_.U; }
  const Positions& D() const { return raw_.D; }
  const Positions& B() const { return raw_.B; }
  int n() const { return n_; }
  int u() const { return static_cast<int>(raw_.U.size()); }
  int d() const { return static_cast<int>(raw_.D.size()); }
  /// Axis length x + y + n.
  int L() const { return raw_.x + raw_.y + n_; }
  const Positions& u_cap_d() const { return u_cap_d_; }
  /// [1..L] minus (U u D u B): candidate positions for crossing lozenges.
  const Positions& free_positions() const { return free_; }
  const RegionSpec& raw() const { return raw_; }

  friend bool operator==(const ValidatedSpec& a, const ValidatedSpec& b) { return a.raw_ == b.raw_; }

 private:
  friend ValidatedSpec validate_spec(const RegionSpec& raw);
  explicit ValidatedSpec(RegionSpec raw);

  RegionSpec raw_;
  int n_ = 0;
  Positions u_cap_d_;
  Positions free_;
};

/// Throws Error with kind NotSorted, Duplicate, TooManyBarriers,
/// BarrierOverlap, PositionOutOfRange or InvalidInput.
ValidatedSpec validate_spec(const RegionSpec& raw);

/// Explicit triangle set of a region, sorted by TriangleId order.
class TriangularRegion {
 public:
  TriangularRegion() = default;
  TriangularRegion(std::vector<TriangleId> triangles, Positions forbidden_vertical, int L);

  const std::vector<TriangleId>& triangles() const { return triangles_; }
  /// Axis positions k whose crossing lozenge {up(k-1,0), down(k-1,-1)} is banned.
  const Positions& forbidden_vertical() const { return forbidden_; }
  int L() const { return L_; }
  std::size_t size() const { return triangles_.size(); }
  bool empty() const { return triangles_.empty(); }
  bool contains(const TriangleId& t) const;
  /// Index of t in triangles(), or -1.
  int index_of(const TriangleId& t) const;
  bool is_forbidden_vertical(int position) const;
  std::size_t up_count() const;
  std::size_t down_count() const;
  bool balanced() const { return up_count() == down_count(); }

 private:
  std::vector<TriangleId> triangles_;
  Positions forbidden_;
  int L_ = 0;
};

TriangularRegion build_region(const ValidatedSpec& spec);

/// r(S) = {L + 1 - s}, returned ascending. Throws PositionOutOfRange.
Positions reflect_positions(const Positions& s, int L);

/// Swaps U and D.
ValidatedSpec flip_spec(const ValidatedSpec& spec);

/// Left-right mirror image: U, D and B each reflected by r.
ValidatedSpec mirror_spec(const ValidatedSpec& spec);

/// Dented semihexagon S_{a,b}(s_1..s_a): base length a + b, height a.
struct SemihexSpec {
  int a = 0;
  int b = 0;
  Positions dents;
};

/// Checks |dents| = a, b >= 0 and dents strictly increasing within [1..a+b].
void validate_semihex(const SemihexSpec& s);

/// S_{a,b}(dents) realized as the upper half of H_{b,0}(dents; {}).
ValidatedSpec semihex_as_spec(const SemihexSpec& s);

enum class Token : std::uint8_t { up, down };

/// Region in cluster form: clusters C_1..C_k of contiguous removed triangles,
/// separated by gaps d_1..d_{k-1} of free axis positions. C_1 touches the west
/// vertex and C_k the east vertex; only those two may be empty.
struct ClusterSpec {
  std::vector<std::vector<Token>> clusters;
  std::vector<int> gaps;

  friend bool operator==(const ClusterSpec&, const ClusterSpec&) = default;
};

/// Lays the clusters out along the axis of H_{x,y}. Throws GeometryMismatch
/// when the gaps do not sum to x + y or the cluster list is malformed.
ValidatedSpec clusters_to_spec(const ClusterSpec& c, int x, int y);

/// Inverse of clusters_to_spec: maximal runs of dented positions. Requires
/// U and D disjoint and no barriers (InvalidInput otherwise).
ClusterSpec spec_to_clusters(const ValidatedSpec& spec);

/// ClusterSpec with every gap multiplied by factor.
ClusterSpec scale_gaps(const ClusterSpec& c, int factor);

}  // namespace lozenge
