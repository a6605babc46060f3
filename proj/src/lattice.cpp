#include "lozenge/lattice.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace lozenge {

namespace {

void check_position_list(const Positions& p, const char* name) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) {
      throw Error(ErrorKind::PositionOutOfRange,
                  std::string(name) + " contains position " + std::to_string(p[i]) + " < 1");
    }
    if (i > 0 && p[i] == p[i - 1]) {
      throw Error(ErrorKind::Duplicate, std::string(name) + " repeats position " + std::to_string(p[i]));
    }
    if (i > 0 && p[i] < p[i - 1]) {
      throw Error(ErrorKind::NotSorted, std::string(name) + " is not sorted ascending");
    }
  }
}

Positions set_union(const Positions& a, const Positions& b) {
  Positions out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Positions set_intersection(const Positions& a, const Positions& b) {
  Positions out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

ValidatedSpec::ValidatedSpec(RegionSpec raw) : raw_(std::move(raw)) {
  const Positions dents = set_union(raw_.U, raw_.D);
  n_ = static_cast<int>(dents.size());
  u_cap_d_ = set_intersection(raw_.U, raw_.D);
  const Positions blocked = set_union(dents, raw_.B);
  for (int k = 1; k <= L(); ++k) {
    if (!std::binary_search(blocked.begin(), blocked.end(), k)) free_.push_back(k);
  }
}

ValidatedSpec validate_spec(const RegionSpec& raw) {
  if (raw.x < 0 || raw.y < 0) throw Error(ErrorKind::InvalidInput, "x and y must be nonnegative");
  check_position_list(raw.U, "U");
  check_position_list(raw.D, "D");
  check_position_list(raw.B, "B");
  if (static_cast<int>(raw.B.size()) > raw.x) {
    throw Error(ErrorKind::TooManyBarriers,
                "|B| = " + std::to_string(raw.B.size()) + " exceeds x = " + std::to_string(raw.x));
  }
  const Positions dents = set_union(raw.U, raw.D);
  if (!set_intersection(dents, raw.B).empty()) {
    throw Error(ErrorKind::BarrierOverlap, "a barrier sits on a removed triangle");
  }
  const int L = raw.x + raw.y + static_cast<int>(dents.size());
  for (const Positions* p : {&raw.U, &raw.D, &raw.B}) {
    if (!p->empty() && p->back() > L) {
      throw Error(ErrorKind::PositionOutOfRange,
                  "position " + std::to_string(p->back()) + " exceeds axis length " + std::to_string(L));
    }
  }
  return ValidatedSpec(raw);
}

// ---------------------------------------------------------------------------

TriangularRegion::TriangularRegion(std::vector<TriangleId> triangles, Positions forbidden_vertical, int L)
    : triangles_(std::move(triangles)), forbidden_(std::move(forbidden_vertical)), L_(L) {
  std::sort(triangles_.begin(), triangles_.end());
  std::sort(forbidden_.begin(), forbidden_.end());
}

bool TriangularRegion::contains(const TriangleId& t) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

int TriangularRegion::index_of(const TriangleId& t) const {
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), t);
  if (it == triangles_.end() || *it != t) return -1;
  return static_cast<int>(it - triangles_.begin());
}

bool TriangularRegion::is_forbidden_vertical(int position) const {
  return std::binary_search(forbidden_.begin(), forbidden_.end(), position);
}

std::size_t TriangularRegion::up_count() const {
  return static_cast<std::size_t>(std::count_if(
      triangles_.begin(), triangles_.end(), [](const TriangleId& t) { return t.orient == Orient::up; }));
}

std::size_t TriangularRegion::down_count() const { return triangles_.size() - up_count(); }

TriangularRegion build_region(const ValidatedSpec& spec) {
  const int L = spec.L();
  const auto in = [](const Positions& p, int k) { return std::binary_search(p.begin(), p.end(), k); };

  std::vector<TriangleId> tris;
  for (int b = -(spec.y() + spec.d()); b <= -1; ++b) {
    for (int a = -b - 1; a <= L - 1; ++a) {
      if (b == -1 && in(spec.D(), a + 1)) continue;
      tris.push_back(down(a, b));
    }
    for (int a = -b; a <= L - 1; ++a) tris.push_back(up(a, b));
  }
  for (int b = 0; b <= spec.y() + spec.u() - 1; ++b) {
    for (int a = 0; a <= L - 1 - b; ++a) {
      if (b == 0 && in(spec.U(), a + 1)) continue;
      tris.push_back(up(a, b));
    }
    for (int a = 0; a <= L - 2 - b; ++a) tris.push_back(down(a, b));
  }
  return TriangularRegion(std::move(tris), spec.B(), L);
}

Positions reflect_positions(const Positions& s, int L) {
  Positions out;
  out.reserve(s.size());
  for (int k : s) {
    if (k < 1 || k > L) {
      throw Error(ErrorKind::PositionOutOfRange,
                  "cannot reflect position " + std::to_string(k) + " in [1.." + std::to_string(L) + "]");
    }
    out.push_back(L + 1 - k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValidatedSpec flip_spec(const ValidatedSpec& spec) {
  RegionSpec r = spec.raw();
  std::swap(r.U, r.D);
  return validate_spec(r);
}

ValidatedSpec mirror_spec(const ValidatedSpec& spec) {
  RegionSpec r = spec.raw();
  r.U = reflect_positions(r.U, spec.L());
  r.D = reflect_positions(r.D, spec.L());
  r.B = reflect_positions(r.B, spec.L());
  return validate_spec(r);
}

// ---------------------------------------------------------------------------

void validate_semihex(const SemihexSpec& s) {
  if (s.a < 0 || s.b < 0) throw Error(ErrorKind::InvalidInput, "semihexagon parameters must be nonnegative");
  if (static_cast<int>(s.dents.size()) != s.a) {
    throw Error(ErrorKind::InvalidInput, "semihexagon needs exactly a dents");
  }
  check_position_list(s.dents, "dents");
  if (!s.dents.empty() && s.dents.back() > s.a + s.b) {
    throw Error(ErrorKind::PositionOutOfRange, "dent beyond the semihexagon base");
  }
}

ValidatedSpec semihex_as_spec(const SemihexSpec& s) {
  validate_semihex(s);
  return validate_spec(RegionSpec{s.b, 0, s.dents, {}, {}});
}

// ---------------------------------------------------------------------------

ValidatedSpec clusters_to_spec(const ClusterSpec& c, int x, int y) {
  if (c.clusters.empty()) throw Error(ErrorKind::GeometryMismatch, "at least one cluster is required");
  if (c.gaps.size() + 1 != c.clusters.size()) {
    throw Error(ErrorKind::GeometryMismatch, "need exactly one gap between consecutive clusters");
  }
  int gap_sum = 0;
  for (int g : c.gaps) {
    if (g <= 0) throw Error(ErrorKind::GeometryMismatch, "gaps must be positive");
    gap_sum += g;
  }
  if (gap_sum != x + y) {
    throw Error(ErrorKind::GeometryMismatch,
                "gaps sum to " + std::to_string(gap_sum) + " but x + y = " + std::to_string(x + y));
  }
  for (std::size_t i = 1; i + 1 < c.clusters.size(); ++i) {
    if (c.clusters[i].empty()) throw Error(ErrorKind::GeometryMismatch, "interior clusters must be nonempty");
  }

  RegionSpec r{x, y, {}, {}, {}};
  int pos = 1;
  for (std::size_t i = 0; i < c.clusters.size(); ++i) {
    if (i > 0) pos += c.gaps[i - 1];
    for (Token t : c.clusters[i]) {
      (t == Token::up ? r.U : r.D).push_back(pos);
      ++pos;
    }
  }
  return validate_spec(r);
}

ClusterSpec spec_to_clusters(const ValidatedSpec& spec) {
  if (!spec.u_cap_d().empty() || !spec.B().empty()) {
    throw Error(ErrorKind::InvalidInput, "cluster form needs disjoint U, D and no barriers");
  }
  const auto in = [](const Positions& p, int k) { return std::binary_search(p.begin(), p.end(), k); };
  ClusterSpec c;
  c.clusters.emplace_back();
  int gap = 0;
  for (int k = 1; k <= spec.L(); ++k) {
    const bool is_up = in(spec.U(), k);
    const bool is_down = in(spec.D(), k);
    if (!is_up && !is_down) {
      ++gap;
      continue;
    }
    if (gap > 0) {
      c.gaps.push_back(gap);
      c.clusters.emplace_back();
      gap = 0;
    }
    c.clusters.back().push_back(is_up ? Token::up : Token::down);
  }
  if (gap > 0) {
    c.gaps.push_back(gap);
    c.clusters.emplace_back();
  }
  return c;
}

ClusterSpec scale_gaps(const ClusterSpec& c, int factor) {
  ClusterSpec out = c;
  for (int& g : out.gaps) g *= factor;
  return out;
}

}  // namespace lozenge
