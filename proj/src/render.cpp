#include "lozenge/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

namespace lozenge {

namespace {

using Point = std::pair<int, int>;  // oblique (a, b)
using Polygon = std::vector<Point>;

const double kRowHeight = std::sqrt(3.0) / 2.0;

Polygon corners(const TriangleId& t) {
  if (t.orient == Orient::up) return {{t.a, t.b}, {t.a + 1, t.b}, {t.a, t.b + 1}};
  return {{t.a + 1, t.b}, {t.a + 1, t.b + 1}, {t.a, t.b + 1}};
}

Polygon corners(const Lozenge& l) {
  const int a = l.a;
  const int b = l.b;
  switch (l.kind) {
    case LozengeKind::R: return {{a, b}, {a + 1, b}, {a + 1, b + 1}, {a, b + 1}};
    case LozengeKind::L: return {{a, b}, {a + 1, b}, {a, b + 1}, {a - 1, b + 1}};
    case LozengeKind::V: return {{a, b}, {a + 1, b - 1}, {a + 1, b}, {a, b + 1}};
  }
  return {};
}

const char* kind_name(LozengeKind k) {
  switch (k) {
    case LozengeKind::R: return "R";
    case LozengeKind::L: return "L";
    case LozengeKind::V: return "V";
  }
  return "?";
}

const char* kind_fill(LozengeKind k) {
  switch (k) {
    case LozengeKind::R: return "#e8b04a";
    case LozengeKind::L: return "#5b8fd1";
    case LozengeKind::V: return "#9ccc65";
  }
  return "#ffffff";
}

class Canvas {
 public:
  Canvas(const std::vector<Polygon>& extent, double unit) : unit_(unit) {
    for (const Polygon& p : extent) {
      for (const Point& pt : p) {
        const auto [x, y] = project(pt);
        min_x_ = std::min(min_x_, x);
        max_x_ = std::max(max_x_, x);
        min_y_ = std::min(min_y_, y);
        max_y_ = std::max(max_y_, y);
      }
    }
    if (extent.empty()) min_x_ = max_x_ = min_y_ = max_y_ = 0.0;
  }

  void polygon(const Polygon& p, const std::string& cls, const char* fill) {
    body_ << "<polygon class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < p.size(); ++i) {
      const auto [x, y] = place(p[i]);
      body_ << (i ? " " : "") << x << ',' << y;
    }
    body_ << "\" fill=\"" << fill << "\" stroke=\"#444\" stroke-width=\"" << unit_ / 24.0 << "\"/>\n";
  }

  void segment(const Point& from, const Point& to, const std::string& cls) {
    const auto [x1, y1] = place(from);
    const auto [x2, y2] = place(to);
    body_ << "<line class=\"" << cls << "\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"#c62828\" stroke-width=\"" << unit_ / 6.0 << "\" stroke-linecap=\"round\"/>\n";
  }

  std::string finish() const {
    const double margin = unit_ / 2.0;
    const double w = max_x_ - min_x_ + 2 * margin;
    const double h = max_y_ - min_y_ + 2 * margin;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
        << w << ' ' << h << "\">\n"
        << body_.str() << "</svg>\n";
    return out.str();
  }

 private:
  std::pair<double, double> project(const Point& p) const {
    return {(p.first + p.second / 2.0) * unit_, -p.second * kRowHeight * unit_};
  }

  std::pair<double, double> place(const Point& p) const {
    const auto [x, y] = project(p);
    const double margin = unit_ / 2.0;
    return {x - min_x_ + margin, y - min_y_ + margin};
  }

  double unit_;
  double min_x_ = std::numeric_limits<double>::max();
  double max_x_ = std::numeric_limits<double>::lowest();
  double min_y_ = std::numeric_limits<double>::max();
  double max_y_ = std::numeric_limits<double>::lowest();
  std::ostringstream body_;
};

std::vector<TriangleId> dent_triangles(const ValidatedSpec& spec) {
  std::vector<TriangleId> out;
  for (int s : spec.U()) out.push_back(up(s - 1, 0));
  for (int t : spec.D()) out.push_back(down(t - 1, -1));
  return out;
}

/// Draws the region cells (unless tiled over), dents and barriers.
std::string draw(const ValidatedSpec& spec, const TriangularRegion& region, const Tiling* tiling,
                 RenderOptions options) {
  const std::vector<TriangleId> dents = dent_triangles(spec);
  std::vector<Polygon> extent;
  for (const TriangleId& t : region.triangles()) extent.push_back(corners(t));
  for (const TriangleId& t : dents) extent.push_back(corners(t));

  Canvas canvas(extent, options.unit);
  if (tiling) {
    for (const Lozenge& l : tiling->lozenges) {
      canvas.polygon(corners(l), std::string("lozenge ") + kind_name(l.kind), kind_fill(l.kind));
    }
  } else {
    for (const TriangleId& t : region.triangles()) canvas.polygon(corners(t), "cell", "#ffffff");
  }
  for (const TriangleId& t : dents) canvas.polygon(corners(t), "dent", "#212121");
  for (int k : spec.B()) canvas.segment({k - 1, 0}, {k, 0}, "barrier");
  return canvas.finish();
}

}  // namespace

std::string render_region_svg(const ValidatedSpec& spec, RenderOptions options) {
  return draw(spec, build_region(spec), nullptr, options);
}

std::string render_tiling_svg(const ValidatedSpec& spec, std::size_t index, RenderOptions options,
                              BruteOptions brute) {
  const TriangularRegion region = build_region(spec);
  const std::vector<Tiling> tilings = enumerate_tilings(region, index + 1, brute);
  if (index >= tilings.size()) {
    throw Error(ErrorKind::InvalidInput, "region has only " + std::to_string(tilings.size()) + " tilings");
  }
  return draw(spec, region, &tilings[index], options);
}

}  // namespace lozenge
