#include "crystalrep/svg.hpp"

#include <algorithm>
#include <sstream>

namespace crystalrep {

namespace {

struct Canvas {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  double scale = 140.0;

  void grow(const Vec& p) {
    xmin = std::min(xmin, p[0]);
    xmax = std::max(xmax, p[0]);
    ymin = std::min(ymin, p[1]);
    ymax = std::max(ymax, p[1]);
  }
  // svg y axis points down
  double X(double x) const { return (x - xmin + 0.3) * scale; }
  double Y(double y) const { return (ymax - y + 0.3) * scale; }
  double width() const { return (xmax - xmin + 0.6) * scale; }
  double height() const { return (ymax - ymin + 0.6) * scale; }
};

void polygon(std::ostringstream& out, const Canvas& c, const std::vector<Vec>& cycle,
             const char* fill, const char* stroke) {
  out << "  <polygon points=\"";
  for (const Vec& v : cycle) out << c.X(v[0]) << "," << c.Y(v[1]) << " ";
  out << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"" << stroke
      << "\" stroke-width=\"1.5\"/>\n";
}

void dot(std::ostringstream& out, const Canvas& c, const Vec& p, double r, const char* color) {
  out << "  <circle cx=\"" << c.X(p[0]) << "\" cy=\"" << c.Y(p[1]) << "\" r=\"" << r
      << "\" fill=\"" << color << "\"/>\n";
}

const char* kCopyColors[] = {"#4477aa", "#ee6677", "#228833", "#ccbb44",
                             "#66ccee", "#aa3377", "#bbbbbb", "#000000"};

}  // namespace

std::string render_svg(const CrystalGroup& g, const std::string& what, const Vec& center) {
  if (g.dim() != 2) fail("DimensionUnsupported", "plots are implemented for n = 2 only");
  Vec a = center.size() ? center : default_center(2);

  Canvas canvas;
  std::ostringstream body;

  if (what == "domain" || what == "orbit") {
    HPolytope cell = dirichlet_domain(g, a);
    std::vector<Vec> verts = vertices_2d(cell);
    for (const Vec& v : verts) canvas.grow(v);

    std::vector<Vec> orbit;
    for (int L = 0; L < g.pg.order(); ++L) {
      for (const LatticePoint& pt : enumerate_points_near(
               g.lat, g.pg.elements[L].transpose() * a - a - g.cs.x[L], 2.5)) {
        orbit.push_back(g.pg.elements[L] * (a + g.cs.x[L] + pt.x));
      }
    }
    for (const Vec& p : orbit) canvas.grow(p);

    polygon(body, canvas, verts, "#4477aa", "#223355");
    if (what == "orbit") {
      for (const Vec& p : orbit) dot(body, canvas, p, 3.5, "#ee6677");
    }
    for (const LatticePoint& pt : enumerate_points_near(g.lat, a, 2.5)) {
      dot(body, canvas, pt.x, 2.0, "#222222");
    }
    dot(body, canvas, a, 4.5, "#228833");
  } else if (what == "param-domain") {
    ParamDomain pd = build_param_domain(g, a);
    std::vector<std::vector<Vec>> cycles;
    for (const HPolytope& copy : pd.pi_copies) {
      cycles.push_back(vertices_2d(copy));
      for (const Vec& v : cycles.back()) canvas.grow(v);
    }
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      polygon(body, canvas, cycles[i], kCopyColors[i % 8], "#333333");
    }
    for (const LatticePoint& pt : enumerate_points_near(pd.gstar.lat, a, 2.0)) {
      dot(body, canvas, pt.x, 2.0, "#222222");
    }
    dot(body, canvas, pd.center, 4.5, "#228833");
  } else {
    fail("ParseError", "plot kind must be domain, orbit or param-domain");
  }

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas.width()
      << "\" height=\"" << canvas.height() << "\" viewBox=\"0 0 " << canvas.width() << " "
      << canvas.height() << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << body.str() << "</svg>\n";
  return out.str();
}

}  // namespace crystalrep
