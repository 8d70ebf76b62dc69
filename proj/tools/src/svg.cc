#include "usc/cli/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "usc/cell.h"
#include "usc/error.h"
#include "usc/projection.h"

namespace usc::cli {

namespace {

constexpr double kSize = 200;
constexpr double kMargin = 20;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Panel-local coordinates of a point of the unit square.
struct Panel {
  double left;
  double top;
  std::string sx(const Rational& x) const { return num(left + kSize * x.to_double()); }
  std::string sy(const Rational& y) const { return num(top + kSize * (1 - y.to_double())); }
};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

void frame(std::ostream& os, const Panel& p, const std::string& label) {
  os << "  <rect x=\"" << num(p.left) << "\" y=\"" << num(p.top) << "\" width=\"" << num(kSize)
     << "\" height=\"" << num(kSize) << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  os << "  <text x=\"" << num(p.left) << "\" y=\"" << num(p.top - 6)
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(label) << "</text>\n";
}

std::string open_svg(int panels, const std::string& title) {
  std::ostringstream os;
  const double width = panels * (kSize + kMargin) + kMargin;
  const double height = kSize + 2 * kMargin;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
  os << "  <title>" << escape(title) << "</title>\n";
  return os.str();
}

// Extreme points of a 2-D cell in eight directions, in angular order.
std::vector<std::pair<Rational, Rational>> outline(const Cell& c) {
  static const int kDirs[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  std::vector<std::pair<Rational, Rational>> pts;
  CellLp lp(c);
  for (const auto& d : kDirs) {
    const std::vector<Rational> objective{Rational(d[0]), Rational(d[1])};
    const auto opt = lp.maximize(objective);
    std::pair<Rational, Rational> p{opt.point[0], opt.point[1]};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

void draw_cells(std::ostream& os, const Panel& panel, const std::vector<Cell>& cells) {
  for (const auto& c : cells) {
    const auto pts = outline(c);
    if (pts.size() == 1) {
      os << "  <circle cx=\"" << panel.sx(pts[0].first) << "\" cy=\"" << panel.sy(pts[0].second)
         << "\" r=\"2.5\" fill=\"#1f5fa8\"/>\n";
      continue;
    }
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      os << (i ? " " : "") << panel.sx(pts[i].first) << "," << panel.sy(pts[i].second);
    }
    os << "\" fill=\"#1f5fa8\" fill-opacity=\"0.35\" stroke=\"#1f5fa8\" stroke-width=\"1.5\"/>\n";
  }
}

std::vector<Cell> lift_to_2d(const std::vector<Cell>& cells, std::size_t dim,
                             std::vector<std::size_t> keep) {
  std::vector<Cell> out;
  for (const auto& c : cells) {
    if (dim == 1) {
      // A 1-D set is drawn along the bottom edge.
      std::vector<LinearConstraint> cs;
      for (const auto& k : c.constraints()) cs.push_back({{k.coefficients[0], Rational(0)}, k.bound, k.kind});
      cs.push_back(LinearConstraint::equal({Rational(0), Rational(1)}, Rational(0)));
      out.emplace_back(2, cs);
    } else {
      out.push_back(dim == 2 ? c : fm_project(c, keep));
    }
  }
  return out;
}

}  // namespace

std::string render_relation_svg(const Relation& r) {
  std::ostringstream os;
  os << open_svg(1, r.name());
  const Panel panel{kMargin, kMargin};
  frame(os, panel, r.name());
  for (const auto& p : r.pieces()) {
    if (p.is_segment()) {
      const Segment& s = p.as_segment();
      os << "  <line x1=\"" << panel.sx(s.from.x) << "\" y1=\"" << panel.sy(s.from.y) << "\" x2=\""
         << panel.sx(s.to.x) << "\" y2=\"" << panel.sy(s.to.y)
         << "\" stroke=\"#b8322a\" stroke-width=\"2\"/>\n";
      continue;
    }
    const Rect& rc = p.as_rect();
    if (p.is_point()) {
      os << "  <circle cx=\"" << panel.sx(rc.x.lo()) << "\" cy=\"" << panel.sy(rc.y.lo())
         << "\" r=\"3\" fill=\"#b8322a\"/>\n";
    } else if (rc.x.is_point() || rc.y.is_point()) {
      os << "  <line x1=\"" << panel.sx(rc.x.lo()) << "\" y1=\"" << panel.sy(rc.y.lo()) << "\" x2=\""
         << panel.sx(rc.x.hi()) << "\" y2=\"" << panel.sy(rc.y.hi())
         << "\" stroke=\"#b8322a\" stroke-width=\"2\"/>\n";
    } else {
      os << "  <rect x=\"" << panel.sx(rc.x.lo()) << "\" y=\"" << panel.sy(rc.y.hi()) << "\" width=\""
         << num(kSize * (rc.x.hi() - rc.x.lo()).to_double()) << "\" height=\""
         << num(kSize * (rc.y.hi() - rc.y.lo()).to_double())
         << "\" fill=\"#b8322a\" fill-opacity=\"0.35\" stroke=\"#b8322a\" stroke-width=\"1\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_gset_svg(const GSet& g, const std::string& title) {
  if (g.dim == 0 || g.dim > 3) {
    throw Error(ErrorCode::kDimensionMismatch,
                "can render dimension 1 to 3, got " + std::to_string(g.dim) + "; use --project");
  }
  std::vector<std::vector<std::size_t>> panels;
  if (g.dim == 3) {
    panels = {{0, 1}, {0, 2}, {1, 2}};
  } else {
    panels = {{0, g.dim == 2 ? std::size_t{1} : std::size_t{0}}};
  }
  std::ostringstream os;
  os << open_svg(static_cast<int>(panels.size()), title);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Panel panel{kMargin + static_cast<double>(i) * (kSize + kMargin), kMargin};
    std::string label = title;
    if (g.dim == 3) {
      label = "x" + std::to_string(panels[i][0] + 1) + " vs x" + std::to_string(panels[i][1] + 1);
    }
    frame(os, panel, label);
    draw_cells(os, panel, lift_to_2d(g.cells, g.dim, panels[i]));
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace usc::cli
