#include "simultile/svg.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace simultile {

namespace {

constexpr double kWidth = 900.0;
constexpr double kPad = 40.0;

void circle_arcs(std::ostringstream& out, const ElementarySet& arcs, double L,
                 double cx, double cy, double radius, const char* color,
                 const char* label) {
  out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << radius
      << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
  for (const Interval& a : arcs.parts()) {
    double t0 = 2 * M_PI * a.lo.to_double() / L - M_PI / 2;
    double t1 = 2 * M_PI * a.hi.to_double() / L - M_PI / 2;
    int large = (t1 - t0) > M_PI ? 1 : 0;
    out << "<path d=\"M " << cx + radius * std::cos(t0) << " "
        << cy + radius * std::sin(t0) << " A " << radius << " " << radius
        << " 0 " << large << " 1 " << cx + radius * std::cos(t1) << " "
        << cy + radius * std::sin(t1) << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"5\"/>\n";
  }
  out << "<text x=\"" << cx << "\" y=\"" << cy + radius + 20
      << "\" text-anchor=\"middle\" font-size=\"13\">" << label << "</text>\n";
}

}  // namespace

std::string render_svg(const PiecewiseFn& f, const FieldNum& alpha,
                       const FieldNum& beta) {
  ElementarySet supp = f.support();
  double lo = 0, hi = 1;
  if (!supp.empty()) {
    lo = supp.parts().front().lo.to_double();
    hi = supp.parts().back().hi.to_double();
  }
  double span = hi - lo;
  if (span <= 0) span = 1;
  auto X = [&](double x) { return kPad + (x - lo) / span * (kWidth - 2 * kPad); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"420\" viewBox=\"0 0 " << kWidth << " 420\">\n";
  out << "<line x1=\"" << kPad << "\" y1=\"120\" x2=\"" << kWidth - kPad
      << "\" y2=\"120\" stroke=\"#333\"/>\n";
  for (const Interval& p : supp.parts()) {
    double a = p.lo.to_double(), b = p.hi.to_double();
    out << "<rect x=\"" << X(a) << "\" y=\"112\" width=\"" << X(b) - X(a)
        << "\" height=\"16\" fill=\"#4a78c4\"/>\n";
    out << "<text x=\"" << X(a) << "\" y=\"104\" font-size=\"11\">"
        << p.lo.str() << "</text>\n";
  }
  out << "<text x=\"" << kPad << "\" y=\"40\" font-size=\"14\">supp f, measure "
      << supp.measure().str() << "</text>\n";

  circle_arcs(out, project(supp, alpha), alpha.to_double(), kWidth / 3, 290, 70,
              "#c44a4a", "projection mod alpha");
  circle_arcs(out, project(supp, beta), beta.to_double(), 2 * kWidth / 3, 290, 70,
              "#3c8a4e", "projection mod beta");
  out << "</svg>\n";
  return out.str();
}

void write_svg_file(const std::string& path, const std::string& svg) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << svg;
}

}  // namespace simultile
