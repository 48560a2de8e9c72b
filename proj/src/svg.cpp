#include "surfres/svg.hpp"

#include <algorithm>
#include <sstream>

namespace surfres {

namespace {

double to_double(const Rat& q) { return q.get_d(); }

}  // namespace

std::string render_svg(const Staircase& st, const SvgOptions& opts) {
  const auto& v = st.vertices();
  double xmax = 1.0, ymax = 1.0;
  for (const auto& p : v) {
    xmax = std::max(xmax, to_double(p.x));
    ymax = std::max(ymax, to_double(p.y));
  }
  for (const auto& p : opts.marks) {
    xmax = std::max(xmax, to_double(p.x));
    ymax = std::max(ymax, to_double(p.y));
  }
  xmax += 1.0;
  ymax += 1.0;

  const double s = opts.pixels_per_unit;
  const double margin = 40.0;
  const double width = xmax * s + 2 * margin;
  const double height = ymax * s + 2 * margin;
  auto px = [&](double x) { return margin + x * s; };
  auto py = [&](double y) { return height - margin - y * s; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  if (!opts.title.empty()) os << "  <title>" << opts.title << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (!v.empty()) {
    os << "  <polygon fill=\"#d0d0d0\" stroke=\"none\" points=\"";
    os << px(to_double(v.front().x)) << ',' << py(ymax) << ' ';
    for (const auto& p : v) os << px(to_double(p.x)) << ',' << py(to_double(p.y)) << ' ';
    os << px(xmax) << ',' << py(to_double(v.back().y)) << ' ' << px(xmax) << ',' << py(ymax) << "\"/>\n";
    os << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
    os << px(to_double(v.front().x)) << ',' << py(ymax) << ' ';
    for (const auto& p : v) os << px(to_double(p.x)) << ',' << py(to_double(p.y)) << ' ';
    os << px(xmax) << ',' << py(to_double(v.back().y)) << "\"/>\n";
  }

  // Axes and the line x + y = 1.
  os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(xmax) << "\" y2=\"" << py(0)
     << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0) << "\" y2=\"" << py(ymax)
     << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << px(0) << "\" y1=\"" << py(1) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0)
     << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  for (int t = 1; t < static_cast<int>(std::max(xmax, ymax)); ++t) {
    if (t < xmax)
      os << "  <text x=\"" << px(t) << "\" y=\"" << py(0) + 16 << "\" font-size=\"12\" text-anchor=\"middle\">" << t
         << "</text>\n";
    if (t < ymax)
      os << "  <text x=\"" << px(0) - 8 << "\" y=\"" << py(t) + 4 << "\" font-size=\"12\" text-anchor=\"end\">" << t
         << "</text>\n";
  }

  for (const auto& p : opts.marks)
    os << "  <circle cx=\"" << px(to_double(p.x)) << "\" cy=\"" << py(to_double(p.y))
       << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  for (const auto& p : v) {
    os << "  <circle cx=\"" << px(to_double(p.x)) << "\" cy=\"" << py(to_double(p.y)) << "\" r=\"4\" fill=\"black\"/>\n";
    os << "  <text x=\"" << px(to_double(p.x)) + 6 << "\" y=\"" << py(to_double(p.y)) - 6 << "\" font-size=\"12\">"
       << to_string(p) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace surfres
