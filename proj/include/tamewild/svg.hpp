#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "tamewild/conegeom.hpp"
#include "tamewild/error.hpp"
#include "tamewild/rational.hpp"

namespace tamewild {

struct HullFigure {
  std::string title;
  std::string x_label, y_label;
  std::vector<RationalVector> tame_points;  // filled dots
  std::vector<std::string> tame_labels;
  std::vector<RationalVector> cross_points;  // crosses (broad or wild data)
  std::vector<std::string> cross_labels;
  std::vector<RationalVector> hull;  // counterclockwise polygon of the tame points
};

namespace detail {

/// Decimal text with 12 significant digits; the only place exact values are rounded.
inline std::string svg_num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else if (c == '"') out += "&quot;";
    else out += c;
  }
  return out;
}

}  // namespace detail

/// Planar hull figure. Geometry is exact up to the final coordinate text.
inline std::string render_hull_svg(const HullFigure& F) {
  std::vector<const RationalVector*> all;
  for (const auto& p : F.tame_points) all.push_back(&p);
  for (const auto& p : F.cross_points) all.push_back(&p);
  for (const auto* p : all)
    if (p->size() != 2) throw Error(ErrorCode::WrongArity, "hull figures need planar points");
  Rational x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!all.empty()) {
    x0 = x1 = (*all[0])[0];
    y0 = y1 = (*all[0])[1];
    for (const auto* p : all) {
      x0 = std::min(x0, (*p)[0]);
      x1 = std::max(x1, (*p)[0]);
      y0 = std::min(y0, (*p)[1]);
      y1 = std::max(y1, (*p)[1]);
    }
  }
  // Square viewport around the data; a degenerate range gets unit width.
  Rational span = std::max(x1 - x0, y1 - y0);
  if (span == 0) span = 1;
  Rational cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
  Rational half = span * make_rational(6, 10);
  const Rational size = 400, margin = 40;
  auto sx = [&](const Rational& x) { return detail::svg_num(Rational((x - (cx - half)) / (2 * half) * size + margin).get_d()); };
  auto sy = [&](const Rational& y) { return detail::svg_num(Rational(size - (y - (cy - half)) / (2 * half) * size + margin).get_d()); };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
  os << "  <rect x=\"0\" y=\"0\" width=\"480\" height=\"480\" fill=\"white\"/>\n";
  if (!F.title.empty()) os << "  <text x=\"240\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << detail::xml_escape(F.title) << "</text>\n";
  os << "  <rect x=\"40\" y=\"40\" width=\"400\" height=\"400\" fill=\"none\" stroke=\"#999\"/>\n";
  os << "  <text x=\"240\" y=\"470\" text-anchor=\"middle\" font-size=\"12\">" << detail::xml_escape(F.x_label) << " ["
     << detail::svg_num(Rational(cx - half).get_d()) << ", " << detail::svg_num(Rational(cx + half).get_d()) << "]</text>\n";
  os << "  <text x=\"12\" y=\"240\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 12 240)\">"
     << detail::xml_escape(F.y_label) << " [" << detail::svg_num(Rational(cy - half).get_d()) << ", " << detail::svg_num(Rational(cy + half).get_d())
     << "]</text>\n";
  if (F.hull.size() >= 3) {
    os << "  <polygon fill=\"#dde8f5\" stroke=\"#3366aa\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < F.hull.size(); ++i) os << (i ? " " : "") << sx(F.hull[i][0]) << "," << sy(F.hull[i][1]);
    os << "\"/>\n";
  } else if (F.hull.size() == 2) {
    os << "  <line x1=\"" << sx(F.hull[0][0]) << "\" y1=\"" << sy(F.hull[0][1]) << "\" x2=\"" << sx(F.hull[1][0]) << "\" y2=\""
       << sy(F.hull[1][1]) << "\" stroke=\"#3366aa\" stroke-width=\"1.5\"/>\n";
  } else if (F.hull.size() == 1) {
    os << "  <circle cx=\"" << sx(F.hull[0][0]) << "\" cy=\"" << sy(F.hull[0][1]) << "\" r=\"8\" fill=\"none\" stroke=\"#3366aa\"/>\n";
  }
  for (std::size_t i = 0; i < F.tame_points.size(); ++i) {
    const auto& p = F.tame_points[i];
    os << "  <circle cx=\"" << sx(p[0]) << "\" cy=\"" << sy(p[1]) << "\" r=\"4\" fill=\"black\"";
    if (i < F.tame_labels.size()) os << "><title>" << detail::xml_escape(F.tame_labels[i]) << "</title></circle>\n";
    else os << "/>\n";
  }
  for (std::size_t i = 0; i < F.cross_points.size(); ++i) {
    const auto& p = F.cross_points[i];
    os << "  <g stroke=\"#cc2222\" stroke-width=\"2\">";
    if (i < F.cross_labels.size()) os << "<title>" << detail::xml_escape(F.cross_labels[i]) << "</title>";
    std::string x = sx(p[0]);
    std::string y = sy(p[1]);
    double xd = std::stod(x), yd = std::stod(y);
    os << "<line x1=\"" << detail::svg_num(xd - 5) << "\" y1=\"" << detail::svg_num(yd - 5) << "\" x2=\"" << detail::svg_num(xd + 5)
       << "\" y2=\"" << detail::svg_num(yd + 5) << "\"/>";
    os << "<line x1=\"" << detail::svg_num(xd - 5) << "\" y1=\"" << detail::svg_num(yd + 5) << "\" x2=\"" << detail::svg_num(xd + 5)
       << "\" y2=\"" << detail::svg_num(yd - 5) << "\"/></g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace tamewild
