#include "gwall/svg.hpp"

#include <sstream>

#include "gwall/errors.hpp"

namespace gwall {

namespace {

constexpr int kDigits = 6;

// sqrt(q) truncated to kDigits decimals, as an exact rational.
Rational approx_sqrt(const Rational& q) {
  Integer scale = 1;
  for (int i = 0; i < kDigits; ++i) scale *= 10;
  const Integer root = isqrt_floor(q * Rational(scale * scale));
  Rational out(root, scale);
  out.canonicalize();
  return out;
}

std::string num(const Rational& q) { return format_fixed(q, kDigits); }

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

}  // namespace

std::string render_walls_svg(const std::vector<SvgWall>& walls,
                             const std::optional<Rational>& vertical) {
  if (walls.empty()) throw DomainError("render_walls_svg: no walls to draw");

  std::optional<Rational> xmin, xmax;
  Rational ymax = 1;
  auto extend = [&](const Rational& lo, const Rational& hi) {
    if (!xmin || lo < *xmin) xmin = lo;
    if (!xmax || hi > *xmax) xmax = hi;
  };
  std::optional<Rational> vline = vertical;
  for (const auto& w : walls) {
    if (w.wall.is_semicircle()) {
      const Rational rho = approx_sqrt(w.wall.radius_sq);
      extend(w.wall.center - rho, w.wall.center + rho);
      if (rho > ymax) ymax = rho;
    } else if (w.wall.kind == Wall::Kind::vertical && !vline) {
      vline = w.wall.beta;
    }
  }
  if (vline) extend(*vline, *vline);
  if (!xmin) throw DomainError("render_walls_svg: only empty walls given");

  const Rational pad = (*xmax - *xmin + ymax) / 10 + Rational(1, 2);
  const Rational left = *xmin - pad;
  const Rational width = *xmax - *xmin + 2 * pad;
  const Rational top = -(ymax + pad);
  const Rational height = ymax + 2 * pad;
  const Rational stroke = width / 400;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(left) << ' ' << num(top)
     << ' ' << num(width) << ' ' << num(height) << "\" width=\"800\" height=\""
     << num(Rational(800) * height / width) << "\">\n";
  os << "<g fill=\"none\" stroke-width=\"" << num(stroke) << "\">\n";
  os << "<line class=\"axis\" x1=\"" << num(left) << "\" y1=\"0.000000\" x2=\"" << num(left + width)
     << "\" y2=\"0.000000\" stroke=\"#888888\"/>\n";
  if (vline) {
    os << "<line class=\"vertical-wall\" x1=\"" << num(*vline) << "\" y1=\"0.000000\" x2=\""
       << num(*vline) << "\" y2=\"" << num(top) << "\" stroke=\"#444444\" stroke-dasharray=\""
       << num(4 * stroke) << "\"/>\n";
  }
  for (const auto& w : walls) {
    if (!w.wall.is_semicircle()) continue;
    const Rational rho = approx_sqrt(w.wall.radius_sq);
    const std::string r = num(rho);
    os << "<path class=\"" << (w.highlight ? "gieseker-wall" : "wall") << "\" data-center=\""
       << to_string(w.wall.center) << "\" data-radius-sq=\"" << to_string(w.wall.radius_sq)
       << "\" data-apex=\"" << r << "\"";
    if (!w.label.empty()) os << " data-label=\"" << escape(w.label) << "\"";
    os << " d=\"M " << num(w.wall.center - rho) << " 0.000000 A " << r << ' ' << r << " 0 0 1 "
       << num(w.wall.center + rho) << " 0.000000\" stroke=\""
       << (w.highlight ? "#c0392b" : "#2c3e50") << "\"";
    if (w.highlight) os << " stroke-width=\"" << num(2 * stroke) << "\"";
    os << "/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace gwall
