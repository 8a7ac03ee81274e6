#include "eisenres/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace eisenres {

namespace {

using P2 = std::array<double, 2>;

class Plane {
 public:
  explicit Plane(const RootSystem& rs) : rs_(rs) {
    const double g00 = to_double(rs.simple_inner(0, 0));
    const double g01 = to_double(rs.simple_inner(0, 1));
    const double g11 = to_double(rs.simple_inner(1, 1));
    l00_ = std::sqrt(g00);
    l10_ = g01 / l00_;
    l11_ = std::sqrt(g11 - l10_ * l10_);
  }

  P2 embed(const WeightVector& w) const {
    const RatVec c = rs_.simple_coords_of(w);
    const double a = to_double(c[0]), b = to_double(c[1]);
    return {l00_ * a + l10_ * b, l11_ * b};
  }

 private:
  const RootSystem& rs_;
  double l00_ = 1, l10_ = 0, l11_ = 1;
};

class Canvas {
 public:
  static constexpr double kSize = 640;
  static constexpr double kMargin = 48;

  void include(const P2& p) {
    lo_[0] = std::min(lo_[0], p[0]);
    lo_[1] = std::min(lo_[1], p[1]);
    hi_[0] = std::max(hi_[0], p[0]);
    hi_[1] = std::max(hi_[1], p[1]);
  }

  void freeze() {
    const double span = std::max({hi_[0] - lo_[0], hi_[1] - lo_[1], 1e-9});
    const double pad = 0.15 * span;
    for (int i = 0; i < 2; ++i) {
      lo_[i] -= pad;
      hi_[i] += pad;
    }
    scale_ = (kSize - 2 * kMargin) / (span + 2 * pad);
  }

  P2 map(const P2& p) const {
    return {kMargin + (p[0] - lo_[0]) * scale_, kSize - kMargin - (p[1] - lo_[1]) * scale_};
  }

  double diagonal() const { return std::hypot(hi_[0] - lo_[0], hi_[1] - lo_[1]); }

 private:
  P2 lo_{1e300, 1e300};
  P2 hi_{-1e300, -1e300};
  double scale_ = 1;
};

std::string num(double x) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << x;
  return out.str();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

void line(std::ostringstream& svg, const P2& a, const P2& b, const std::string& style) {
  svg << "  <line x1=\"" << num(a[0]) << "\" y1=\"" << num(a[1]) << "\" x2=\"" << num(b[0])
      << "\" y2=\"" << num(b[1]) << "\" " << style << "/>\n";
}

void dot(std::ostringstream& svg, const P2& p, double r, const std::string& style) {
  svg << "  <circle cx=\"" << num(p[0]) << "\" cy=\"" << num(p[1]) << "\" r=\"" << num(r)
      << "\" " << style << "/>\n";
}

void text(std::ostringstream& svg, const P2& p, const std::string& s, const std::string& style = "") {
  svg << "  <text x=\"" << num(p[0] + 6) << "\" y=\"" << num(p[1] - 6) << "\" font-size=\"11\" "
      << style << ">" << escape(s) << "</text>\n";
}

std::string header(const std::string& group) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Canvas::kSize << "\" height=\""
      << Canvas::kSize << "\" viewBox=\"0 0 " << Canvas::kSize << " " << Canvas::kSize
      << "\" font-family=\"monospace\">\n"
      << "  <title>" << escape(group) << " contour deformation</title>\n"
      << "  <defs><clipPath id=\"frame\"><rect x=\"0\" y=\"0\" width=\"" << Canvas::kSize
      << "\" height=\"" << Canvas::kSize << "\"/></clipPath></defs>\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return svg.str();
}

std::string render_rank1(const SpectralReport& report) {
  std::vector<Rational> xs{report.sigma0[0], Rational(0), Rational(1)};
  for (const auto& s : report.support) xs.push_back(s[0]);
  double lo = 0, hi = 0;
  for (const auto& x : xs) {
    lo = std::min(lo, to_double(x));
    hi = std::max(hi, to_double(x));
  }
  const double pad = 0.2 * std::max(hi - lo, 1.0);
  lo -= pad;
  hi += pad;
  const double y = Canvas::kSize / 2;
  auto at = [&](const Rational& x) {
    return P2{Canvas::kMargin + (to_double(x) - lo) / (hi - lo) * (Canvas::kSize - 2 * Canvas::kMargin), y};
  };
  std::ostringstream svg;
  svg << header(report.group);
  line(svg, {Canvas::kMargin, y}, {Canvas::kSize - Canvas::kMargin, y}, "stroke=\"black\"");
  line(svg, at(report.sigma0[0]), at(0), "stroke=\"steelblue\" stroke-width=\"3\"");
  line(svg, {at(0)[0], y - 40}, {at(0)[0], y + 40},
       "stroke=\"lightgray\" stroke-dasharray=\"4 4\"");
  line(svg, {at(1)[0], y - 40}, {at(1)[0], y + 40}, "stroke=\"gray\"");
  text(svg, {at(1)[0], y - 40}, "pole at 1", "fill=\"gray\"");
  dot(svg, at(0), 3, "fill=\"black\"");
  text(svg, at(0), "0");
  dot(svg, at(report.sigma0[0]), 4, "fill=\"steelblue\"");
  text(svg, at(report.sigma0[0]), "sigma0 = " + to_string(report.sigma0[0]));
  for (const auto& s : report.support) {
    dot(svg, at(s[0]), 5, "fill=\"crimson\"");
    text(svg, {at(s[0])[0], y + 24}, estar_tag(s), "fill=\"crimson\"");
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string render_svg(const SpectralReport& report, const RootSystem& rs) {
  if (rs.rank() == 1) return render_rank1(report);
  if (rs.rank() != 2) throw ConfigError("SVG output supports rank 1 and rank 2 only");

  const Plane plane(rs);
  Canvas canvas;
  canvas.include(plane.embed(report.sigma0));
  canvas.include(plane.embed(WeightVector::zero(2)));
  for (const auto& h : report.continuous_1d) {
    canvas.include(plane.embed(h.crossing.point));
    canvas.include(plane.embed(h.base));
    for (const auto& q : h.quiet_points) canvas.include(plane.embed(q.location));
  }
  for (const auto& s : report.support) canvas.include(plane.embed(s));
  canvas.freeze();
  const double reach = 4 * canvas.diagonal();

  auto hyperplane = [&](std::size_t root, const Rational& level, const WeightVector& tangent) {
    const auto& r = rs.root(root);
    // <level/2 * delta, delta^vee> = level
    const P2 p = plane.embed((level / 2) * r.weight);
    const P2 t0 = plane.embed(WeightVector::zero(2));
    const P2 t1 = plane.embed(tangent);
    P2 d{t1[0] - t0[0], t1[1] - t0[1]};
    const double n = std::hypot(d[0], d[1]);
    d = {d[0] / n, d[1] / n};
    return std::pair<P2, P2>{canvas.map({p[0] - reach * d[0], p[1] - reach * d[1]}),
                             canvas.map({p[0] + reach * d[0], p[1] + reach * d[1]})};
  };

  std::ostringstream svg;
  svg << header(report.group) << "  <g clip-path=\"url(#frame)\">\n";
  for (std::size_t i = 0; i < rs.positive_roots().size(); ++i) {
    const auto& r = rs.root(i);
    const WeightVector& v = report.tangents.at(i);
    const auto polar = hyperplane(i, 1, v);
    line(svg, polar.first, polar.second, "stroke=\"gray\"");
    const auto zero = hyperplane(i, 0, v);
    line(svg, zero.first, zero.second, "stroke=\"lightgray\" stroke-dasharray=\"4 4\"");
    text(svg, canvas.map(plane.embed(r.weight)), "S_" + (r.alias.empty() ? r.label : r.alias),
         "fill=\"gray\"");
  }
  svg << "  </g>\n";

  const P2 s0 = canvas.map(plane.embed(report.sigma0));
  const P2 origin = canvas.map(plane.embed(WeightVector::zero(2)));
  line(svg, s0, origin, "stroke=\"steelblue\" stroke-width=\"2\"");
  dot(svg, origin, 3, "fill=\"black\"");
  text(svg, origin, "0");
  dot(svg, s0, 4, "fill=\"steelblue\"");
  text(svg, s0, "sigma0 = " + report.sigma0.str(), "fill=\"steelblue\"");

  for (const auto& h : report.continuous_1d) {
    const P2 c = canvas.map(plane.embed(h.crossing.point));
    const P2 b = canvas.map(plane.embed(h.base));
    line(svg, c, b, "stroke=\"darkorange\" stroke-width=\"2\"");
    dot(svg, c, 3.5, "fill=\"darkorange\"");
    text(svg, c, "z = " + to_string(h.crossing.z), "fill=\"darkorange\"");
    for (const auto& bp : h.boundary_poles) {
      (void)bp;
      dot(svg, b, 5, "fill=\"none\" stroke=\"purple\"");
      text(svg, b, "boundary pole", "fill=\"purple\"");
    }
    for (const auto& q : h.quiet_points) {
      const P2 p = canvas.map(plane.embed(q.location));
      dot(svg, p, 5, "fill=\"white\" stroke=\"seagreen\" stroke-width=\"1.5\"");
      text(svg, p, q.location.str() + " no contribution", "fill=\"seagreen\"");
    }
  }
  for (const auto& s : report.support) {
    const P2 p = canvas.map(plane.embed(s));
    dot(svg, p, 5, "fill=\"crimson\"");
    text(svg, {p[0], p[1] + 16}, s.str(), "fill=\"crimson\"");
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace eisenres
