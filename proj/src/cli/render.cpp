#include "cli/render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace capcover::cli {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 40.0;

const char* palette(std::size_t q) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[q % 10];
}

std::string num(double x) {
  std::ostringstream s;
  s.precision(2);
  s << std::fixed << x;
  return s.str();
}

class Svg {
 public:
  Svg() {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
         << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }
  std::ostringstream& raw() { return out_; }
  void title(const std::string& text) {
    out_ << "<text x=\"" << kMargin << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
         << text << "</text>\n";
  }
  void dot(double x, double y, const char* color) {
    out_ << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3.5\" fill=\"" << color
         << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  }
  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

// Owning set per element, -1 when uncovered.
std::vector<int> owners(const Report& r) {
  std::vector<int> own(r.instance.size(), -1);
  for (std::size_t q = 0; q < r.sets.size(); ++q)
    for (int e : r.sets[q].elements)
      if (e >= 0 && e < static_cast<int>(own.size()) && own[e] < 0) own[e] = static_cast<int>(q);
  return own;
}

std::string antenna_polar(const Report& r) {
  const auto& cs = r.instance.customers;
  double reach = 0.0;
  for (const auto& c : cs) reach = std::max(reach, c.r);
  const double c0 = kSize / 2;
  const double scale = (kSize / 2 - kMargin) / (reach * 1.05);
  auto at = [&](double radius, double theta) {
    return std::pair{c0 + scale * radius * std::cos(theta), c0 - scale * radius * std::sin(theta)};
  };

  Svg svg;
  svg.title(r.algorithm + ": " + std::to_string(r.size) + " antennas");
  for (std::size_t q = 0; q < r.sets.size(); ++q) {
    if (!r.sets[q].sector) continue;
    const Sector& s = *r.sets[q].sector;
    const double radius = std::min(s.r, reach * 1.05);
    if (s.delta >= kFullCircle) {
      svg.raw() << "<circle cx=\"" << c0 << "\" cy=\"" << c0 << "\" r=\"" << num(scale * radius)
                << "\" fill=\"" << palette(q) << "\" fill-opacity=\"0.2\" stroke=\"" << palette(q)
                << "\"/>\n";
      continue;
    }
    auto [x0, y0] = at(radius, s.alpha);
    auto [x1, y1] = at(radius, s.alpha + s.delta);
    const int large = s.delta > std::numbers::pi ? 1 : 0;
    svg.raw() << "<path d=\"M " << c0 << ' ' << c0 << " L " << num(x0) << ' ' << num(y0) << " A "
              << num(scale * radius) << ' ' << num(scale * radius) << " 0 " << large << " 0 "
              << num(x1) << ' ' << num(y1) << " Z\" fill=\"" << palette(q)
              << "\" fill-opacity=\"0.2\" stroke=\"" << palette(q) << "\"/>\n";
  }
  const auto own = owners(r);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    auto [x, y] = at(cs[j].r, cs[j].theta);
    svg.dot(x, y, own[j] < 0 ? "black" : palette(own[j]));
  }
  svg.raw() << "<circle cx=\"" << c0 << "\" cy=\"" << c0 << "\" r=\"4\" fill=\"black\"/>\n";
  return svg.finish();
}

// Linear antenna instance: sectors become rectangles [alpha, alpha + delta] x [0, r].
std::string antenna_linear(const Report& r) {
  const auto& cs = r.instance.customers;
  double lo = cs.front().theta, hi = lo, reach = 0.0;
  for (const auto& c : cs) {
    lo = std::min(lo, c.theta);
    hi = std::max(hi, c.theta);
    reach = std::max(reach, c.r);
  }
  for (const auto& s : r.sets)
    if (s.sector) {
      lo = std::min(lo, s.sector->alpha);
      hi = std::max(hi, s.sector->alpha + s.sector->delta);
    }
  if (hi <= lo) hi = lo + 1.0;
  reach *= 1.1;
  const double w = kSize - 2 * kMargin;
  auto x_of = [&](double theta) { return kMargin + w * (theta - lo) / (hi - lo); };
  auto y_of = [&](double radius) { return kSize - kMargin - w * std::min(radius, reach) / reach; };

  Svg svg;
  svg.title(r.algorithm + ": " + std::to_string(r.size) + " antennas (angle across, radius up)");
  svg.raw() << "<line x1=\"" << kMargin << "\" y1=\"" << y_of(0) << "\" x2=\"" << kSize - kMargin
            << "\" y2=\"" << y_of(0) << "\" stroke=\"black\"/>\n";
  for (std::size_t q = 0; q < r.sets.size(); ++q) {
    if (!r.sets[q].sector) continue;
    const Sector& s = *r.sets[q].sector;
    const double x0 = x_of(s.alpha), x1 = x_of(s.alpha + s.delta);
    svg.raw() << "<rect x=\"" << num(x0) << "\" y=\"" << num(y_of(s.r)) << "\" width=\""
              << num(std::max(1.0, x1 - x0)) << "\" height=\"" << num(y_of(0) - y_of(s.r))
              << "\" fill=\"" << palette(q) << "\" fill-opacity=\"0.2\" stroke=\"" << palette(q)
              << "\"/>\n";
  }
  const auto own = owners(r);
  for (std::size_t j = 0; j < cs.size(); ++j)
    svg.dot(x_of(cs[j].theta), y_of(cs[j].r), own[j] < 0 ? "black" : palette(own[j]));
  return svg.finish();
}

std::string load_view(const Report& r) {
  const auto& pts = r.instance.load_points;
  const bool wrap = r.instance.wrap;
  double top = 0.0;
  for (const auto& p : pts) top = std::max(top, p.demand);
  if (top <= 0.0) top = 1.0;

  Svg svg;
  std::string caption = r.algorithm + ": " + std::to_string(r.size) + " windows";
  if (r.bound) caption += ", max load " + num(*r.bound);
  svg.title(caption);
  const auto own = owners(r);

  if (wrap) {
    const double c0 = kSize / 2;
    const double ring = kSize / 2 - 2 * kMargin;
    auto at = [&](double radius, double theta) {
      return std::pair{c0 + radius * std::cos(theta), c0 - radius * std::sin(theta)};
    };
    svg.raw() << "<circle cx=\"" << c0 << "\" cy=\"" << c0 << "\" r=\"" << ring
              << "\" fill=\"none\" stroke=\"#ccc\"/>\n";
    for (std::size_t q = 0; q < r.sets.size(); ++q) {
      if (!r.sets[q].alpha) continue;
      const double a = *r.sets[q].alpha;
      const double radius = ring + 8.0 + 6.0 * q;
      const double span = std::min(r.instance.window, kFullCircle - 1e-6);
      auto [x0, y0] = at(radius, a);
      auto [x1, y1] = at(radius, a + span);
      svg.raw() << "<path d=\"M " << num(x0) << ' ' << num(y0) << " A " << num(radius) << ' '
                << num(radius) << " 0 " << (span > std::numbers::pi ? 1 : 0) << " 0 " << num(x1)
                << ' ' << num(y1) << "\" fill=\"none\" stroke=\"" << palette(q)
                << "\" stroke-width=\"4\"/>\n";
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double radius = ring - 10.0 - 50.0 * pts[j].demand / top;
      auto [x, y] = at(radius, pts[j].theta);
      svg.dot(x, y, own[j] < 0 ? "black" : palette(own[j]));
    }
    return svg.finish();
  }

  double lo = pts.front().theta, hi = lo;
  for (const auto& p : pts) {
    lo = std::min(lo, p.theta);
    hi = std::max(hi, p.theta);
  }
  hi = std::max(hi, lo + r.instance.window);
  for (const auto& s : r.sets)
    if (s.alpha) hi = std::max(hi, *s.alpha + r.instance.window);
  const double w = kSize - 2 * kMargin;
  auto x_of = [&](double theta) { return kMargin + w * (theta - lo) / (hi - lo); };
  const double base = kSize / 2;
  svg.raw() << "<line x1=\"" << kMargin << "\" y1=\"" << base << "\" x2=\"" << kSize - kMargin
            << "\" y2=\"" << base << "\" stroke=\"black\"/>\n";
  for (std::size_t q = 0; q < r.sets.size(); ++q) {
    if (!r.sets[q].alpha) continue;
    const double y = base + 16.0 + 10.0 * q;
    svg.raw() << "<line x1=\"" << num(x_of(*r.sets[q].alpha)) << "\" y1=\"" << y << "\" x2=\""
              << num(x_of(*r.sets[q].alpha + r.instance.window)) << "\" y2=\"" << y
              << "\" stroke=\"" << palette(q) << "\" stroke-width=\"4\"/>\n";
  }
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double x = x_of(pts[j].theta);
    const double h = 120.0 * pts[j].demand / top;
    const char* color = own[j] < 0 ? "black" : palette(own[j]);
    svg.raw() << "<line x1=\"" << num(x) << "\" y1=\"" << base << "\" x2=\"" << num(x)
              << "\" y2=\"" << num(base - h) << "\" stroke=\"" << color << "\"/>\n";
    svg.dot(x, base - h, color);
  }
  return svg.finish();
}

}  // namespace

std::string render_svg(const Report& r) {
  if (r.instance.kind == Kind::Antenna)
    return r.instance.wrap ? antenna_polar(r) : antenna_linear(r);
  if (r.instance.kind == Kind::Load) return load_view(r);
  throw InvalidInstance(std::string("render draws antenna and load reports, not ") +
                        kind_name(r.instance.kind));
}

}  // namespace capcover::cli
