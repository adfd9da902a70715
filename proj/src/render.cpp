#include "braidkit/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "braidkit/error.hpp"

namespace braidkit {

RenderSpec RenderSpec::from_properties() {
  RenderSpec s;
  s.direction = props().braid_plot_dir;
  s.over_under = props().gen_plot_over_under;
  return s;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("Cannot open '" + path + "' for writing.");
  out << text;
  if (!out) throw Error("Failed writing '" + path + "'.");
}

namespace {

struct Pt {
  double x, y;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  if (s == "-0") s = "0";
  return s;
}

std::string polyline(const std::vector<Pt>& pts, const std::string& attrs) {
  std::ostringstream os;
  os << "<polyline points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k)
    os << (k ? " " : "") << num(pts[k].x) << ',' << num(pts[k].y);
  os << "\" " << attrs << "/>\n";
  return os.str();
}

std::string header(double w, double h) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << num(w) << "\" height=\"" << num(h) << "\" viewBox=\"0 0 " << num(w)
     << ' ' << num(h) << "\">\n";
  return os.str();
}

// Smooth step from 0 to 1.
double ease(double s) { return s * s * (3 - 2 * s); }

}  // namespace

std::string render_braid_svg(const Braid& b, const RenderSpec& spec) {
  const double gap = 40, slot = 50, margin = 30;
  const int n = b.n();
  const std::size_t len = b.length();
  const double across = margin * 2 + gap * (n - 1);
  const double along = margin * 2 + slot * static_cast<double>(std::max<std::size_t>(len, 1));
  const bool vertical = spec.direction == PlotDir::bottom_top ||
                        spec.direction == PlotDir::top_bottom;
  const double w = spec.width > 0 ? spec.width : (vertical ? across : along);
  const double h = spec.height > 0 ? spec.height : (vertical ? along : across);
  const double su = (vertical ? w : h) / across;
  const double sv = (vertical ? h : w) / along;

  // u runs across the strands, v along time.
  auto map = [&](double u, double v) -> Pt {
    u *= su;
    v *= sv;
    switch (spec.direction) {
      case PlotDir::bottom_top: return {u, h - v};
      case PlotDir::top_bottom: return {u, v};
      case PlotDir::left_right: return {v, u};
      case PlotDir::right_left: return {w - v, u};
    }
    return {u, v};
  };
  auto u_of = [&](int p) { return margin + gap * p; };

  std::ostringstream os;
  os << header(w, h);
  const std::string style = "fill=\"none\" stroke=\"" + spec.stroke +
                            "\" stroke-width=\"" + num(spec.stroke_width) +
                            "\" stroke-linecap=\"round\"";
  os << "<g class=\"braid\" data-n=\"" << n << "\" data-length=\"" << len
     << "\">\n";
  auto straight = [&](int p, double v0, double v1) {
    return polyline({map(u_of(p), v0), map(u_of(p), v1)}, style);
  };
  if (len == 0)
    for (int p = 0; p < n; ++p) os << straight(p, margin, along - margin);

  constexpr int steps = 16;
  for (std::size_t k = 0; k < len; ++k) {
    const int g = b.word()[k];
    const int i = std::abs(g) - 1;  // 0-based left position
    const double v0 = margin + slot * static_cast<double>(k);
    const double v1 = v0 + slot;
    if (k == 0) {
      for (int p = 0; p < n; ++p) os << straight(p, 0, margin);
    }
    for (int p = 0; p < n; ++p)
      if (p != i && p != i + 1) os << straight(p, v0, v1);

    const bool left_over = (g > 0) == spec.over_under;
    std::vector<Pt> from_left, from_right;
    for (int s = 0; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      const double e = ease(t);
      const double v = v0 + slot * t;
      from_left.push_back(map(u_of(i) + gap * e, v));
      from_right.push_back(map(u_of(i + 1) - gap * e, v));
    }
    const auto& over = left_over ? from_left : from_right;
    const auto& under = left_over ? from_right : from_left;
    os << "<g class=\"crossing\" data-pos=\"" << i + 1 << "\" data-sign=\""
       << (g > 0 ? 1 : -1) << "\">\n";
    // The under strand is broken around the middle of the slot.
    constexpr int cut = 3;
    os << polyline({under.begin(), under.begin() + steps / 2 - cut + 1}, style);
    os << polyline({under.begin() + steps / 2 + cut, under.end()}, style);
    os << polyline(over, style);
    os << "</g>\n";
    if (k + 1 == len)
      for (int p = 0; p < n; ++p) os << straight(p, v1, along);
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

namespace {

// Arcs of one loop, built strip by strip between the vertical lines
// through consecutive punctures.
class LoopDrawing {
 public:
  LoopDrawing(const Loop& l, double dy, double axis)
      : in_(intersec(l)), N_(l.totaln()), dy_(dy), axis_(axis) {}

  std::vector<std::vector<Pt>> arcs() {
    for (int k = 1; k < N_; ++k) strip(k);
    return std::move(arcs_);
  }

 private:
  static constexpr double kSpacing = 100;

  long above(int k) const { return count(k, 0); }
  long below(int k) const { return count(k, 1); }
  long count(int k, int off) const {
    if (k <= 1 || k >= N_) return 0;
    return in_.mu[static_cast<std::size_t>(2 * (k - 2) + off)].get_si();
  }
  long nu(int k) const { return in_.nu[static_cast<std::size_t>(k - 1)].get_si(); }

  double X(int k) const { return kSpacing * k; }
  // Height of the j-th point above (j > 0) or below (j < 0) the axis.
  double Y(long j) const { return axis_ - dy_ * static_cast<double>(j); }

  void strip(int k) {
    if (k == 1) {
      end_strip(2, -1);
    } else if (k == N_ - 1) {
      end_strip(N_ - 1, +1);
    } else {
      middle_strip(k);
    }
  }

  // Arcs in the strip between the line through puncture `line` and the end
  // puncture on side dir (-1 left, +1 right).  Innermost are turns back
  // around puncture `line`; then loops that enclose the end puncture and
  // return to the same side; arcs joining the upper and lower side pass
  // outside them.
  void end_strip(int line, int dir) {
    const long strip_nu = nu(dir < 0 ? 1 : line);
    const long L = (above(line) + below(line) - strip_nu) / 2;
    for (long j = 1; j <= L; ++j) turn(X(line), dir, j, L);
    const long up = above(line) - L, down = below(line) - L;
    const long z = std::min(up, down);
    const long loops_up = (up - z) / 2, loops_down = (down - z) / 2;
    const long depth = L + 2 * std::max(loops_up, loops_down);
    const double x0 = X(line), xc = X(line + dir);
    const double reach = kSpacing * 0.4 / static_cast<double>(depth + z + 1);
    auto around = [&](std::vector<Pt>& pts, double top, double bottom,
                      double rx) {
      constexpr int steps = 12;
      for (int s = 1; s < steps; ++s) {
        const double th = std::numbers::pi * s / steps;
        const double c = std::cos(th);
        pts.push_back({xc + dir * rx * std::sin(th),
                       c > 0 ? axis_ - top * c : axis_ - bottom * c});
      }
    };
    // side +1: both ends above the axis; -1: both below.
    auto enclose = [&](long pin, long pout, int side) {
      const double ry = dy_ * static_cast<double>(pout);
      const double rx = reach * static_cast<double>(pout);
      std::vector<Pt> pts{{x0, Y(side * pout)}, {xc, Y(side * pout)}};
      std::vector<Pt> arc;
      around(arc, ry, ry, rx);
      if (side > 0)
        pts.insert(pts.end(), arc.begin(), arc.end());
      else
        pts.insert(pts.end(), arc.rbegin(), arc.rend());
      pts.push_back({xc, Y(-side * pout)});
      pts.push_back({x0, Y(side * pin)});
      arcs_.push_back(std::move(pts));
    };
    for (long j = 1; j <= loops_up; ++j)
      enclose(L + loops_up - j + 1, L + loops_up + j, +1);
    for (long j = 1; j <= loops_down; ++j)
      enclose(L + loops_down - j + 1, L + loops_down + j, -1);
    for (long j = 1; j <= z; ++j) {
      const double ext = dy_ * static_cast<double>(depth + j);
      std::vector<Pt> pts{{x0, Y(L + 2 * loops_up + j)}, {xc, axis_ - ext}};
      around(pts, ext, ext, reach * static_cast<double>(depth + j));
      pts.push_back({xc, axis_ + ext});
      pts.push_back({x0, Y(-(L + 2 * loops_down + j))});
      arcs_.push_back(std::move(pts));
    }
  }

  void middle_strip(int k) {
    const long a = above(k), b = below(k), c = above(k + 1), d = below(k + 1);
    const long L = (a + b - nu(k)) / 2, R = (c + d - nu(k)) / 2;
    const double xl = X(k), xr = X(k + 1);
    constexpr int steps = 12;
    for (long j = 1; j <= L; ++j) turn(xl, +1, j, L);
    for (long j = 1; j <= R; ++j) turn(xr, -1, j, R);
    // Remaining points, listed top to bottom on each side.
    std::vector<long> left, right;
    for (long j = a; j > L; --j) left.push_back(j);
    for (long j = L + 1; j <= b; ++j) left.push_back(-j);
    for (long j = c; j > R; --j) right.push_back(j);
    for (long j = R + 1; j <= d; ++j) right.push_back(-j);
    const std::size_t through = std::min(left.size(), right.size());
    for (std::size_t q = 0; q < through; ++q) {
      std::vector<Pt> pts;
      const double y0 = Y(left[q]), y1 = Y(right[q]);
      for (int s = 0; s <= steps + 1; ++s) {
        const double t = static_cast<double>(s) / (steps + 1);
        pts.push_back({xl + (xr - xl) * t, y0 + (y1 - y0) * ease(t)});
      }
      arcs_.push_back(std::move(pts));
    }
  }

  // Arc joining the j-th points above and below line x, bulging toward dir.
  void turn(double x, int dir, long j, long total) {
    constexpr int steps = 12;
    const double rx = kSpacing * 0.4 * static_cast<double>(j) / static_cast<double>(total + 1);
    std::vector<Pt> pts{{x, Y(j)}};
    for (int s = 1; s < steps; ++s) {
      const double th = std::numbers::pi * s / steps;
      pts.push_back({x + dir * rx * std::sin(th), axis_ - dy_ * static_cast<double>(j) * std::cos(th)});
    }
    pts.push_back({x, Y(-j)});
    arcs_.push_back(std::move(pts));
  }

  IntersectionNumbers in_;
  int N_;
  double dy_, axis_;
  std::vector<std::vector<Pt>> arcs_;
};

}  // namespace

std::string render_loop_svg(const Loop& l, const RenderSpec& spec) {
  const auto in = intersec(l);
  long most = 1;
  for (const auto& v : in.mu) most = std::max(most, v.get_si());
  for (const auto& v : in.nu) most = std::max(most, v.get_si());
  const double dy = std::clamp(120.0 / static_cast<double>(most), 1.0, 12.0);
  const double w = 100.0 * (l.totaln() + 1);
  const double half = dy * static_cast<double>(most + 2) + 20;
  const double h = 2 * half;
  std::ostringstream os;
  os << header(spec.width > 0 ? spec.width : w, spec.height > 0 ? spec.height : h);
  if (spec.width > 0 || spec.height > 0)
    os << "<g transform=\"scale(" << num((spec.width > 0 ? spec.width : w) / w)
       << ',' << num((spec.height > 0 ? spec.height : h) / h) << ")\">\n";
  else
    os << "<g>\n";
  const std::string style = "fill=\"none\" stroke=\"" + spec.stroke +
                            "\" stroke-width=\"" + num(spec.stroke_width / 2) +
                            "\"";
  LoopDrawing d(l, dy, half);
  for (const auto& arc : d.arcs()) os << polyline(arc, "class=\"arc\" " + style);
  for (int k = 1; k <= l.totaln(); ++k) {
    const bool fixed = l.basepoint() && k == l.totaln();
    os << "<circle class=\"puncture" << (fixed ? " basepoint" : "")
       << "\" cx=\"" << num(100.0 * k) << "\" cy=\"" << num(half)
       << "\" r=\"4\" fill=\"" << (fixed ? "#c0392b" : "#000") << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace braidkit
