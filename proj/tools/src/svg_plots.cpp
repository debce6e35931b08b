/*
 * Copyright 2026 The intervalroc Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "iroc/svg_plots.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

namespace iroc {
namespace {

using Point = std::pair<double, double>;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

// Maps data coordinates onto a plotting rectangle with a fixed margin.
class Canvas {
 public:
  Canvas(double width, double height, double x0, double x1, double y0, double y1)
      : width_(width), height_(height), x0_(x0), x1_(x1), y0_(y0), y1_(y1) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
         << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
         << num(height) << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  double px(double x) const {
    return kMargin + (x - x0_) / (x1_ - x0_) * (width_ - 2 * kMargin);
  }
  double py(double y) const {
    return height_ - kMargin - (y - y0_) / (y1_ - y0_) * (height_ - 2 * kMargin);
  }

  void polygon(const std::vector<Point>& pts, const std::string& fill,
               double opacity = 1.0) {
    out_ << "<polygon fill=\"" << fill << "\" fill-opacity=\"" << num(opacity)
         << "\" stroke=\"none\" points=\"" << path(pts) << "\"/>\n";
  }

  void polyline(const std::vector<Point>& pts, const std::string& stroke,
                double stroke_width = 2.0, const std::string& dash = "") {
    out_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\""
         << num(stroke_width) << '"';
    if (!dash.empty()) out_ << " stroke-dasharray=\"" << dash << '"';
    out_ << " points=\"" << path(pts) << "\"/>\n";
  }

  void text(double x_px, double y_px, const std::string& s,
            const std::string& anchor = "start", const std::string& extra = "") {
    out_ << "<text x=\"" << num(x_px) << "\" y=\"" << num(y_px)
         << "\" text-anchor=\"" << anchor << '"' << extra << '>' << s << "</text>\n";
  }

  void axes(const std::string& xlabel, const std::string& ylabel,
            std::span<const double> xticks, std::span<const double> yticks,
            int digits = 1) {
    out_ << "<rect x=\"" << num(px(x0_)) << "\" y=\"" << num(py(y1_)) << "\" width=\""
         << num(px(x1_) - px(x0_)) << "\" height=\"" << num(py(y0_) - py(y1_))
         << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (const double t : xticks) {
      text(px(t), py(y0_) + 16, fixed(t, digits), "middle");
    }
    for (const double t : yticks) {
      text(px(x0_) - 6, py(t) + 4, fixed(t, digits), "end");
    }
    text((px(x0_) + px(x1_)) / 2, height_ - 12, xlabel, "middle");
    text(16, (py(y0_) + py(y1_)) / 2, ylabel, "middle",
         " transform=\"rotate(-90 16 " + num((py(y0_) + py(y1_)) / 2) + ")\"");
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static constexpr double kMargin = 56.0;

  std::string path(const std::vector<Point>& pts) const {
    std::string s;
    for (const auto& [x, y] : pts) {
      if (!s.empty()) s += ' ';
      s += num(px(x)) + ',' + num(py(y));
    }
    return s;
  }

  double width_, height_, x0_, x1_, y0_, y1_;
  std::ostringstream out_;
};

std::vector<Point> staircase(const intervalroc::RocCurve& curve) {
  std::vector<Point> pts;
  pts.reserve(curve.points.size());
  for (const auto& p : curve.points) pts.emplace_back(p.x, p.y);
  return pts;
}

const std::vector<double> kUnitTicks = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};

}  // namespace

std::string roc_square_svg(const intervalroc::RocCurve& strict,
                           const intervalroc::RocCurve& permissive,
                           const intervalroc::EvaluationReport& report) {
  Canvas c(520, 520, 0.0, 1.0, 0.0, 1.0);
  auto below = staircase(strict);
  below.emplace_back(1.0, 0.0);
  below.emplace_back(0.0, 0.0);
  c.polygon(below, "#4a78c2", 0.45);
  auto above = staircase(permissive);
  above.emplace_back(0.0, 1.0);
  c.polygon(above, "#d0504a", 0.45);
  c.polyline({{0, 0}, {1, 1}}, "#888888", 1.0, "4 4");
  c.polyline(staircase(strict), "#1f4e9c");
  c.polyline(staircase(permissive), "#a8211b");
  c.axes("false positive rate", "true positive rate", kUnitTicks, kUnitTicks);
  c.text(c.px(0.55), c.py(0.22),
         "AUC_L = P(I1&gt;I0) = " + fixed(report.auc_l, 4), "start", " fill=\"#1f4e9c\"");
  c.text(c.px(0.55), c.py(0.16), "AUC_U = " + fixed(report.auc_u, 4), "start",
         " fill=\"#a8211b\"");
  c.text(c.px(0.55), c.py(0.10),
         "P(overlap) = " + fixed(report.three_region.p_overlap(), 4));
  c.text(c.px(0.55), c.py(0.04),
         "P(I1&lt;I0) = " + fixed(report.three_region.p_incorrect(), 4));
  return c.finish();
}

std::string three_region_svg(const intervalroc::SweepTable& table) {
  Canvas c(640, 420, 0.0, 100.0, 0.0, 1.0);
  std::vector<Point> correct_top, overlap_top;
  for (const auto& row : table.rows) {
    const double level = row.level * 100.0;
    const auto& r = row.report.three_region;
    correct_top.emplace_back(level, r.p_correct());
    overlap_top.emplace_back(level, r.p_correct() + r.p_overlap());
  }
  const double first = table.rows.empty() ? 0.0 : table.rows.front().level * 100.0;
  const double last = table.rows.empty() ? 0.0 : table.rows.back().level * 100.0;

  std::vector<Point> blue = correct_top;
  blue.emplace_back(last, 0.0);
  blue.emplace_back(first, 0.0);
  std::vector<Point> gray = overlap_top;
  for (auto it = correct_top.rbegin(); it != correct_top.rend(); ++it) gray.push_back(*it);
  std::vector<Point> red = overlap_top;
  red.emplace_back(last, 1.0);
  red.emplace_back(first, 1.0);
  c.polygon(blue, "#4a78c2", 0.8);
  c.polygon(gray, "#b5b5b5", 0.8);
  c.polygon(red, "#d0504a", 0.8);

  const std::vector<double> xticks = {0, 20, 40, 60, 80, 100};
  c.axes("confidence level (%)", "probability", xticks, kUnitTicks);
  c.text(c.px(2), c.py(0.06), "P(I1&gt;I0)", "start", " fill=\"white\"");
  c.text(c.px(98), c.py(0.97), "P(I1&lt;I0)", "end", " fill=\"white\"");
  return c.finish();
}

std::string bound_band_svg(std::span<const intervalroc::BoundValidationRow> rows) {
  double xmin = 0.0, xmax = 0.1, ymin = 0.0, ymax = 1.0;
  if (!rows.empty()) {
    xmin = rows.front().alpha;
    xmax = rows.front().alpha;
    for (const auto& r : rows) {
      xmin = std::min(xmin, r.alpha);
      xmax = std::max(xmax, r.alpha);
      ymin = std::min(ymin, r.lower_bound);
      ymax = std::max(ymax, r.upper_bound);
    }
    if (xmax == xmin) xmax = xmin + 0.01;
  }
  Canvas c(640, 420, xmin, xmax, ymin, ymax);
  std::vector<Point> band, lower, upper, star, aucl, aucu;
  for (const auto& r : rows) {
    upper.emplace_back(r.alpha, r.upper_bound);
    lower.emplace_back(r.alpha, r.lower_bound);
    star.emplace_back(r.alpha, r.auc_star);
    aucl.emplace_back(r.alpha, r.auc_l);
    aucu.emplace_back(r.alpha, r.auc_u);
  }
  band = upper;
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) band.push_back(*it);
  c.polygon(band, "#4a78c2", 0.25);
  c.polyline(lower, "#4a78c2", 1.5);
  c.polyline(upper, "#4a78c2", 1.5);
  c.polyline(aucl, "#1f4e9c", 1.0, "4 3");
  c.polyline(aucu, "#a8211b", 1.0, "4 3");
  c.polyline(star, "black", 2.0);

  std::vector<double> xticks, yticks;
  for (int k = 0; k <= 5; ++k) {
    xticks.push_back(xmin + (xmax - xmin) * k / 5.0);
    yticks.push_back(ymin + (ymax - ymin) * k / 5.0);
  }
  c.axes("miscoverage alpha", "AUC", xticks, yticks, 2);
  c.text(c.px(xmin) + 8, c.py(ymax) + 16,
         "band: [AUC_L - p_pair, AUC_U + p_pair]; black: optimal AUC");
  return c.finish();
}

}  // namespace iroc
