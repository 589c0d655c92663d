#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string_view>

namespace geobracket::cli {

namespace {

constexpr double kWidth = 960.0;
constexpr double kMaxPlot = 480.0;
constexpr double kMargin = 30.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void SvgCanvas::include(double x, double y) {
  if (empty_) {
    xmin_ = xmax_ = x;
    ymax_ = y;
    empty_ = false;
    return;
  }
  xmin_ = std::min(xmin_, x);
  xmax_ = std::max(xmax_, x);
  ymax_ = std::max(ymax_, y);
}

void SvgCanvas::line(const DirectedGeodesic& g, const std::string& cls) {
  Item it{Item::Kind::Line, 0, 0, 0, 0, false, cls, {}, {}};
  if (g.from().is_infinite() || g.to().is_infinite()) {
    double foot = g.from().is_infinite() ? g.to().value() : g.from().value();
    it.x1 = it.x2 = foot;
    it.to_infinity = true;
    include(foot, 0.0);
  } else {
    it.x1 = g.from().value();
    it.x2 = g.to().value();
    include(it.x1, 0.0);
    include(it.x2, std::abs(it.x2 - it.x1) / 2);
  }
  items_.push_back(std::move(it));
}

void SvgCanvas::segment(const PlanePoint& p, const PlanePoint& q, const std::string& cls) {
  items_.push_back({Item::Kind::Segment, p.x(), p.y(), q.x(), q.y(), false, cls, {}, {}});
  include(p.x(), p.y());
  include(q.x(), q.y());
}

void SvgCanvas::polyline(const std::vector<std::pair<double, double>>& points, const std::string& cls,
                         const std::string& id) {
  Item it{Item::Kind::Polyline, 0, 0, 0, 0, false, cls, id, points};
  for (const auto& [x, y] : points) include(x, y);
  items_.push_back(std::move(it));
}

void SvgCanvas::point(const PlanePoint& p, const std::string& cls) {
  items_.push_back({Item::Kind::Point, p.x(), p.y(), 0, 0, false, cls, {}, {}});
  include(p.x(), p.y());
}

void SvgCanvas::caption(const std::string& text) { captions_.push_back(text); }

std::string SvgCanvas::render() const {
  double x0 = empty_ ? -1.0 : xmin_, x1 = empty_ ? 1.0 : xmax_;
  double top = empty_ ? 1.0 : ymax_;
  double span = std::max({x1 - x0, 2 * top, 1e-12});
  x0 -= 0.05 * span;
  x1 += 0.05 * span;
  double scale = std::min((kWidth - 2 * kMargin) / (x1 - x0), kMaxPlot / std::max(top * 1.1, 1e-12));
  double header = 10.0 + 16.0 * static_cast<double>(captions_.size());
  double height = header + top * 1.1 * scale + kMargin;
  double base = height - kMargin;
  auto sx = [&](double x) { return kMargin + (x - x0) * scale; };
  auto sy = [&](double y) { return base - y * scale; };
  auto attrs = [](const Item& it) {
    std::string a = " class=\"" + it.cls + "\"";
    if (!it.id.empty()) a += " id=\"" + it.id + "\"";
    return a;
  };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(height) +
         "\" viewBox=\"0 0 " + num(kWidth) + " " + num(height) + "\">\n";
  out +=
      "<style>path, line, polyline { fill: none; stroke-width: 1.5; } .boundary { stroke: #888; } .axis { stroke: #1f4e9c; } "
      ".lift { stroke: #b0b0b0; } .term-axis { stroke: #333; stroke-dasharray: 6 4; } .zigzag-p { stroke: #c0392b; } "
      ".zigzag-q { stroke: #27ae60; } .band-edge { stroke: #888; } .mirror { stroke: #8e44ad; stroke-dasharray: 2 3; } .crossing { fill: #000; } "
      ".vertex { fill: #555; } text { font: 13px sans-serif; }</style>\n";
  out += "<line class=\"boundary\" x1=\"0.000\" y1=\"" + num(base) + "\" x2=\"" + num(kWidth) + "\" y2=\"" + num(base) +
         "\"/>\n";
  for (const Item& it : items_) {
    switch (it.kind) {
      case Item::Kind::Line:
        if (it.to_infinity) {
          out += "<line" + attrs(it) + " x1=\"" + num(sx(it.x1)) + "\" y1=\"" + num(base) + "\" x2=\"" +
                 num(sx(it.x1)) + "\" y2=\"0.000\"/>\n";
        } else {
          double r = std::abs(it.x2 - it.x1) / 2 * scale;
          int sweep = it.x1 < it.x2 ? 1 : 0;
          out += "<path" + attrs(it) + " d=\"M " + num(sx(it.x1)) + " " + num(base) + " A " + num(r) + " " + num(r) +
                 " 0 0 " + std::to_string(sweep) + " " + num(sx(it.x2)) + " " + num(base) + "\"/>\n";
        }
        break;
      case Item::Kind::Segment: {
        double dx = it.x2 - it.x1;
        if (std::abs(dx) <= 1e-12 * std::max(1.0, std::abs(it.x1))) {
          out += "<line" + attrs(it) + " x1=\"" + num(sx(it.x1)) + "\" y1=\"" + num(sy(it.y1)) + "\" x2=\"" +
                 num(sx(it.x2)) + "\" y2=\"" + num(sy(it.y2)) + "\"/>\n";
          break;
        }
        double c = (it.x2 * it.x2 + it.y2 * it.y2 - it.x1 * it.x1 - it.y1 * it.y1) / (2 * dx);
        double r = std::hypot(it.x1 - c, it.y1) * scale;
        int sweep = it.x1 < it.x2 ? 1 : 0;
        out += "<path" + attrs(it) + " d=\"M " + num(sx(it.x1)) + " " + num(sy(it.y1)) + " A " + num(r) + " " +
               num(r) + " 0 0 " + std::to_string(sweep) + " " + num(sx(it.x2)) + " " + num(sy(it.y2)) + "\"/>\n";
        break;
      }
      case Item::Kind::Polyline: {
        out += "<polyline" + attrs(it) + " points=\"";
        for (std::size_t i = 0; i < it.points.size(); ++i) {
          out += (i ? " " : "") + num(sx(it.points[i].first)) + "," + num(sy(it.points[i].second));
        }
        out += "\"/>\n";
        break;
      }
      case Item::Kind::Point:
        out += "<circle" + attrs(it) + " cx=\"" + num(sx(it.x1)) + "\" cy=\"" + num(sy(it.y1)) + "\" r=\"3\"/>\n";
        break;
    }
  }
  double y = 18.0;
  for (const std::string& c : captions_) {
    out += "<text x=\"8.000\" y=\"" + num(y) + "\">" + escape(c) + "</text>\n";
    y += 16.0;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace geobracket::cli
