#ifndef GEOBRACKET_TOOLS_SVG_HPP
#define GEOBRACKET_TOOLS_SVG_HPP

#include <string>
#include <utility>
#include <vector>

#include "geobracket/hyperbolic.hpp"

namespace geobracket::cli {

/// Collects half-plane geometry in world coordinates and renders it into a
/// fixed size canvas. Output depends only on the calls made, so equal inputs
/// give byte-identical files.
class SvgCanvas {
 public:
  void line(const DirectedGeodesic& g, const std::string& cls);
  void segment(const PlanePoint& p, const PlanePoint& q, const std::string& cls);
  /// Open polygon in plain world coordinates, for curves of other models.
  void polyline(const std::vector<std::pair<double, double>>& points, const std::string& cls,
                const std::string& id = {});
  void point(const PlanePoint& p, const std::string& cls);
  void caption(const std::string& text);

  std::string render() const;

 private:
  struct Item {
    enum class Kind { Line, Segment, Point, Polyline } kind;
    double x1, y1, x2, y2;
    bool to_infinity = false;
    std::string cls;
    std::string id;
    std::vector<std::pair<double, double>> points;
  };
  void include(double x, double y);

  std::vector<Item> items_;
  std::vector<std::string> captions_;
  double xmin_ = 0.0, xmax_ = 0.0, ymax_ = 0.0;
  bool empty_ = true;
};

}  // namespace geobracket::cli

#endif  // GEOBRACKET_TOOLS_SVG_HPP
