#include "osg/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "osg/error.hpp"

namespace osg {

namespace {

struct Box {
    double w = 0.0;
    double h = 0.0;
};

Box clamped_bounding_box(const std::vector<Polyline2D>& polys) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    std::size_t total = 0;
    bool distinct = false;
    Point2 first{};
    for (const auto& poly : polys) {
        for (const Point2 p : poly) {
            if (total == 0)
                first = p;
            else if (!(p == first))
                distinct = true;
            ++total;
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    if (total < 2 || !distinct)
        fail(errc::degenerate_shape, "fewer than 2 distinct points");
    Box b{xmax - xmin, ymax - ymin};
    // Degenerate-axis clamp: keeps a pure horizontal or vertical stroke finite.
    const double w = std::max(b.w, 1e-6 * b.h);
    const double h = std::max(b.h, 1e-6 * b.w);
    return {w, h};
}

} // namespace

double aspect_ratio(const std::vector<Polyline2D>& polys) {
    const Box b = clamped_bounding_box(polys);
    return b.w / b.h;
}

double convex_solidity(const Contour& c, int resample_n) {
    const Polyline2D poly = resample_contour(c, resample_n);
    const Polyline2D hull = convex_hull(poly); // throws DegenerateHull
    const double contour_area = std::abs(polygon_signed_area(poly));
    const double hull_area = std::abs(polygon_signed_area(hull));
    return contour_area / hull_area;
}

double circularity(const Contour& c, int resample_n) {
    const Polyline2D poly = resample_contour(c, resample_n);
    const AreaPerimeter ap = polygon_area_perimeter(poly);
    if (ap.area <= 0.0 || ap.perimeter <= 0.0)
        fail(errc::degenerate_shape, "contour encloses no area");
    const double v = 4.0 * std::numbers::pi * ap.area / (ap.perimeter * ap.perimeter);
    return std::clamp(v, 0.0, 1.1);
}

double path_complexity(const std::vector<Polyline2D>& polys) {
    const Box b = clamped_bounding_box(polys);
    double length = 0.0;
    for (const auto& poly : polys)
        for (std::size_t i = 0; i + 1 < poly.size(); ++i)
            length += dist(poly[i], poly[i + 1]);
    return length / (2.0 * (b.w + b.h));
}

} // namespace osg
