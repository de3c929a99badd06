#include "osg/geometry.hpp"

#include <algorithm>

#include "osg/error.hpp"

namespace osg {

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    if (len2 == 0.0)
        return dist(p, a);
    double t = ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, {a.x + t * ab.x, a.y + t * ab.y});
}

namespace {

void rdp_recurse(const Polyline2D& pts, std::size_t first, std::size_t last, double epsilon,
                 std::vector<bool>& keep) {
    if (last <= first + 1)
        return;
    double dmax = -1.0;
    std::size_t imax = first;
    for (std::size_t i = first + 1; i < last; ++i) {
        const double d = point_segment_distance(pts[i], pts[first], pts[last]);
        if (d > dmax) {
            dmax = d;
            imax = i;
        }
    }
    if (dmax > epsilon) {
        keep[imax] = true;
        rdp_recurse(pts, first, imax, epsilon, keep);
        rdp_recurse(pts, imax, last, epsilon, keep);
    }
}

} // namespace

Polyline2D rdp_simplify(const Polyline2D& poly, double epsilon) {
    if (poly.size() < 2)
        fail(errc::invalid_argument, "rdp_simplify needs at least 2 points");
    if (epsilon < 0.0)
        fail(errc::invalid_argument, "rdp_simplify epsilon must be >= 0");
    std::vector<bool> keep(poly.size(), false);
    keep.front() = keep.back() = true;
    rdp_recurse(poly, 0, poly.size() - 1, epsilon, keep);
    Polyline2D out;
    out.reserve(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (keep[i])
            out.push_back(poly[i]);
    return out;
}

Polyline2D convex_hull(const std::vector<Point2>& points) {
    std::vector<Point2> pts = points;
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t n = pts.size();
    if (n < 3)
        fail(errc::degenerate_hull, "need at least 3 distinct points");

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower hull
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) { // upper hull
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1); // last point repeats the first

    if (hull.size() < 3)
        fail(errc::degenerate_hull, "points are collinear");
    return hull;
}

double polygon_signed_area(const Polyline2D& poly) {
    double a2 = 0.0;
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        const Point2 p = poly[i];
        const Point2 q = poly[(i + 1) % n];
        a2 += p.x * q.y - q.x * p.y;
    }
    return 0.5 * a2;
}

AreaPerimeter polygon_area_perimeter(const Polyline2D& poly) {
    if (poly.size() < 3)
        fail(errc::invalid_argument, "polygon needs at least 3 vertices");
    AreaPerimeter r;
    r.area = std::abs(polygon_signed_area(poly));
    for (std::size_t i = 0, n = poly.size(); i < n; ++i)
        r.perimeter += dist(poly[i], poly[(i + 1) % n]);
    return r;
}

} // namespace osg
