#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

namespace osg {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
    friend Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

    double norm() const { return std::hypot(x, y); }
};

// Ordered vertex list; closed polygons repeat or imply the closing edge
// depending on the operation's contract.
using Polyline2D = std::vector<Point2>;

inline double dist(Point2 a, Point2 b) { return (a - b).norm(); }

inline double cross(Point2 o, Point2 a, Point2 b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Distance from p to the segment [a, b]; collapses to point distance when a == b.
double point_segment_distance(Point2 p, Point2 a, Point2 b);

// Ramer-Douglas-Peucker simplification. Keeps both endpoints; retains any
// interior point whose perpendicular distance to the current chord exceeds
// epsilon. Output is a subsequence of the input.
Polyline2D rdp_simplify(const Polyline2D& poly, double epsilon);

// Andrew monotone chain. Returns the hull vertices in CCW order (math
// convention on the raw coordinates), strictly convex: collinear boundary
// points are dropped. Throws DegenerateHull for fewer than 3 non-collinear
// input points.
Polyline2D convex_hull(const std::vector<Point2>& points);

struct AreaPerimeter {
    double area = 0.0;
    double perimeter = 0.0;
};

// Shoelace absolute area and perimeter (closing edge included) of a polygon
// given as its vertex list. Throws InvalidArgument for fewer than 3 vertices.
AreaPerimeter polygon_area_perimeter(const Polyline2D& poly);

// Signed shoelace area (no absolute value): sign reflects vertex orientation.
double polygon_signed_area(const Polyline2D& poly);

// Rounds through the 9-significant-digit decimal form used by every file
// format in this project, so that in-memory values and serialized values
// are bit-identical.
inline double quantize9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::strtod(buf, nullptr);
}

inline Point2 quantize9(Point2 p) { return {quantize9(p.x), quantize9(p.y)}; }

} // namespace osg
