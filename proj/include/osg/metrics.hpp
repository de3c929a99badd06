#pragma once

#include <vector>

#include "osg/geometry.hpp"
#include "osg/shape.hpp"

namespace osg {

// The four scalar shape features used as secondary voters.
struct SecondaryMetrics {
    double aspect_ratio = 0.0;    // bounding-box width / height
    double solidity = 0.0;        // contour polygon area / convex hull area
    double circularity = 0.0;     // 4*pi*a / p^2
    double path_complexity = 0.0; // stroke length / bounding-box perimeter
};

// Width/height of the axis-aligned bounding box of all polyline points.
// A degenerate axis is clamped to 1e-6 of the other, so a horizontal line
// yields 1e6 and a vertical one 1e-6.
double aspect_ratio(const std::vector<Polyline2D>& polys);

// Contour polygon area over convex hull area, both measured on the
// arc-length resampled boundary polygon (the raw pixel staircase would
// inflate nothing here, but sharing the resampled polygon keeps solidity
// and circularity consistent). Near 1 for closed convex strokes, low for
// open shapes like a V.
double convex_solidity(const Contour& c, int resample_n = 128);

// 4*pi*a/p^2 of the boundary polygon, clipped to [0, 1.1]. The perimeter is
// measured on the arc-length resampled polygon: the pixel staircase of a
// traced contour overestimates smooth perimeters by ~5%, which would push a
// circle's circularity down to ~0.9.
double circularity(const Contour& c, int resample_n = 128);

// Total polyline length divided by the bounding-box perimeter (same
// degeneracy clamp as aspect_ratio).
double path_complexity(const std::vector<Polyline2D>& polys);

} // namespace osg
