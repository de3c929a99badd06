#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "osg/geometry.hpp"

namespace osg {

// Square binary raster of a plotted gesture. Pixels are row-major, 1 = stroke.
struct ShapeImage {
    int size = 0;
    int stroke_width = 0;
    std::vector<std::uint8_t> pixels;

    bool at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * size + x] != 0; }
    void set(int x, int y) { pixels[static_cast<std::size_t>(y) * size + x] = 1; }
    std::size_t stroke_count() const;
};

struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord&) const = default;
};

// Closed outer boundary of the largest 8-connected stroke component, in
// tracing order. point[0] conceptually follows point[last].
struct Contour {
    std::vector<PixelCoord> points;

    Polyline2D as_polyline() const;
};

// Draws the polylines into a size x size raster. The bounding square of all
// points is fitted to the central 80% of the image (aspect preserved, 10%
// margin per side); segments are Bresenham lines dilated to stroke_width.
// Throws DegenerateShape when the polylines hold fewer than 2 distinct points.
ShapeImage rasterize(const std::vector<Polyline2D>& polys, int size, int stroke_width);

// Moore-neighbor boundary tracing (Jacob's stopping criterion) of the largest
// 8-connected stroke component. Throws EmptyImage when no pixel is set.
Contour trace_contour(const ShapeImage& img);

// Arc-length uniform resampling of the closed boundary polygon to exactly n
// points, starting from the contour point nearest the image origin.
Polyline2D resample_contour(const Contour& c, int n);

// P4 (binary, packed bits, stroke=1) and P2 (plain, maxval 255, stroke=255)
// portable anymap encodings of the raster.
std::string encode_pbm(const ShapeImage& img);
std::string encode_pgm(const ShapeImage& img);

} // namespace osg
