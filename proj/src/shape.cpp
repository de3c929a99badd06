#include "osg/shape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>

#include "osg/error.hpp"

namespace osg {

std::size_t ShapeImage::stroke_count() const {
    return static_cast<std::size_t>(std::count(pixels.begin(), pixels.end(), 1));
}

Polyline2D Contour::as_polyline() const {
    Polyline2D poly;
    poly.reserve(points.size());
    for (const auto& p : points)
        poly.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
    return poly;
}

namespace {

void stamp(ShapeImage& img, int x, int y, int w) {
    const int lo = -(w - 1) / 2;
    const int hi = w / 2;
    for (int dy = lo; dy <= hi; ++dy) {
        for (int dx = lo; dx <= hi; ++dx) {
            const int px = x + dx;
            const int py = y + dy;
            if (px >= 0 && px < img.size && py >= 0 && py < img.size)
                img.set(px, py);
        }
    }
}

void draw_line(ShapeImage& img, int x0, int y0, int x1, int y1, int w) {
    // Bresenham, all octants.
    const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        stamp(img, x0, y0, w);
        if (x0 == x1 && y0 == y1)
            break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

} // namespace

ShapeImage rasterize(const std::vector<Polyline2D>& polys, int size, int stroke_width) {
    if (size < 32)
        fail(errc::invalid_argument, "raster size must be >= 32");
    if (stroke_width < 1)
        fail(errc::invalid_argument, "stroke width must be >= 1");

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

    const double side = std::max(xmax - xmin, ymax - ymin); // bounding square
    const double scale = 0.8 * size / side;
    const double cx = 0.5 * (xmin + xmax);
    const double cy = 0.5 * (ymin + ymax);
    const double half = size / 2.0;
    auto to_px = [&](Point2 p) {
        const int x = static_cast<int>(std::llround((p.x - cx) * scale + half));
        const int y = static_cast<int>(std::llround((p.y - cy) * scale + half));
        return PixelCoord{std::clamp(x, 0, size - 1), std::clamp(y, 0, size - 1)};
    };

    ShapeImage img;
    img.size = size;
    img.stroke_width = stroke_width;
    img.pixels.assign(static_cast<std::size_t>(size) * size, 0);
    for (const auto& poly : polys) {
        if (poly.size() == 1) {
            const PixelCoord p = to_px(poly[0]);
            stamp(img, p.x, p.y, stroke_width);
            continue;
        }
        for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
            const PixelCoord a = to_px(poly[i]);
            const PixelCoord b = to_px(poly[i + 1]);
            draw_line(img, a.x, a.y, b.x, b.y, stroke_width);
        }
    }
    return img;
}

namespace {

// Clockwise Moore neighborhood in y-down coordinates, starting west.
constexpr std::array<std::array<int, 2>, 8> kMoore = {{
    {-1, 0}, {-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1},
}};

std::vector<std::uint8_t> largest_component_mask(const ShapeImage& img, PixelCoord& start_out) {
    const int s = img.size;
    std::vector<int> label(static_cast<std::size_t>(s) * s, -1);
    int best_label = -1;
    std::size_t best_count = 0;
    int next = 0;
    for (int y = 0; y < s; ++y) {
        for (int x = 0; x < s; ++x) {
            if (!img.at(x, y) || label[static_cast<std::size_t>(y) * s + x] >= 0)
                continue;
            const int id = next++;
            std::size_t count = 0;
            std::queue<PixelCoord> q;
            q.push({x, y});
            label[static_cast<std::size_t>(y) * s + x] = id;
            while (!q.empty()) {
                const PixelCoord p = q.front();
                q.pop();
                ++count;
                for (const auto& d : kMoore) {
                    const int nx = p.x + d[0], ny = p.y + d[1];
                    if (nx < 0 || nx >= s || ny < 0 || ny >= s)
                        continue;
                    auto& l = label[static_cast<std::size_t>(ny) * s + nx];
                    if (img.at(nx, ny) && l < 0) {
                        l = id;
                        q.push({nx, ny});
                    }
                }
            }
            if (count > best_count) { // first-found wins ties (row-major scan)
                best_count = count;
                best_label = id;
            }
        }
    }

    std::vector<std::uint8_t> mask(static_cast<std::size_t>(s) * s, 0);
    bool found = false;
    start_out = {0, 0};
    for (int y = 0; y < s; ++y) {
        for (int x = 0; x < s; ++x) {
            if (label[static_cast<std::size_t>(y) * s + x] == best_label) {
                mask[static_cast<std::size_t>(y) * s + x] = 1;
                if (!found) {
                    start_out = {x, y}; // topmost, then leftmost
                    found = true;
                }
            }
        }
    }
    return mask;
}

} // namespace

namespace {

int moore_index(int dx, int dy) {
    for (int i = 0; i < 8; ++i)
        if (kMoore[i][0] == dx && kMoore[i][1] == dy)
            return i;
    return -1;
}

} // namespace

Contour trace_contour(const ShapeImage& img) {
    if (img.stroke_count() == 0)
        fail(errc::empty_image, "no stroke pixel");

    PixelCoord start;
    const auto mask = largest_component_mask(img, start);
    const int s = img.size;
    auto on = [&](int x, int y) {
        return x >= 0 && x < s && y >= 0 && y < s &&
               mask[static_cast<std::size_t>(y) * s + x] != 0;
    };

    Contour contour;
    contour.points.push_back(start);

    // `enter` points at the backtrack pixel (always background): initially the
    // west neighbor, which is empty because start is topmost-then-leftmost.
    PixelCoord cur = start;
    int enter = 0;
    int first_dir = -1;
    bool moved = false;
    for (;;) {
        int d = -1;
        for (int i = 0; i < 8; ++i) {
            const int dir = (enter + i) % 8;
            if (on(cur.x + kMoore[dir][0], cur.y + kMoore[dir][1])) {
                d = dir;
                break;
            }
        }
        if (d < 0)
            break; // isolated pixel: contour of length 1
        if (!moved) {
            first_dir = d;
        } else if (cur == start && d == first_dir) {
            // Jacob's criterion: about to leave the start pixel along the
            // same direction as the very first move.
            break;
        }
        const int back = (d + 7) % 8; // neighbor scanned just before d
        const PixelCoord bt{cur.x + kMoore[back][0], cur.y + kMoore[back][1]};
        cur = {cur.x + kMoore[d][0], cur.y + kMoore[d][1]};
        enter = moore_index(bt.x - cur.x, bt.y - cur.y);
        contour.points.push_back(cur);
        moved = true;
    }

    // The last arrival at start closes the loop; point[0] already holds it.
    if (contour.points.size() > 1 && contour.points.back() == start)
        contour.points.pop_back();
    return contour;
}

Polyline2D resample_contour(const Contour& c, int n) {
    if (n < 8)
        fail(errc::invalid_argument, "resample count must be >= 8");
    if (c.points.empty())
        fail(errc::invalid_argument, "empty contour");

    const Polyline2D poly = c.as_polyline();
    const std::size_t m = poly.size();
    if (m == 1)
        return Polyline2D(static_cast<std::size_t>(n), poly[0]);

    // Deterministic start: contour point nearest the image origin.
    std::size_t start = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const double d = poly[i].x * poly[i].x + poly[i].y * poly[i].y;
        if (d < best) {
            best = d;
            start = i;
        }
    }

    std::vector<double> cum(m + 1, 0.0); // cumulative length around the closed loop
    for (std::size_t i = 0; i < m; ++i) {
        const Point2 a = poly[(start + i) % m];
        const Point2 b = poly[(start + i + 1) % m];
        cum[i + 1] = cum[i] + dist(a, b);
    }
    const double total = cum[m];
    if (total == 0.0)
        return Polyline2D(static_cast<std::size_t>(n), poly[start]);

    Polyline2D out;
    out.reserve(static_cast<std::size_t>(n));
    std::size_t seg = 0;
    for (int k = 0; k < n; ++k) {
        const double target = total * k / n;
        while (seg + 1 < m && cum[seg + 1] < target)
            ++seg;
        const Point2 a = poly[(start + seg) % m];
        const Point2 b = poly[(start + seg + 1) % m];
        const double len = cum[seg + 1] - cum[seg];
        const double t = len > 0.0 ? (target - cum[seg]) / len : 0.0;
        out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
    return out;
}

std::string encode_pbm(const ShapeImage& img) {
    std::string out = "P4\n" + std::to_string(img.size) + " " + std::to_string(img.size) + "\n";
    const int bytes_per_row = (img.size + 7) / 8;
    for (int y = 0; y < img.size; ++y) {
        for (int b = 0; b < bytes_per_row; ++b) {
            std::uint8_t byte = 0;
            for (int bit = 0; bit < 8; ++bit) {
                const int x = b * 8 + bit;
                if (x < img.size && img.at(x, y))
                    byte |= static_cast<std::uint8_t>(0x80 >> bit);
            }
            out.push_back(static_cast<char>(byte));
        }
    }
    return out;
}

std::string encode_pgm(const ShapeImage& img) {
    std::string out = "P2\n" + std::to_string(img.size) + " " + std::to_string(img.size) + "\n255\n";
    for (int y = 0; y < img.size; ++y) {
        for (int x = 0; x < img.size; ++x) {
            out += img.at(x, y) ? "255" : "0";
            out.push_back(x + 1 == img.size ? '\n' : ' ');
        }
    }
    return out;
}

} // namespace osg
