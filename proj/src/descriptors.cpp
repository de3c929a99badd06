#include "osg/descriptors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "osg/error.hpp"

namespace osg {

namespace {

struct StrokePixels {
    std::vector<PixelCoord> pixels;
    double cx = 0.0; // centroid (m10/m00, m01/m00)
    double cy = 0.0;
};

StrokePixels collect_stroke(const ShapeImage& img) {
    StrokePixels s;
    double m10 = 0.0, m01 = 0.0;
    for (int y = 0; y < img.size; ++y) {
        for (int x = 0; x < img.size; ++x) {
            if (img.at(x, y)) {
                s.pixels.push_back({x, y});
                m10 += x;
                m01 += y;
            }
        }
    }
    if (s.pixels.empty())
        fail(errc::empty_image, "no stroke pixel");
    s.cx = m10 / static_cast<double>(s.pixels.size());
    s.cy = m01 / static_cast<double>(s.pixels.size());
    return s;
}

double slog(double v) {
    const double m = std::log10(std::abs(v) + 1e-30);
    return v < 0.0 ? -m : m;
}

// Factorials as doubles; exact up to 18!, far beyond the default order 8.
double factorial(int n) {
    static const auto table = [] {
        std::array<double, 64> t{};
        t[0] = 1.0;
        for (std::size_t i = 1; i < t.size(); ++i)
            t[i] = t[i - 1] * static_cast<double>(i);
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

} // namespace

double central_moments(const ShapeImage& img, int p, int q) {
    if (p < 0 || q < 0 || p + q > 3)
        fail(errc::invalid_argument, "moment order out of range");
    const StrokePixels s = collect_stroke(img);
    double mu = 0.0;
    for (const auto& px : s.pixels)
        mu += std::pow(px.x - s.cx, p) * std::pow(px.y - s.cy, q);
    return mu;
}

HuVector hu_moments(const ShapeImage& img) {
    const StrokePixels s = collect_stroke(img);

    double mu[4][4] = {};
    for (const auto& px : s.pixels) {
        const double dx = px.x - s.cx;
        const double dy = px.y - s.cy;
        const double dx2 = dx * dx, dy2 = dy * dy;
        mu[0][0] += 1.0;
        mu[1][1] += dx * dy;
        mu[2][0] += dx2;
        mu[0][2] += dy2;
        mu[3][0] += dx2 * dx;
        mu[0][3] += dy2 * dy;
        mu[2][1] += dx2 * dy;
        mu[1][2] += dx * dy2;
    }

    auto eta = [&](int p, int q) {
        return mu[p][q] / std::pow(mu[0][0], 1.0 + (p + q) / 2.0);
    };
    const double n20 = eta(2, 0), n02 = eta(0, 2), n11 = eta(1, 1);
    const double n30 = eta(3, 0), n03 = eta(0, 3), n21 = eta(2, 1), n12 = eta(1, 2);

    const double a = n30 + n12; // recurring sums
    const double b = n21 + n03;
    const double c = n30 - 3.0 * n12;
    const double d = 3.0 * n21 - n03;

    HuVector hu;
    hu.values[0] = n20 + n02;
    hu.values[1] = (n20 - n02) * (n20 - n02) + 4.0 * n11 * n11;
    hu.values[2] = c * c + d * d;
    hu.values[3] = a * a + b * b;
    hu.values[4] = c * a * (a * a - 3.0 * b * b) + d * b * (3.0 * a * a - b * b);
    hu.values[5] = (n20 - n02) * (a * a - b * b) + 4.0 * n11 * a * b;
    hu.values[6] = d * a * (a * a - 3.0 * b * b) - c * b * (3.0 * a * a - b * b);

    for (double& v : hu.values)
        v = slog(v);
    return hu;
}

double zernike_radial(int n, int m, double rho) {
    const int am = std::abs(m);
    if (n < 0 || n - am < 0 || (n - am) % 2 != 0)
        fail(errc::invalid_order, "zernike_radial requires n >= |m| with n - |m| even");
    double r = 0.0;
    for (int s = 0; s <= (n - am) / 2; ++s) {
        const double num = (s % 2 == 0 ? 1.0 : -1.0) * factorial(n - s);
        const double den = factorial(s) * factorial((n + am) / 2 - s) * factorial((n - am) / 2 - s);
        r += num / den * std::pow(rho, n - 2 * s);
    }
    return r;
}

namespace {

struct RadialTable {
    struct Pair {
        int n, m;
        std::vector<double> coeff; // coeff[j] multiplies rho^j
    };
    std::vector<Pair> pairs;
};

RadialTable build_radial_table(int n_max) {
    RadialTable t;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = n % 2; m <= n; m += 2) {
            RadialTable::Pair p{n, m, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
            for (int s = 0; s <= (n - m) / 2; ++s) {
                const double num = (s % 2 == 0 ? 1.0 : -1.0) * factorial(n - s);
                const double den =
                    factorial(s) * factorial((n + m) / 2 - s) * factorial((n - m) / 2 - s);
                p.coeff[static_cast<std::size_t>(n - 2 * s)] = num / den;
            }
            t.pairs.push_back(std::move(p));
        }
    }
    return t;
}

} // namespace

ZernikeVector zernike_moments(const ShapeImage& img, int n_max, Point2 center, double radius) {
    if (n_max < 0)
        fail(errc::invalid_argument, "n_max must be >= 0");
    const StrokePixels s = collect_stroke(img);
    const RadialTable table = build_radial_table(n_max);

    std::vector<std::complex<double>> acc(table.pairs.size(), {0.0, 0.0});
    std::vector<double> pow_rho(static_cast<std::size_t>(n_max) + 1, 1.0);
    std::vector<std::complex<double>> exp_m(static_cast<std::size_t>(n_max) + 1, {1.0, 0.0});

    for (const auto& px : s.pixels) {
        const double dx = (px.x - center.x) / radius;
        const double dy = (px.y - center.y) / radius;
        const double rho = std::hypot(dx, dy);
        if (rho > 1.0)
            continue; // outside the disk with an explicit mapping
        for (int j = 1; j <= n_max; ++j)
            pow_rho[static_cast<std::size_t>(j)] = pow_rho[static_cast<std::size_t>(j) - 1] * rho;
        const double theta = std::atan2(dy, dx);
        // conj(V_n^m) = R_n^m(rho) e^{-j m theta}
        const std::complex<double> w{std::cos(theta), -std::sin(theta)};
        for (int j = 1; j <= n_max; ++j)
            exp_m[static_cast<std::size_t>(j)] = exp_m[static_cast<std::size_t>(j) - 1] * w;
        for (std::size_t i = 0; i < table.pairs.size(); ++i) {
            const auto& pair = table.pairs[i];
            double radial = 0.0;
            for (int j = pair.m; j <= pair.n; j += 2)
                radial += pair.coeff[static_cast<std::size_t>(j)] * pow_rho[static_cast<std::size_t>(j)];
            acc[i] += radial * exp_m[static_cast<std::size_t>(pair.m)];
        }
    }

    const double pixel_area = 1.0 / (radius * radius);
    ZernikeVector out;
    out.order = n_max;
    out.magnitudes.reserve(table.pairs.size());
    for (std::size_t i = 0; i < table.pairs.size(); ++i) {
        const double scale = (table.pairs[i].n + 1) / std::numbers::pi * pixel_area;
        out.magnitudes.push_back(std::abs(acc[i]) * scale);
    }
    return out;
}

ZernikeVector zernike_moments(const ShapeImage& img, int n_max) {
    const StrokePixels s = collect_stroke(img);
    double cheb = 0.0;
    for (const auto& px : s.pixels)
        cheb = std::max({cheb, std::abs(px.x - s.cx), std::abs(px.y - s.cy)});
    // sqrt(2) * Chebyshev radius bounds the true distance of every pixel.
    const double radius = std::max(cheb, 0.5) * std::numbers::sqrt2;
    return zernike_moments(img, n_max, {s.cx, s.cy}, radius);
}

namespace {

void fft_radix2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) { // bit-reversal permutation
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl{std::cos(ang), std::sin(ang)};
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w{1.0, 0.0};
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace

std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& z) {
    const std::size_t n = z.size();
    if (n == 0)
        return {};
    if ((n & (n - 1)) == 0) {
        auto a = z;
        fft_radix2(a);
        return a;
    }
    std::vector<std::complex<double>> out(n);
    for (std::size_t u = 0; u < n; ++u) {
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            const double ang = -2.0 * std::numbers::pi * static_cast<double>(u) *
                               static_cast<double>(k) / static_cast<double>(n);
            sum += z[k] * std::complex<double>{std::cos(ang), std::sin(ang)};
        }
        out[u] = sum;
    }
    return out;
}

FourierVector fourier_descriptors(const Polyline2D& resampled_contour, int k) {
    const std::size_t n = resampled_contour.size();
    if (k < 1 || static_cast<std::size_t>(k) > n / 2)
        fail(errc::invalid_argument, "fourier count must satisfy 1 <= k <= N/2");

    std::vector<std::complex<double>> z;
    z.reserve(n);
    for (const Point2 p : resampled_contour)
        z.emplace_back(p.x, p.y);
    const auto spectrum = dft(z);

    const double z1 = std::abs(spectrum[1]);
    if (z1 < 1e-12)
        fail(errc::degenerate_contour, "|Z_1| vanishes");

    FourierVector out;
    out.magnitudes.reserve(static_cast<std::size_t>(k));
    for (int u = 1; u <= k; ++u)
        out.magnitudes.push_back(std::abs(spectrum[static_cast<std::size_t>(u)]) / z1);
    return out;
}

double descriptor_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        fail(errc::length_mismatch, "descriptor lengths differ");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

DescriptorSet compute_descriptor_set(const std::vector<Polyline2D>& polys, int raster_size,
                                     int stroke_width, const DescriptorConfig& cfg) {
    const ShapeImage img = rasterize(polys, raster_size, stroke_width);
    const Contour contour = trace_contour(img);
    const Polyline2D boundary = resample_contour(contour, cfg.contour_samples);

    DescriptorSet set;
    set.hu = hu_moments(img);
    set.zernike = zernike_moments(img, cfg.zernike_order);
    set.fourier = fourier_descriptors(boundary, cfg.fourier_count);
    set.metrics.aspect_ratio = aspect_ratio(polys);
    set.metrics.solidity = convex_solidity(contour, cfg.contour_samples);
    set.metrics.circularity = circularity(contour, cfg.contour_samples);
    set.metrics.path_complexity = path_complexity(polys);

    for (double& v : set.hu.values)
        v = quantize9(v);
    for (double& v : set.zernike.magnitudes)
        v = quantize9(v);
    for (double& v : set.fourier.magnitudes)
        v = quantize9(v);
    set.metrics.aspect_ratio = quantize9(set.metrics.aspect_ratio);
    set.metrics.solidity = quantize9(set.metrics.solidity);
    set.metrics.circularity = quantize9(set.metrics.circularity);
    set.metrics.path_complexity = quantize9(set.metrics.path_complexity);
    return set;
}

} // namespace osg
