#pragma once

#include <array>
#include <complex>
#include <vector>

#include "osg/geometry.hpp"
#include "osg/metrics.hpp"
#include "osg/shape.hpp"

namespace osg {

// Hu's 7 invariants, stored as signed log magnitudes:
// sign(h_i) * log10(|h_i| + 1e-30). Raw values span ~10 orders of magnitude,
// which would let h1 dominate any Euclidean comparison.
struct HuVector {
    std::array<double, 7> values{};
};

// |Z_n^m| for all valid (n, m) with 0 <= n <= order, m >= 0, n-|m| even,
// listed in (n ascending, m ascending) order. Magnitudes only: rotation
// shifts the phase of Z_n^m but not its modulus.
struct ZernikeVector {
    int order = 0;
    std::vector<double> magnitudes;
};

// Low-frequency DFT magnitudes of the closed boundary sequence, normalized
// by |Z_1|: entry u holds |Z_{u+1}| / |Z_1|, so the first entry is 1.
struct FourierVector {
    std::vector<double> magnitudes;
};

struct DescriptorConfig {
    int zernike_order = 8;    // 25 magnitudes
    int contour_samples = 128;
    int fourier_count = 16;
};

// Everything one shape contributes to voting.
struct DescriptorSet {
    HuVector hu;
    ZernikeVector zernike;
    FourierVector fourier;
    SecondaryMetrics metrics;
};

// mu_pq: central moment of order (p, q) over the binary image, centroid from
// raw moments. Throws EmptyImage.
double central_moments(const ShapeImage& img, int p, int q);

HuVector hu_moments(const ShapeImage& img);

// Radial polynomial R_n^m(rho). Throws InvalidOrder unless n >= 0 and
// n - |m| is even and non-negative.
double zernike_radial(int n, int m, double rho);

// Zernike moment magnitudes of the stroke, mapped onto the unit disk
// centered at the stroke centroid with radius sqrt(2) * (Chebyshev radius of
// the stroke), so every stroke pixel lands at rho <= 1.
ZernikeVector zernike_moments(const ShapeImage& img, int n_max);

// Same, with an explicit disk mapping (used to validate the discretization
// against analytic values on synthetic rasters).
ZernikeVector zernike_moments(const ShapeImage& img, int n_max, Point2 center, double radius);

// Full-spectrum DFT of the sequence: Z_u = sum_k z_k e^{-j 2 pi u k / N}.
// Radix-2 when N is a power of two, direct summation otherwise.
std::vector<std::complex<double>> dft(const std::vector<std::complex<double>>& z);

// Descriptors of a closed boundary polygon already resampled to fixed length
// (see resample_contour). Z_0 is discarded (translation); the remaining
// magnitudes are normalized by |Z_1| (scale); magnitude-only makes the result
// invariant to rotation and to the contour start point. Throws
// DegenerateContour when |Z_1| < 1e-12.
FourierVector fourier_descriptors(const Polyline2D& resampled_contour, int k);

double descriptor_distance(const std::vector<double>& a, const std::vector<double>& b);

// The one rasterization + feature path shared by gesture definition and
// recognition. All emitted values are quantized to the 9-significant-digit
// serialization precision, so cached and recomputed descriptors compare
// bit-identically.
DescriptorSet compute_descriptor_set(const std::vector<Polyline2D>& polys, int raster_size,
                                     int stroke_width, const DescriptorConfig& cfg = {});

} // namespace osg
