#include "polysel/sphere.hpp"

#include <cmath>
#include <stdexcept>

namespace polysel {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double inverse_normal_cdf(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("inverse_normal_cdf: p outside (0,1)");

    // Acklam's rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5, r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // One Halley step against the exact CDF brings the error near machine eps.
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

double radical_inverse(int base, std::uint64_t index) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (index > 0) {
        r += f * static_cast<double>(index % base);
        index /= base;
        f *= inv;
    }
    return r;
}

Point halton_sphere_point(std::size_t dim, std::uint64_t index) {
    Point z(dim);
    double n2 = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        double u = radical_inverse(kPrimes[k], index);
        if (u <= 0.0) u = 0.5 / kPrimes[k];
        z[k] = inverse_normal_cdf(u);
        n2 += z[k] * z[k];
    }
    const double n = std::sqrt(n2);
    for (double& v : z) v /= n;
    return z;
}

}  // namespace

std::vector<Point> unit_directions(std::size_t dim, std::size_t count, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("unit_directions: dim must be >= 1");
    if (dim > 12) throw std::invalid_argument("unit_directions: dim too large");

    std::vector<Point> dirs;
    dirs.reserve(count);

    // Signed coordinate axes first: the canonical extreme directions, and the
    // guarantee that axis-aligned support gaps are picked up exactly.
    for (std::size_t i = 0; i < count && i < 2 * dim; ++i) {
        Point e(dim, 0.0);
        e[i / 2] = (i % 2 == 0) ? 1.0 : -1.0;
        dirs.push_back(std::move(e));
    }
    if (dirs.size() == count) return dirs;

    std::uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 0x8BADF00DULL;
    const std::uint64_t mix = splitmix64(state);

    if (dim == 1) {
        // S^0 is just {+1, -1}; keep alternating so prefixes stay nested.
        while (dirs.size() < count) dirs.push_back(Point{dirs.size() % 2 == 0 ? 1.0 : -1.0});
        return dirs;
    }

    if (dim == 2) {
        // Golden-angle rotation, phase-offset by the seed.
        const double golden = 0.6180339887498948482;
        const double phase = static_cast<double>(mix >> 11) * 0x1.0p-53;
        std::size_t i = 0;
        while (dirs.size() < count) {
            double frac = std::fmod(phase + golden * static_cast<double>(i), 1.0);
            const double theta = 2.0 * M_PI * frac;
            dirs.push_back(Point{std::cos(theta), std::sin(theta)});
            ++i;
        }
        return dirs;
    }

    const std::uint64_t offset = 1 + (mix % (1ULL << 20));
    std::uint64_t index = offset;
    while (dirs.size() < count) {
        dirs.push_back(halton_sphere_point(dim, index));
        ++index;
    }
    return dirs;
}

double direction_resolution(std::size_t dim, std::size_t count) {
    if (dim == 1) return count >= 2 ? 0.0 : 2.0;
    if (count < 2 * dim + 16) return 2.0;
    const double n = static_cast<double>(count - 2 * dim);
    double angle;
    if (dim == 2)
        angle = 8.3 / n;  // half the worst golden-angle gap
    else if (dim == 3)
        angle = 6.0 / std::sqrt(n);
    else
        angle = 6.0 * std::pow(n, -1.0 / (static_cast<double>(dim) - 1.0));
    if (angle > M_PI) return 2.0;
    return 2.0 * std::sin(std::min(angle, M_PI) / 2.0);
}

}  // namespace polysel
