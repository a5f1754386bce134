#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace polysel {

/* Points and functionals live in R^d; a point is a plain coordinate vector. */
using Point = std::vector<double>;

inline bool is_finite(const Point& p) {
    for (double v : p)
        if (!std::isfinite(v)) return false;
    return true;
}

inline void check_point(const Point& p, const char* what) {
    if (p.empty()) throw std::invalid_argument(std::string(what) + ": dimension must be >= 1");
    if (!is_finite(p)) throw std::invalid_argument(std::string(what) + ": non-finite coordinate");
}

inline double dot(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Point& a) {
    double s = 0.0;
    for (double v : a) s += v * v;
    return std::sqrt(s);
}

inline Point sub(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point add(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point scaled(const Point& a, double s) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline double distance(const Point& a, const Point& b) { return norm(sub(a, b)); }

inline bool lex_less(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return a.size() < b.size();
}

/* A unit-norm linear functional on R^d, represented through the Euclidean
 * inner product.  Normalized on construction. */
class Direction {
public:
    explicit Direction(Point coords) : coords_(std::move(coords)) {
        check_point(coords_, "Direction");
        const double n = norm(coords_);
        if (n < 1e-14) throw std::invalid_argument("Direction: zero vector");
        for (double& v : coords_) v /= n;
    }

    const Point& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }

    double operator()(const Point& x) const { return dot(coords_, x); }

private:
    Point coords_;
};

}  // namespace polysel
