#pragma once

#include <cstdint>
#include <vector>

#include "polysel/vec.hpp"

namespace polysel {

/* A compact convex body in V-representation: the convex hull of a finite
 * vertex list.  When reduced() holds, the list equals its own extreme-point
 * set (no vertex lies in the hull of the others; LP-certified by
 * extreme_points). */
class Polytope {
public:
    explicit Polytope(std::vector<Point> vertices, bool reduced = false);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    std::size_t dim() const { return vertices_.front().size(); }
    bool reduced() const { return reduced_; }

private:
    std::vector<Point> vertices_;
    bool reduced_;
};

/* Support value max_v <f, v>. */
double support(const Polytope& p, const Direction& f);

/* Irredundant vertex set of the hull of the given points: exact duplicates
 * dropped, then every point inside the hull of the rest removed, each
 * removal certified by a feasibility LP. */
Polytope extreme_points(const std::vector<Point>& points);

/* Vertices v with <f0, v> > support - gamma; the strict inequality carries
 * a 1e-12 slack so the maximizing face never drops out. */
std::vector<Point> slice(const Polytope& p, const Direction& f0, double gamma);

struct Projection {
    Point point;      // Euclidean projection onto the hull
    double distance;  // ||x - point||
    double gap;       // residual optimality gap of the min-norm solve
};

/* Nearest point of conv(vertices) to x, via Wolfe's min-norm-point method
 * over the vertex set.  Terminates with gap <= 1e-12 * max(1, scale). */
Projection nearest_point(const Polytope& p, const Point& x);

/* Index of the vertex closest to x (lowest index on ties). */
std::size_t nearest_vertex_index(const Polytope& p, const Point& x);

double directed_hausdorff(const Polytope& a, const Polytope& b);
double hausdorff(const Polytope& a, const Polytope& b);

/* Max of |c(f,A) - c(f,B)| over a deterministic quasi-uniform direction
 * sample; a lower bound of the Hausdorff distance that converges to it. */
double support_gap_sampled(const Polytope& a, const Polytope& b, std::size_t n_dirs,
                           std::uint64_t seed = 0);

bool contains(const Polytope& p, const Point& x, double tol);

/* Max pairwise vertex distance. */
double diameter(const Polytope& p);

}  // namespace polysel
