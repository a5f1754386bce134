#pragma once

#include <vector>

namespace polysel::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status;
    std::vector<double> x;  // primal solution (size n) when optimal
    double objective = 0.0;
};

/* Solves  min c.x  subject to  A x = b, x >= 0  with a dense two-phase
 * simplex.  A is row-major m x n.  Bland's rule throughout, so the method
 * terminates on degenerate problems.  Sized for small instances (tens of
 * rows, low hundreds of columns). */
Result solve(std::size_t m, std::size_t n, std::vector<double> A, std::vector<double> b,
             std::vector<double> c, double feas_tol = 1e-9, double opt_tol = 1e-9);

/* Feasibility of  A x = b, x >= 0  (phase one only). */
bool feasible(std::size_t m, std::size_t n, std::vector<double> A, std::vector<double> b,
              double feas_tol = 1e-9);

}  // namespace polysel::lp
