#include "polysel/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polysel::lp {

namespace {

constexpr double kPivotTol = 1e-11;

struct Tableau {
    std::size_t m, n;              // rows, structural columns
    std::vector<double> t;         // m x (n + m), artificials appended
    std::vector<double> rhs;       // m
    std::vector<std::size_t> basis;  // column id per row

    double& at(std::size_t i, std::size_t j) { return t[i * (n + m) + j]; }
    double at(std::size_t i, std::size_t j) const { return t[i * (n + m) + j]; }

    void pivot(std::size_t r, std::size_t e) {
        const std::size_t w = n + m;
        const double piv = at(r, e);
        for (std::size_t j = 0; j < w; ++j) at(r, j) /= piv;
        rhs[r] /= piv;
        at(r, e) = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r) continue;
            const double f = at(i, e);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < w; ++j) at(i, j) -= f * at(r, j);
            rhs[i] -= f * rhs[r];
            at(i, e) = 0.0;
        }
        basis[r] = e;
    }
};

// Reduced costs are recomputed from the cost vector each iteration; the
// tableaus here are tiny so the O(mn) recompute keeps drift down.
bool price_and_pivot(Tableau& tb, const std::vector<double>& cost, std::size_t limit_cols,
                     double opt_tol, bool& unbounded) {
    unbounded = false;
    std::vector<double> cb(tb.m);
    for (std::size_t i = 0; i < tb.m; ++i) cb[i] = cost[tb.basis[i]];

    std::size_t enter = limit_cols;
    for (std::size_t j = 0; j < limit_cols; ++j) {
        double r = cost[j];
        for (std::size_t i = 0; i < tb.m; ++i) r -= cb[i] * tb.at(i, j);
        if (r < -opt_tol) { enter = j; break; }  // Bland: lowest index
    }
    if (enter == limit_cols) return false;  // optimal

    std::size_t leave = tb.m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < tb.m; ++i) {
        const double a = tb.at(i, enter);
        if (a > kPivotTol) {
            const double ratio = tb.rhs[i] / a;
            if (ratio < best - 1e-15 ||
                (ratio < best + 1e-15 && (leave == tb.m || tb.basis[i] < tb.basis[leave]))) {
                best = ratio;
                leave = i;
            }
        }
    }
    if (leave == tb.m) { unbounded = true; return false; }
    tb.pivot(leave, enter);
    return true;
}

// Runs phase one; returns false when the artificial objective stays positive.
bool phase_one(Tableau& tb, double feas_tol) {
    std::vector<double> cost(tb.n + tb.m, 0.0);
    for (std::size_t j = tb.n; j < tb.n + tb.m; ++j) cost[j] = 1.0;

    bool unbounded = false;
    std::size_t guard = 0;
    const std::size_t max_iter = 200 * (tb.n + tb.m) + 2000;
    while (price_and_pivot(tb, cost, tb.n + tb.m, 1e-10, unbounded)) {
        if (++guard > max_iter) throw std::runtime_error("lp: phase-one iteration cap");
    }

    double art = 0.0;
    for (std::size_t i = 0; i < tb.m; ++i)
        if (tb.basis[i] >= tb.n) art += tb.rhs[i];
    if (art > feas_tol) return false;

    // Drive remaining artificials out of the basis where possible.
    for (std::size_t i = 0; i < tb.m; ++i) {
        if (tb.basis[i] < tb.n) continue;
        std::size_t e = tb.n;
        for (std::size_t j = 0; j < tb.n; ++j)
            if (std::abs(tb.at(i, j)) > 1e-9) { e = j; break; }
        if (e < tb.n) tb.pivot(i, e);
        // else: redundant row; the artificial stays basic at level ~0.
    }
    return true;
}

}  // namespace

Result solve(std::size_t m, std::size_t n, std::vector<double> A, std::vector<double> b,
             std::vector<double> c, double feas_tol, double opt_tol) {
    if (A.size() != m * n || b.size() != m || c.size() != n)
        throw std::invalid_argument("lp::solve: inconsistent dimensions");

    Tableau tb;
    tb.m = m;
    tb.n = n;
    tb.t.assign(m * (n + m), 0.0);
    tb.rhs.resize(m);
    tb.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = (b[i] < 0.0) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tb.at(i, j) = sign * A[i * n + j];
        tb.rhs[i] = sign * b[i];
        tb.at(i, n + i) = 1.0;
        tb.basis[i] = n + i;
    }

    Result res;
    if (!phase_one(tb, feas_tol)) {
        res.status = Status::infeasible;
        return res;
    }

    std::vector<double> cost(n + m, 0.0);
    for (std::size_t j = 0; j < n; ++j) cost[j] = c[j];
    for (std::size_t j = n; j < n + m; ++j) cost[j] = 0.0;

    bool unbounded = false;
    std::size_t guard = 0;
    const std::size_t max_iter = 200 * (n + m) + 2000;
    while (price_and_pivot(tb, cost, n, opt_tol, unbounded)) {
        if (++guard > max_iter) throw std::runtime_error("lp: phase-two iteration cap");
    }
    if (unbounded) {
        res.status = Status::unbounded;
        return res;
    }

    res.status = Status::optimal;
    res.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (tb.basis[i] < n) res.x[tb.basis[i]] = std::max(0.0, tb.rhs[i]);
    res.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
    return res;
}

bool feasible(std::size_t m, std::size_t n, std::vector<double> A, std::vector<double> b,
              double feas_tol) {
    if (A.size() != m * n || b.size() != m)
        throw std::invalid_argument("lp::feasible: inconsistent dimensions");

    Tableau tb;
    tb.m = m;
    tb.n = n;
    tb.t.assign(m * (n + m), 0.0);
    tb.rhs.resize(m);
    tb.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = (b[i] < 0.0) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) tb.at(i, j) = sign * A[i * n + j];
        tb.rhs[i] = sign * b[i];
        tb.at(i, n + i) = 1.0;
        tb.basis[i] = n + i;
    }
    return phase_one(tb, feas_tol);
}

}  // namespace polysel::lp
