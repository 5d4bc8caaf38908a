#pragma once

#include <vector>

namespace hverify {

/// Natural cubic spline through (x_i, y_i), x strictly increasing.
class CubicSpline {
public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> x, std::vector<double> y);

    double operator()(double x) const;

private:
    std::vector<double> x_, y_, y2_;
};

/// Tensor cubic interpolant on an (r, t) grid: a natural cubic spline in t
/// per r-node, tied together by cubic Lagrange interpolation across the four
/// bracketing r-nodes at evaluation time.
class CylGridInterpolant {
public:
    CylGridInterpolant() = default;
    CylGridInterpolant(std::vector<double> r_nodes, std::vector<double> t_nodes,
                       const std::vector<std::vector<double>>& values);

    /// values clamped to the grid box; callers handle continuation outside.
    double operator()(double r, double t) const;

    const std::vector<double>& r_nodes() const { return r_; }
    const std::vector<double>& t_nodes() const { return t_; }

private:
    std::vector<double> r_, t_;
    std::vector<CubicSpline> per_r_;  // spline in t for each r-node
};

/// Chebyshev-extrema points mapped to [a, b], increasing, endpoints included.
std::vector<double> chebyshev_points(double a, double b, int n);

}  // namespace hverify
