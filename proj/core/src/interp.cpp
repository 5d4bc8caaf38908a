#include "hverify/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hverify {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n < 3 || y_.size() != n)
        throw std::invalid_argument("CubicSpline: need >= 3 matching nodes");
    for (std::size_t i = 1; i < n; ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("CubicSpline: nodes must increase");
    // natural boundary conditions, tridiagonal sweep
    y2_.assign(n, 0.0);
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double sig = (x_[i] - x_[i - 1]) / (x_[i + 1] - x_[i - 1]);
        const double p = sig * y2_[i - 1] + 2.0;
        y2_[i] = (sig - 1.0) / p;
        u[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]) -
               (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
        u[i] = (6.0 * u[i] / (x_[i + 1] - x_[i - 1]) - sig * u[i - 1]) / p;
    }
    for (std::size_t k = n - 1; k-- > 0;) y2_[k] = y2_[k] * y2_[k + 1] + u[k];
}

double CubicSpline::operator()(double x) const {
    const std::size_t n = x_.size();
    x = std::clamp(x, x_.front(), x_.back());
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t hi = std::min<std::size_t>(
        std::max<std::size_t>(1, static_cast<std::size_t>(it - x_.begin())), n - 1);
    const std::size_t lo = hi - 1;
    const double hgap = x_[hi] - x_[lo];
    const double a = (x_[hi] - x) / hgap;
    const double b = (x - x_[lo]) / hgap;
    return a * y_[lo] + b * y_[hi] +
           ((a * a * a - a) * y2_[lo] + (b * b * b - b) * y2_[hi]) * hgap * hgap / 6.0;
}

CylGridInterpolant::CylGridInterpolant(std::vector<double> r_nodes,
                                       std::vector<double> t_nodes,
                                       const std::vector<std::vector<double>>& values)
    : r_(std::move(r_nodes)), t_(std::move(t_nodes)) {
    if (values.size() != r_.size())
        throw std::invalid_argument("CylGridInterpolant: row count mismatch");
    if (r_.size() < 4)
        throw std::invalid_argument("CylGridInterpolant: need >= 4 r-nodes");
    per_r_.reserve(r_.size());
    for (const auto& row : values) per_r_.emplace_back(t_, row);
}

double CylGridInterpolant::operator()(double r, double t) const {
    // cubic Lagrange across the four r-nodes bracketing r; each ordinate
    // comes from the precomputed t-spline of that node
    const std::size_t n = r_.size();
    r = std::clamp(r, r_.front(), r_.back());
    auto it = std::upper_bound(r_.begin(), r_.end(), r);
    std::size_t hi = std::min<std::size_t>(
        std::max<std::size_t>(1, static_cast<std::size_t>(it - r_.begin())), n - 1);
    std::size_t i0 = hi >= 2 ? hi - 2 : 0;
    if (i0 + 3 >= n) i0 = n - 4;
    double acc = 0.0;
    for (std::size_t a = 0; a < 4; ++a) {
        double lag = 1.0;
        for (std::size_t b = 0; b < 4; ++b) {
            if (a == b) continue;
            lag *= (r - r_[i0 + b]) / (r_[i0 + a] - r_[i0 + b]);
        }
        acc += lag * per_r_[i0 + a](t);
    }
    return acc;
}

std::vector<double> chebyshev_points(double a, double b, int n) {
    if (n < 2) throw std::invalid_argument("chebyshev_points: need n >= 2");
    std::vector<double> pts(n);
    for (int k = 0; k < n; ++k) {
        const double c = std::cos(3.14159265358979323846 * k / (n - 1));
        pts[n - 1 - k] = 0.5 * (a + b) + 0.5 * (b - a) * c;
    }
    pts.front() = a;
    pts.back() = b;
    return pts;
}

}  // namespace hverify
