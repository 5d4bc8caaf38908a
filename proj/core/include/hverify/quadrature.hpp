#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

namespace hverify {

/// Compensated accumulator (Kahan-Babuska); deterministic in a fixed
/// summation order.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1] (Golub-Welsch).
const QuadratureRule& gauss_legendre(int n);

/// Gauss rule for int_0^1 x^gamma f(x) dx, gamma > -1 (Gauss-Jacobi with
/// the weight absorbed). nodes in (0,1), weights include the x^gamma factor.
QuadratureRule gauss_jacobi01(int n, double gamma);

/// int_a^b f(x) dx by an n-point Gauss-Legendre rule mapped to [a, b].
double gl_integrate(const std::function<double(double)>& f, double a, double b, int n);

/// Panel edges for [a, b] refined geometrically toward `a` until the first
/// panel is <= first_width, then growing by `ratio`.
std::vector<double> geometric_panels(double a, double b, double first_width,
                                     double ratio = 2.0);

}  // namespace hverify
