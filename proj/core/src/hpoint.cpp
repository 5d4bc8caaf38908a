#include "hverify/hpoint.hpp"

#include <cmath>
#include <stdexcept>

namespace hverify {

namespace {

void require_same_n(const HPoint& a, const HPoint& b, const char* op) {
    if (a.n() != b.n())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

HPoint::HPoint(std::vector<double> xs, std::vector<double> ys, double tv)
    : x(std::move(xs)), y(std::move(ys)), t(tv) {
    if (x.size() != y.size())
        throw std::invalid_argument("HPoint: x/y length mismatch");
    if (x.empty())
        throw std::invalid_argument("HPoint: n must be >= 1");
}

HPoint HPoint::origin(std::size_t n) {
    return HPoint(std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0);
}

bool HPoint::finite() const {
    if (!std::isfinite(t)) return false;
    for (std::size_t j = 0; j < n(); ++j)
        if (!std::isfinite(x[j]) || !std::isfinite(y[j])) return false;
    return true;
}

GroupContext::GroupContext(std::size_t dim) : n(dim), Q(2 * static_cast<int>(dim) + 2) {
    if (dim == 0) throw std::invalid_argument("GroupContext: n must be >= 1");
}

HPoint multiply(const HPoint& a, const HPoint& b) {
    require_same_n(a, b, "multiply");
    HPoint r = a;
    // 2 Im<z_a, z_b> with <z,p> = sum z_j conj(p_j):
    // Im(z_j conj(p_j)) = y_a x_b - x_a y_b componentwise.
    double twist = 0.0;
    for (std::size_t j = 0; j < a.n(); ++j) {
        r.x[j] = a.x[j] + b.x[j];
        r.y[j] = a.y[j] + b.y[j];
        twist += a.y[j] * b.x[j] - a.x[j] * b.y[j];
    }
    r.t = a.t + b.t + 2.0 * twist;
    return r;
}

HPoint inverse(const HPoint& a) {
    HPoint r = a;
    for (std::size_t j = 0; j < a.n(); ++j) {
        r.x[j] = -a.x[j];
        r.y[j] = -a.y[j];
    }
    r.t = -a.t;
    return r;
}

double gauge_norm(const HPoint& a) {
    double z2 = 0.0;
    for (std::size_t j = 0; j < a.n(); ++j) z2 += a.x[j] * a.x[j] + a.y[j] * a.y[j];
    // (|z|^4 + t^2)^{1/4} = sqrt(hypot(|z|^2, t)), overflow-safe.
    return std::sqrt(std::hypot(z2, a.t));
}

double distance(const HPoint& a, const HPoint& b) {
    require_same_n(a, b, "distance");
    return gauge_norm(multiply(inverse(a), b));
}

HPoint dilate(double s, const HPoint& a) {
    HPoint r = a;
    for (std::size_t j = 0; j < a.n(); ++j) {
        r.x[j] = s * a.x[j];
        r.y[j] = s * a.y[j];
    }
    r.t = s * s * a.t;
    return r;
}

HPoint rotate(const std::vector<double>& theta, const HPoint& a) {
    if (theta.size() != a.n())
        throw std::invalid_argument("rotate: theta length mismatch");
    HPoint r = a;
    for (std::size_t j = 0; j < a.n(); ++j) {
        const double c = std::cos(theta[j]), s = std::sin(theta[j]);
        r.x[j] = c * a.x[j] - s * a.y[j];
        r.y[j] = s * a.x[j] + c * a.y[j];
    }
    return r;
}

HPoint rotate(double theta, const HPoint& a) {
    return rotate(std::vector<double>(a.n(), theta), a);
}

HPoint h_reflect(double lambda, const std::vector<double>& theta, const HPoint& a) {
    if (theta.size() != a.n())
        throw std::invalid_argument("h_reflect: theta length mismatch");
    HPoint r = a;
    for (std::size_t j = 0; j < a.n(); ++j) {
        // e^{i theta_j} * conj(z_j)
        const double c = std::cos(theta[j]), s = std::sin(theta[j]);
        r.x[j] = c * a.x[j] + s * a.y[j];
        r.y[j] = s * a.x[j] - c * a.y[j];
    }
    r.t = 2.0 * lambda - a.t;
    return r;
}

HPoint h_reflect(double lambda, double theta, const HPoint& a) {
    return h_reflect(lambda, std::vector<double>(a.n(), theta), a);
}

HPoint reflect_about_horizontal_plane(const HPoint& xi0, const HPoint& a) {
    require_same_n(xi0, a, "reflect_about_horizontal_plane");
    const std::vector<double> theta0(a.n(), 0.0);
    return multiply(xi0, h_reflect(0.0, theta0, multiply(inverse(xi0), a)));
}

HPoint cr_invert_point(const HPoint& a) {
    const double rho = gauge_norm(a);
    if (rho < 1e-150)
        throw std::domain_error("cr_invert_point: singular at the origin");
    double z2 = 0.0;
    for (std::size_t j = 0; j < a.n(); ++j) z2 += a.x[j] * a.x[j] + a.y[j] * a.y[j];
    // w = t + i|z|^2, |w|^2 = t^2 + |z|^4 = rho^4; z/w = z conj(w)/|w|^2.
    const double w2 = a.t * a.t + z2 * z2;
    HPoint r = a;
    for (std::size_t j = 0; j < a.n(); ++j) {
        // (x + iy)(t - i z2) / w2
        r.x[j] = (a.x[j] * a.t + a.y[j] * z2) / w2;
        r.y[j] = (a.y[j] * a.t - a.x[j] * z2) / w2;
    }
    r.t = -a.t / w2;
    return r;
}

}  // namespace hverify
