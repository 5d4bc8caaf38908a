#include "hverify/fd.hpp"

#include <cmath>
#include <stdexcept>

namespace hverify {

namespace {

double sublap_stencil(const AmbientFunc& u, double x, double y, double t, double h) {
    const double h2 = h * h;
    const double c = u(x, y, t);
    const double uxx = (u(x + h, y, t) - 2.0 * c + u(x - h, y, t)) / h2;
    const double uyy = (u(x, y + h, t) - 2.0 * c + u(x, y - h, t)) / h2;
    const double utt = (u(x, y, t + h) - 2.0 * c + u(x, y, t - h)) / h2;
    const double uxt = (u(x + h, y, t + h) - u(x + h, y, t - h) -
                        u(x - h, y, t + h) + u(x - h, y, t - h)) /
                       (4.0 * h2);
    const double uyt = (u(x, y + h, t + h) - u(x, y + h, t - h) -
                        u(x, y - h, t + h) + u(x, y - h, t - h)) /
                       (4.0 * h2);
    const double v =
        uxx + uyy + 4.0 * (x * x + y * y) * utt + 4.0 * y * uxt - 4.0 * x * uyt;
    if (!std::isfinite(v))
        throw std::runtime_error("fd_sublaplacian: non-finite stencil sample");
    return v;
}

double grushin_stencil(const GrushinFunc& u, double x1, double x2, double yv,
                       double s_gr, double h) {
    const double h2 = h * h;
    const double c = u(x1, x2, yv);
    const double u11 = (u(x1 + h, x2, yv) - 2.0 * c + u(x1 - h, x2, yv)) / h2;
    const double u22 = (u(x1, x2 + h, yv) - 2.0 * c + u(x1, x2 - h, yv)) / h2;
    const double uyy = (u(x1, x2, yv + h) - 2.0 * c + u(x1, x2, yv - h)) / h2;
    const double x2norm = x1 * x1 + x2 * x2;
    const double coef = (s_gr + 1.0) * (s_gr + 1.0) * std::pow(x2norm, s_gr);
    const double v = u11 + u22 + coef * uyy;
    if (!std::isfinite(v))
        throw std::runtime_error("grushin_apply: non-finite stencil sample");
    return v;
}

}  // namespace

void FDConfig::validate() const {
    if (!(h > 0.0) || h > 0.1)
        throw std::invalid_argument("FDConfig: h must lie in (0, 0.1]");
}

AmbientFunc ambient_from_cyl(const CylFunc& f) {
    auto base = f.eval;
    return [base](double x, double y, double t) {
        return base(std::hypot(x, y), t);
    };
}

double fd_sublaplacian(const AmbientFunc& u, const HPoint& xi, const FDConfig& fd) {
    fd.validate();
    if (xi.n() != 1)
        throw std::invalid_argument("fd_sublaplacian: only n = 1 supported");
    const double x = xi.x[0], y = xi.y[0], t = xi.t;
    const double a = sublap_stencil(u, x, y, t, fd.h);
    if (!fd.richardson) return a;
    const double b = sublap_stencil(u, x, y, t, 0.5 * fd.h);
    return (4.0 * b - a) / 3.0;
}

double grushin_apply(const GrushinFunc& u, const std::vector<double>& x,
                     const std::vector<double>& y, double s_gr, const FDConfig& fd) {
    fd.validate();
    if (x.size() != 2 || y.size() != 1)
        throw std::invalid_argument("grushin_apply: implemented for m = 2, k = 1");
    if (!(s_gr > 0.0)) throw std::invalid_argument("grushin_apply: s must be > 0");
    const double a = grushin_stencil(u, x[0], x[1], y[0], s_gr, fd.h);
    if (!fd.richardson) return a;
    const double b = grushin_stencil(u, x[0], x[1], y[0], s_gr, 0.5 * fd.h);
    return (4.0 * b - a) / 3.0;
}

}  // namespace hverify
