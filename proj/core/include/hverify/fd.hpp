#pragma once

#include <functional>
#include <vector>

#include "hverify/cylfunc.hpp"
#include "hverify/hpoint.hpp"

namespace hverify {

struct FDConfig {
    double h = 1e-3;
    bool richardson = true;

    void validate() const;
};

/// Function on ambient coordinates (x, y, t), n = 1.
using AmbientFunc = std::function<double(double, double, double)>;

/// View a cylindrical handle as an ambient function u(x,y,t) = f(|z|, t).
AmbientFunc ambient_from_cyl(const CylFunc& f);

/// Central-difference sub-Laplacian, n = 1 expansion of sum X^2 + Y^2:
///   u_xx + u_yy + 4(x^2+y^2) u_tt + 4y u_xt - 4x u_yt,
/// Richardson-extrapolated to O(h^4) when fd.richardson is set.
double fd_sublaplacian(const AmbientFunc& u, const HPoint& xi, const FDConfig& fd);

/// Function on Grushin coordinates (x1, x2, y), m = 2, k = 1.
using GrushinFunc = std::function<double(double, double, double)>;

/// Central-difference Grushin operator
///   Delta_x u + (s+1)^2 |x|^{2s} Delta_y u,   m = 2, k = 1.
double grushin_apply(const GrushinFunc& u, const std::vector<double>& x,
                     const std::vector<double>& y, double s_gr, const FDConfig& fd);

}  // namespace hverify
