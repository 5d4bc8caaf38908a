#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hverify {

/// A point (z, t) in the Heisenberg group H^n = C^n x R.
///
/// Coordinates are stored as real triples (x-vector, y-vector, t); the
/// complex view z_j = x_j + i*y_j is a presentation layer on top.
struct HPoint {
    std::vector<double> x;
    std::vector<double> y;
    double t = 0.0;

    HPoint() = default;
    HPoint(std::vector<double> xs, std::vector<double> ys, double tv);

    /// n = 1 convenience: (z, t) with z = zx + i*zy.
    HPoint(double zx, double zy, double tv) : x{zx}, y{zy}, t{tv} {}

    static HPoint origin(std::size_t n);

    std::size_t n() const { return x.size(); }
    std::complex<double> z(std::size_t j) const { return {x[j], y[j]}; }

    bool finite() const;
};

/// Group context: fixed dimension n with homogeneous dimension Q = 2n+2.
struct GroupContext {
    std::size_t n = 1;
    int Q = 4;

    explicit GroupContext(std::size_t dim);
};

/// Group law (z,t)(p,s) = (z+p, t+s+2 Im<z,p>), <z,p> = sum z_j conj(p_j).
HPoint multiply(const HPoint& a, const HPoint& b);

/// Group inverse (-z, -t).
HPoint inverse(const HPoint& a);

/// Koranyi gauge |(z,t)| = (|z|^4 + t^2)^{1/4}.
double gauge_norm(const HPoint& a);

/// Left-invariant gauge distance rho(a,b) = |a^{-1} b|.
double distance(const HPoint& a, const HPoint& b);

/// Anisotropic dilation delta_s (z,t) = (s z, s^2 t); s may be <= 0
/// (delta_{-1}(z,t) = (-z, t), delta_0 maps to the origin).
HPoint dilate(double s, const HPoint& a);

/// Rotation (z,t) -> (e^{i theta} z, t), componentwise e^{i theta_j} z_j.
HPoint rotate(const std::vector<double>& theta, const HPoint& a);

/// Same rotation angle in every component.
HPoint rotate(double theta, const HPoint& a);

/// H-reflection (z,t) -> (e^{i theta} conj(z), 2 lambda - t).
/// theta = 0 gives R_0 composed with the plane shift; theta = pi gives the
/// (-conj z, 2 lambda - t) convention.
HPoint h_reflect(double lambda, const std::vector<double>& theta, const HPoint& a);
HPoint h_reflect(double lambda, double theta, const HPoint& a);

/// Reflection about the horizontal plane through xi0: left-translate xi0 to
/// the origin, reflect in H_0, translate back.
HPoint reflect_about_horizontal_plane(const HPoint& xi0, const HPoint& a);

/// CR inversion of a point: xi_hat = (z/w, -t/|w|^2) with w = t + i|z|^2.
/// Satisfies |xi_hat| = 1/|xi| and double inversion = (-z, t).
/// Throws std::domain_error at (and extremely near) the origin.
HPoint cr_invert_point(const HPoint& a);

}  // namespace hverify
