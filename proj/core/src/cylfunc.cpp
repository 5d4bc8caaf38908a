#include "hverify/cylfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace hverify {

CylFunc make_cylfunc(std::function<double(double, double)> eval,
                     double decay_exponent, double C_decay, double R_decay) {
    if (!eval) throw std::invalid_argument("make_cylfunc: empty callable");
    if (!(C_decay > 0.0) || !(R_decay > 0.0))
        throw std::invalid_argument("make_cylfunc: C_decay, R_decay must be > 0");
    CylFunc f;
    f.eval = std::move(eval);
    f.decay_exponent = decay_exponent;
    f.C_decay = C_decay;
    f.R_decay = R_decay;

    // Spot check the decay bound along a few gauge rays, rho in [R, 10R].
    const double phis[] = {0.1, 0.8, 1.5707963267948966, 2.3, 3.04};
    for (double rho = R_decay; rho <= 10.0 * R_decay * (1.0 + 1e-12); rho *= 1.7783) {
        for (double phi : phis) {
            const double r = rho * std::sqrt(std::sin(phi));
            const double t = rho * rho * std::cos(phi);
            const double v = f.eval(r, t);
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument(
                    "make_cylfunc: eval must be finite and nonnegative");
            const double bound = C_decay * std::pow(rho, -decay_exponent);
            if (v > bound * (1.0 + 1e-9))
                throw std::invalid_argument(
                    "make_cylfunc: decay bound violated on the sampled grid");
        }
    }
    return f;
}

void QuadConfig::validate() const {
    if (!(delta > 0.0)) throw std::invalid_argument("QuadConfig: delta must be > 0");
    if (!(delta < R_trunc))
        throw std::invalid_argument("QuadConfig: delta must be < R_trunc");
    if (nodes_rho < 2 || nodes_angle < 4 || nodes_outer < 2)
        throw std::invalid_argument("QuadConfig: node counts too small");
    if (!(tol > 0.0) || !(tol < 1.0))
        throw std::invalid_argument("QuadConfig: tol must lie in (0, 1)");
    if (mc_samples == 0)
        throw std::invalid_argument("QuadConfig: mc_samples must be positive");
}

}  // namespace hverify
