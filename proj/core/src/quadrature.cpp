#include "hverify/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace hverify {

namespace {

// Eigenvalues and first eigenvector components of a symmetric tridiagonal
// matrix (diag d, offdiag e), QL with implicit shifts. z holds the first
// row of the accumulated rotations on output.
void tridiag_eigen_first_row(std::vector<double>& d, std::vector<double>& e,
                             std::vector<double>& z) {
    const int n = static_cast<int>(d.size());
    z.assign(n, 0.0);
    if (n == 0) return;
    z[0] = 1.0;
    if (n == 1) return;
    e.resize(n, 0.0);  // e[n-1] used as workspace

    for (int l = 0; l < n - 1; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-15 * dd) break;
            }
            if (m != l) {
                if (iter++ == 60)
                    throw std::runtime_error("tridiag_eigen: too many iterations");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                bool underflow = false;
                for (int i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        underflow = true;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    // accumulate only the first row of the eigenvector matrix
                    f = z[i + 1];
                    z[i + 1] = s * z[i] + c * f;
                    z[i] = c * z[i] - s * f;
                }
                if (underflow) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    // sort ascending by node
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n), zs(n);
    for (int i = 0; i < n; ++i) {
        ds[i] = d[idx[i]];
        zs[i] = z[idx[i]];
    }
    d.swap(ds);
    z.swap(zs);
}

// Monic Jacobi recurrence coefficients on [-1,1] for weight (1-x)^a (1+x)^b
// (Gautschi, OPQ r_jacobi). beta[0] carries the total weight mass.
void jacobi_recurrence(int n, double a, double b, std::vector<double>& alpha,
                       std::vector<double>& beta) {
    alpha.resize(n);
    beta.resize(n);
    const double ab = a + b;
    alpha[0] = (b - a) / (ab + 2.0);
    beta[0] = std::pow(2.0, ab + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) /
              std::tgamma(ab + 2.0);
    if (n == 1) return;
    alpha[1] = (b * b - a * a) / ((2.0 + ab) * (4.0 + ab));
    beta[1] = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    for (int k = 2; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double den = 2.0 * kk + ab;
        alpha[k] = (b * b - a * a) / (den * (den + 2.0));
        beta[k] = 4.0 * kk * (kk + a) * (kk + b) * (kk + ab) /
                  (den * den * (den + 1.0) * (den - 1.0));
    }
}

QuadratureRule golub_welsch(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("quadrature rule: n must be >= 1");
    std::vector<double> alpha, beta;
    jacobi_recurrence(n, a, b, alpha, beta);
    std::vector<double> d = alpha;
    std::vector<double> e(n, 0.0);
    for (int k = 1; k < n; ++k) e[k - 1] = std::sqrt(beta[k]);
    std::vector<double> z;
    tridiag_eigen_first_row(d, e, z);
    QuadratureRule rule;
    rule.nodes = d;
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) rule.weights[i] = beta[0] * z[i] * z[i];
    return rule;
}

std::map<int, QuadratureRule>& gl_cache() {
    static std::map<int, QuadratureRule> cache;
    return cache;
}
std::mutex gl_mutex;

}  // namespace

const QuadratureRule& gauss_legendre(int n) {
    std::lock_guard<std::mutex> lock(gl_mutex);
    auto& cache = gl_cache();
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, golub_welsch(n, 0.0, 0.0)).first;
    return it->second;
}

QuadratureRule gauss_jacobi01(int n, double gamma) {
    if (!(gamma > -1.0))
        throw std::invalid_argument("gauss_jacobi01: gamma must be > -1");
    // weight (1+x)^gamma on [-1,1], then x = (1+u)/2 maps to u^gamma on [0,1]
    QuadratureRule r = golub_welsch(n, 0.0, gamma);
    const double scale = std::pow(0.5, gamma + 1.0);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = 0.5 * (1.0 + r.nodes[i]);
        r.weights[i] *= scale;
    }
    return r;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const QuadratureRule& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    KahanSum acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc.add(rule.weights[i] * f(mid + half * rule.nodes[i]));
    return half * acc.value();
}

std::vector<double> geometric_panels(double a, double b, double first_width,
                                     double ratio) {
    if (!(b > a)) throw std::invalid_argument("geometric_panels: need b > a");
    std::vector<double> edges{a};
    double w = std::min(first_width, b - a);
    double x = a;
    while (x + w < b) {
        x += w;
        edges.push_back(x);
        w *= ratio;
    }
    edges.push_back(b);
    return edges;
}

}  // namespace hverify
