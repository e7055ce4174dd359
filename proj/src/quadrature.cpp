#include "qf3/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace qf3 {

namespace {

// Legendre P_n and derivative at x, by the three-term recurrence.
std::pair<double, double> legendre_pd(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    double d = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, d};
}

GLRule build_rule(int n) {
    GLRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            auto [p, d] = legendre_pd(n, x);
            double dx = p / d;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        auto [p, d] = legendre_pd(n, x);
        (void)p;
        r.nodes[n - 1 - i] = x;
        r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * d * d);
    }
    return r;
}

}  // namespace

const GLRule& gauss_legendre(int n) {
    if (n < 1 || n > 256) throw std::invalid_argument("gauss_legendre: bad n");
    static std::map<int, GLRule> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n) {
    const GLRule& r = gauss_legendre(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0;
    for (int i = 0; i < n; ++i)
        s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

std::complex<double> gl_integrate_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int n) {
    const GLRule& r = gauss_legendre(n);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> s = 0;
    for (int i = 0; i < n; ++i)
        s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

double panel_integrate(const std::function<double(double)>& f, double a,
                       double b, int panels, int n) {
    double s = 0, w = (b - a) / panels;
    for (int k = 0; k < panels; ++k)
        s += gl_integrate(f, a + k * w, a + (k + 1) * w, n);
    return s;
}

std::complex<double> panel_integrate_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels, int n) {
    std::complex<double> s = 0;
    double w = (b - a) / panels;
    for (int k = 0; k < panels; ++k)
        s += gl_integrate_c(f, a + k * w, a + (k + 1) * w, n);
    return s;
}

double legendre_p(int k, double x) {
    double p0 = 1.0, p1 = x;
    if (k == 0) return p0;
    for (int j = 2; j <= k; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::vector<double> legendre_fit(const std::function<double(double)>& f,
                                 int degree) {
    // Exact projection for polynomials of degree <= degree when sampled at
    // enough Gauss nodes; degree+8 nodes give margin for smooth non-polynomials.
    int n = degree + 8;
    const GLRule& r = gauss_legendre(n);
    std::vector<double> c(degree + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        double fx = f(r.nodes[i]);
        for (int k = 0; k <= degree; ++k)
            c[k] += r.weights[i] * fx * legendre_p(k, r.nodes[i]);
    }
    for (int k = 0; k <= degree; ++k) c[k] *= (2.0 * k + 1.0) / 2.0;
    return c;
}

std::vector<double> spherical_jn(int kmax, double x) {
    std::vector<double> j(kmax + 1, 0.0);
    if (x == 0.0) {
        j[0] = 1.0;
        return j;
    }
    if (x > kmax + 10) {
        // upward recurrence, stable in the oscillatory regime k < x
        double j0 = std::sin(x) / x;
        j[0] = j0;
        if (kmax >= 1) {
            double j1 = std::sin(x) / (x * x) - std::cos(x) / x;
            j[1] = j1;
            for (int k = 2; k <= kmax; ++k) {
                double j2 = (2 * k - 1) / x * j1 - j0;
                j[k] = j2;
                j0 = j1;
                j1 = j2;
            }
        }
        return j;
    }
    // Miller downward recurrence with normalization by j_0
    int start = kmax + 20 + static_cast<int>(x);
    double jp = 0.0, jc = 1e-30;  // J_{start+1}, J_{start}
    for (int k = start; k >= 1; --k) {
        double jm = (2 * k + 1) / x * jc - jp;  // J_{k-1}
        jp = jc;
        jc = jm;
        if (k - 1 <= kmax) j[k - 1] = jc;
        if (std::abs(jc) > 1e280) {
            double inv = 1.0 / jc;
            jc *= inv;
            jp *= inv;
            for (int i = k - 1; i <= kmax; ++i) j[i] *= inv;
        }
    }
    double scale = (std::sin(x) / x) / j[0];
    for (int k = 0; k <= kmax; ++k) j[k] *= scale;
    return j;
}

}  // namespace qf3
