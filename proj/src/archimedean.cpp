#include "qf3/archimedean.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qf3/arith.hpp"
#include "qf3/quadrature.hpp"

namespace qf3 {

namespace {

using Cplx = std::complex<double>;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr Cplx kI{0.0, 1.0};

Cplx cis(double t) { return {std::cos(t), std::sin(t)}; }

// int_0^1 exp(i c x^2) dx, c >= 0.
Cplx fresnel_pos(double c) {
    if (c <= 12.0) {
        // sum_k (ic)^k / (k! (2k+1))
        std::complex<long double> term = 1.0L, sum = 1.0L;
        std::complex<long double> ic{0.0L, static_cast<long double>(c)};
        for (int k = 1; k < 80; ++k) {
            term *= ic / static_cast<long double>(k);
            sum += term / static_cast<long double>(2 * k + 1);
            if (std::abs(term) < 1e-19L) break;
        }
        return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    if (c < 60.0) {
        return panel_integrate_c([c](double x) { return cis(c * x * x); }, 0.0,
                                 1.0, 12, 24);
    }
    // int_0^inf = (1/2) sqrt(pi/c) e^{i pi/4}; the [1, inf) remainder by
    // repeated integration by parts:
    // int_1^inf = -e^{ic} sum_k (2k-1)!! / (2ic)^{k+1}, truncated at the
    // smallest term.
    Cplx half = 0.5 * std::sqrt(std::numbers::pi / c) *
                cis(std::numbers::pi / 4.0);
    Cplx inv2ic = 1.0 / (2.0 * kI * c);
    Cplx term = inv2ic, tail = 0.0;
    double last = std::abs(term);
    for (int k = 0; k < 14; ++k) {
        tail += term;
        term *= (2.0 * k + 1.0) * inv2ic;
        if (std::abs(term) > last) break;
        last = std::abs(term);
    }
    return half + cis(c) * tail;
}

// E(z) = int_0^z (e^{-iv} - 1)/v dv, z >= 0.
Cplx e_transform(double z) {
    if (z <= 12.0) {
        // sum_k (-iz)^k / (k k!)
        std::complex<long double> term = 1.0L, sum = 0.0L;
        std::complex<long double> miz{0.0L, -static_cast<long double>(z)};
        for (int k = 1; k < 90; ++k) {
            term *= miz / static_cast<long double>(k);
            sum += term / static_cast<long double>(k);
            if (std::abs(term) < 1e-20L) break;
        }
        return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    if (z < 35.0) {
        static const Cplx e12 = e_transform(12.0);
        return e12 + panel_integrate_c(
                         [](double v) { return (cis(-v) - 1.0) / v; }, 12.0, z,
                         10, 20);
    }
    // E(z) = -Cin(z) - i Si(z); Si, Ci from the f/g asymptotic series.
    double f = 0, g = 0, zf = 1.0 / z, zg = 1.0 / (z * z);
    double tf = zf, tg = zg;
    for (int k = 0; k < 12; ++k) {
        f += tf;
        g += tg;
        double nf = tf * (2.0 * k + 1.0) * (2.0 * k + 2.0) * zg;
        double ng = tg * (2.0 * k + 2.0) * (2.0 * k + 3.0) * zg;
        if (std::abs(nf) > std::abs(tf)) break;
        tf = -nf;
        tg = -ng;
    }
    double si = std::numbers::pi / 2.0 - f * std::cos(z) - g * std::sin(z);
    double ci = f * std::sin(z) - g * std::cos(z);
    double cin = euler_gamma() + std::log(z) - ci;
    return {-cin, -si};
}

// int_0^3 e(-x beta) dx
Cplx sharp_factor(double beta) {
    double c = kTwoPi * beta;
    if (std::abs(c) <= 0.5) {
        std::complex<long double> term = 3.0L, sum = 3.0L;
        std::complex<long double> mic{0.0L, -static_cast<long double>(c)};
        for (int k = 1; k < 40; ++k) {
            term *= mic * 3.0L / static_cast<long double>(k + 1);
            sum += term;
            if (std::abs(term) < 1e-20L) break;
        }
        return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    return (1.0 - cis(-3.0 * c)) / (kI * c);
}

// int_0^3 (log x) e(-x beta) dx
Cplx log_factor(double beta) {
    double c = kTwoPi * beta;
    const double l3 = std::log(3.0);
    if (std::abs(c) <= 0.5) {
        // sum_k (-ic)^k/k! * 3^{k+1} ((k+1) log 3 - 1)/(k+1)^2
        std::complex<long double> pw = 1.0L;
        std::complex<long double> sum = 0.0L;
        std::complex<long double> mic{0.0L, -static_cast<long double>(c)};
        for (int k = 0; k < 40; ++k) {
            long double kp = k + 1;
            std::complex<long double> term =
                pw * powl(3.0L, kp) *
                (kp * static_cast<long double>(l3) - 1.0L) / (kp * kp);
            sum += term;
            if (std::abs(pw) * powl(3.0L, kp) < 1e-20L) break;
            pw *= mic / static_cast<long double>(k + 1);
        }
        return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
    }
    if (c > 0) {
        // (i/c)[log 3 (e^{-3ic} - 1) - E(3c)]
        return (kI / c) * (l3 * (cis(-3.0 * c) - 1.0) - e_transform(3.0 * c));
    }
    return std::conj(log_factor(-beta));
}

// int_0^1 F(t) e(-t c/(2 pi)) dt for F given by Legendre coefficients on the
// mapped interval; c is the plain angular frequency (phase e^{-ict}).
// Uses int_{-1}^{1} P_k(u) e^{-i w u} du = 2 (-i)^k j_k(w).
Cplx poly_osc(const std::vector<double>& leg, double c) {
    if (c < 0) return std::conj(poly_osc(leg, -c));
    double w = c / 2.0;
    std::vector<double> j = spherical_jn(static_cast<int>(leg.size()) - 1, w);
    Cplx mik = 1.0;  // (-i)^k
    Cplx s = 0.0;
    for (std::size_t k = 0; k < leg.size(); ++k) {
        s += leg[k] * mik * j[k];
        mik *= -kI;
    }
    return cis(-c / 2.0) * s;
}

// Legendre coefficients (on u in [-1,1], t = (u+1)/2) of 1 - s(t) and of
// log(3 + t) (1 - s(t)).
const std::vector<double>& w0_tail_coeffs() {
    static const std::vector<double> c = legendre_fit(
        [](double u) { return 1.0 - smoothstep01(0.5 * (u + 1.0)); }, 12);
    return c;
}

const std::vector<double>& log_tail_coeffs() {
    static const std::vector<double> c = legendre_fit(
        [](double u) {
            double t = 0.5 * (u + 1.0);
            return std::log(3.0 + t) * (1.0 - smoothstep01(t));
        },
        24);
    return c;
}

// int_3^4 w0(x) e(-x beta) dx
Cplx w0_tail_factor(double beta) {
    double c = kTwoPi * beta;
    return cis(-3.0 * c) * poly_osc(w0_tail_coeffs(), c);
}

// int_3^4 (log x) w0(x) e(-x beta) dx
Cplx log_tail_factor(double beta) {
    double c = kTwoPi * beta;
    return cis(-3.0 * c) * poly_osc(log_tail_coeffs(), c);
}

Cplx fourth_factor(SingularIntegralKind which, double beta) {
    switch (which) {
        case SingularIntegralKind::I1:
            return sharp_factor(beta);
        case SingularIntegralKind::I2:
            return log_factor(beta);
        case SingularIntegralKind::J1:
            return sharp_factor(beta) + w0_tail_factor(beta);
        case SingularIntegralKind::J2:
            return log_factor(beta) + log_tail_factor(beta);
    }
    throw std::logic_error("unreachable");
}

double integrand(SingularIntegralKind which, double beta) {
    Cplx k = fresnel_kernel(beta);
    return (k * k * k * fourth_factor(which, beta)).real();
}

// tail bound for 2 int_B^inf |kernel|^3 |fourth| d beta, using
// |kernel| <= 1.02 sqrt(pi/c) for c = 2 pi beta >= 60 and the factor bounds
// |sharp|, |w0 tail| <= 2/c; |log factor| <= (log(3c) + 6)/c.
double tail_bound(SingularIntegralKind which, double B) {
    double a = 1.062 * std::pow(std::numbers::pi, 1.5) /
               std::pow(kTwoPi, 2.5);  // 1.02^3 * pi^1.5 / (2 pi)^{5/2}
    bool logw = (which == SingularIntegralKind::I2 ||
                 which == SingularIntegralKind::J2);
    bool smooth = (which == SingularIntegralKind::J1 ||
                   which == SingularIntegralKind::J2);
    double fb = smooth ? 4.0 : 2.0;
    if (!logw) return 2.0 * a * fb * (2.0 / 3.0) * std::pow(B, -1.5);
    // int_B^inf beta^{-5/2} (log(2 pi beta) + log 3 + 6) d beta
    double cst = std::log(kTwoPi) + std::log(3.0) + 6.0;
    double v = (2.0 / 3.0) * std::pow(B, -1.5) * (std::log(B) + cst) +
               (4.0 / 9.0) * std::pow(B, -1.5);
    return 2.0 * a * fb * v;
}

}  // namespace

double smoothstep01(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * t * (10.0 + t * (-15.0 + 6.0 * t));
}

double w0_weight(double x) {
    if (x <= 3.0) return 1.0;
    if (x >= 4.0) return 0.0;
    return 1.0 - smoothstep01(x - 3.0);
}

std::complex<double> fresnel_kernel(double beta) {
    double c = kTwoPi * beta;
    if (c >= 0) return fresnel_pos(c);
    return std::conj(fresnel_pos(-c));
}

QuadratureResult singular_integral(SingularIntegralKind which, double B,
                                   double tol) {
    if (B < 10.0) throw std::invalid_argument("singular_integral: B >= 10");
    if (tol < 1e-8) throw std::invalid_argument("singular_integral: tol >= 1e-8");
    // the integrand is conjugation-symmetric, so the full line integral is
    // twice the real part over [0, B]
    const double width = 0.25;
    int panels = static_cast<int>(std::ceil(B / width));
    auto f = [&](double b) { return integrand(which, b); };
    double lo = panel_integrate(f, 0.0, B, panels, 16);
    double hi = panel_integrate(f, 0.0, B, panels, 24);
    double value = 2.0 * hi;
    double err = 2.0 * std::abs(hi - lo) + tail_bound(which, B);
    return {value, err, B, err <= tol};
}

double volume_oracle_I2() {
    auto run = [](int depth, int n) {
        std::vector<double> brk{0.0};
        for (int k = depth; k >= 0; --k) brk.push_back(std::pow(2.0, -k));
        const GLRule& r = gauss_legendre(n);
        // per-axis nodes/weights over the graded grid
        std::vector<double> xs, ws;
        for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
            double mid = 0.5 * (brk[i] + brk[i + 1]);
            double half = 0.5 * (brk[i + 1] - brk[i]);
            for (int j = 0; j < n; ++j) {
                xs.push_back(mid + half * r.nodes[j]);
                ws.push_back(half * r.weights[j]);
            }
        }
        double s = 0;
        std::size_t m = xs.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) {
                double x2 = xs[i] * xs[i] + xs[j] * xs[j], wij = ws[i] * ws[j];
                double inner = 0;
                for (std::size_t k = 0; k < m; ++k)
                    inner += ws[k] * std::log(x2 + xs[k] * xs[k]);
                s += wij * inner;
            }
        return s;
    };
    return run(16, 10);
}

}  // namespace qf3
