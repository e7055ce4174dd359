#include "qf3/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qf3/arith.hpp"

namespace qf3 {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
const long double kGamma = 0.57721566490153286060651209008240243L;

// ascending series for J_n / I_n, n in {0, 1}; sign = -1 for J, +1 for I
long double ji_series(int n, long double x, int sign) {
    long double q = x * x / 4.0L;
    long double term = (n == 0) ? 1.0L : x / 2.0L;
    long double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= sign * q / (static_cast<long double>(k) * (k + n));
        sum += term;
        if (fabsl(term) < 1e-24L * (1.0L + fabsl(sum))) break;
    }
    return sum;
}

// H_k
long double harmonic(int k) {
    long double h = 0;
    for (int i = 1; i <= k; ++i) h += 1.0L / i;
    return h;
}

long double y0_series(long double x) {
    long double q = x * x / 4.0L;
    long double j0 = ji_series(0, x, -1);
    long double s = 0, term = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -q / (static_cast<long double>(k) * k);
        s += -term * harmonic(k);  // (-1)^{k+1} H_k q^k / (k!)^2
        if (fabsl(term) < 1e-24L) break;
    }
    return (2.0L / kPi) * ((logl(x / 2.0L) + kGamma) * j0 + s);
}

long double y1_series(long double x) {
    long double q = x * x / 4.0L;
    long double j1 = ji_series(1, x, -1);
    // sum_k (psi(k+1)+psi(k+2)) (-q)^k / (k! (k+1)!)
    long double term = 1.0L, s = 0;
    for (int k = 0; k < 200; ++k) {
        long double psis = -2.0L * kGamma + harmonic(k) + harmonic(k + 1);
        s += term * psis;
        term *= -q / (static_cast<long double>(k + 1) * (k + 2));
        if (fabsl(term) < 1e-24L && k > 2) break;
    }
    return -2.0L / (kPi * x) + (2.0L / kPi) * logl(x / 2.0L) * j1 -
           (x / (2.0L * kPi)) * s;
}

long double k0_series(long double x) {
    long double q = x * x / 4.0L;
    long double i0 = ji_series(0, x, +1);
    long double s = 0, term = 1.0L;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        s += term * harmonic(k);
        if (fabsl(term) < 1e-24L) break;
    }
    return -(logl(x / 2.0L) + kGamma) * i0 + s;
}

long double k1_series(long double x) {
    long double q = x * x / 4.0L;
    long double i1 = ji_series(1, x, +1);
    long double term = 1.0L, s = 0;
    for (int k = 0; k < 200; ++k) {
        long double psis = -2.0L * kGamma + harmonic(k) + harmonic(k + 1);
        s += term * psis;
        term *= q / (static_cast<long double>(k + 1) * (k + 2));
        if (fabsl(term) < 1e-24L && k > 2) break;
    }
    return 1.0L / x + logl(x / 2.0L) * i1 - (x / 4.0L) * s;
}

// Hankel coefficients a_k(v) = prod_{j=1..k} (4v^2 - (2j-1)^2) / (k! 8^k)
long double hankel_a(int v, int k) {
    long double num = 1.0L, den = 1.0L;
    for (int j = 1; j <= k; ++j) {
        num *= 4.0L * v * v - (2.0L * j - 1.0L) * (2.0L * j - 1.0L);
        den *= 8.0L * j;
    }
    return num / den;
}

long double y_asymptotic(int v, long double x) {
    long double w = x - v * kPi / 2.0L - kPi / 4.0L;
    long double p = 0, qq = 0, last = 1e30L;
    for (int k = 0; k < 30; ++k) {
        long double t = hankel_a(v, k) / powl(x, k);
        if (fabsl(t) > last) break;
        last = fabsl(t);
        if (k % 4 == 0) p += t;
        else if (k % 4 == 1) qq += t;
        else if (k % 4 == 2) p -= t;
        else qq -= t;
    }
    return sqrtl(2.0L / (kPi * x)) * (sinl(w) * p + cosl(w) * qq);
}

long double k_asymptotic(int v, long double x) {
    long double s = 0, last = 1e30L;
    for (int k = 0; k < 30; ++k) {
        long double t = hankel_a(v, k) / powl(x, k);
        if (fabsl(t) > last) break;
        last = fabsl(t);
        s += t;
    }
    return sqrtl(kPi / (2.0L * x)) * expl(-x) * s;
}

constexpr long double kSwitch = 17.0L;

long double bessel_base(BesselFamily fam, int v, long double x) {
    if (fam == BesselFamily::Y)
        return x < kSwitch ? (v == 0 ? y0_series(x) : y1_series(x))
                           : y_asymptotic(v, x);
    return x < kSwitch ? (v == 0 ? k0_series(x) : k1_series(x))
                       : k_asymptotic(v, x);
}

}  // namespace

double bessel(BesselFamily family, int order, double x) {
    if (order < 0 || order > 2) throw std::invalid_argument("bessel: order 0..2");
    if (!(x > 0)) throw std::invalid_argument("bessel: x > 0 required");
    if (family == BesselFamily::K && x > 700.0)
        throw std::invalid_argument("bessel: K underflows for x > 700");
    long double lx = x;
    if (order < 2) return static_cast<double>(bessel_base(family, order, lx));
    long double b0 = bessel_base(family, 0, lx);
    long double b1 = bessel_base(family, 1, lx);
    if (family == BesselFamily::Y)
        return static_cast<double>(2.0L / lx * b1 - b0);
    return static_cast<double>(b0 + 2.0L / lx * b1);
}

double check_recurrence(BesselFamily family, int order,
                        const std::vector<double>& grid) {
    double eps = (family == BesselFamily::Y) ? 1.0 : -1.0;
    double worst = 0.0;
    for (double x : grid) {
        double h = 1e-5 * std::max(1.0, x);
        auto g = [&](double t) {
            return std::pow(t, order + 1) * bessel(family, order + 1, t);
        };
        double fd = (g(x + h) - g(x - h)) / (2.0 * h);
        double rhs = eps * std::pow(x, order + 1) * bessel(family, order, x);
        double dev = std::abs(fd - rhs) / std::max(1e-12, std::abs(rhs));
        worst = std::max(worst, dev);
    }
    return worst;
}

}  // namespace qf3
