#include "qf3/majorarc.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qf3/archimedean.hpp"
#include "qf3/arith.hpp"
#include "qf3/expsums.hpp"
#include "qf3/quadrature.hpp"

namespace qf3 {

namespace {

using Cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Frozen calibration constants: each bound was run once over the full test
// grid (q <= 20, a coprime, beta in +-{0, 1/2, 1}/(qP), X in {100, 200, 500})
// and the constant set to 1.5x the observed maximum ratio. Regressions fail
// if any ratio later exceeds these.
constexpr double kBudget41 = 0.621;  // observed max ratio 0.414 (q=1..20)
constexpr double kBudget42 = 0.194;  // observed max ratio 0.129
constexpr double kEnvelope = 12.11;  // observed max ratio 8.07 (h at beta=0,
                                     // q=1: integral ~ 6X^2 log X against an
                                     // X^2 log X envelope)

Cplx unit_l(long double frac) {
    long double t = 2.0L * std::numbers::pi_v<long double> * frac;
    return {static_cast<double>(cosl(t)), static_cast<double>(sinl(t))};
}

const DivisorSieve& tau_sieve(std::uint64_t limit) {
    static std::map<std::uint64_t, std::unique_ptr<DivisorSieve>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[limit];
    if (!slot) slot = std::make_unique<DivisorSieve>(limit, limit + 1);
    return *slot;
}

// q^{-1}-free version of the Lemma 4.2 main integral:
// int (log x + 2 gamma - 2 log q) e(x beta) w(x) dx
double h_main_integral_parts(double beta, double q, double x, Cplx* out) {
    double g2 = 2.0 * euler_gamma();
    double lq2 = 2.0 * std::log(q);
    double x2 = x * x;
    auto integrand = [&](double t) {
        return (std::log(t) + g2 - lq2) * major_weight(t, x) *
               unit_l(static_cast<long double>(beta) * t);
    };
    // segment boundaries: the two transition pieces, plus a geometric ladder
    // across the plateau so the log resolves near 1; each segment is then
    // split further to keep the oscillation-aware panel width <= 1/(4|beta|)
    std::vector<double> cuts{0.5, 1.0};
    for (double t = 2.0; t < 3.0 * x2; t *= 2.0) cuts.push_back(t);
    cuts.push_back(3.0 * x2);
    cuts.push_back(4.0 * x2);
    Cplx total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double lo = cuts[i], hi = cuts[i + 1];
        int panels = 4 + static_cast<int>((hi - lo) * 4.0 * std::abs(beta));
        total += panel_integrate_c(integrand, lo, hi, panels, 16);
    }
    *out = total;
    return std::abs(total);
}

}  // namespace

bool ArcPoint::valid() const {
    if (x < 1.0 || q == 0) return false;
    std::uint64_t pp = p();
    if (q > pp) return false;
    std::uint64_t ar = static_cast<std::uint64_t>(
        ((a % static_cast<std::int64_t>(q)) + static_cast<std::int64_t>(q)) %
        static_cast<std::int64_t>(q));
    if (q > 1 && std::gcd(ar, q) != 1) return false;
    return std::abs(beta) <= 1.0 / (static_cast<double>(q) * pp) * (1 + 1e-12);
}

double major_weight(double t, double x) {
    double x2 = x * x;
    if (t <= 0.5 || t >= 4.0 * x2) return 0.0;
    if (t < 1.0) return smoothstep01(2.0 * (t - 0.5));
    if (t <= 3.0 * x2) return 1.0;
    return w0_weight(t / x2);
}

std::complex<double> f_eval(double alpha, double x) {
    if (x < 1.0) throw std::invalid_argument("f_eval: X >= 1");
    std::uint64_t fx = static_cast<std::uint64_t>(x);
    long double la = alpha;
    std::complex<long double> s = 0.0L;
    for (std::uint64_t m = 1; m <= fx; ++m) {
        long double ph = fmodl(static_cast<long double>(m) * m * la, 1.0L);
        Cplx u = unit_l(ph);
        s += std::complex<long double>(u.real(), u.imag());
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

std::complex<double> h_eval(double alpha, double x) {
    if (x < 1.0 || x > 2000.0) throw std::invalid_argument("h_eval: 1 <= X <= 2000");
    std::uint64_t limit = static_cast<std::uint64_t>(4.0 * x * x);
    const DivisorSieve& tau = tau_sieve(limit);
    long double la = alpha;
    std::complex<long double> s = 0.0L;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        double w = major_weight(static_cast<double>(n), x);
        if (w == 0.0) continue;
        long double ph = fmodl(static_cast<long double>(n) * la, 1.0L);
        Cplx u = unit_l(ph);
        s += static_cast<long double>(w * tau[n]) *
             std::complex<long double>(u.real(), u.imag());
    }
    return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

ResidualBudget lemma41_residual(const ArcPoint& p) {
    if (!p.valid()) throw std::invalid_argument("lemma41_residual: invalid arc point");
    double alpha = static_cast<double>(p.a) / static_cast<double>(p.q) + p.beta;
    Cplx fv = f_eval(alpha, p.x);
    Cplx sq = gauss_sum(p.q, p.a, 0).value / static_cast<double>(p.q);
    // int_0^X e(x^2 beta) dx = X * K(X^2 beta) under x = X u
    Cplx main = sq * p.x * fresnel_kernel(p.x * p.x * p.beta);
    double q2 = static_cast<double>(p.q) + 2.0;
    return {std::abs(fv - main),
            kBudget41 * std::sqrt(static_cast<double>(p.q)) * std::log(q2)};
}

ResidualBudget lemma42_residual(const ArcPoint& p) {
    if (!p.valid()) throw std::invalid_argument("lemma42_residual: invalid arc point");
    if (p.x > 200.0) throw std::invalid_argument("lemma42_residual: X <= 200");
    double alpha = static_cast<double>(p.a) / static_cast<double>(p.q) + p.beta;
    Cplx hv = h_eval(alpha, p.x);
    Cplx integral;
    h_main_integral_parts(p.beta, static_cast<double>(p.q), p.x, &integral);
    // the main term carries no a-dependence; a enters only through h itself
    Cplx main = integral / static_cast<double>(p.q);
    double lg = std::log(static_cast<double>(p.q) + 2.0);
    double budget =
        kBudget42 * (static_cast<double>(p.q) * lg * lg +
                     p.beta * p.beta * std::pow(static_cast<double>(p.q), 1.5) *
                         std::pow(p.x, 3.5));
    return {std::abs(hv - main), budget};
}

DecayReport decay_checks(const std::vector<double>& betas, std::uint64_t q,
                         double x) {
    if (betas.empty() || q == 0 || x < 2.0)
        throw std::invalid_argument("decay_checks: nonempty grid, q >= 1, X >= 2");
    DecayReport r{0.0, 0.0, kEnvelope, false};
    double lqx = std::log(static_cast<double>(q)) + std::log(x);
    for (double beta : betas) {
        double damp = 1.0 + x * x * std::abs(beta);
        double fmag = std::abs(x * fresnel_kernel(x * x * beta));
        r.max_ratio_f = std::max(r.max_ratio_f, fmag / (x / std::sqrt(damp)));
        Cplx integral;
        double hmag =
            h_main_integral_parts(beta, static_cast<double>(q), x, &integral);
        r.max_ratio_h = std::max(r.max_ratio_h, hmag / (x * x * lqx / damp));
    }
    r.pass = r.max_ratio_f <= kEnvelope && r.max_ratio_h <= kEnvelope;
    return r;
}

}  // namespace qf3
