#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qf3 {

// A point a/q + beta of the major-arc window: q <= P, |beta| <= 1/(qP),
// with P = floor(5X).
struct ArcPoint {
    std::uint64_t q;
    std::int64_t a;
    double beta;
    double x;

    std::uint64_t p() const { return static_cast<std::uint64_t>(5.0 * x); }
    bool valid() const;
};

// f(alpha) = sum_{1 <= m <= X} e(m^2 alpha)
std::complex<double> f_eval(double alpha, double x);

// h(alpha) = sum_n w(n) tau(n) e(n alpha), with the C^2 weight w equal to
// 1 on [1, 3X^2], rising from 0 on [1/2, 1), and falling as w0(x/X^2) on
// (3X^2, 4X^2]. Cost O(X^2); requires X <= 2000.
std::complex<double> h_eval(double alpha, double x);

double major_weight(double t, double x);  // the weight w above

struct ResidualBudget {
    double residual;
    double budget;
};

// residual of f(a/q + beta) against its Gauss-sum/Fresnel main term,
// budget = K sqrt(q) log(q + 2) with frozen calibrated K
ResidualBudget lemma41_residual(const ArcPoint& p);

// residual of h(a/q + beta) against q^{-1} int (log x + 2 gamma - 2 log q)
// e(x beta) w(x) dx, budget = K' (q log^2(q+2) + beta^2 q^{3/2} X^{7/2})
ResidualBudget lemma42_residual(const ArcPoint& p);

struct DecayReport {
    double max_ratio_f;  // |int_0^X e(x^2 beta) dx| vs X / sqrt(1 + X^2|beta|)
    double max_ratio_h;  // |int (log x + 2g - 2 log q) e(x beta) w dx| vs
                         // X^2 (log q + log X) / (1 + X^2 |beta|)
    double envelope_constant;  // frozen C; pass iff both ratios <= C
    bool pass;
};

DecayReport decay_checks(const std::vector<double>& betas, std::uint64_t q,
                         double x);

}  // namespace qf3
