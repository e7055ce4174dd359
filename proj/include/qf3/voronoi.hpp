#pragma once

#include <complex>
#include <cstdint>

namespace qf3 {

// Fixed C^2 test weight: quintic-smoothstep bump, 0 outside [1, 12],
// rising on [1, 2], equal to 1 on [2, 10], falling on [10, 12].
double voronoi_weight(double x);

struct VoronoiResult {
    std::uint64_t q;
    std::int64_t a;
    std::uint64_t n_trunc;  // truncation of the oscillatory (Y) dual sum
    std::complex<double> lhs;
    std::complex<double> rhs;
    double residual;      // |lhs - rhs|
    double rel_residual;  // residual / max(1, |lhs|); the floor keeps the
                          // ratio meaningful when the left side cancels to 0
                          // (e.g. q = 3, where all weighted terms sum to 0)
};

// Checks the divisor-sum identity
//   sum_n tau(n) e(an/q) g(n)
//     = q^{-1} int (log x + 2 gamma - 2 log q) g(x) dx
//     + sum_n tau(n) e(-abar n/q) gY(n) + sum_n tau(n) e(abar n/q) gK(n)
// with gY(y) = -(2 pi / q) int g(x) Y0(4 pi sqrt(xy)/q) dx and
// gK(y) = (4/q) int g(x) K0(4 pi sqrt(xy)/q) dx, both sides computed
// numerically. The K sum is truncated where its terms are below 1e-15
// (exponential decay); the Y sum is truncated at n_trunc.
VoronoiResult voronoi_check(std::uint64_t q, std::int64_t a,
                            std::uint64_t n_trunc);

}  // namespace qf3
