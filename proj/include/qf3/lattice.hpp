#pragma once

#include <cstdint>
#include <vector>

namespace qf3 {

// counts[n] = #{(m1,m2,m3) in [1,floor(X)]^3 : m1^2+m2^2+m3^2 = n},
// n = 0 .. 3*floor(X)^2.
struct LatticeCountTable {
    std::uint64_t floor_x;
    std::vector<std::uint32_t> counts;
};

enum class S3Method { naive, convolution };

struct S3Result {
    double x;
    std::uint64_t floor_x;
    std::uint64_t value;
    S3Method method;
};

// Triple loop; exact. Requires 1 <= floor(X) <= 800.
LatticeCountTable counts_naive(double x);

// Triple additive self-convolution of the indicator of {m^2 : m <= floor(X)}
// by a number-theoretic transform modulo p = 29*2^57 + 1 (primitive root 3).
// Every count is below 2^31 < p, so the single-prime residues are the exact
// integers. Requires 1 <= floor(X) <= 10^4.
LatticeCountTable counts_convolution(double x);

// S3(X) = sum over the box of tau(m1^2+m2^2+m3^2), exact.
S3Result s3(double x, S3Method method);

}  // namespace qf3
