#pragma once

#include <cstdint>

namespace qf3 {

enum class SeriesMethod { direct_sum, euler_product };

// Value of a truncated infinite sum/product together with the truncation
// point and an upper bound for the omitted terms (derived from the
// |T(2^r)| <= 2^{2+5r/2}, |T(p^r)| <= p^{5r/2}, |T(p)| <= p^2 and
// |T(q)| <= 4 q1^2 q2^{5/2} bounds only).
struct SeriesEstimate {
    double value;
    std::uint64_t truncation;
    double tail_bound;
    SeriesMethod method;
};

// S1 = sum_{q>=1} T(q)/q^4, truncated at q <= Q.
SeriesEstimate s1_direct(std::uint64_t Q);

// S1 as an Euler product over primes p <= P; each local factor
// L_p = sum_r T(p^r)/p^{4r} truncated when the bound on the next term
// drops below eps.
SeriesEstimate s1_euler(std::uint64_t P, double eps);

// S2 = sum_{q>=1} (2 gamma - 2 log q) T(q)/q^4.
SeriesEstimate s2_direct(std::uint64_t Q);

// S2 via 2 gamma S1 - 2 D with the log-derivative form
// D = (prod_p L_p) * sum_p (sum_r r log p T(p^r)/p^{4r}) / L_p.
SeriesEstimate s2_euler(std::uint64_t P, double eps);

}  // namespace qf3
