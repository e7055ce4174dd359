#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qf3 {

using Complex = std::complex<double>;

// S(q,a,n) = sum_{x=1..q} e((a x^2 + n x)/q), e(z) = exp(2 pi i z).
struct GaussSumValue {
    Complex value;
    std::uint64_t q;
    std::int64_t a;
    std::int64_t n;
};

// Direct O(q) summation with exact integer phase reduction mod q.
GaussSumValue gauss_sum(std::uint64_t q, std::int64_t a, std::int64_t n);

// CRT factorization + closed form on odd prime-power parts; requires
// gcd(a, q) = 1. Matches gauss_sum to ~1e-9 absolute.
GaussSumValue gauss_sum_fast(std::uint64_t q, std::int64_t a, std::int64_t n);

// T(q; n1,n2,n3,m) = sum over a coprime to q of
// S(q,a,n1) S(q,a,n2) S(q,a,n3) e(abar m / q).
struct TSumValue {
    Complex value;
    std::uint64_t q;
    std::int64_t n1, n2, n3, m;
};

// Direct sum over a; cost O(q phi(q)) worst case, capped.
TSumValue t_sum(std::uint64_t q, std::int64_t n1, std::int64_t n2,
                std::int64_t n3, std::int64_t m);

// Product over prime-power parts (T is multiplicative in q), with fast
// Gauss sums inside each local factor.
TSumValue t_sum_fast(std::uint64_t q, std::int64_t n1, std::int64_t n2,
                     std::int64_t n3, std::int64_t m);

// S(p^r, 1) for prime power q, cached; direct summation for q <= 1e6,
// with the S(p^r,1) = p * S(p^{r-2},1) reduction above that.
Complex gauss_sum_prime_power_unit(std::uint64_t p, int r);

struct LemmaReport {
    std::string lemma;
    long cases = 0;
    double max_violation = 0.0;  // equality defect, or bound excess (0 = holds)
};

// lemma_id in {"3.1","3.2","3.3","3.4","3.5","3.6","3.7a","3.7b","3.8"}.
LemmaReport check_lemma(std::string_view lemma_id, std::uint64_t qmax);

std::vector<LemmaReport> check_all_lemmas(std::uint64_t qmax);

}  // namespace qf3
