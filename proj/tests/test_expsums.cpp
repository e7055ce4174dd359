#include "doctest.h"

#include <cmath>
#include <complex>
#include <numeric>

#include "qf3/arith.hpp"
#include "qf3/expsums.hpp"

using namespace qf3;

TEST_SUITE_BEGIN("expsums");

TEST_CASE("gauss sum direct examples") {
    CHECK(std::abs(gauss_sum(1, 1, 0).value - Complex{1, 0}) < 1e-14);
    CHECK(std::abs(gauss_sum(2, 1, 0).value) < 1e-14);
    CHECK(std::abs(gauss_sum(3, 1, 0).value - Complex{0, std::sqrt(3.0)}) < 1e-13);
    CHECK(std::abs(std::abs(gauss_sum(3, 1, 0).value) - std::sqrt(3.0)) < 1e-13);
    CHECK(std::abs(gauss_sum(4, 1, 0).value - Complex{2, 2}) < 1e-13);
}

TEST_CASE("gauss sum conjugation symmetry") {
    for (std::uint64_t q : {3, 5, 7, 12, 16, 45, 99, 128}) {
        for (std::int64_t a = 1; a <= static_cast<std::int64_t>(q); ++a) {
            for (std::int64_t n = -2; n <= 2; ++n) {
                Complex lhs = gauss_sum(q, static_cast<std::int64_t>(q) - a, -n).value;
                Complex rhs = std::conj(gauss_sum(q, a, n).value);
                CHECK(std::abs(lhs - rhs) < 1e-10);
            }
        }
    }
}

TEST_CASE("gauss_sum_fast equals gauss_sum for q <= 500") {
    for (std::uint64_t q = 1; q <= 500; ++q) {
        for (std::uint64_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            for (std::int64_t n = -3; n <= 3; ++n) {
                Complex direct = gauss_sum(q, static_cast<std::int64_t>(a), n).value;
                Complex fast = gauss_sum_fast(q, static_cast<std::int64_t>(a), n).value;
                CHECK(std::abs(direct - fast) < 1e-9);
            }
        }
    }
}

TEST_CASE("gauss_sum_fast examples and error paths") {
    CHECK(std::abs(gauss_sum_fast(15, 2, 0).value - gauss_sum(15, 2, 0).value) < 1e-10);
    CHECK(std::abs(gauss_sum_fast(9, 4, 3).value - gauss_sum(9, 4, 3).value) < 1e-10);
    CHECK(std::abs(gauss_sum_fast(1, 1, 7).value - Complex{1, 0}) < 1e-14);
    CHECK_THROWS(gauss_sum_fast(12, 2, 0));
}

TEST_CASE("prime power unit reduction S(p^r,1) = p S(p^{r-2},1)") {
    for (std::uint64_t p : {3, 5, 7}) {
        for (int r = 3; r <= 7; ++r) {
            std::uint64_t q = 1;
            for (int i = 0; i < r; ++i) q *= p;
            if (q > 3000) break;
            Complex direct = gauss_sum(q, 1, 0).value;
            Complex reduced =
                static_cast<double>(p) * gauss_sum(q / (p * p), 1, 0).value;
            CHECK(std::abs(direct - reduced) < 1e-9);
        }
    }
}

TEST_CASE("t_sum examples") {
    CHECK(std::abs(t_sum(1, 0, 0, 0, 0).value - Complex{1, 0}) < 1e-14);
    CHECK(std::abs(t_sum(3, 0, 0, 0, 0).value) < 1e-12);
    CHECK(std::abs(t_sum(4, 0, 0, 0, 0).value - Complex{-32, 0}) < 1e-11);
}

TEST_CASE("t_sum zero-shift values are real for q <= 300") {
    for (std::uint64_t q = 1; q <= 300; ++q)
        CHECK(std::abs(t_sum(q, 0, 0, 0, 0).value.imag()) < 1e-9);
}

TEST_CASE("t_sum_fast equals t_sum, sampled tuples, q <= 300") {
    const std::int64_t tuples[][4] = {
        {0, 0, 0, 0}, {1, 2, 3, 4}, {-2, 2, -2, 2}, {1, 1, 1, 1}, {-1, 0, 2, -2},
    };
    for (std::uint64_t q = 1; q <= 300; ++q) {
        for (auto& t : tuples) {
            Complex a = t_sum(q, t[0], t[1], t[2], t[3]).value;
            Complex b = t_sum_fast(q, t[0], t[1], t[2], t[3]).value;
            double scale = std::max(1.0, std::abs(a));
            CHECK(std::abs(a - b) / scale < 1e-9);
        }
    }
}

TEST_CASE("t_sum_fast equals t_sum, all tuples in [-2,2]^4, q <= 60") {
    for (std::uint64_t q = 1; q <= 60; ++q) {
        for (std::int64_t n1 = -2; n1 <= 2; ++n1)
            for (std::int64_t n2 = -2; n2 <= 2; ++n2)
                for (std::int64_t n3 = -2; n3 <= 2; ++n3)
                    for (std::int64_t m = -2; m <= 2; ++m) {
                        Complex a = t_sum(q, n1, n2, n3, m).value;
                        Complex b = t_sum_fast(q, n1, n2, n3, m).value;
                        double scale = std::max(1.0, std::abs(a));
                        CHECK(std::abs(a - b) / scale < 1e-9);
                    }
    }
}

TEST_CASE("t_sum_fast example q=45 with shifts") {
    Complex a = t_sum(45, 1, 2, 3, 4).value;
    Complex b = t_sum_fast(45, 1, 2, 3, 4).value;
    CHECK(std::abs(a - b) / std::max(1.0, std::abs(a)) < 1e-9);
    // q = 12 factorizes as T(4) T(3)
    Complex t12 = t_sum_fast(12, 0, 0, 0, 0).value;
    Complex prod = t_sum(4, 0, 0, 0, 0).value * t_sum(3, 0, 0, 0, 0).value;
    CHECK(std::abs(t12 - prod) < 1e-10);
}

TEST_CASE("lemma sweeps on reduced ranges") {
    auto l32 = check_lemma("3.2", 99);
    CHECK(l32.cases > 0);
    CHECK(l32.max_violation < 1e-9);
    auto l34 = check_lemma("3.4", 97);
    CHECK(l34.cases == 24);  // odd primes up to 97
    CHECK(l34.max_violation < 1e-9);
    auto l38 = check_lemma("3.8", 60);
    CHECK(l38.max_violation == 0.0);
    auto l31 = check_lemma("3.1", 60);
    CHECK(l31.max_violation < 1e-9);
    auto l33 = check_lemma("3.3", 64);
    CHECK(l33.max_violation == 0.0);
    CHECK_THROWS(check_lemma("9.9", 10));
}

TEST_SUITE_END();
