#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <numeric>

#include "qf3/arith.hpp"

using namespace qf3;

namespace {

// splitmix64, fixed seed for reproducibility
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

std::uint64_t count_divisors_trial(std::uint64_t n) {
    std::uint64_t c = 0;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) c += (d * d == n) ? 1 : 2;
    }
    return c;
}

}  // namespace

TEST_SUITE_BEGIN("arith");

TEST_CASE("factorize examples") {
    CHECK(factorize(1).factors.empty());
    auto f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == std::pair<std::uint64_t, int>{2, 2});
    CHECK(f12.factors[1] == std::pair<std::uint64_t, int>{3, 1});
    auto f360 = factorize(360);
    CHECK(f360.value() == 360);
    REQUIRE(f360.factors.size() == 3);
    CHECK(f360.factors[0] == std::pair<std::uint64_t, int>{2, 3});
    CHECK(f360.factors[1] == std::pair<std::uint64_t, int>{3, 2});
    CHECK(f360.factors[2] == std::pair<std::uint64_t, int>{5, 1});
    CHECK_THROWS(factorize(0));
}

TEST_CASE("factorize round-trips on random inputs") {
    Rng rng;
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t n = rng.next() % 1000000000ull + 1;
        auto f = factorize(n);
        CHECK(f.value() == n);
        std::uint64_t prev = 1;
        for (auto [p, e] : f.factors) {
            CHECK(p > prev);
            CHECK(e >= 1);
            prev = p;
        }
    }
}

TEST_CASE("factorize handles large semiprimes via rho fallback") {
    // 1000003 * 1000033 both prime, product above the 2^20 trial bound
    std::uint64_t n = 1000003ull * 1000033ull;
    auto f = factorize(n);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].first == 1000003);
    CHECK(f.factors[1].first == 1000033);
}

TEST_CASE("divisor sieve exact values") {
    DivisorSieve s(100);
    CHECK(s[1] == 1);
    CHECK(s[2] == 2);
    CHECK(s[12] == 6);
    CHECK(s[36] == 9);
    CHECK(s[97] == 2);
}

TEST_CASE("divisor sieve matches trial division up to 1e4") {
    DivisorSieve s(10000);
    for (std::uint64_t n = 1; n <= 10000; ++n)
        CHECK(s[n] == count_divisors_trial(n));
}

TEST_CASE("divisor sum obeys the hyperbola asymptotic at 1e6") {
    const std::uint64_t N = 1000000;
    DivisorSieve s(N);
    double sum = 0;
    for (std::uint64_t n = 1; n <= N; ++n) sum += s[n];
    double main = N * std::log(static_cast<double>(N)) +
                  (2.0 * euler_gamma() - 1.0) * N;
    CHECK(std::abs(sum - main) <= 3.0 * std::sqrt(static_cast<double>(N)));
}

TEST_CASE("divisor sieve rejects over-cap requests") {
    CHECK_THROWS(DivisorSieve(1000, 100));
}

TEST_CASE("jacobi examples") {
    CHECK(jacobi(1, 9) == 1);
    CHECK(jacobi(2, 15) == 1);  // 15 = 7 mod 8
    CHECK(jacobi(3, 5) == -1);
    CHECK(jacobi(0, 3) == 0);
    CHECK(jacobi(-1, 3) == -1);
    CHECK_THROWS(jacobi(3, 4));
}

TEST_CASE("jacobi matches quadratic residues for odd primes") {
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        for (std::uint64_t a = 1; a < p; ++a) {
            bool qr = false;
            for (std::uint64_t x = 1; x < p; ++x)
                if (x * x % p == a) qr = true;
            CHECK(jacobi(static_cast<std::int64_t>(a), p) == (qr ? 1 : -1));
        }
    }
}

TEST_CASE("jacobi is completely multiplicative in both arguments") {
    for (std::int64_t a = 1; a <= 200; ++a) {
        for (std::int64_t b = 1; b <= 50; ++b) {
            CHECK(jacobi(a * b, 101) == jacobi(a, 101) * jacobi(b, 101));
        }
    }
    for (std::uint64_t n = 1; n <= 201; n += 2) {
        for (std::uint64_t m = 1; m <= 201; m += 2) {
            CHECK(jacobi(7, n * m) == jacobi(7, n) * jacobi(7, m));
        }
    }
}

TEST_CASE("square split examples and invariants") {
    auto s1 = square_split(1);
    CHECK(s1.squarefree == 1);
    CHECK(s1.squarefull == 1);
    auto s12 = square_split(12);
    CHECK(s12.squarefree == 3);
    CHECK(s12.squarefull == 4);
    auto s360 = square_split(360);
    CHECK(s360.squarefree == 5);
    CHECK(s360.squarefull == 72);

    for (std::uint64_t q = 1; q <= 100000; ++q) {
        auto sp = square_split(q);
        CHECK(sp.squarefree * sp.squarefull == q);
        CHECK(std::gcd(sp.squarefree, sp.squarefull) == 1);
    }
}

TEST_CASE("zeta and gamma constants") {
    // references from slowly converging partial sums with integral tail,
    // computed by the oracle below
    auto zeta_oracle = [](int s) {
        const double N = 50000.0;
        long double sum = 0;
        for (int n = 1; n < static_cast<int>(N); ++n)
            sum += powl(static_cast<long double>(n), -static_cast<long double>(s));
        // integral tail with midpoint correction
        sum += powl(N, 1.0L - s) / (s - 1) + powl(N, -static_cast<long double>(s)) / 2.0L;
        return static_cast<double>(sum);
    };
    CHECK(zeta_const(3) == doctest::Approx(1.2020569031595943).epsilon(1e-13));
    CHECK(zeta_const(5) == doctest::Approx(1.0369277551433699).epsilon(1e-13));
    CHECK(zeta_const(4) == doctest::Approx(1.0823232337111382).epsilon(1e-13));
    CHECK(std::abs(zeta_const(3) - zeta_oracle(3)) < 1e-11);
    CHECK(std::abs(zeta_const(5) - zeta_oracle(5)) < 1e-11);

    // gamma oracle: harmonic sum at large N with only the 1/(2N) correction
    const std::uint64_t N = 10000000;
    long double h = 0;
    for (std::uint64_t n = 1; n <= N; ++n) h += 1.0L / n;
    double gamma_oracle =
        static_cast<double>(h - logl(static_cast<long double>(N)) - 0.5L / N);
    CHECK(euler_gamma() == doctest::Approx(0.5772156649015329).epsilon(1e-13));
    CHECK(std::abs(euler_gamma() - gamma_oracle) < 1e-12);
}

TEST_SUITE_END();
