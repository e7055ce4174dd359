#include "qf3/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qf3 {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = m, nr = a % m;
    while (nr != 0) {
        std::uint64_t q = r / nr;
        std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
        t = nt;
        nt = tmp;
        std::uint64_t rr = r - q * nr;
        r = nr;
        nr = rr;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: arguments not coprime");
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

namespace {

bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t pollard_rho(std::uint64_t n) {
    if ((n & 1) == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto f = [n, c](std::uint64_t x) {
            return (mul_mod(x, x, n) + c) % n;
        };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    for (std::uint64_t p = 2; p * p <= n && p < (1u << 20); p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.factors.emplace_back(p, e);
        }
    }
    if (n > 1) {
        // leftover cofactor beyond the trial bound
        std::vector<std::uint64_t> rest;
        factor_rec(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            f.factors.emplace_back(rest[i], static_cast<int>(j - i));
            i = j;
        }
    }
    return f;
}

DivisorSieve::DivisorSieve(std::uint64_t limit, std::uint64_t memory_cap)
    : limit_(limit) {
    if (limit == 0) throw std::invalid_argument("DivisorSieve: limit must be >= 1");
    if (limit > memory_cap)
        throw std::length_error("DivisorSieve: limit exceeds memory cap");
    tau_.assign(limit + 1, 0);
    for (std::uint64_t d = 1; d <= limit; ++d)
        for (std::uint64_t m = d; m <= limit; m += d) ++tau_[m];
}

int jacobi(std::int64_t a, std::uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: n must be odd and positive");
    std::uint64_t ua = static_cast<std::uint64_t>(
        ((a % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
        static_cast<std::int64_t>(n));
    int t = 1;
    while (ua != 0) {
        while ((ua & 1) == 0) {
            ua >>= 1;
            std::uint64_t r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(ua, n);
        if ((ua & 3) == 3 && (n & 3) == 3) t = -t;
        ua %= n;
    }
    return n == 1 ? t : 0;
}

SquareSplit square_split(std::uint64_t q) {
    if (q == 0) throw std::invalid_argument("square_split: q must be positive");
    Factorization f = factorize(q);
    SquareSplit s{1, 1};
    for (auto [p, e] : f.factors) {
        std::uint64_t pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        if (e == 1)
            s.squarefree *= pe;
        else
            s.squarefull *= pe;
    }
    return s;
}

double zeta_const(int s) {
    if (s < 2) throw std::invalid_argument("zeta_const: s must be >= 2");
    // Euler-Maclaurin: sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2 + correction terms
    const long double N = 40.0L;
    long double sum = 0.0L;
    for (int n = 1; n < static_cast<int>(N); ++n)
        sum += powl(static_cast<long double>(n), -static_cast<long double>(s));
    long double Ns = powl(N, -static_cast<long double>(s));
    sum += Ns * N / (s - 1) + Ns / 2.0L;
    // Bernoulli numbers B2, B4, B6, B8, B10
    static const long double bern[] = {1.0L / 6, -1.0L / 30, 1.0L / 42,
                                       -1.0L / 30, 5.0L / 66};
    long double rising = static_cast<long double>(s);  // s(s+1)...(s+2j-2)
    long double Npow = Ns / N;                         // N^{-s-1}
    long double fact = 2.0L;                           // (2j)!
    for (int j = 1; j <= 5; ++j) {
        sum += bern[j - 1] * rising * Npow / fact;
        rising *= (s + 2 * j - 1) * (s + 2 * j);
        Npow /= N * N;
        fact *= (2 * j + 1) * (2 * j + 2);
    }
    return static_cast<double>(sum);
}

double euler_gamma() {
    const long double N = 1000.0L;
    long double h = 0.0L;
    for (int n = 1; n <= static_cast<int>(N); ++n) h += 1.0L / n;
    long double g = h - logl(N) - 1.0L / (2.0L * N);
    long double N2 = N * N;
    g += 1.0L / (12.0L * N2) - 1.0L / (120.0L * N2 * N2) +
         1.0L / (252.0L * N2 * N2 * N2);
    return static_cast<double>(g);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
    std::vector<bool> is(n + 1, true);
    std::vector<std::uint32_t> out;
    if (n < 2) return out;
    is[0] = is[1] = false;
    for (std::uint32_t i = 2; i <= n; ++i) {
        if (is[i]) {
            out.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= n;
                 j += i)
                is[j] = false;
        }
    }
    return out;
}

}  // namespace qf3
