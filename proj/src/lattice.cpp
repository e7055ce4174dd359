#include "qf3/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qf3/arith.hpp"

namespace qf3 {

namespace {

constexpr std::uint64_t kNttPrime = (29ull << 57) + 1;  // 4179340454199820289
constexpr std::uint64_t kNttRoot = 3;

std::uint64_t floor_x_checked(double x, std::uint64_t cap, const char* who) {
    if (!(x >= 1.0)) throw std::invalid_argument(std::string(who) + ": X >= 1 required");
    std::uint64_t fx = static_cast<std::uint64_t>(std::floor(x));
    if (fx > cap) throw std::length_error(std::string(who) + ": floor(X) exceeds cap");
    return fx;
}

// in-place iterative radix-2 transform, bit-reversed input ordering
void ntt(std::vector<std::uint64_t>& a, bool inverse) {
    std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        std::uint64_t w = pow_mod(kNttRoot, (kNttPrime - 1) / len, kNttPrime);
        if (inverse) w = inv_mod(w, kNttPrime);
        for (std::size_t i = 0; i < n; i += len) {
            std::uint64_t wj = 1;
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::uint64_t u = a[i + j];
                std::uint64_t v = mul_mod(a[i + j + len / 2], wj, kNttPrime);
                a[i + j] = u + v < kNttPrime ? u + v : u + v - kNttPrime;
                a[i + j + len / 2] = u >= v ? u - v : u + kNttPrime - v;
                wj = mul_mod(wj, w, kNttPrime);
            }
        }
    }
    if (inverse) {
        std::uint64_t ninv = inv_mod(n, kNttPrime);
        for (auto& v : a) v = mul_mod(v, ninv, kNttPrime);
    }
}

}  // namespace

LatticeCountTable counts_naive(double x) {
    std::uint64_t fx = floor_x_checked(x, 800, "counts_naive");
    LatticeCountTable t;
    t.floor_x = fx;
    t.counts.assign(3 * fx * fx + 1, 0);
    for (std::uint64_t m1 = 1; m1 <= fx; ++m1)
        for (std::uint64_t m2 = 1; m2 <= fx; ++m2)
            for (std::uint64_t m3 = 1; m3 <= fx; ++m3)
                ++t.counts[m1 * m1 + m2 * m2 + m3 * m3];
    return t;
}

LatticeCountTable counts_convolution(double x) {
    std::uint64_t fx = floor_x_checked(x, 10000, "counts_convolution");
    std::uint64_t out_len = 3 * fx * fx + 1;
    std::size_t n = 1;
    while (n < out_len) n <<= 1;
    std::vector<std::uint64_t> a(n, 0);
    for (std::uint64_t m = 1; m <= fx; ++m) a[m * m] = 1;
    ntt(a, false);
    for (auto& v : a) {
        std::uint64_t s = mul_mod(v, v, kNttPrime);
        v = mul_mod(s, v, kNttPrime);
    }
    ntt(a, true);
    LatticeCountTable t;
    t.floor_x = fx;
    t.counts.assign(out_len, 0);
    // the true counts are bounded by fx^2 < 2^31 << p, so the residues are
    // already the exact integers
    for (std::uint64_t i = 0; i < out_len; ++i)
        t.counts[i] = static_cast<std::uint32_t>(a[i]);
    return t;
}

S3Result s3(double x, S3Method method) {
    LatticeCountTable t =
        method == S3Method::naive ? counts_naive(x) : counts_convolution(x);
    std::uint64_t limit = 3 * t.floor_x * t.floor_x;
    DivisorSieve tau(limit, std::max<std::uint64_t>(limit, 1) + 1);
    std::uint64_t total = 0;
    for (std::uint64_t nn = 3; nn <= limit; ++nn)
        total += static_cast<std::uint64_t>(t.counts[nn]) * tau[nn];
    return {x, t.floor_x, total, method};
}

}  // namespace qf3
