#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qf3 {

// Prime-power decomposition, primes ascending, exponents >= 1.
// factorize(1) yields an empty factor list.
struct Factorization {
    std::vector<std::pair<std::uint64_t, int>> factors;

    std::uint64_t value() const;
};

Factorization factorize(std::uint64_t n);

// tau[n] = number of divisors of n, exact, for 1 <= n <= limit.
class DivisorSieve {
  public:
    explicit DivisorSieve(std::uint64_t limit,
                          std::uint64_t memory_cap = (std::uint64_t{1} << 28));

    std::uint64_t limit() const { return limit_; }
    std::uint32_t operator[](std::uint64_t n) const { return tau_[n]; }
    const std::vector<std::uint32_t>& tau() const { return tau_; }

  private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> tau_;
};

// Jacobi symbol (a/n), n odd positive. Throws on even n.
int jacobi(std::int64_t a, std::uint64_t n);

// q = squarefree * squarefull, gcd(squarefree, squarefull) = 1.
struct SquareSplit {
    std::uint64_t squarefree;
    std::uint64_t squarefull;
};

SquareSplit square_split(std::uint64_t q);

// zeta(s) for integer s >= 2, Euler-Maclaurin, abs error well below 1e-12.
double zeta_const(int s);
double euler_gamma();

// Modular helpers on uint64, correct for all inputs via 128-bit products.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
// Inverse of a mod m, gcd(a, m) = 1 required (throws otherwise).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

}  // namespace qf3
