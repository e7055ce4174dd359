#include "qf3/singular.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qf3/arith.hpp"
#include "qf3/expsums.hpp"

namespace qf3 {

namespace {

// Squarefull numbers up to B, each once via the unique a^2 b^3 form with b
// squarefree.
std::vector<double> squarefull_up_to(double B) {
    std::vector<double> out;
    for (std::uint64_t b = 1;; ++b) {
        double b3 = static_cast<double>(b) * b * b;
        if (b3 > B) break;
        if (square_split(b).squarefull != 1 && b != 1) continue;  // b squarefree
        for (std::uint64_t a = 1;; ++a) {
            double v = static_cast<double>(a) * a * b3;
            if (v > B) break;
            out.push_back(v);
        }
    }
    return out;
}

// sum over squarefull t > B of t^{-s}, via the count bound C(t) <= 3 sqrt(t)
// and Abel summation: <= 3 s / (s - 1/2) * B^{1/2 - s}.
double squarefull_tail(double s, double B) {
    return 3.0 * s / (s - 0.5) * std::pow(B, 0.5 - s);
}

// sum_{n > M} n^{-2} <= 1/M for M >= 1.
double zeta2_tail(double M) { return M >= 1.0 ? 1.0 / M : zeta_const(2); }

// sum_{n >= 1} (log n)/n^2 = -zeta'(2), computed by partial sum + integral
// tail bound; sum_{n > M} (log n)/n^2 <= (log M + 1)/M for M >= 3.
double log_zeta2_all() {
    static double v = [] {
        double s = 0;
        const int N = 200000;
        for (int n = 2; n <= N; ++n) s += std::log(n) / (static_cast<double>(n) * n);
        return s + (std::log(static_cast<double>(N)) + 1.0) / N;
    }();
    return v;
}

double log_zeta2_tail(double M) {
    if (M < 3.0) return log_zeta2_all();
    return (std::log(M) + 1.0) / M;
}

// Tail of sum_{q > Q} weight(q) |T(q)|/q^4 with |T(q)|/q^4 <= 4/(q1^2 q2^{3/2})
// (Lemma-3.8-type bound), split over the squarefull part q2.
// with_log: include an extra (2 gamma + 2 log q) weight factor.
double direct_tail(double Q, bool with_log) {
    const double B = 1e8;
    static std::vector<double> sqfull = squarefull_up_to(B);
    double g2 = 2.0 * euler_gamma();
    double t = 0;
    for (double q2 : sqfull) {
        double M = Q / q2;  // q1 ranges over q1 > M (so that q1 q2 > Q)
        double a = zeta2_tail(M);
        double piece = a;
        if (with_log) piece = (g2 + 2.0 * std::log(q2)) * a + 2.0 * log_zeta2_tail(M);
        t += piece / (q2 * std::sqrt(q2));
    }
    // squarefull parts beyond B
    if (!with_log) {
        t += zeta_const(2) * squarefull_tail(1.5, B);
    } else {
        // log q2 <= 2 q2^{1/8} for q2 >= 1e8
        t += zeta_const(2) * (g2 * squarefull_tail(1.5, B) + 4.0 * squarefull_tail(11.0 / 8.0, B)) +
             2.0 * log_zeta2_all() * squarefull_tail(1.5, B);
    }
    return 4.0 * t;
}

double t_value(std::uint64_t q, double tol) {
    Complex v = t_sum_fast(q, 0, 0, 0, 0).value;
    // noise floor scales with the |T(q)| <= 4 q^{5/2} envelope, not with the
    // value itself: exact zeros (e.g. q = 9248) carry ~1e-9 rounding residue
    double floor_abs = 1e-13 * std::pow(static_cast<double>(q), 2.5);
    if (std::abs(v.imag()) > tol * (1.0 + std::abs(v)) + floor_abs)
        throw std::runtime_error("singular: T(q) has unexpected imaginary part");
    return v.real();
}

// Per-term bound |T(p^r)|/p^{4r} from |T(2^r)| <= 2^{2+5r/2}, |T(p^r)| <= p^{5r/2}.
double local_term_bound(std::uint64_t p, int r) {
    double b = std::pow(static_cast<double>(p), -1.5 * r);
    return p == 2 ? 4.0 * b : b;
}

struct LocalFactor {
    double value;      // L_p
    double log_deriv;  // sum_r r log(p) T(p^r)/p^{4r}
    double tail;       // bound for the omitted terms of L_p
    double log_tail;   // bound for the omitted terms of the derivative sum
};

LocalFactor local_factor(std::uint64_t p, double eps) {
    LocalFactor lf{1.0, 0.0, 0.0, 0.0};
    double logp = std::log(static_cast<double>(p));
    std::uint64_t pe = 1;
    int r = 0;
    while (true) {
        ++r;
        if (local_term_bound(p, r) < eps) break;
        pe *= p;
        double term = t_value(pe, 1e-9) / std::pow(static_cast<double>(p), 4.0 * r);
        lf.value += term;
        lf.log_deriv += r * logp * term;
        if (r > 60) throw std::runtime_error("singular: local factor too deep");
    }
    // geometric bound on the rest: sum_{s >= r} bound(s)
    double x = std::pow(static_cast<double>(p), -1.5);
    double geo = std::pow(x, r) / (1.0 - x);
    lf.tail = (p == 2 ? 4.0 : 1.0) * geo;
    lf.log_tail = (p == 2 ? 4.0 : 1.0) * (r + 2) * logp * geo;
    return lf;
}

}  // namespace

SeriesEstimate s1_direct(std::uint64_t Q) {
    if (Q < 1) throw std::invalid_argument("s1_direct: Q >= 1 required");
    double sum = 0;
    for (std::uint64_t q = 1; q <= Q; ++q)
        sum += t_value(q, 1e-9 * static_cast<double>(Q)) /
               std::pow(static_cast<double>(q), 4.0);
    return {sum, Q, direct_tail(static_cast<double>(Q), false),
            SeriesMethod::direct_sum};
}

SeriesEstimate s2_direct(std::uint64_t Q) {
    if (Q < 1) throw std::invalid_argument("s2_direct: Q >= 1 required");
    double g2 = 2.0 * euler_gamma();
    double sum = 0;
    for (std::uint64_t q = 1; q <= Q; ++q)
        sum += (g2 - 2.0 * std::log(static_cast<double>(q))) *
               t_value(q, 1e-9 * static_cast<double>(Q)) /
               std::pow(static_cast<double>(q), 4.0);
    return {sum, Q, direct_tail(static_cast<double>(Q), true),
            SeriesMethod::direct_sum};
}

namespace {

// Shared Euler-product sweep.
struct EulerResult {
    double s1;
    double d;  // sum_q (log q) T(q)/q^4 in product/log-derivative form
    double s1_tail;
    double d_tail;
};

EulerResult euler_sweep(std::uint64_t P, double eps) {
    if (P < 2) throw std::invalid_argument("euler product: P >= 2 required");
    if (eps < 1e-14) throw std::invalid_argument("euler product: eps >= 1e-14");
    auto primes = primes_up_to(static_cast<std::uint32_t>(P));
    double prod = 1.0;
    double dsum = 0.0;      // sum_p log_deriv_p / L_p
    double rel_tail = 0.0;  // relative truncation error of the product
    double d_tail = 0.0;
    for (std::uint32_t p : primes) {
        LocalFactor lf = local_factor(p, eps);
        if (std::abs(lf.value) <= 1e-12)
            throw std::runtime_error("singular: vanishing local factor");
        prod *= lf.value;
        dsum += lf.log_deriv / lf.value;
        rel_tail += lf.tail / std::abs(lf.value);
        d_tail += (lf.log_tail + lf.tail * std::abs(lf.log_deriv / lf.value)) /
                  std::abs(lf.value);
    }
    // primes beyond P: |L_p - 1| <= p^{-2} + sum_{r>=2} p^{-3r/2} <= 1.7 p^{-2},
    // and sum_{p > P} p^{-2} <= 1/P.
    double prime_tail = std::expm1(1.7 / static_cast<double>(P));
    // log-derivative terms beyond P: <= 1.7 log(p)/p^2 summed over p > P,
    // <= 1.7 (log P + 1)/P.
    double d_prime_tail =
        1.7 * (std::log(static_cast<double>(P)) + 1.0) / static_cast<double>(P);
    EulerResult r;
    r.s1 = prod;
    r.d = prod * dsum;
    r.s1_tail = std::abs(prod) * (rel_tail + prime_tail);
    r.d_tail = std::abs(prod) * (d_tail + d_prime_tail) +
               r.s1_tail * std::abs(dsum);
    return r;
}

}  // namespace

SeriesEstimate s1_euler(std::uint64_t P, double eps) {
    EulerResult r = euler_sweep(P, eps);
    return {r.s1, P, r.s1_tail, SeriesMethod::euler_product};
}

SeriesEstimate s2_euler(std::uint64_t P, double eps) {
    EulerResult r = euler_sweep(P, eps);
    double g2 = 2.0 * euler_gamma();
    return {g2 * r.s1 - 2.0 * r.d, P, g2 * r.s1_tail + 2.0 * r.d_tail,
            SeriesMethod::euler_product};
}

}  // namespace qf3
