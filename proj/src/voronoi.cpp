#include "qf3/voronoi.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "qf3/archimedean.hpp"
#include "qf3/arith.hpp"
#include "qf3/quadrature.hpp"
#include "qf3/specfun.hpp"

namespace qf3 {

namespace {

using Cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;
constexpr Cplx kI{0.0, 1.0};

Cplx unit(double frac) { return {std::cos(2.0 * kPi * frac), std::sin(2.0 * kPi * frac)}; }

// smooth pieces of the weight in the u = sqrt(x) variable
struct Piece {
    double ua, ub;
};

const Piece kPieces[3] = {{1.0, std::numbers::sqrt2},
                          {std::numbers::sqrt2, 3.1622776601683795},
                          {3.1622776601683795, 3.4641016151377546}};

// Hankel coefficients a_k(0)
double hankel_a0(int k) {
    double num = 1.0, den = 1.0;
    for (int j = 1; j <= k; ++j) {
        num *= -(2.0 * j - 1.0) * (2.0 * j - 1.0);
        den *= 8.0 * j;
    }
    return num / den;
}

constexpr int kHankelTerms = 10;  // a_k / z^k, z >= 40: remainder < 1e-12
constexpr int kFitDegree = 18;
constexpr double kOscSwitch = 40.0;

// Legendre coefficients of 2 g(u^2) u^{1/2-k} on each piece (v in [-1,1])
const std::vector<double>& piece_coeffs(int piece, int k) {
    static std::vector<double> cache[3][kHankelTerms];
    static bool built = false;
    if (!built) {
        for (int p = 0; p < 3; ++p) {
            double um = 0.5 * (kPieces[p].ua + kPieces[p].ub);
            double h = 0.5 * (kPieces[p].ub - kPieces[p].ua);
            for (int kk = 0; kk < kHankelTerms; ++kk) {
                cache[p][kk] = legendre_fit(
                    [um, h, kk](double v) {
                        double u = um + h * v;
                        return 2.0 * voronoi_weight(u * u) *
                               std::pow(u, 0.5 - kk);
                    },
                    kFitDegree);
            }
        }
        built = true;
    }
    return cache[piece][k];
}

// int_1^{sqrt 12} 2 u g(u^2) Y0(t u) du
double y_transform_integral(double t) {
    if (t < kOscSwitch) {
        double s = 0;
        for (const Piece& p : kPieces) {
            int panels = 4 + static_cast<int>(t * (p.ub - p.ua) / 3.0);
            s += panel_integrate(
                [t](double u) {
                    return 2.0 * u * voronoi_weight(u * u) *
                           bessel(BesselFamily::Y, 0, t * u);
                },
                p.ua, p.ub, panels, 16);
        }
        return s;
    }
    // Y0(tu) = Im[ e^{i(tu - pi/4)} sum_k i^k a_k (tu)^{-k} ] sqrt(2/(pi t u));
    // fold u^{-1/2-k} into per-piece Legendre fits and use
    // int_{-1}^1 P_j(v) e^{i w v} dv = 2 i^j j_j(w).
    Cplx total = 0.0;
    for (int p = 0; p < 3; ++p) {
        double um = 0.5 * (kPieces[p].ua + kPieces[p].ub);
        double h = 0.5 * (kPieces[p].ub - kPieces[p].ua);
        std::vector<double> jn = spherical_jn(kFitDegree, t * h);
        Cplx phase = std::polar(1.0, t * um);
        Cplx ik = 1.0;
        double tk = 1.0;
        Cplx piece_sum = 0.0;
        for (int k = 0; k < kHankelTerms; ++k) {
            const std::vector<double>& c = piece_coeffs(p, k);
            Cplx ij = 1.0;
            Cplx mom = 0.0;
            for (int j = 0; j <= kFitDegree; ++j) {
                mom += c[j] * ij * (2.0 * jn[j]);
                ij *= kI;
            }
            piece_sum += ik * hankel_a0(k) / tk * mom;
            ik *= kI;
            tk *= t;
        }
        total += phase * h * piece_sum;
    }
    Cplx pref = std::polar(1.0, -kPi / 4.0) * std::sqrt(2.0 / (kPi * t));
    return (pref * total).imag();
}

// int_1^{sqrt 12} 2 u g(u^2) K0(t u) du
double k_transform_integral(double t) {
    double s = 0;
    for (const Piece& p : kPieces) {
        if (t * p.ua > 45.0) break;  // e^{-45} below noise
        int panels = 8 + static_cast<int>(t / 3.0);
        s += panel_integrate(
            [t](double u) {
                return 2.0 * u * voronoi_weight(u * u) *
                       bessel(BesselFamily::K, 0, t * u);
            },
            p.ua, p.ub, panels, 12);
    }
    return s;
}

}  // namespace

double voronoi_weight(double x) {
    if (x <= 1.0 || x >= 12.0) return 0.0;
    if (x < 2.0) return smoothstep01(x - 1.0);
    if (x <= 10.0) return 1.0;
    return 1.0 - smoothstep01((x - 10.0) / 2.0);
}

VoronoiResult voronoi_check(std::uint64_t q, std::int64_t a,
                            std::uint64_t n_trunc) {
    if (q == 0) throw std::invalid_argument("voronoi_check: q >= 1");
    if (n_trunc < 16) throw std::invalid_argument("voronoi_check: n_trunc >= 16");
    std::uint64_t ar = ((a % static_cast<std::int64_t>(q)) +
                        static_cast<std::int64_t>(q)) %
                       static_cast<std::int64_t>(q);
    if (q > 1 && std::gcd(ar, q) != 1)
        throw std::invalid_argument("voronoi_check: gcd(a, q) = 1 required");
    std::uint64_t abar = (q == 1) ? 0 : inv_mod(ar, q);

    DivisorSieve tau(std::max<std::uint64_t>(n_trunc, 16));

    // left side: support of g is [1, 12]
    Cplx lhs = 0.0;
    for (std::uint64_t n = 1; n <= 12; ++n)
        lhs += static_cast<double>(tau[n]) * voronoi_weight(static_cast<double>(n)) *
               unit(static_cast<double>(ar * n % q) / static_cast<double>(q));

    // main term
    double g2 = 2.0 * euler_gamma();
    double lq = std::log(static_cast<double>(q));
    double main = 0.0;
    for (const Piece& p : kPieces) {
        double xa = p.ua * p.ua, xb = p.ub * p.ub;
        main += panel_integrate(
            [&](double x) {
                return (std::log(x) + g2 - 2.0 * lq) * voronoi_weight(x);
            },
            xa, xb, 8, 20);
    }
    main /= static_cast<double>(q);

    // dual sums
    double fourpi_q = 4.0 * kPi / static_cast<double>(q);
    Cplx ysum = 0.0;
    for (std::uint64_t n = 1; n <= n_trunc; ++n) {
        double t = fourpi_q * std::sqrt(static_cast<double>(n));
        double gy = -(2.0 * kPi / static_cast<double>(q)) * y_transform_integral(t);
        ysum += static_cast<double>(tau[n]) * gy *
                unit(-static_cast<double>(abar * n % q) / static_cast<double>(q));
    }
    Cplx ksum = 0.0;
    std::uint64_t nk_max = static_cast<std::uint64_t>(11.0 * q * q) + 8;
    DivisorSieve tauk(std::max<std::uint64_t>(nk_max, 16));
    for (std::uint64_t n = 1; n <= nk_max; ++n) {
        double t = fourpi_q * std::sqrt(static_cast<double>(n));
        double gk = (4.0 / static_cast<double>(q)) * k_transform_integral(t);
        ksum += static_cast<double>(tauk[n]) * gk *
                unit(static_cast<double>(abar * n % q) / static_cast<double>(q));
    }

    VoronoiResult r;
    r.q = q;
    r.a = a;
    r.n_trunc = n_trunc;
    r.lhs = lhs;
    r.rhs = main + ysum + ksum;
    r.residual = std::abs(r.lhs - r.rhs);
    r.rel_residual = r.residual / std::max(1.0, std::abs(r.lhs));
    return r;
}

}  // namespace qf3
