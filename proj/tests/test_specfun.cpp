#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "qf3/quadrature.hpp"
#include "qf3/specfun.hpp"
#include "qf3/voronoi.hpp"

using namespace qf3;

namespace {

constexpr double kPi = std::numbers::pi;

// independent oracle: K_v(x) = int_0^inf e^{-x cosh t} cosh(v t) dt
double k_oracle(int v, double x) {
    double T = std::acosh(std::fmax(3.0, 80.0 / x)) + 1.0;
    return panel_integrate(
        [&](double t) { return std::exp(-x * std::cosh(t)) * std::cosh(v * t); },
        0.0, T, 60, 20);
}

// independent oracle via the Hankel-loop representation
// H_v^(1)(x) = sqrt(2/(pi x)) e^{i(x - v pi/2 - pi/4)} / Gamma(v+1/2)
//              * int_0^inf e^{-s} s^{v-1/2} (1 + i s/(2x))^{v-1/2} ds
// with s = r^2; Y_v = Im H_v^(1). Panels are graded near r = 0, where the
// (1 + i s/(2x))^{v-1/2} factor turns over sharply when x is small.
double y_oracle(int v, double x) {
    std::complex<double> I(0, 1);
    auto f = [&](double r) -> std::complex<double> {
        double s = r * r;
        std::complex<double> p = std::pow(1.0 + I * s / (2 * x), v - 0.5);
        return 2.0 * std::exp(-s) * std::pow(r, 2 * v) * p;
    };
    std::complex<double> integral = panel_integrate_c(f, 0.0, 0.05, 30, 20) +
                                    panel_integrate_c(f, 0.05, 0.5, 60, 20) +
                                    panel_integrate_c(f, 0.5, 9.0, 80, 20);
    double gam = (v == 0) ? std::sqrt(kPi) : 0.5 * std::sqrt(kPi);
    std::complex<double> h = std::sqrt(2.0 / (kPi * x)) *
                             std::exp(I * (x - v * kPi / 2 - kPi / 4)) / gam *
                             integral;
    return h.imag();
}

}  // namespace

TEST_SUITE_BEGIN("specfun");

TEST_CASE("reference values at x = 1") {
    CHECK(bessel(BesselFamily::Y, 0, 1.0) ==
          doctest::Approx(0.08825696421567696).epsilon(1e-13));
    CHECK(bessel(BesselFamily::K, 0, 1.0) ==
          doctest::Approx(0.42102443824070834).epsilon(1e-13));
    CHECK(bessel(BesselFamily::Y, 1, 1.0) ==
          doctest::Approx(-0.7812128213002887).epsilon(1e-13));
    CHECK(bessel(BesselFamily::K, 1, 1.0) ==
          doctest::Approx(0.6019072301972346).epsilon(1e-13));
}

TEST_CASE("integral-representation oracle sweep") {
    double worst_y = 0, worst_k = 0;
    for (double x = 1e-3; x <= 50.0; x *= 1.17) {
        for (int v = 0; v <= 1; ++v) {
            worst_y = std::max(
                worst_y, std::abs(bessel(BesselFamily::Y, v, x) - y_oracle(v, x)));
            worst_k = std::max(
                worst_k, std::abs(bessel(BesselFamily::K, v, x) - k_oracle(v, x)));
        }
        // order 2 through the oracle-side recurrence, relative tolerance
        // (|Y2| ~ 1.3e6 near x = 1e-3, so absolute comparison is meaningless)
        double y2o = 2.0 / x * y_oracle(1, x) - y_oracle(0, x);
        double k2o = k_oracle(0, x) + 2.0 / x * k_oracle(1, x);
        CHECK(bessel(BesselFamily::Y, 2, x) ==
              doctest::Approx(y2o).epsilon(1e-9));
        CHECK(bessel(BesselFamily::K, 2, x) ==
              doctest::Approx(k2o).epsilon(1e-9));
    }
    CHECK(worst_y < 1e-10);
    CHECK(worst_k < 1e-10);
}

TEST_CASE("derivative recurrences") {
    std::vector<double> grid{0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0};
    CHECK(check_recurrence(BesselFamily::Y, 0, grid) < 1e-6);
    CHECK(check_recurrence(BesselFamily::Y, 1, grid) < 1e-6);
    CHECK(check_recurrence(BesselFamily::K, 0, grid) < 1e-6);
    CHECK(check_recurrence(BesselFamily::K, 1, grid) < 1e-6);
}

TEST_CASE("small-argument logarithmic laws") {
    // |Y0(x) - (2/pi) log(x/2)| and |K0(x) - log(2/x)| stay below 1
    for (double x = 1e-3; x <= 0.1; x *= 1.5) {
        CHECK(std::abs(bessel(BesselFamily::Y, 0, x) -
                       (2.0 / kPi) * std::log(x / 2.0)) <= 1.0);
        CHECK(std::abs(bessel(BesselFamily::K, 0, x) - std::log(2.0 / x)) <= 1.0);
    }
}

TEST_CASE("small-argument power envelope") {
    // x^v |B_v(x)| bounded on (0, 1]; empirical maxima sit at x = 1:
    // |Y1(1)| ~ 0.781, |Y2(1)| ~ 1.651; K envelopes from the leading term
    for (double x = 1e-3; x <= 1.0; x *= 1.6) {
        CHECK(x * std::abs(bessel(BesselFamily::Y, 1, x)) <= 0.79);
        CHECK(x * x * std::abs(bessel(BesselFamily::Y, 2, x)) <= 1.66);
        CHECK(x * std::abs(bessel(BesselFamily::K, 1, x)) <= 1.01);
        CHECK(x * x * std::abs(bessel(BesselFamily::K, 2, x)) <= 2.01);
    }
}

TEST_CASE("large-argument envelopes") {
    // K_v(x) ~ sqrt(pi/(2x)) e^{-x}
    for (int v = 0; v <= 2; ++v) {
        double x = 50.0;
        double ratio = bessel(BesselFamily::K, v, x) /
                       (std::sqrt(kPi / (2.0 * x)) * std::exp(-x));
        CHECK(ratio == doctest::Approx(1.0).epsilon(0.02));
    }
    // |Y_v(x)| <= sqrt(2/(pi x)) (1 + o(1))
    for (double x : {30.0, 100.0, 400.0}) {
        for (int v = 0; v <= 2; ++v)
            CHECK(std::abs(bessel(BesselFamily::Y, v, x)) <=
                  std::sqrt(2.0 / (kPi * x)) * 1.05);
    }
    // K positive and decreasing
    double prev = bessel(BesselFamily::K, 0, 0.5);
    for (double x = 1.0; x <= 30.0; x += 1.7) {
        double cur = bessel(BesselFamily::K, 0, x);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS(bessel(BesselFamily::Y, 3, 1.0));
    CHECK_THROWS(bessel(BesselFamily::Y, -1, 1.0));
    CHECK_THROWS(bessel(BesselFamily::Y, 0, 0.0));
    CHECK_THROWS(bessel(BesselFamily::K, 0, -2.0));
    CHECK_THROWS(bessel(BesselFamily::K, 0, 701.0));
}

TEST_CASE("test weight shape") {
    CHECK(voronoi_weight(0.5) == 0.0);
    CHECK(voronoi_weight(1.0) == 0.0);
    CHECK(voronoi_weight(1.5) == doctest::Approx(0.5));
    CHECK(voronoi_weight(2.0) == 1.0);
    CHECK(voronoi_weight(7.0) == 1.0);
    CHECK(voronoi_weight(11.0) == doctest::Approx(0.5));
    CHECK(voronoi_weight(12.0) == 0.0);
    CHECK(voronoi_weight(13.0) == 0.0);
}

TEST_CASE("summation identity at small moduli") {
    auto r1 = voronoi_check(1, 1, 4000);
    CHECK(r1.lhs.real() == doctest::Approx(27.0).epsilon(1e-9));
    CHECK(r1.rel_residual < 1e-6);

    auto r4 = voronoi_check(4, 3, 8000);
    CHECK(r4.lhs.real() == doctest::Approx(-3.0).epsilon(1e-9));
    CHECK(r4.rel_residual < 1e-4);

    auto r5 = voronoi_check(5, 2, 8000);
    CHECK(r5.rel_residual < 1e-3);
    // conjugate symmetry: a -> q - a conjugates both sides
    auto r5c = voronoi_check(5, 3, 8000);
    CHECK(std::abs(r5c.lhs - std::conj(r5.lhs)) < 1e-12);
    CHECK(std::abs(r5c.rhs - std::conj(r5.rhs)) < 1e-9);
}

TEST_CASE("residual halves when the dual truncation doubles") {
    auto a = voronoi_check(5, 2, 8000);
    auto b = voronoi_check(5, 2, 16000);
    CHECK(b.residual <= 0.55 * a.residual);
}

TEST_CASE("summation identity rejects bad input") {
    CHECK_THROWS(voronoi_check(0, 1, 4000));
    CHECK_THROWS(voronoi_check(4, 2, 4000));  // gcd(2, 4) != 1
    CHECK_THROWS(voronoi_check(3, 1, 8));
}

TEST_SUITE_END();
