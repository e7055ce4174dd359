#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace qf3 {

// Gauss-Legendre rule on [-1, 1], nodes ascending. Cached per n.
struct GLRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GLRule& gauss_legendre(int n);

double gl_integrate(const std::function<double(double)>& f, double a, double b,
                    int n);
std::complex<double> gl_integrate_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int n);

// Split [a, b] into `panels` equal panels, n-point rule on each.
double panel_integrate(const std::function<double(double)>& f, double a,
                       double b, int panels, int n);
std::complex<double> panel_integrate_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    int panels, int n);

// Legendre polynomial P_k(x) and the coefficients of the Legendre expansion
// f(t) ~ sum_k c_k P_k(t) on [-1,1], computed by Gauss-Legendre projection.
double legendre_p(int k, double x);
std::vector<double> legendre_fit(const std::function<double(double)>& f,
                                 int degree);

// Spherical Bessel j_k(x) for k = 0..kmax; upward recurrence for x > kmax,
// Miller downward recurrence otherwise. j_k(0) = delta_{k0}.
std::vector<double> spherical_jn(int kmax, double x);

}  // namespace qf3
