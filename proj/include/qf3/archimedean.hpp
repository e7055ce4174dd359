#pragma once

#include <complex>

namespace qf3 {

enum class SingularIntegralKind { I1, I2, J1, J2 };

struct QuadratureResult {
    double value;
    double abs_error_estimate;  // beta tail bound + inner quadrature estimate
    double truncation_radius;
    bool tolerance_met;
};

// integral over [0,1] of e(x^2 beta) dx; conjugation symmetric in beta.
std::complex<double> fresnel_kernel(double beta);

// I1 = int over beta of fresnel^3 * (int_0^3 e(-x beta) dx)
// I2 = same with a log x weight in the second factor
// J1, J2 = same with the smooth w0 cutoff (1 on [0,3], C^2 drop to 0 at 4)
// in place of the sharp [0,3] cutoff.
QuadratureResult singular_integral(SingularIntegralKind which,
                                   double B = 2000.0, double tol = 1e-4);

// Independent oracle for I2 by Fourier inversion:
// integral over [0,1]^3 of log(x1^2 + x2^2 + x3^2).
double volume_oracle_I2();

// quintic smoothstep: 0 at t<=0, 1 at t>=1, C^2 across the joins
double smoothstep01(double t);
// 1 on [0,3], 1 - smoothstep01(x-3) on [3,4], 0 beyond
double w0_weight(double x);

}  // namespace qf3
