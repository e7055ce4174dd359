#pragma once

#include <string>
#include <vector>

#include "qf3/lattice.hpp"

namespace qf3 {

struct ConstantBundle {
    double s1, s1_err;
    double s2, s2_err;
    double i1, i1_err;
    double i2, i2_err;
    double j1, j1_err;
    double j2, j2_err;
    double c1;               // 2 * S1 * J1 (see constants() notes)
    double c2;               // S1 * J2 + S2 * J1
    double c1_closed_form;   // 8 zeta(3) / (5 zeta(5)), from zeta_const
    double c1_discrepancy;   // |c1 - c1_closed_form|
};

// Evaluates every constant from its defining series/integral. The leading
// coefficient carries an explicit factor 2: the divisor sum's logarithm
// splits as log(X^2 u) = 2 log X + log u under the u = x/X^2 change of
// variables, so the X^3 log X coefficient is 2*S1*J1 while the log u part
// lands in C2 through J2. The closed form 8 zeta(3)/(5 zeta(5)) quoted in
// the literature for S1*J1 does not match this evaluation (the product
// actually equals 4 zeta(3)/(5 zeta(4))); both are reported.
ConstantBundle constants();

struct AsymptoticRow {
    std::uint64_t x;
    std::uint64_t s3;
    double prediction;  // C1 X^3 log X + C2 X^3
    double residual;    // s3 - prediction
    double r_cubic;     // residual / X^3
    double r_norm;      // residual / (X^2 log^7 X)
};

std::vector<AsymptoticRow> table(const std::vector<std::uint64_t>& grid);

std::string table_csv(const std::vector<AsymptoticRow>& rows);

// least-squares slope of log|residual| against log X
double residual_slope(const std::vector<AsymptoticRow>& rows);
double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace qf3
