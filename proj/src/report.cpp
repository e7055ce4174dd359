#include "qf3/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "qf3/archimedean.hpp"
#include "qf3/arith.hpp"
#include "qf3/singular.hpp"

namespace qf3 {

ConstantBundle constants() {
    ConstantBundle b{};
    auto s1 = s1_euler(10000, 1e-12);
    auto s2 = s2_euler(10000, 1e-12);
    b.s1 = s1.value;
    b.s1_err = s1.tail_bound;
    b.s2 = s2.value;
    b.s2_err = s2.tail_bound;
    auto i1 = singular_integral(SingularIntegralKind::I1);
    auto i2 = singular_integral(SingularIntegralKind::I2);
    auto j1 = singular_integral(SingularIntegralKind::J1);
    auto j2 = singular_integral(SingularIntegralKind::J2);
    b.i1 = i1.value;
    b.i1_err = i1.abs_error_estimate;
    b.i2 = i2.value;
    b.i2_err = i2.abs_error_estimate;
    b.j1 = j1.value;
    b.j1_err = j1.abs_error_estimate;
    b.j2 = j2.value;
    b.j2_err = j2.abs_error_estimate;
    // factor 2: log(X^2 u) = 2 log X + log u, so the X^3 log X coefficient
    // doubles while the log u piece is already inside J2
    b.c1 = 2.0 * b.s1 * b.j1;
    b.c2 = b.s1 * b.j2 + b.s2 * b.j1;
    b.c1_closed_form = 8.0 * zeta_const(3) / (5.0 * zeta_const(5));
    b.c1_discrepancy = std::abs(b.c1 - b.c1_closed_form);
    return b;
}

std::vector<AsymptoticRow> table(const std::vector<std::uint64_t>& grid) {
    ConstantBundle c = constants();
    std::vector<AsymptoticRow> rows;
    rows.reserve(grid.size());
    for (std::uint64_t x : grid) {
        if (x == 0) throw std::invalid_argument("table: X >= 1");
        S3Method m = x <= 300 ? S3Method::naive : S3Method::convolution;
        AsymptoticRow row;
        row.x = x;
        row.s3 = s3(static_cast<double>(x), m).value;
        double xd = static_cast<double>(x);
        double lx = std::log(xd);
        row.prediction = c.c1 * xd * xd * xd * lx + c.c2 * xd * xd * xd;
        row.residual = static_cast<double>(row.s3) - row.prediction;
        row.r_cubic = row.residual / (xd * xd * xd);
        row.r_norm = x == 1 ? 0.0
                            : row.residual / (xd * xd * std::pow(lx, 7.0));
        rows.push_back(row);
    }
    return rows;
}

std::string table_csv(const std::vector<AsymptoticRow>& rows) {
    std::string out = "X,S3,prediction,residual,r_cubic,r_norm\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof(buf), "%llu,%llu,%.12g,%.12g,%.12g,%.12g\n",
                      static_cast<unsigned long long>(r.x),
                      static_cast<unsigned long long>(r.s3), r.prediction,
                      r.residual, r.r_cubic, r.r_norm);
        out += buf;
    }
    return out;
}

double fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("fit_slope: need >= 2 matched points");
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-12 * n * sxx)
        throw std::invalid_argument("fit_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

double residual_slope(const std::vector<AsymptoticRow>& rows) {
    if (rows.size() < 4)
        throw std::invalid_argument("residual_slope: need >= 4 rows");
    double lo = 1e300, hi = 0;
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
        lo = std::min(lo, static_cast<double>(r.x));
        hi = std::max(hi, static_cast<double>(r.x));
        xs.push_back(std::log(static_cast<double>(r.x)));
        ys.push_back(std::log(std::abs(r.residual)));
    }
    if (hi < 8.0 * lo)
        throw std::invalid_argument(
            "residual_slope: grid must span at least a factor of 8");
    return fit_slope(xs, ys);
}

}  // namespace qf3
