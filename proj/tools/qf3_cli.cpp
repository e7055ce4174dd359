#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qf3/archimedean.hpp"
#include "qf3/arith.hpp"
#include "qf3/expsums.hpp"
#include "qf3/lattice.hpp"
#include "qf3/majorarc.hpp"
#include "qf3/report.hpp"
#include "qf3/singular.hpp"
#include "qf3/specfun.hpp"
#include "qf3/voronoi.hpp"

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::fputs(text.c_str(), stdout);
    } else {
        std::ofstream f(out_path);
        f << text;
    }
}

struct CheckTally {
    int failures = 0;

    void line(const std::string& name, bool pass, const std::string& detail) {
        std::printf("%-34s %s  %s\n", name.c_str(), pass ? "pass" : "FAIL",
                    detail.c_str());
        if (!pass) ++failures;
    }
};

int run_sum(double x, const std::string& method) {
    qf3::S3Method m = method == "naive" ? qf3::S3Method::naive
                                        : qf3::S3Method::convolution;
    auto t0 = std::chrono::steady_clock::now();
    qf3::S3Result r = qf3::s3(x, m);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::printf(
        "{\"X\": %s, \"floorX\": %llu, \"S3\": %llu, \"method\": \"%s\", "
        "\"elapsed_ms\": %s}\n",
        num(x).c_str(), static_cast<unsigned long long>(r.floor_x),
        static_cast<unsigned long long>(r.value), method.c_str(),
        num(ms).c_str());
    return 0;
}

int run_constants() {
    auto c = qf3::constants();
    std::printf("{\n");
    std::printf("  \"S1\": %s, \"S1_err\": %s,\n", num(c.s1).c_str(),
                num(c.s1_err).c_str());
    std::printf("  \"S2\": %s, \"S2_err\": %s,\n", num(c.s2).c_str(),
                num(c.s2_err).c_str());
    std::printf("  \"I1\": %s, \"I1_err\": %s,\n", num(c.i1).c_str(),
                num(c.i1_err).c_str());
    std::printf("  \"I2\": %s, \"I2_err\": %s,\n", num(c.i2).c_str(),
                num(c.i2_err).c_str());
    std::printf("  \"J1\": %s, \"J1_err\": %s,\n", num(c.j1).c_str(),
                num(c.j1_err).c_str());
    std::printf("  \"J2\": %s, \"J2_err\": %s,\n", num(c.j2).c_str(),
                num(c.j2_err).c_str());
    std::printf("  \"C1\": %s, \"C2\": %s,\n", num(c.c1).c_str(),
                num(c.c2).c_str());
    std::printf("  \"C1_closed_form\": %s, \"C1_discrepancy\": %s\n",
                num(c.c1_closed_form).c_str(), num(c.c1_discrepancy).c_str());
    std::printf("}\n");
    return 0;
}

int run_table(const std::vector<std::uint64_t>& xs, const std::string& out) {
    auto rows = qf3::table(xs);
    emit(qf3::table_csv(rows), out);
    return 0;
}

int run_bessel(const std::string& family, int order, double x) {
    qf3::BesselFamily fam =
        family == "Y" ? qf3::BesselFamily::Y : qf3::BesselFamily::K;
    double v = qf3::bessel(fam, order, x);
    std::printf("{\"family\": \"%s\", \"order\": %d, \"x\": %s, \"value\": %s}\n",
                family.c_str(), order, num(x).c_str(), num(v).c_str());
    return 0;
}

int run_check_lemmas(std::uint64_t qmax, CheckTally& tally) {
    auto reports = qf3::check_all_lemmas(qmax);
    for (const auto& r : reports) {
        bool pass = r.max_violation <= 1e-9;
        tally.line("lemma " + r.lemma, pass,
                   "cases=" + std::to_string(r.cases) +
                       " max_violation=" + num(r.max_violation));
    }
    return tally.failures ? 1 : 0;
}

int run_check_voronoi(std::uint64_t q, std::int64_t a, std::uint64_t n_trunc,
                      double tol, CheckTally& tally) {
    auto r = qf3::voronoi_check(q, a, n_trunc);
    bool pass = r.rel_residual <= tol;
    tally.line("voronoi q=" + std::to_string(q) + " a=" + std::to_string(a),
               pass,
               "n_trunc=" + std::to_string(n_trunc) +
                   " residual=" + num(r.residual) +
                   " rel=" + num(r.rel_residual));
    return tally.failures ? 1 : 0;
}

int run_check_majorarc(double x, std::uint64_t qmax, const std::string& out,
                       CheckTally& tally) {
    std::string csv = "q,a,beta,residual,budget,ratio\n";
    bool all_pass = true;
    std::uint64_t p = static_cast<std::uint64_t>(5.0 * x);
    for (std::uint64_t q = 1; q <= qmax; ++q) {
        for (std::uint64_t a = 1; a <= q; ++a) {
            if (std::gcd(a, q) != 1) continue;
            for (double s : {0.0, 0.5, 1.0, -0.5, -1.0}) {
                qf3::ArcPoint pt{q, static_cast<std::int64_t>(a),
                                 s / (static_cast<double>(q) * p), x};
                qf3::ResidualBudget rb = x <= 200.0
                                             ? qf3::lemma42_residual(pt)
                                             : qf3::lemma41_residual(pt);
                double ratio = rb.residual / rb.budget;
                if (rb.residual > rb.budget) all_pass = false;
                csv += std::to_string(q) + "," + std::to_string(a) + "," +
                       num(pt.beta) + "," + num(rb.residual) + "," +
                       num(rb.budget) + "," + num(ratio) + "\n";
            }
        }
    }
    emit(csv, out);
    tally.line("majorarc X=" + num(x) + " qmax=" + std::to_string(qmax),
               all_pass, x <= 200.0 ? "lemma 4.2 grid" : "lemma 4.1 grid");
    return tally.failures ? 1 : 0;
}

int run_check_all(CheckTally& tally) {
    run_check_lemmas(100, tally);

    const std::pair<int, int> voronoi_cases[] = {{1, 1}, {2, 1}, {3, 1}, {3, 2},
                                                 {4, 1}, {4, 3}, {5, 2}};
    for (auto [q, a] : voronoi_cases)
        run_check_voronoi(q, a, 32768, 1e-5, tally);

    // Bessel reference points and recurrences
    std::vector<double> grid{0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
    bool bessel_ok =
        std::abs(qf3::bessel(qf3::BesselFamily::Y, 0, 1.0) -
                 0.08825696421567696) < 1e-12 &&
        std::abs(qf3::bessel(qf3::BesselFamily::K, 0, 1.0) -
                 0.42102443824070834) < 1e-12 &&
        qf3::check_recurrence(qf3::BesselFamily::Y, 0, grid) < 1e-6 &&
        qf3::check_recurrence(qf3::BesselFamily::K, 0, grid) < 1e-6;
    tally.line("bessel", bessel_ok, "references + recurrences");

    // archimedean constants
    auto i1 = qf3::singular_integral(qf3::SingularIntegralKind::I1);
    auto i2 = qf3::singular_integral(qf3::SingularIntegralKind::I2);
    auto j1 = qf3::singular_integral(qf3::SingularIntegralKind::J1);
    auto j2 = qf3::singular_integral(qf3::SingularIntegralKind::J2);
    tally.line("I1 = 1", std::abs(i1.value - 1.0) < 1e-6,
               "I1=" + num(i1.value));
    tally.line("I2 = volume oracle",
               std::abs(i2.value - qf3::volume_oracle_I2()) < 1e-4,
               "I2=" + num(i2.value));
    tally.line("J1 = I1, J2 = I2",
               std::abs(j1.value - i1.value) < 1e-4 &&
                   std::abs(j2.value - i2.value) < 1e-4,
               "J1=" + num(j1.value) + " J2=" + num(j2.value));

    // singular series
    auto s1e = qf3::s1_euler(10000, 1e-12);
    auto s1d = qf3::s1_direct(10000);
    auto s2e = qf3::s2_euler(10000, 1e-12);
    auto s2d = qf3::s2_direct(10000);
    double s1_closed = 4.0 * qf3::zeta_const(3) / (5.0 * qf3::zeta_const(4));
    tally.line("S1 euler = 4z(3)/5z(4)",
               std::abs(s1e.value - s1_closed) < 1e-6,
               "S1=" + num(s1e.value));
    tally.line("S1 euler = S1 direct",
               std::abs(s1e.value - s1d.value) < 1e-3, "direct=" + num(s1d.value));
    tally.line("S2 euler = S2 direct",
               std::abs(s2e.value - s2d.value) < 2e-3,
               "euler=" + num(s2e.value) + " direct=" + num(s2d.value));

    // lattice
    bool lat_ok = qf3::s3(1.0, qf3::S3Method::naive).value == 2 &&
                  qf3::s3(2.0, qf3::S3Method::naive).value == 29;
    for (double x : {40.0, 120.0})
        lat_ok = lat_ok && qf3::counts_naive(x).counts ==
                               qf3::counts_convolution(x).counts;
    tally.line("lattice", lat_ok, "enumeration oracle + convolution equality");

    run_check_majorarc(100.0, 20, "/dev/null", tally);

    // asymptotic fit
    auto rows = qf3::table({250, 500, 1000, 2000});
    bool dec = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
        dec = dec && rows[i].r_cubic < rows[i - 1].r_cubic;
    double slope = qf3::residual_slope(rows);
    tally.line("asymptotic fit", dec && slope <= 2.8,
               "slope=" + num(slope));

    // divisor sieve
    qf3::DivisorSieve sieve(1000000, 1000001);
    std::uint64_t tsum = 0;
    for (std::uint64_t n = 1; n <= 1000000; ++n) tsum += sieve[n];
    double nn = 1e6;
    double hyper = nn * std::log(nn) + (2.0 * qf3::euler_gamma() - 1.0) * nn;
    tally.line("divisor sieve", std::abs(tsum - hyper) <= 3.0 * std::sqrt(nn),
               "sum tau=" + std::to_string(tsum));

    return tally.failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quadratic-form divisor sums: exact evaluation and checks"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads,
                   "worker cap (results are identical for any value)")
        ->check(CLI::PositiveNumber);

    double sum_x = 0;
    std::string sum_method = "convolution";
    auto* sum = app.add_subcommand("sum", "exact S3(X)");
    sum->add_option("--x", sum_x, "upper box bound X")->required();
    sum->add_option("--method", sum_method)
        ->check(CLI::IsMember({"naive", "convolution"}));

    auto* cst = app.add_subcommand("constants", "theorem constants");

    std::string xs_arg = "250,500,1000,2000";
    std::string out_path;
    auto* tbl = app.add_subcommand("table", "asymptotic comparison table");
    tbl->add_option("--xs", xs_arg, "comma-separated X grid");
    tbl->add_option("--out", out_path, "output CSV path (default stdout)");

    std::string bfamily = "K";
    int border = 0;
    double bx = 1.0;
    auto* bes = app.add_subcommand("bessel", "Bessel Y/K evaluation");
    bes->add_option("--family", bfamily)->check(CLI::IsMember({"Y", "K"}));
    bes->add_option("--order", border)->check(CLI::Range(0, 2));
    bes->add_option("--x", bx)->required();

    auto* chk = app.add_subcommand("check", "verification suites");
    chk->require_subcommand(1);
    std::uint64_t qmax = 300;
    auto* chk_lem = chk->add_subcommand("lemmas", "exponential-sum lemmas");
    chk_lem->add_option("--qmax", qmax);

    std::uint64_t vq = 1, vn = 32768;
    std::int64_t va = 1;
    double vtol = 1e-5;
    auto* chk_vor = chk->add_subcommand("voronoi", "summation identity");
    chk_vor->add_option("--q", vq)->required();
    chk_vor->add_option("--a", va)->required();
    chk_vor->add_option("--n-trunc", vn);
    chk_vor->add_option("--tol", vtol);

    double mx = 100.0;
    std::uint64_t mqmax = 20;
    std::string mout;
    auto* chk_arc = chk->add_subcommand("majorarc", "arc approximations");
    chk_arc->add_option("--x", mx);
    chk_arc->add_option("--qmax", mqmax);
    chk_arc->add_option("--out", mout, "CSV output path (default stdout)");

    auto* chk_all = chk->add_subcommand("all", "every suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CheckTally tally;
        if (sum->parsed()) return run_sum(sum_x, sum_method);
        if (cst->parsed()) return run_constants();
        if (tbl->parsed()) {
            std::vector<std::uint64_t> xs;
            for (std::size_t pos = 0; pos < xs_arg.size();) {
                std::size_t comma = xs_arg.find(',', pos);
                if (comma == std::string::npos) comma = xs_arg.size();
                xs.push_back(std::stoull(xs_arg.substr(pos, comma - pos)));
                pos = comma + 1;
            }
            return run_table(xs, out_path);
        }
        if (bes->parsed()) return run_bessel(bfamily, border, bx);
        if (chk_lem->parsed()) return run_check_lemmas(qmax, tally);
        if (chk_vor->parsed())
            return run_check_voronoi(vq, va, vn, vtol, tally);
        if (chk_arc->parsed()) return run_check_majorarc(mx, mqmax, mout, tally);
        if (chk_all->parsed()) return run_check_all(tally);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
