#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "qf3/archimedean.hpp"
#include "qf3/arith.hpp"
#include "qf3/expsums.hpp"
#include "qf3/lattice.hpp"
#include "qf3/report.hpp"
#include "qf3/singular.hpp"
#include "qf3/specfun.hpp"
#include "qf3/voronoi.hpp"

namespace py = pybind11;
using namespace qf3;

namespace {

S3Method parse_method(const std::string& m) {
    if (m == "naive") return S3Method::naive;
    if (m == "convolution") return S3Method::convolution;
    throw std::invalid_argument("method must be 'naive' or 'convolution'");
}

BesselFamily parse_family(const std::string& f) {
    if (f == "Y") return BesselFamily::Y;
    if (f == "K") return BesselFamily::K;
    throw std::invalid_argument("family must be 'Y' or 'K'");
}

}  // namespace

PYBIND11_MODULE(_qf3, m) {
    m.doc() = "divisor sums over the three-squares quadratic form";

    m.def(
        "s3",
        [](double x, const std::string& method) {
            S3Result r = s3(x, parse_method(method));
            return py::dict(py::arg("X") = r.x, py::arg("floorX") = r.floor_x,
                            py::arg("S3") = r.value,
                            py::arg("method") = method);
        },
        py::arg("x"), py::arg("method") = "convolution");

    m.def(
        "bessel",
        [](const std::string& family, int order, double x) {
            return bessel(parse_family(family), order, x);
        },
        py::arg("family"), py::arg("order"), py::arg("x"));

    m.def("constants", [] {
        ConstantBundle c = constants();
        return py::dict(
            py::arg("S1") = c.s1, py::arg("S2") = c.s2, py::arg("I1") = c.i1,
            py::arg("I2") = c.i2, py::arg("J1") = c.j1, py::arg("J2") = c.j2,
            py::arg("C1") = c.c1, py::arg("C2") = c.c2,
            py::arg("C1_closed_form") = c.c1_closed_form,
            py::arg("C1_discrepancy") = c.c1_discrepancy);
    });

    m.def(
        "table",
        [](const std::vector<std::uint64_t>& grid) {
            py::list rows;
            for (const AsymptoticRow& r : table(grid))
                rows.append(py::dict(
                    py::arg("X") = r.x, py::arg("S3") = r.s3,
                    py::arg("prediction") = r.prediction,
                    py::arg("residual") = r.residual,
                    py::arg("r_cubic") = r.r_cubic, py::arg("r_norm") = r.r_norm));
            return rows;
        },
        py::arg("grid"));

    m.def(
        "voronoi_check",
        [](std::uint64_t q, std::int64_t a, std::uint64_t n_trunc) {
            VoronoiResult r = voronoi_check(q, a, n_trunc);
            return py::dict(py::arg("q") = r.q, py::arg("a") = r.a,
                            py::arg("n_trunc") = r.n_trunc,
                            py::arg("lhs") = r.lhs, py::arg("rhs") = r.rhs,
                            py::arg("residual") = r.residual,
                            py::arg("rel_residual") = r.rel_residual);
        },
        py::arg("q"), py::arg("a"), py::arg("n_trunc") = 32768);

    m.def(
        "gauss_sum",
        [](std::uint64_t q, std::int64_t a, std::int64_t n) {
            return gauss_sum(q, a, n).value;
        },
        py::arg("q"), py::arg("a"), py::arg("n") = 0);

    m.def(
        "t_sum",
        [](std::uint64_t q, std::int64_t n1, std::int64_t n2, std::int64_t n3,
           std::int64_t m_shift) {
            return t_sum_fast(q, n1, n2, n3, m_shift).value;
        },
        py::arg("q"), py::arg("n1") = 0, py::arg("n2") = 0, py::arg("n3") = 0,
        py::arg("m") = 0);

    m.def(
        "check_lemma",
        [](const std::string& id, std::uint64_t qmax) {
            LemmaReport r = check_lemma(id, qmax);
            return py::dict(py::arg("lemma") = r.lemma,
                            py::arg("cases") = r.cases,
                            py::arg("max_violation") = r.max_violation);
        },
        py::arg("lemma_id"), py::arg("qmax") = 100);

    m.def(
        "s1_euler",
        [](std::uint64_t p, double eps) {
            SeriesEstimate e = s1_euler(p, eps);
            return py::dict(py::arg("value") = e.value,
                            py::arg("truncation") = e.truncation,
                            py::arg("tail_bound") = e.tail_bound);
        },
        py::arg("P") = 10000, py::arg("eps") = 1e-12);

    m.def(
        "singular_integral",
        [](const std::string& which, double b, double tol) {
            SingularIntegralKind k;
            if (which == "I1") k = SingularIntegralKind::I1;
            else if (which == "I2") k = SingularIntegralKind::I2;
            else if (which == "J1") k = SingularIntegralKind::J1;
            else if (which == "J2") k = SingularIntegralKind::J2;
            else throw std::invalid_argument("which must be I1, I2, J1 or J2");
            QuadratureResult r = singular_integral(k, b, tol);
            return py::dict(py::arg("value") = r.value,
                            py::arg("abs_error_estimate") = r.abs_error_estimate,
                            py::arg("tolerance_met") = r.tolerance_met);
        },
        py::arg("which"), py::arg("B") = 2000.0, py::arg("tol") = 1e-4);

    m.def("zeta", &zeta_const, py::arg("s"));
    m.def("euler_gamma", &euler_gamma);
}
