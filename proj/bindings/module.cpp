// python bindings for the core operations

#include "alphacomp/alpha_compound.hpp"
#include "alphacomp/compound.hpp"
#include "alphacomp/contraction.hpp"
#include "alphacomp/matrix_functions.hpp"
#include "alphacomp/measures.hpp"
#include "alphacomp/ode.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>

namespace py = pybind11;
using namespace alphacomp;

namespace {

MeasureNorm norm_from_py(const py::object& p) {
    if (py::isinstance<py::str>(p)) {
        return parse_measure_norm(p.cast<std::string>());
    }
    if (py::isinstance<py::int_>(p)) {
        const int v = p.cast<int>();
        if (v == 1) return MeasureNorm::One;
        if (v == 2) return MeasureNorm::Two;
    }
    if (py::isinstance<py::float_>(p) && std::isinf(p.cast<double>())) {
        return MeasureNorm::Inf;
    }
    throw std::invalid_argument("norm selector must be 1, 2, or 'inf'");
}

LexTuple tuple_from_list(const std::vector<int>& indices, int n) {
    return LexTuple{indices, n};
}

CompoundKind kind_from_string(const std::string& kind) {
    if (kind == "mult") return CompoundKind::Multiplicative;
    if (kind == "add") return CompoundKind::Additive;
    throw std::invalid_argument("kind must be 'mult' or 'add'");
}

AlphaIndex alpha_for(const Matrix& A, double alpha) {
    return AlphaIndex::of(alpha, static_cast<int>(std::min(A.rows(),
                                                           A.cols())));
}

py::dict certificate_dict(const ContractionCertificate& cert) {
    py::dict d;
    d["alpha"] = cert.alpha.alpha;
    d["p"] = to_string(cert.p);
    d["certified"] = cert.certified;
    d["marginal"] = cert.marginal;
    d["eta"] = cert.eta;
    d["sample_count"] = cert.sample_count;
    d["worst_time"] = cert.worst_time;
    d["worst_point"] = cert.worst_point;
    d["worst_value"] = cert.worst_value;
    return d;
}

SystemModel system_from_kwargs(const std::string& name, double b, double c,
                               const std::optional<RealMatrix>& matrix) {
    return make_named_system(name, b, c, matrix);
}

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "compound matrices, matrix measures, and contraction analysis";

    // ---- compounds ----
    m.def("lex_tuples",
          [](int n, int k) {
              std::vector<std::vector<int>> out;
              for (const auto& t : lex_tuples(n, k)) out.push_back(t.indices);
              return out;
          },
          py::arg("n"), py::arg("k"),
          "k-element subsets of {1..n} in lexicographic order");
    m.def("minor",
          [](const Matrix& A, const std::vector<int>& rows,
             const std::vector<int>& cols) {
              return minor(A, tuple_from_list(rows, static_cast<int>(A.rows())),
                           tuple_from_list(cols, static_cast<int>(A.cols())));
          },
          py::arg("A"), py::arg("rows"), py::arg("cols"),
          "minor of A for 1-based strictly increasing index tuples");
    m.def("mult_compound", &mult_compound, py::arg("A"), py::arg("k"));
    m.def("add_compound", &add_compound, py::arg("A"), py::arg("k"));
    m.def("kron_product", &kron_product, py::arg("A"), py::arg("B"));
    m.def("kron_sum", &kron_sum, py::arg("X"), py::arg("Y"));
    m.def("wedge", &wedge, py::arg("vectors"));

    // ---- matrix functions ----
    m.def("eig",
          [](const Matrix& A) {
              const auto dec = eig(A);
              return py::make_tuple(dec.values, dec.right_vectors,
                                    dec.condition_estimate);
          },
          py::arg("A"),
          "eigenvalues, right eigenvectors, eigenvector condition estimate");
    m.def("principal_power", &principal_power, py::arg("z"), py::arg("alpha"));
    m.def("matrix_real_power", &matrix_real_power, py::arg("A"),
          py::arg("alpha"));
    m.def("matrix_real_power_ex",
          [](const Matrix& A, double alpha) {
              const auto r = matrix_real_power_ex(A, alpha);
              return py::make_tuple(r.value, r.perturbed);
          },
          py::arg("A"), py::arg("alpha"),
          "matrix power plus a flag marking the perturbation fallback");
    m.def("matrix_exp", &matrix_exp, py::arg("A"), py::arg("t") = 1.0);

    // ---- alpha compounds ----
    m.def("alpha_mult_compound",
          [](const Matrix& A, double a) {
              return alpha_mult_compound(A, alpha_for(A, a));
          },
          py::arg("A"), py::arg("alpha"));
    m.def("alpha_mult_compound_alt",
          [](const Matrix& A, double a) {
              return alpha_mult_compound_alt(A, alpha_for(A, a));
          },
          py::arg("A"), py::arg("alpha"));
    m.def("alpha_add_compound",
          [](const Matrix& A, double a) {
              return alpha_add_compound(A, alpha_for(A, a));
          },
          py::arg("A"), py::arg("alpha"));
    m.def("alpha_add_compound_oracle",
          [](const Matrix& A, double a, double eps) {
              return alpha_add_compound_oracle(A, alpha_for(A, a), eps);
          },
          py::arg("A"), py::arg("alpha"), py::arg("eps") = 1e-5);
    m.def("alpha_eigs",
          [](const Matrix& A, double a, const std::string& kind) {
              return alpha_eigs(A, alpha_for(A, a), kind_from_string(kind));
          },
          py::arg("A"), py::arg("alpha"), py::arg("kind"));
    m.def("alpha_spectral_abscissa",
          [](const Matrix& A, double a) {
              return alpha_spectral_abscissa(A, alpha_for(A, a));
          },
          py::arg("A"), py::arg("alpha"));
    m.def("transform_add_compound",
          [](const Matrix& T, const Matrix& A, double a) {
              return transform_add_compound(T, A, alpha_for(A, a));
          },
          py::arg("T"), py::arg("A"), py::arg("alpha"));

    // ---- measures ----
    m.def("induced_norm",
          [](const Matrix& A, const py::object& p) {
              return induced_norm(A, norm_from_py(p));
          },
          py::arg("A"), py::arg("p"));
    m.def("matrix_measure",
          [](const Matrix& A, const py::object& p) {
              return matrix_measure(A, norm_from_py(p));
          },
          py::arg("A"), py::arg("p"));
    m.def("compound_measure",
          [](const Matrix& A, int k, const py::object& p) {
              return compound_measure(A, k, norm_from_py(p));
          },
          py::arg("A"), py::arg("k"), py::arg("p"));
    m.def("alpha_measure",
          [](const Matrix& A, double a, const py::object& p) {
              return alpha_measure(A, alpha_for(A, a), norm_from_py(p));
          },
          py::arg("A"), py::arg("alpha"), py::arg("p"));
    m.def("measure_chain",
          [](const Matrix& A, const py::object& p) {
              return measure_chain(A, norm_from_py(p));
          },
          py::arg("A"), py::arg("p"));
    m.def("weighted_measure",
          [](const Matrix& A, const Matrix& P, const py::object& p) {
              return weighted_measure(A, P, norm_from_py(p));
          },
          py::arg("A"), py::arg("P"), py::arg("p"),
          "measure of P A P^{-1}: the weighted-norm route");

    // ---- contraction / dimension bounds ----
    m.def("omega_bound",
          [](const Matrix& J, double a) {
              return omega_bound(
                  J, AlphaIndex::of(a, static_cast<int>(std::min(J.rows(),
                                                                 J.cols()))));
          },
          py::arg("J"), py::arg("alpha"));
    m.def("douady_oesterle_check",
          [](const std::vector<Matrix>& jacobians, double a) {
              const auto bound = douady_oesterle_check(
                  jacobians,
                  AlphaIndex::of(
                      a, static_cast<int>(std::min(
                             jacobians.front().rows(),
                             jacobians.front().cols()))));
              py::dict d;
              d["alpha"] = bound.alpha.alpha;
              d["omega_max"] = bound.omega_max;
              d["conclusive"] = bound.conclusive;
              d["sample_count"] = bound.sample_count;
              return d;
          },
          py::arg("jacobians"), py::arg("alpha"));

    // ---- named systems ----
    m.def("certify_system",
          [](const std::string& name, double alpha, const py::object& p,
             int grid, double b, double c,
             const std::optional<RealMatrix>& matrix) {
              const SystemModel sys = system_from_kwargs(name, b, c, matrix);
              const auto samples = grid_samples(sys.domain, grid);
              const auto cert = certify_alpha_contraction(
                  sys, AlphaIndex::of(alpha, sys.dimension), norm_from_py(p),
                  samples, {0.0});
              return certificate_dict(cert);
          },
          py::arg("name"), py::arg("alpha"), py::arg("p"), py::arg("grid") = 9,
          py::arg("b") = kNan, py::arg("c") = kNan,
          py::arg("matrix") = std::nullopt,
          "sampled alpha-contraction certificate for a named system");
    m.def("minimal_alpha_system",
          [](const std::string& name, const py::object& p, int grid,
             double tol, double b, double c,
             const std::optional<RealMatrix>& matrix) {
              const SystemModel sys = system_from_kwargs(name, b, c, matrix);
              const auto samples = grid_samples(sys.domain, grid);
              return minimal_alpha(sys, norm_from_py(p), samples, tol);
          },
          py::arg("name"), py::arg("p"), py::arg("grid") = 9,
          py::arg("tol") = 1e-3, py::arg("b") = kNan, py::arg("c") = kNan,
          py::arg("matrix") = std::nullopt);
    m.def("simulate_system",
          [](const std::string& name, const RealVector& x0, double t,
             double b, double c, const std::optional<RealMatrix>& matrix,
             double abs_tol, double rel_tol) {
              const SystemModel sys = system_from_kwargs(name, b, c, matrix);
              IntegratorConfig cfg;
              cfg.abs_tol = abs_tol;
              cfg.rel_tol = rel_tol;
              const Trajectory traj = integrate(sys, x0, 0.0, t, cfg);
              RealMatrix states(traj.states.size(), sys.dimension);
              RealVector times(traj.states.size());
              for (std::size_t i = 0; i < traj.states.size(); ++i) {
                  times(static_cast<Eigen::Index>(i)) = traj.times[i];
                  states.row(static_cast<Eigen::Index>(i)) = traj.states[i];
              }
              return py::make_tuple(times, states);
          },
          py::arg("name"), py::arg("x0"), py::arg("t"), py::arg("b") = kNan,
          py::arg("c") = kNan, py::arg("matrix") = std::nullopt,
          py::arg("abs_tol") = 1e-9, py::arg("rel_tol") = 1e-9,
          "integrate a named system; returns (times, states)");
}
