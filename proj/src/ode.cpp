#include "alphacomp/ode.hpp"

#include <algorithm>
#include <cmath>

namespace alphacomp {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// embedded 4th-order weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

using Field = std::function<RealVector(double, const RealVector&)>;

bool rk45_step(const Field& f, double t, const RealVector& y, double h,
               RealVector& y5, double& err_norm, double abs_tol,
               double rel_tol) {
    const RealVector k1 = f(t, y);
    const RealVector k2 = f(t + c2 * h, y + h * (a21 * k1));
    const RealVector k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const RealVector k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const RealVector k5 =
        f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const RealVector k6 = f(
        t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const RealVector k7 = f(t + h, y5);
    const RealVector y4 =
        y + h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    if (!y5.allFinite() || !y4.allFinite()) return false;

    double acc = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double scale =
            abs_tol + rel_tol * std::max(std::abs(y(i)), std::abs(y5(i)));
        const double e = (y5(i) - y4(i)) / scale;
        acc += e * e;
    }
    err_norm = std::sqrt(acc / static_cast<double>(y.size()));
    return true;
}

RealVector rk4_step(const Field& f, double t, const RealVector& y, double h) {
    const RealVector k1 = f(t, y);
    const RealVector k2 = f(t + 0.5 * h, y + 0.5 * h * k1);
    const RealVector k3 = f(t + 0.5 * h, y + 0.5 * h * k2);
    const RealVector k4 = f(t + h, y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Trajectory run_integration(const Field& f, const RealVector& x0, double t0,
                           double t1, const IntegratorConfig& cfg) {
    if (!(t1 > t0)) {
        throw std::invalid_argument("integration span must satisfy t1 > t0");
    }
    if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0)) {
        throw std::invalid_argument("integrator tolerances must be positive");
    }
    if (!x0.allFinite()) {
        throw std::invalid_argument("initial state has a non-finite entry");
    }

    Trajectory traj;
    traj.config = cfg;
    traj.times.push_back(t0);
    traj.states.push_back(x0);

    if (cfg.method == IntegratorConfig::Method::Rk4Fixed) {
        if (!(cfg.fixed_step > 0.0)) {
            throw std::invalid_argument("fixed step must be positive");
        }
        double t = t0;
        RealVector y = x0;
        while (t < t1 - 1e-14 * std::max(1.0, std::abs(t1))) {
            const double h = std::min(cfg.fixed_step, t1 - t);
            y = rk4_step(f, t, y, h);
            t += h;
            if (!y.allFinite()) {
                traj.status = Trajectory::Status::StepUnderflow;
                return traj;
            }
            traj.times.push_back(t);
            traj.states.push_back(y);
        }
        return traj;
    }

    double t = t0;
    RealVector y = x0;
    double h = std::min({cfg.max_step, (t1 - t0) / 10.0, 1e-2});
    const double h_min_floor = 1e-14;
    while (t < t1 - 1e-14 * std::max(1.0, std::abs(t1))) {
        h = std::min(h, t1 - t);
        RealVector y_next;
        double err = 0.0;
        const bool finite = rk45_step(f, t, y, h, y_next, err, cfg.abs_tol,
                                      cfg.rel_tol);
        if (finite && err <= 1.0) {
            t += h;
            y = y_next;
            traj.times.push_back(t);
            traj.states.push_back(y);
            const double grow =
                err == 0.0 ? 5.0 : std::min(5.0, 0.9 * std::pow(err, -0.2));
            h = std::min(cfg.max_step, h * std::max(1.0, grow));
        } else {
            const double shrink =
                finite ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.2;
            h *= std::min(0.9, shrink);
            if (h < h_min_floor * std::max(1.0, std::abs(t))) {
                traj.status = Trajectory::Status::StepUnderflow;
                return traj;
            }
        }
    }
    return traj;
}

}  // namespace

bool Box::contains(const RealVector& x, double tol) const {
    if (lo.size() == 0) return true;  // unconstrained domain
    if (x.size() != lo.size()) return false;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x(i) < lo(i) - tol || x(i) > hi(i) + tol) return false;
    }
    return true;
}

Trajectory integrate(const SystemModel& sys, const RealVector& x0, double t0,
                     double t1, const IntegratorConfig& cfg) {
    if (x0.size() != sys.dimension) {
        throw std::invalid_argument("initial state dimension mismatch");
    }
    return run_integration(sys.f, x0, t0, t1, cfg);
}

VariationalSolution integrate_variational(const SystemModel& sys,
                                          const RealVector& x0, double t0,
                                          double t1,
                                          const IntegratorConfig& cfg) {
    if (x0.size() != sys.dimension) {
        throw std::invalid_argument("initial state dimension mismatch");
    }
    const int n = sys.dimension;

    // augmented state [x; vec(Y)] with Y column-major
    const auto augmented = [&sys, n](double t, const RealVector& z) {
        const RealVector x = z.head(n);
        const Eigen::Map<const RealMatrix> Y(z.data() + n, n, n);
        const RealMatrix J = sys.jacobian(t, x);
        RealVector dz(n + n * n);
        dz.head(n) = sys.f(t, x);
        Eigen::Map<RealMatrix>(dz.data() + n, n, n) = J * Y;
        return dz;
    };

    RealVector z0(n + n * n);
    z0.head(n) = x0;
    Eigen::Map<RealMatrix>(z0.data() + n, n, n) = RealMatrix::Identity(n, n);

    const Trajectory aug = run_integration(augmented, z0, t0, t1, cfg);

    VariationalSolution sol;
    sol.trajectory.config = aug.config;
    sol.trajectory.status = aug.status;
    sol.trajectory.times = aug.times;
    sol.trajectory.states.reserve(aug.states.size());
    sol.fundamental.reserve(aug.states.size());
    for (const auto& z : aug.states) {
        sol.trajectory.states.push_back(z.head(n));
        sol.fundamental.emplace_back(
            Eigen::Map<const RealMatrix>(z.data() + n, n, n));
    }
    return sol;
}

bool converged_to_equilibrium(const SystemModel& sys, const Trajectory& traj,
                              double tol, double tail_fraction) {
    if (traj.times.empty()) return false;
    const double t_end = traj.times.back();
    const double t_begin = traj.times.front();
    const double cutoff = t_end - tail_fraction * (t_end - t_begin);
    bool seen = false;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (traj.times[i] < cutoff) continue;
        seen = true;
        const RealVector residual = sys.f(traj.times[i], traj.states[i]);
        if (residual.lpNorm<Eigen::Infinity>() > tol) return false;
    }
    return seen;
}

SystemModel thomas_system(double b) {
    if (!(b > 0.0)) {
        throw std::invalid_argument("Thomas system requires b > 0");
    }
    SystemModel sys;
    sys.dimension = 3;
    sys.name = "thomas";
    sys.f = [b](double, const RealVector& x) {
        RealVector dx(3);
        dx << std::sin(x(1)) - b * x(0), std::sin(x(2)) - b * x(1),
            std::sin(x(0)) - b * x(2);
        return dx;
    };
    sys.jacobian = [b](double, const RealVector& x) {
        RealMatrix J(3, 3);
        J << -b, std::cos(x(1)), 0.0,
             0.0, -b, std::cos(x(2)),
             std::cos(x(0)), 0.0, -b;
        return J;
    };
    sys.domain.lo = RealVector::Constant(3, -1.0 / b);
    sys.domain.hi = RealVector::Constant(3, 1.0 / b);
    return sys;
}

SystemModel thomas_closed_loop(double b, double c) {
    if (!(b > 0.0)) {
        throw std::invalid_argument("Thomas system requires b > 0");
    }
    if (c > 0.0) {
        throw std::invalid_argument("feedback gain must satisfy c <= 0");
    }
    SystemModel sys = thomas_system(b);
    sys.name = "thomas-cl";
    const auto open_f = sys.f;
    const auto open_j = sys.jacobian;
    sys.f = [open_f, c](double t, const RealVector& x) {
        RealVector dx = open_f(t, x);
        dx(0) += c * x(0);
        dx(1) += c * x(1);
        return dx;
    };
    sys.jacobian = [open_j, c](double t, const RealVector& x) {
        RealMatrix J = open_j(t, x);
        J(0, 0) += c;
        J(1, 1) += c;
        return J;
    };
    return sys;
}

SystemModel laplacian_system(const RealMatrix& L) {
    if (L.rows() != L.cols() || L.rows() == 0) {
        throw std::invalid_argument("Laplacian must be square and non-empty");
    }
    require_finite(L, "Laplacian");
    for (Eigen::Index i = 0; i < L.rows(); ++i) {
        if (std::abs(L.row(i).sum()) > 1e-10) {
            throw std::invalid_argument("Laplacian row " + std::to_string(i + 1) +
                                        " does not sum to zero");
        }
        for (Eigen::Index j = 0; j < L.cols(); ++j) {
            if (i != j && L(i, j) > 0.0) {
                throw std::invalid_argument(
                    "Laplacian off-diagonal entries must be nonpositive");
            }
        }
    }
    SystemModel sys = lti_system(-L);
    sys.name = "laplacian";
    return sys;
}

SystemModel lti_system(const RealMatrix& A) {
    if (A.rows() != A.cols() || A.rows() == 0) {
        throw std::invalid_argument("LTI matrix must be square and non-empty");
    }
    require_finite(A, "LTI matrix");
    SystemModel sys;
    sys.dimension = static_cast<int>(A.rows());
    sys.name = "lti";
    sys.f = [A](double, const RealVector& x) { return RealVector(A * x); };
    sys.jacobian = [A](double, const RealVector&) { return A; };
    sys.domain.lo = RealVector::Constant(A.rows(), -1.0);
    sys.domain.hi = RealVector::Constant(A.rows(), 1.0);
    return sys;
}

RealMatrix path3_laplacian() {
    RealMatrix L(3, 3);
    L << 0, 0, 0,
        -1, 1, 0,
         0, -1, 1;
    return L;
}

SystemModel make_named_system(const std::string& name, double b, double c,
                              const std::optional<RealMatrix>& matrix) {
    const auto need_b = [&] {
        if (!std::isfinite(b)) {
            throw std::invalid_argument("system '" + name + "' requires b");
        }
        return b;
    };
    const auto need_matrix = [&]() -> const RealMatrix& {
        if (!matrix) {
            throw std::invalid_argument("system '" + name +
                                        "' requires a matrix");
        }
        return *matrix;
    };
    if (name == "thomas") return thomas_system(need_b());
    if (name == "thomas-cl") {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("system 'thomas-cl' requires c");
        }
        return thomas_closed_loop(need_b(), c);
    }
    if (name == "laplacian-path3") return laplacian_system(path3_laplacian());
    if (name == "laplacian") return laplacian_system(need_matrix());
    if (name == "lti") return lti_system(need_matrix());
    throw std::invalid_argument(
        "unknown system '" + name +
        "' (choose thomas, thomas-cl, laplacian-path3, laplacian, lti)");
}

}  // namespace alphacomp
