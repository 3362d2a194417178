#pragma once

#include "alphacomp/types.hpp"

#include <functional>
#include <optional>

namespace alphacomp {

/// Axis-aligned box; the default sampling domain of a system.
struct Box {
    RealVector lo;
    RealVector hi;

    bool contains(const RealVector& x, double tol = 0.0) const;
};

/// A nonlinear system dx/dt = f(t, x) with analytic Jacobian, a sampling
/// domain, and an optional contraction-metric scaling Theta with its
/// directional derivative Theta_f along the vector field.
struct SystemModel {
    int dimension = 0;
    std::string name;
    std::function<RealVector(double, const RealVector&)> f;
    std::function<RealMatrix(double, const RealVector&)> jacobian;
    Box domain;
    std::function<RealMatrix(const RealVector&)> theta;    // optional
    std::function<RealMatrix(const RealVector&)> theta_f;  // optional
};

struct IntegratorConfig {
    enum class Method { Rk4Fixed, Rk45Adaptive };
    Method method = Method::Rk45Adaptive;
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    double max_step = 1.0;
    double fixed_step = 1e-3;  // Rk4Fixed only
};

struct Trajectory {
    enum class Status { Complete, StepUnderflow };
    std::vector<double> times;            // strictly increasing
    std::vector<RealVector> states;       // aligned with times
    IntegratorConfig config;
    Status status = Status::Complete;
};

/// Integrate from x0 over [t0, t1]. One row per accepted step. A step-size
/// underflow returns the partial trajectory with Status::StepUnderflow.
Trajectory integrate(const SystemModel& sys, const RealVector& x0, double t0,
                     double t1, const IntegratorConfig& cfg = {});

struct VariationalSolution {
    Trajectory trajectory;
    std::vector<RealMatrix> fundamental;  // Y(t) on the trajectory grid, Y(t0) = I
};

/// Jointly integrate the state and the fundamental matrix of the
/// variational equation dY/dt = J_f(t, x(t)) Y, Y(t0) = I.
VariationalSolution integrate_variational(const SystemModel& sys,
                                          const RealVector& x0, double t0,
                                          double t1,
                                          const IntegratorConfig& cfg = {});

/// max_t ||f(t, x(t))||_inf over the trailing fraction of the trajectory;
/// an equilibrium is declared when this stays below tol.
bool converged_to_equilibrium(const SystemModel& sys, const Trajectory& traj,
                              double tol = 1e-6, double tail_fraction = 0.01);

/// Thomas' cyclically symmetric system for dissipation b > 0, with domain
/// D = {x : b|x|_inf <= 1}.
SystemModel thomas_system(double b);

/// Thomas system under the partial-state feedback diag(c, c, 0) x, c <= 0.
SystemModel thomas_closed_loop(double b, double c);

/// Consensus system dx/dt = -L x for a weighted graph Laplacian L
/// (zero row sums, nonpositive off-diagonal entries).
SystemModel laplacian_system(const RealMatrix& L);

/// Linear time-invariant system dx/dt = A x.
SystemModel lti_system(const RealMatrix& A);

/// The 3-node directed path graph Laplacian used by the CLI registry.
RealMatrix path3_laplacian();

/// Registry shared by the CLI and the python bindings: "thomas" (needs b),
/// "thomas-cl" (needs b, c), "laplacian-path3", "laplacian" (needs matrix),
/// "lti" (needs matrix). Unknown names throw std::invalid_argument.
SystemModel make_named_system(
    const std::string& name,
    double b = std::numeric_limits<double>::quiet_NaN(),
    double c = std::numeric_limits<double>::quiet_NaN(),
    const std::optional<RealMatrix>& matrix = std::nullopt);

}  // namespace alphacomp
