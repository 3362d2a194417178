#pragma once

#include "alphacomp/ode.hpp"
#include "alphacomp/types.hpp"

namespace alphacomp {

/// Singular value function sigma_1 ... sigma_k * sigma_{k+1}^s of a map
/// Jacobian; the quantity whose sub-unity maximum triggers the
/// dimension bound.
double omega_bound(const Matrix& Jg, const AlphaIndex& alpha);

struct DimensionBound {
    AlphaIndex alpha;
    double omega_max = 0.0;
    bool conclusive = false;    // omega_max < 1, so dim_H K < alpha
    std::size_t sample_count = 0;
};

/// Evaluate omega over Jacobians sampled on a compact negatively invariant
/// set; conclusive when the maximum is below 1. The bound is only as strong
/// as the sample coverage.
DimensionBound douady_oesterle_check(const std::vector<Matrix>& jacobians,
                                     const AlphaIndex& alpha);

struct ContractionCertificate {
    AlphaIndex alpha;
    MeasureNorm p = MeasureNorm::Two;
    bool certified = false;
    bool marginal = false;      // |worst measure| < 1e-12, too close to call
    double eta = 0.0;           // certified margin: measures <= -eta < 0
    std::size_t sample_count = 0;
    double worst_time = 0.0;
    RealVector worst_point;
    double worst_value = 0.0;   // max sampled measure
};

/// Sampled alpha-contraction check: evaluates mu_p of the (generalized)
/// Jacobian's alpha additive compound at every (t, x) pair and certifies
/// when the maximum is negative.
ContractionCertificate certify_alpha_contraction(
    const SystemModel& sys, const AlphaIndex& alpha, MeasureNorm p,
    const std::vector<RealVector>& samples, const std::vector<double>& t_grid);

/// One probe of the minimal-alpha bisection: the order tested and whether
/// the sampled contraction condition held there.
struct AlphaProbe {
    double alpha;
    bool certified;
};

/// Minimal order alpha* such that the sampled system is beta-contracting for
/// beta > alpha*, located by bisection over [1, n]. Requires the system to be
/// n-order contracting over the samples (negative trace), which brackets the
/// search.
double minimal_alpha(const SystemModel& sys, MeasureNorm p,
                     const std::vector<RealVector>& samples, double tol = 1e-3,
                     std::vector<AlphaProbe>* trace = nullptr);

/// Theta_f Theta^{-1} + Theta J_f Theta^{-1} at (t, x); plain J_f when the
/// system carries no scaling.
RealMatrix generalized_jacobian(const SystemModel& sys, const RealVector& x,
                                double t);

/// Trapezoid quadrature of mu_p(J^[alpha]) along a trajectory; the exponent
/// gamma(t) controlling compound-volume growth.
double contraction_integral(const SystemModel& sys, const Trajectory& traj,
                            const AlphaIndex& alpha, MeasureNorm p);

/// Uniform grid with points_per_axis samples per axis over a box.
std::vector<RealVector> grid_samples(const Box& box, int points_per_axis);

}  // namespace alphacomp
