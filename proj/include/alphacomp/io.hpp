#pragma once

#include "alphacomp/contraction.hpp"
#include "alphacomp/ode.hpp"
#include "alphacomp/types.hpp"

#include <iosfwd>

namespace alphacomp {

/// Parse a matrix document. Two accepted layouts:
///   {"rows": r, "cols": c, "entries": [[re, im], ...]}   row-major pairs
///   {"entries": [[r11, r12, ...], [r21, ...], ...]}      real shorthand
Matrix parse_matrix_json(const std::string& text);
Matrix read_matrix_file(const std::string& path);

/// Serialize in the full row-major [re, im] layout (deterministic bytes).
std::string matrix_to_json(const Matrix& M);
void write_matrix_file(const std::string& path, const Matrix& M);

std::string certificate_to_json(const ContractionCertificate& cert);
std::string dimension_bound_to_json(const DimensionBound& bound);

/// CSV export: header "t,x1,...,xn", one row per accepted step,
/// 15 significant digits.
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);
void write_trajectory_csv_file(const std::string& path, const Trajectory& traj);

}  // namespace alphacomp
