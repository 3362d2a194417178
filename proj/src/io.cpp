#include "alphacomp/io.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace alphacomp {

namespace {

using nlohmann::json;

double finite_number(const json& j, const char* what) {
    if (!j.is_number()) {
        throw std::invalid_argument(std::string(what) + " must be a number");
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
    return v;
}

json vector_json(const RealVector& x) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < x.size(); ++i) arr.push_back(x(i));
    return arr;
}

}  // namespace

Matrix parse_matrix_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("matrix JSON parse error: ") +
                                    e.what());
    }
    if (!doc.is_object() || !doc.contains("entries") ||
        !doc["entries"].is_array()) {
        throw std::invalid_argument(
            "matrix document must be an object with an 'entries' array");
    }
    const json& entries = doc["entries"];

    if (doc.contains("rows") || doc.contains("cols")) {
        if (!doc.contains("rows") || !doc.contains("cols") ||
            !doc["rows"].is_number_integer() ||
            !doc["cols"].is_number_integer()) {
            throw std::invalid_argument(
                "matrix document needs integer 'rows' and 'cols'");
        }
        const auto rows = doc["rows"].get<Eigen::Index>();
        const auto cols = doc["cols"].get<Eigen::Index>();
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument("matrix shape must be positive");
        }
        if (static_cast<Eigen::Index>(entries.size()) != rows * cols) {
            throw std::invalid_argument(
                "entry count does not match rows * cols");
        }
        Matrix M(rows, cols);
        Eigen::Index flat = 0;
        for (const json& e : entries) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument(
                    "entries must be [re, im] pairs in the full layout");
            }
            M(flat / cols, flat % cols) = Complex(
                finite_number(e[0], "entry real part"),
                finite_number(e[1], "entry imaginary part"));
            ++flat;
        }
        return M;
    }

    // real shorthand: array of rows
    const Eigen::Index rows = static_cast<Eigen::Index>(entries.size());
    if (rows == 0 || !entries[0].is_array() || entries[0].empty()) {
        throw std::invalid_argument("shorthand entries must be nonempty rows");
    }
    const Eigen::Index cols = static_cast<Eigen::Index>(entries[0].size());
    Matrix M(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() ||
            static_cast<Eigen::Index>(row.size()) != cols) {
            throw std::invalid_argument("shorthand rows must share one length");
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            M(i, j) = Complex(finite_number(row[j], "entry"), 0.0);
        }
    }
    return M;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open matrix file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_matrix_json(buffer.str());
}

std::string matrix_to_json(const Matrix& M) {
    require_finite(M, "matrix to serialize");
    json doc;
    doc["rows"] = M.rows();
    doc["cols"] = M.cols();
    json entries = json::array();
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            entries.push_back(json::array({M(i, j).real(), M(i, j).imag()}));
        }
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

void write_matrix_file(const std::string& path, const Matrix& M) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    out << matrix_to_json(M) << '\n';
}

std::string certificate_to_json(const ContractionCertificate& cert) {
    json doc;
    doc["alpha"] = cert.alpha.alpha;
    doc["p"] = to_string(cert.p);
    doc["verdict"] = cert.certified ? "certified" : "refuted";
    doc["marginal"] = cert.marginal;
    doc["eta"] = cert.eta;
    doc["sample_count"] = cert.sample_count;
    doc["worst"] = {{"t", cert.worst_time},
                    {"x", vector_json(cert.worst_point)},
                    {"measure", cert.worst_value}};
    return doc.dump();
}

std::string dimension_bound_to_json(const DimensionBound& bound) {
    json doc;
    doc["alpha"] = bound.alpha.alpha;
    doc["omega_max"] = bound.omega_max;
    doc["conclusive"] = bound.conclusive;
    doc["sample_count"] = bound.sample_count;
    doc["note"] = "bound holds over the supplied samples; invariance of the "
                  "sampled set is asserted by the caller";
    return doc.dump();
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    if (traj.states.empty()) {
        throw std::invalid_argument("cannot export an empty trajectory");
    }
    const Eigen::Index n = traj.states.front().size();
    out << 't';
    for (Eigen::Index i = 1; i <= n; ++i) out << ",x" << i;
    out << '\n';
    char buf[64];
    for (std::size_t row = 0; row < traj.times.size(); ++row) {
        std::snprintf(buf, sizeof buf, "%.15g", traj.times[row]);
        out << buf;
        for (Eigen::Index i = 0; i < n; ++i) {
            std::snprintf(buf, sizeof buf, "%.15g", traj.states[row](i));
            out << ',' << buf;
        }
        out << '\n';
    }
}

void write_trajectory_csv_file(const std::string& path,
                               const Trajectory& traj) {
    std::ofstream out(path);
    if (!out) {
        throw std::invalid_argument("cannot open '" + path + "' for writing");
    }
    write_trajectory_csv(out, traj);
}

}  // namespace alphacomp
