#pragma once

#include <iosfwd>
#include <string>

#include "trilap/expansion.hpp"

namespace trilap {

/// Shortest exact decimal form (printf %.17g): parses back to the same bits.
std::string format_double(double v);

std::string family_name(Family family);       // "square" | "antisym" | "sym"
std::string domain_name(TriangleKind kind);   // "isosceles45" | ...
std::string backend_name(Backend backend);    // "quadrature" | "transform"
Family parse_family(const std::string& s);    // throws std::invalid_argument
TriangleKind parse_domain(const std::string& s);
Backend parse_backend(const std::string& s);

/// Joined family-set label, e.g. "antisym+sym".
std::string family_set_name(const std::vector<Family>& families);
std::vector<Family> parse_family_set(const std::string& s);

/// Coefficient file:
///   {"domain": ..., "family": ..., "N": ..., "backend": ...,
///    "entries": [{"family": ..., "m": ..., "n": ..., "value": ...}, ...]}
/// entries sorted by (family, m, n); values round-trip exactly.
void write_coefficients_json(std::ostream& os, const CoefficientTable& table);
CoefficientTable read_coefficients_json(std::istream& is);

/// CSV with header "x,y,value", '.' decimal separator, 17 significant
/// digits. `metadata` (if non-empty) is emitted first as a '#' comment line.
void write_field_csv(std::ostream& os,
                     const Eigen::Matrix<double, Eigen::Dynamic, 2>& points,
                     const Eigen::VectorXd& values, const std::string& metadata = "");

/// CSV with header "function,p,N,error,seconds".
void write_convergence_csv(std::ostream& os, const ConvergenceReport& report);

}  // namespace trilap
