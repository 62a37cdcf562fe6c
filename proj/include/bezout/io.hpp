#pragma once

#include "bezout/bezoutiant.hpp"
#include "bezout/operator_lab.hpp"
#include "bezout/symbol.hpp"
#include "bezout/zeros.hpp"

#include "json.hpp"

#include <iosfwd>
#include <string>

namespace bezout {

using json = nlohmann::json;

/// {"re": "p/q", "im": "r/s"}
json to_json(const GaussianRational& q);
/// Accepts "p/q", {"re": ..., "im": ...} or a JSON number (converted exactly).
/// `path` prefixes error messages, e.g. "psi1[2]".
GaussianRational gaussian_from_json(const json& j, const std::string& path);

/// Ascending coefficient list.
json to_json(const Poly& p);
Poly poly_from_json(const json& j, const std::string& path);

json to_json(const Verdict& v);
json to_json(const ZeroSet& z);
json to_json(const ZeroComparison& c);
json to_json(const StructureFlags& f);
json to_json(const ResidualStudy& s);
/// Exact coefficient dump: c, a and both regional coefficient matrices.
json to_json(const BezoutKernel& k);

/// Columns z_re,z_im,multiplicity,residual.
void write_zero_set_csv(const ZeroSet& z, std::ostream& os);
/// U(x, t) on an n x n grid of cell midpoints; columns x,t,u_re,u_im.
void write_kernel_csv(const BezoutKernel& k, std::size_t n, std::ostream& os);
/// Columns row,col,re,im.
void write_matrix_csv(const Eigen::MatrixXcd& m, std::ostream& os);

/// Shortest round-trip text for a double ("%.17g").
std::string format_double(double v);

} // namespace bezout
