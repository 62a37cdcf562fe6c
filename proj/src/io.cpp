#include "bezout/io.hpp"

#include "bezout/errors.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace bezout {

namespace {

Rational rational_field(const json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const ParseError& e) {
            throw ParseError(path + ": " + e.what());
        }
    }
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) {
        const double v = j.get<double>();
        if (!std::isfinite(v)) throw ParseError(path + ": non-finite number");
        return rational_from_double(v);
    }
    throw ParseError(path + ": expected a rational string or number");
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json rows_json(const BivariatePoly& p) {
    json rows = json::array();
    for (const auto& row : p.coeffs()) {
        json r = json::array();
        for (const auto& c : row) r.push_back(to_json(c));
        rows.push_back(std::move(r));
    }
    return rows;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json to_json(const GaussianRational& q) { return {{"re", to_string(q.re())}, {"im", to_string(q.im())}}; }

GaussianRational gaussian_from_json(const json& j, const std::string& path) {
    if (j.is_object()) {
        for (const auto& item : j.items()) {
            if (item.key() != "re" && item.key() != "im")
                throw ParseError(path + "." + item.key() + ": unknown field");
        }
        Rational re(0);
        Rational im(0);
        if (j.contains("re")) re = rational_field(j.at("re"), path + ".re");
        if (j.contains("im")) im = rational_field(j.at("im"), path + ".im");
        return {re, im};
    }
    return GaussianRational(rational_field(j, path));
}

json to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    return out;
}

Poly poly_from_json(const json& j, const std::string& path) {
    if (!j.is_array()) throw ParseError(path + ": expected a coefficient list");
    if (j.empty()) throw ParseError(path + ": coefficient list is empty");
    std::vector<GaussianRational> coeffs;
    for (std::size_t k = 0; k < j.size(); ++k)
        coeffs.push_back(gaussian_from_json(j[k], path + "[" + std::to_string(k) + "]"));
    return Poly(std::move(coeffs));
}

json to_json(const Verdict& v) {
    json out = {
        {"outcome", to_string(v.outcome)},
        {"criterion", v.criterion},
        {"no_real_zeros", v.no_real_zeros},
        {"no_conjugate_pairs", v.no_conjugate_pairs},
        {"coeff_class", to_string(v.coeff_class)},
        {"swapped", v.swapped},
        {"coincidence", v.coincidence},
    };
    out["order"] = v.order ? json(*v.order) : json(nullptr);
    out["v_zero"] = v.v_zero ? json(*v.v_zero) : json(nullptr);
    out["r1"] = v.r1 ? to_json(*v.r1) : json(nullptr);
    out["r2"] = v.r2 ? to_json(*v.r2) : json(nullptr);
    out["reason"] = v.reason;
    return out;
}

json to_json(const ZeroSet& z) {
    json zeros = json::array();
    for (const auto& lz : z.zeros) {
        json e = complex_json(lz.z);
        e["multiplicity"] = lz.multiplicity;
        e["residual"] = lz.residual;
        zeros.push_back(std::move(e));
    }
    return {
        {"rect",
         {{"re_min", z.rect.re_min},
          {"re_max", z.rect.re_max},
          {"im_min", z.rect.im_min},
          {"im_max", z.rect.im_max},
          {"boundary_margin", z.rect.boundary_margin}}},
        {"total_count", z.total_count},
        {"residual_tol", z.residual_tol},
        {"zeros", std::move(zeros)},
    };
}

json to_json(const ZeroComparison& c) {
    json common = json::array();
    for (const auto& p : c.common)
        common.push_back({{"first", p.first}, {"second", p.second}, {"distance", p.distance}});
    return {{"delta", c.delta}, {"min_distance", finite_or_null(c.min_distance)}, {"common", std::move(common)}};
}

json to_json(const StructureFlags& f) {
    return {{"no_real_zeros", f.no_real_zeros}, {"no_conjugate_pairs", f.no_conjugate_pairs}};
}

json to_json(const ResidualStudy& s) {
    json sizes = json::array();
    json hs = json::array();
    json spectral = json::array();
    for (const auto& r : s.runs) {
        sizes.push_back(r.n);
        hs.push_back(r.hilbert_schmidt);
        spectral.push_back(r.spectral);
    }
    return {{"norm_type", s.norm_type},
            {"grid_sizes", std::move(sizes)},
            {"residual_hilbert_schmidt", std::move(hs)},
            {"residual_spectral", std::move(spectral)},
            {"ratios", s.ratios}};
}

json to_json(const BezoutKernel& k) {
    return {{"a", to_string(k.a)},
            {"c", to_json(k.c)},
            {"layout", "coefficient[i][j] multiplies x^i t^j"},
            {"u_lower", rows_json(k.u_lower)},
            {"u_upper", rows_json(k.u_upper)}};
}

void write_zero_set_csv(const ZeroSet& z, std::ostream& os) {
    os << "z_re,z_im,multiplicity,residual\n";
    for (const auto& lz : z.zeros) {
        os << format_double(lz.z.real()) << ',' << format_double(lz.z.imag()) << ',' << lz.multiplicity << ','
           << format_double(lz.residual) << '\n';
    }
}

void write_kernel_csv(const BezoutKernel& k, std::size_t n, std::ostream& os) {
    os << "x,t,u_re,u_im\n";
    const double a = k.a.get_d();
    for (std::size_t i = 0; i < n; ++i) {
        const double x = a * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double t = a * (static_cast<double>(j) + 0.5) / static_cast<double>(n);
            const auto u = k.u(x, t);
            os << format_double(x) << ',' << format_double(t) << ',' << format_double(u.real()) << ','
               << format_double(u.imag()) << '\n';
        }
    }
}

void write_matrix_csv(const Eigen::MatrixXcd& m, std::ostream& os) {
    os << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            os << i << ',' << j << ',' << format_double(m(i, j).real()) << ',' << format_double(m(i, j).imag())
               << '\n';
        }
    }
}

} // namespace bezout
