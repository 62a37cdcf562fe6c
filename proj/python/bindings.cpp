#include "bezout/errors.hpp"
#include "bezout/problem.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace bezout;

namespace {

// Densities and rationals cross the boundary as JSON text so that the
// Python side gets exactly the same parsing and field diagnostics as
// problem files.
Poly poly_arg(const std::string& text, const char* name) { return poly_from_json(json::parse(text), name); }

Rational a_arg(const std::string& text) {
    const auto g = gaussian_from_json(json::parse(text), "a");
    if (!g.is_real() || sgn(g.re()) <= 0) throw ParseError("a: must be a positive real");
    return g.re();
}

SearchRect rect_arg(const std::vector<double>& r, double margin) {
    if (r.size() != 4) throw ParseError("rect: expected (re_min, re_max, im_min, im_max)");
    SearchRect rect{r[0], r[1], r[2], r[3], margin};
    try {
        rect.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("rect: ") + e.what());
    }
    return rect;
}

ClosedTransform transform_arg(const std::string& psi, const std::string& a, bool reflected) {
    const Poly p = poly_arg(psi, "psi");
    const Rational ar = a_arg(a);
    return reflected ? reflected_transform(p, ar) : closed_form(p, ar);
}

py::list zeros_list(const ZeroSet& z) {
    py::list out;
    for (const auto& lz : z.zeros) out.append(py::make_tuple(lz.z, lz.multiplicity, lz.residual));
    return out;
}

} // namespace

PYBIND11_MODULE(_bezout, m) {
    m.doc() = "Common zeros of finite exponential transforms of polynomial densities";
    m.attr("__version__") = kToolVersion;

    static py::exception<BezoutError> base(m, "BezoutError", PyExc_ValueError);
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const BezoutError& e) {
            py::set_error(base, (e.code() + ": " + e.what()).c_str());
        } catch (const json::exception& e) {
            py::set_error(parse, e.what());
        }
    });

    m.def("decide", [](const std::string& psi1, const std::string& psi2, const std::string& a,
                       const std::string& coeff_class) {
        const Verdict v = decide(poly_arg(psi1, "psi1"), poly_arg(psi2, "psi2"), a_arg(a),
                                 parse_coeff_class(coeff_class));
        return to_json(v).dump();
    });

    m.def("eval_transform", [](const std::string& psi, const std::string& a, std::complex<double> z,
                               bool reflected) { return transform_arg(psi, a, reflected)(z); });

    m.def("count_zeros", [](const std::string& psi, const std::string& a, const std::vector<double>& rect,
                            bool reflected, double margin) {
        return count_zeros(transform_arg(psi, a, reflected), rect_arg(rect, margin));
    });

    m.def("locate_zeros", [](const std::string& psi, const std::string& a, const std::vector<double>& rect,
                             double tol, bool reflected, double margin) {
        const ClosedTransform f = transform_arg(psi, a, reflected);
        ZeroSet z;
        {
            py::gil_scoped_release release;
            z = locate_zeros(f, rect_arg(rect, margin), tol);
        }
        return zeros_list(z);
    });

    m.def("kernel", [](const std::string& psi1, const std::string& psi2, const std::string& a) {
        const NormalizedPair pair = normalize_pair(poly_arg(psi1, "psi1"), poly_arg(psi2, "psi2"), a_arg(a));
        const BezoutKernel k = build_kernel(pair);
        json out = to_json(k);
        out["identically_zero"] = k.is_zero();
        out["adjoint_identity"] = check_adjoint_identity(k, build_m_functions(pair));
        return out.dump();
    });

    m.def("kernel_value", [](const std::string& psi1, const std::string& psi2, const std::string& a, double x,
                             double t) {
        const NormalizedPair pair = normalize_pair(poly_arg(psi1, "psi1"), poly_arg(psi2, "psi2"), a_arg(a));
        return build_kernel(pair).u(x, t);
    });

    m.def("residual_study", [](const std::string& psi1, const std::string& psi2, const std::string& a,
                               const std::vector<std::size_t>& sizes) {
        const NormalizedPair pair = normalize_pair(poly_arg(psi1, "psi1"), poly_arg(psi2, "psi2"), a_arg(a));
        ResidualStudy s;
        {
            py::gil_scoped_release release;
            s = residual_study(pair, sizes);
        }
        return to_json(s).dump();
    });

    m.def("run", [](const std::string& spec_text, bool include_timing) {
        const ProblemSpec spec = parse_problem_text(spec_text);
        Report r;
        {
            py::gil_scoped_release release;
            r = run_problem(spec);
        }
        return py::make_tuple(to_json(r, include_timing).dump(), r.exit_code());
    });

    m.def("emit_grid", [](const std::string& spec_text, std::size_t n) {
        std::ostringstream os;
        emit_grid(parse_problem_text(spec_text), n, os);
        return os.str();
    });

    m.def("bessel_reference", &bessel_reference, py::arg("n"), py::arg("x_max"));
}
