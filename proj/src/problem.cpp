#include "bezout/problem.hpp"

#include "bezout/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

namespace bezout {

namespace {

constexpr std::size_t kEnvelopeGrid = 64;

double number_field(const json& j, const std::string& path) {
    if (!j.is_number()) throw ParseError(path + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ParseError(path + ": non-finite number");
    return v;
}

Task parse_task(const json& j, const std::string& path) {
    if (!j.is_string()) throw ParseError(path + ": expected a task name");
    const auto s = j.get<std::string>();
    if (s == "decide") return Task::Decide;
    if (s == "kernel") return Task::Kernel;
    if (s == "zeros") return Task::Zeros;
    if (s == "operator-check") return Task::OperatorCheck;
    throw ParseError(path + ": unknown task '" + s + "'");
}

SearchRect parse_rect(const json& j, const std::string& path) {
    SearchRect r;
    if (j.is_array()) {
        if (j.size() != 4) throw ParseError(path + ": expected [re_min, re_max, im_min, im_max]");
        r.re_min = number_field(j[0], path + "[0]");
        r.re_max = number_field(j[1], path + "[1]");
        r.im_min = number_field(j[2], path + "[2]");
        r.im_max = number_field(j[3], path + "[3]");
        return r;
    }
    if (!j.is_object()) throw ParseError(path + ": expected an object or a 4-element list");
    for (const auto& item : j.items()) {
        const auto& k = item.key();
        const auto field = path + "." + k;
        if (k == "re_min") r.re_min = number_field(item.value(), field);
        else if (k == "re_max") r.re_max = number_field(item.value(), field);
        else if (k == "im_min") r.im_min = number_field(item.value(), field);
        else if (k == "im_max") r.im_max = number_field(item.value(), field);
        else if (k == "boundary_margin") r.boundary_margin = number_field(item.value(), field);
        else throw ParseError(field + ": unknown field");
    }
    for (const char* k : {"re_min", "re_max", "im_min", "im_max"}) {
        if (!j.contains(k)) throw ParseError(path + "." + k + ": missing");
    }
    return r;
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string error_text(const BezoutError& e) { return e.code() + ": " + e.what(); }

struct ZeroOutcome {
    std::optional<ZeroSet> zeros;
    std::string error;
};

ZeroOutcome search(const ClosedTransform& f, const SearchRect& rect, double tol) {
    ZeroOutcome out;
    try {
        out.zeros = locate_zeros(f, rect, tol);
    } catch (const BezoutError& e) {
        out.error = error_text(e);
    }
    return out;
}

int weighted_count(const ZeroSet& z) {
    int n = 0;
    for (const auto& lz : z.zeros) n += lz.multiplicity;
    return n;
}

// Every zero of one set has a partner within delta in the other, and the
// multiplicity-weighted counts agree.
bool sets_match(const ZeroSet& z1, const ZeroSet& z2, double delta) {
    if (weighted_count(z1) != weighted_count(z2)) return false;
    auto covered = [delta](const ZeroSet& from, const ZeroSet& to) {
        return std::all_of(from.zeros.begin(), from.zeros.end(), [&](const LocatedZero& p) {
            return std::any_of(to.zeros.begin(), to.zeros.end(),
                               [&](const LocatedZero& q) { return std::abs(p.z - q.z) <= delta; });
        });
    };
    return covered(z1, z2) && covered(z2, z1);
}

} // namespace

void apply_consistency_gate(Report& r) {
    r.conflicts.clear();
    const Verdict& v = r.verdict;
    if (r.kernel) {
        const bool zero = r.kernel->kernel.is_zero();
        if (v.outcome == Outcome::NoCommonZeros && zero)
            r.conflicts.push_back("kernel: verdict NoCommonZeros but the Bezoutiant kernel vanishes identically");
        if (v.outcome == Outcome::ZeroSetsCoincide && !zero)
            r.conflicts.push_back("kernel: verdict ZeroSetsCoincide but the Bezoutiant kernel is nonzero");
        if (!r.kernel->adjoint_identity)
            r.conflicts.push_back("kernel: adjoint identity T*1 = conj(M2(a-x)) fails");
        if (!r.kernel->phi_difference) r.conflicts.push_back("kernel: Phi difference identity fails");
    }
    if (r.comparison) {
        if (v.outcome == Outcome::NoCommonZeros && !r.comparison->common.empty()) {
            r.conflicts.push_back("zeros: verdict NoCommonZeros but " + std::to_string(r.comparison->common.size()) +
                                  " numerically common zero(s) within delta");
        }
        if (v.outcome == Outcome::ZeroSetsCoincide && !sets_match(*r.zeros_f1, *r.zeros_f21, r.spec.delta))
            r.conflicts.push_back("zeros: verdict ZeroSetsCoincide but the located zero sets do not match pairwise");
    }
    if (r.structure) {
        if (v.no_real_zeros && !r.structure->no_real_zeros)
            r.conflicts.push_back("zeros: verdict claims no real zeros but a real zero was located");
        if (v.no_conjugate_pairs && !r.structure->no_conjugate_pairs)
            r.conflicts.push_back("zeros: verdict claims no conjugate pairs but one was located");
    }
}

std::string to_string(Task t) {
    switch (t) {
    case Task::Decide: return "decide";
    case Task::Kernel: return "kernel";
    case Task::Zeros: return "zeros";
    default: return "operator-check";
    }
}

bool ProblemSpec::wants(Task t) const { return std::find(tasks.begin(), tasks.end(), t) != tasks.end(); }

void ProblemSpec::validate() const {
    if (sgn(a) <= 0) throw ParseError("a: must be positive");
    if (psi1.is_zero()) throw ParseError("psi1: density is identically zero");
    if (psi2.is_zero()) throw ParseError("psi2: density is identically zero");
    if (grid_n < 16) throw ParseError("grid_n: must be at least 16");
    if (!(tol > 0.0)) throw ParseError("tol: must be positive");
    if (!(delta > 0.0)) throw ParseError("delta: must be positive");
    if (!(rect.boundary_margin > 0.0)) throw ParseError("rect.boundary_margin: must be positive");
    try {
        rect.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("rect: ") + e.what());
    }
}

ProblemSpec parse_problem(const json& j) {
    if (!j.is_object()) throw ParseError("<root>: expected an object");
    ProblemSpec spec;
    for (const char* k : {"a", "psi1", "psi2"}) {
        if (!j.contains(k)) throw ParseError(std::string(k) + ": missing");
    }
    for (const auto& item : j.items()) {
        const auto& k = item.key();
        const auto& v = item.value();
        if (k == "a") {
            const auto g = gaussian_from_json(v, "a");
            if (!g.is_real()) throw ParseError("a: must be real");
            spec.a = g.re();
        } else if (k == "psi1") {
            spec.psi1 = poly_from_json(v, "psi1");
        } else if (k == "psi2") {
            spec.psi2 = poly_from_json(v, "psi2");
        } else if (k == "coeff_class") {
            if (!v.is_string()) throw ParseError("coeff_class: expected a string");
            try {
                spec.coeff_class = parse_coeff_class(v.get<std::string>());
            } catch (const std::exception& e) {
                throw ParseError(std::string("coeff_class: ") + e.what());
            }
        } else if (k == "rect") {
            spec.rect = parse_rect(v, "rect");
        } else if (k == "grid_n") {
            if (!v.is_number_integer()) throw ParseError("grid_n: expected an integer");
            spec.grid_n = v.get<int>();
        } else if (k == "tol") {
            spec.tol = number_field(v, "tol");
        } else if (k == "delta") {
            spec.delta = number_field(v, "delta");
        } else if (k == "name") {
            if (!v.is_string()) throw ParseError("name: expected a string");
            spec.name = v.get<std::string>();
        } else if (k == "tasks") {
            if (!v.is_array()) throw ParseError("tasks: expected a list");
            std::vector<Task> requested;
            for (std::size_t i = 0; i < v.size(); ++i)
                requested.push_back(parse_task(v[i], "tasks[" + std::to_string(i) + "]"));
            spec.tasks.clear();
            for (Task t : {Task::Decide, Task::Kernel, Task::Zeros, Task::OperatorCheck}) {
                if (std::find(requested.begin(), requested.end(), t) != requested.end()) spec.tasks.push_back(t);
            }
        } else {
            throw ParseError(k + ": unknown field");
        }
    }
    spec.validate();
    return spec;
}

ProblemSpec parse_problem_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("<json>: ") + e.what());
    }
    return parse_problem(j);
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

json to_json(const ProblemSpec& spec) {
    json tasks = json::array();
    for (Task t : spec.tasks) tasks.push_back(to_string(t));
    json out = {
        {"a", to_string(spec.a)},
        {"psi1", to_json(spec.psi1)},
        {"psi2", to_json(spec.psi2)},
        {"coeff_class", to_string(spec.coeff_class)},
        {"rect",
         {{"re_min", spec.rect.re_min},
          {"re_max", spec.rect.re_max},
          {"im_min", spec.rect.im_min},
          {"im_max", spec.rect.im_max},
          {"boundary_margin", spec.rect.boundary_margin}}},
        {"grid_n", spec.grid_n},
        {"tol", spec.tol},
        {"delta", spec.delta},
        {"tasks", std::move(tasks)},
    };
    if (!spec.name.empty()) out["name"] = spec.name;
    return out;
}

std::string spec_hash(const ProblemSpec& spec) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json(spec).dump())));
    return buf;
}

int Report::exit_code() const {
    if (!conflicts.empty()) return 3;
    if (verdict.outcome == Outcome::Inconclusive || !errors.empty()) return 2;
    return 0;
}

unsigned thread_cap() {
    if (const char* env = std::getenv("BEZOUT_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

Report run_problem(const ProblemSpec& spec, unsigned threads) {
    const auto start = std::chrono::steady_clock::now();
    if (threads == 0) threads = thread_cap();

    Report r;
    r.spec = spec;

    std::optional<NormalizedPair> pair;
    try {
        pair = normalize_pair(spec.psi1, spec.psi2, spec.a);
    } catch (const ZeroMass&) {
        // decide reports the same condition as its Inconclusive reason
    }

    r.verdict = decide(spec.psi1, spec.psi2, spec.a, spec.coeff_class);

    if (spec.wants(Task::Kernel)) {
        if (pair) {
            KernelReport k;
            k.kernel = build_kernel(*pair);
            const MFunctions mf = build_m_functions(*pair);
            k.adjoint_identity = check_adjoint_identity(k.kernel, mf);
            k.phi_difference = check_phi_difference(mf);
            const KernelEnvelope env = kernel_bound(*pair);
            k.envelope_integral = env.integral();
            k.envelope_violation = env.max_violation(k.kernel, kEnvelopeGrid);
            r.kernel = std::move(k);
        } else {
            r.errors.push_back("kernel: skipped, a density has zero mass");
        }
    }

    if (spec.wants(Task::Zeros)) {
        const ClosedTransform f1 = closed_form(spec.psi1, spec.a);
        const ClosedTransform f21 = reflected_transform(spec.psi2, spec.a);
        ZeroOutcome o1;
        ZeroOutcome o21;
        if (threads >= 2) {
            auto fut = std::async(std::launch::async, [&] { return search(f21, spec.rect, spec.tol); });
            o1 = search(f1, spec.rect, spec.tol);
            o21 = fut.get();
        } else {
            o1 = search(f1, spec.rect, spec.tol);
            o21 = search(f21, spec.rect, spec.tol);
        }
        if (!o1.error.empty()) r.errors.push_back("zeros F1: " + o1.error);
        if (!o21.error.empty()) r.errors.push_back("zeros F21: " + o21.error);
        r.zeros_f1 = std::move(o1.zeros);
        r.zeros_f21 = std::move(o21.zeros);
        if (r.zeros_f1 && r.zeros_f21) r.comparison = compare_zero_sets(*r.zeros_f1, *r.zeros_f21, spec.delta);
        // The verdict flags describe F1 of the possibly swapped pair. After a
        // swap that is F2, whose zeros are the conjugates of F_{2,1}'s; both
        // flags are invariant under conjugating the whole set.
        const auto& flagged = r.verdict.swapped ? r.zeros_f21 : r.zeros_f1;
        if (flagged) r.structure = structure_checks(*flagged);
    }

    if (spec.wants(Task::OperatorCheck)) {
        if (pair) {
            const auto n = static_cast<std::size_t>(spec.grid_n);
            OperatorReport op;
            op.study = residual_study(*pair, {n, 2 * n});
            const BezoutKernel kernel = r.kernel ? r.kernel->kernel : build_kernel(*pair);
            const MFunctions mf = build_m_functions(*pair);
            const Grid grid = Grid::midpoint(spec.a.get_d(), 2 * n);
            op.t_norm = spectral_norm(discretize_all(*pair, kernel, mf, grid).t.matrix, grid);
            op.t_bound = std::abs(kernel.c.to_complex()) * kernel_bound(*pair).integral();
            r.operator_check = std::move(op);
        } else {
            r.errors.push_back("operator-check: skipped, a density has zero mass");
        }
    }

    apply_consistency_gate(r);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

json to_json(const Report& r, bool include_timing) {
    json out;
    out["status"] = r.conflicts.empty() ? (r.exit_code() == 0 ? "ok" : "inconclusive") : "CONFLICT";
    out["exit_code"] = r.exit_code();
    out["spec"] = to_json(r.spec);
    out["verdict"] = to_json(r.verdict);
    if (r.kernel) {
        out["kernel"] = {{"coefficients", to_json(r.kernel->kernel)},
                         {"identically_zero", r.kernel->kernel.is_zero()},
                         {"adjoint_identity", r.kernel->adjoint_identity},
                         {"phi_difference", r.kernel->phi_difference},
                         {"envelope_integral", r.kernel->envelope_integral},
                         {"envelope_violation", r.kernel->envelope_violation}};
    }
    if (r.zeros_f1 || r.zeros_f21) {
        out["zero_sets"] = {{"F1", r.zeros_f1 ? to_json(*r.zeros_f1) : json(nullptr)},
                            {"F21", r.zeros_f21 ? to_json(*r.zeros_f21) : json(nullptr)}};
    }
    if (r.comparison) out["comparison"] = to_json(*r.comparison);
    if (r.structure) out["structure"] = to_json(*r.structure);
    if (r.operator_check) {
        json op = to_json(r.operator_check->study);
        op["t_spectral_norm"] = r.operator_check->t_norm;
        op["t_norm_bound"] = r.operator_check->t_bound;
        op["tolerance_note"] = "grid sizes and tolerances are numerical choices of this tool";
        out["operator"] = std::move(op);
    }
    out["conflicts"] = r.conflicts;
    out["errors"] = r.errors;
    json prov = {{"tool", "bezout"}, {"tool_version", kToolVersion}, {"spec_hash", spec_hash(r.spec)}};
    if (include_timing) prov["timing"] = {{"elapsed_ms", r.elapsed_ms}};
    out["provenance"] = std::move(prov);
    return out;
}

void emit_grid(const ProblemSpec& spec, std::size_t n, std::ostream& os) {
    if (n == 0) throw std::invalid_argument("grid needs at least one node per side");
    const ClosedTransform f1 = closed_form(spec.psi1, spec.a);
    const ClosedTransform f21 = reflected_transform(spec.psi2, spec.a);
    const SearchRect& rc = spec.rect;
    auto node = [n](double lo, double hi, std::size_t k) {
        if (n == 1) return 0.5 * (lo + hi);
        if (k + 1 == n) return hi;
        return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    };
    auto magnitude = [](const ClosedTransform& f, std::complex<double> z) {
        try {
            return std::abs(f(z));
        } catch (const EvaluationOverflow&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    os << "re,im,absF1,absF21\n";
    for (std::size_t i = 0; i < n; ++i) {
        const double im = node(rc.im_min, rc.im_max, i);
        for (std::size_t k = 0; k < n; ++k) {
            const double re = node(rc.re_min, rc.re_max, k);
            const std::complex<double> z(re, im);
            os << format_double(re) << ',' << format_double(im) << ',' << format_double(magnitude(f1, z)) << ','
               << format_double(magnitude(f21, z)) << '\n';
        }
    }
}

} // namespace bezout
