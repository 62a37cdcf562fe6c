#pragma once

#include "bezout/io.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace bezout {

inline constexpr const char* kToolVersion = "0.1.0";

enum class Task { Decide, Kernel, Zeros, OperatorCheck };

std::string to_string(Task t);

struct ProblemSpec {
    Rational a;
    DensityPoly psi1;
    DensityPoly psi2;
    CoeffClass coeff_class = CoeffClass::Rational;
    SearchRect rect{-20.0, 20.0, -5.0, 5.0};
    int grid_n = 64;
    double tol = 1e-10;
    /// Radius for calling two numerically located zeros common.
    double delta = 1e-3;
    /// Requested tasks in pipeline order, no duplicates.
    std::vector<Task> tasks{Task::Decide, Task::Kernel, Task::Zeros, Task::OperatorCheck};
    std::string name;

    bool wants(Task t) const;
    /// Validates the invariants (a > 0, grid_n >= 16, tol > 0, delta > 0,
    /// non-empty rect). Throws ParseError naming the offending field.
    void validate() const;
};

/// Field-path diagnostics, e.g. "psi1[2]: zero denominator in '1/0'".
ProblemSpec parse_problem(const json& j);
/// JSON syntax errors carry line and column.
ProblemSpec parse_problem_text(const std::string& text);
ProblemSpec load_problem(const std::string& path);
/// Canonical form; also the input of the spec hash.
json to_json(const ProblemSpec& spec);
/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string spec_hash(const ProblemSpec& spec);

struct KernelReport {
    BezoutKernel kernel;
    bool adjoint_identity = false;
    bool phi_difference = false;
    double envelope_integral = 0.0;
    /// max |U| - h on a 64 x 64 grid; <= 0 when the majorant holds.
    double envelope_violation = 0.0;
};

struct OperatorReport {
    ResidualStudy study;
    /// Spectral norm of T on the finest grid and its bound |c| \int h.
    double t_norm = 0.0;
    double t_bound = 0.0;
};

struct Report {
    ProblemSpec spec;
    Verdict verdict;
    std::optional<KernelReport> kernel;
    std::optional<ZeroSet> zeros_f1;
    std::optional<ZeroSet> zeros_f21;
    std::optional<ZeroComparison> comparison;
    /// Numerical structure of the zeros the verdict flags refer to.
    std::optional<StructureFlags> structure;
    std::optional<OperatorReport> operator_check;
    /// Disagreements between the symbolic and numerical sides.
    std::vector<std::string> conflicts;
    /// Numerical failures and skipped tasks, as "Code: message".
    std::vector<std::string> errors;
    double elapsed_ms = 0.0;

    /// 3 on conflict, 2 on Inconclusive or numerical failure, else 0.
    int exit_code() const;
};

/// Thread cap from BEZOUT_THREADS (default: hardware concurrency, at least 1).
unsigned thread_cap();

/// Recomputes `conflicts` from the verdict and the numerical sections:
/// NoCommonZeros with a nonempty common list, ZeroSetsCoincide without
/// pairwise-matching zero sets, kernel vanishing inconsistent with the
/// verdict, failed exact identities, and verdict flags contradicted by the
/// located zeros.
void apply_consistency_gate(Report& r);

/// Runs normalize -> decide -> kernel -> zeros -> operator-check. Decide
/// always runs since every other task is interpreted against the verdict.
Report run_problem(const ProblemSpec& spec, unsigned threads = 0);

json to_json(const Report& r, bool include_timing = true);

/// |F1| and |F_{2,1}| on an n x n grid spanning the search rectangle,
/// endpoints included, row-major with Im ascending in the outer loop.
/// Columns re,im,absF1,absF21.
void emit_grid(const ProblemSpec& spec, std::size_t n, std::ostream& os);

} // namespace bezout
