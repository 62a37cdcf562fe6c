// Command-line front end: decide / verify / run / emit-grid.
#include "bezout/errors.hpp"
#include "bezout/problem.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace bezout;

struct CommonOpts {
    std::string input;
    std::string output;
};

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

template <class Fn>
void write_file(const std::string& path, Fn&& fn) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    fn(out);
}

SearchRect parse_rect_arg(const std::string& text, double margin) {
    std::stringstream ss(text);
    std::string item;
    std::vector<double> v;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("--rect: '" + item + "' is not a number");
        }
    }
    if (v.size() != 4) throw ParseError("--rect: expected re_min,re_max,im_min,im_max");
    return {v[0], v[1], v[2], v[3], margin};
}

void summarize(const Report& r) {
    std::cerr << "verdict: " << to_string(r.verdict.outcome) << " (" << r.verdict.criterion << ")";
    if (!r.verdict.reason.empty()) std::cerr << " reason: " << r.verdict.reason;
    std::cerr << '\n';
    if (r.zeros_f1 && r.zeros_f21) {
        std::cerr << "zeros: F1 " << r.zeros_f1->zeros.size() << ", F21 " << r.zeros_f21->zeros.size();
        if (r.comparison) std::cerr << ", common " << r.comparison->common.size();
        std::cerr << '\n';
    }
    if (r.operator_check && !r.operator_check->study.runs.empty()) {
        std::cerr << "operator residual (" << r.operator_check->study.norm_type
                  << "): " << r.operator_check->study.runs.back().hilbert_schmidt << '\n';
    }
    for (const auto& e : r.errors) std::cerr << "error: " << e << '\n';
    for (const auto& c : r.conflicts) std::cerr << "CONFLICT: " << c << '\n';
}

void export_matrices(const ProblemSpec& spec, const std::string& dir) {
    const NormalizedPair pair = normalize_pair(spec.psi1, spec.psi2, spec.a);
    const BezoutKernel kernel = build_kernel(pair);
    const MFunctions mf = build_m_functions(pair);
    const Grid grid = Grid::midpoint(spec.a.get_d(), static_cast<std::size_t>(spec.grid_n));
    const OperatorSet ops = discretize_all(pair, kernel, mf, grid);
    std::filesystem::create_directories(dir);
    const std::pair<const char*, const Eigen::MatrixXcd*> mats[] = {
        {"T", &ops.t.matrix},   {"A", &ops.a.matrix},          {"B1", &ops.b1.matrix},
        {"B2", &ops.b2.matrix}, {"B2_adjoint", &ops.b2_adjoint.matrix}, {"N2N1", &ops.n2n1.matrix},
    };
    for (const auto& [name, m] : mats) {
        write_file((std::filesystem::path(dir) / (std::string(name) + ".csv")).string(),
                   [&](std::ostream& os) { write_matrix_csv(*m, os); });
    }
}

int finish(const Report& r, const std::string& output) {
    write_text(output, to_json(r).dump(2) + "\n");
    summarize(r);
    return r.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Common zeros of finite exponential transforms of polynomial densities"};
    app.require_subcommand(1);

    CommonOpts decide_opts;
    auto* decide_cmd = app.add_subcommand("decide", "Symbolic verdict only");
    decide_cmd->add_option("--input", decide_opts.input, "problem JSON")->required();
    decide_cmd->add_option("--output", decide_opts.output, "report JSON (default stdout)");

    CommonOpts run_opts;
    auto* run_cmd = app.add_subcommand("run", "Run the tasks listed in the problem file");
    run_cmd->add_option("--input", run_opts.input, "problem JSON")->required();
    run_cmd->add_option("--output", run_opts.output, "report JSON (default stdout)");

    CommonOpts verify_opts;
    std::string rect_arg;
    double tol = 0.0;
    double delta = 0.0;
    int grid = 0;
    std::vector<std::string> tasks;
    std::string kernel_csv;
    std::size_t kernel_csv_n = 64;
    std::string zeros_csv;
    std::string matrices_dir;
    auto* verify_cmd = app.add_subcommand("verify", "Symbolic verdict plus numerical verification");
    verify_cmd->add_option("--input", verify_opts.input, "problem JSON")->required();
    verify_cmd->add_option("--output", verify_opts.output, "report JSON (default stdout)");
    verify_cmd->add_option("--rect", rect_arg, "re_min,re_max,im_min,im_max");
    verify_cmd->add_option("--tol", tol, "Newton tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--delta", delta, "common-zero radius")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--grid", grid, "operator grid size (>= 16)");
    verify_cmd->add_option("--tasks", tasks, "subset of decide,kernel,zeros,operator-check")->delimiter(',');
    verify_cmd->add_option("--kernel-csv", kernel_csv, "write U(x,t) on a grid");
    verify_cmd->add_option("--kernel-csv-n", kernel_csv_n, "kernel CSV grid size")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--zeros-csv", zeros_csv, "prefix for <prefix>_F1.csv and <prefix>_F21.csv");
    verify_cmd->add_option("--matrices-dir", matrices_dir, "write discretized operators as CSV");

    std::string grid_input;
    std::string grid_csv;
    std::size_t grid_nodes = 0;
    auto* grid_cmd = app.add_subcommand("emit-grid", "|F1| and |F21| over the search rectangle");
    grid_cmd->add_option("--input", grid_input, "problem JSON")->required();
    grid_cmd->add_option("--csv", grid_csv, "output CSV")->required();
    grid_cmd->add_option("--n", grid_nodes, "nodes per side (default grid_n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*decide_cmd) {
            ProblemSpec spec = load_problem(decide_opts.input);
            spec.tasks = {Task::Decide};
            return finish(run_problem(spec), decide_opts.output);
        }
        if (*run_cmd) {
            const ProblemSpec spec = load_problem(run_opts.input);
            return finish(run_problem(spec), run_opts.output);
        }
        if (*verify_cmd) {
            ProblemSpec spec = load_problem(verify_opts.input);
            if (!rect_arg.empty()) spec.rect = parse_rect_arg(rect_arg, spec.rect.boundary_margin);
            if (tol > 0.0) spec.tol = tol;
            if (delta > 0.0) spec.delta = delta;
            if (grid != 0) spec.grid_n = grid;
            if (!tasks.empty()) {
                json list = json::array();
                for (const auto& t : tasks) list.push_back(t);
                json j = to_json(spec);
                j["tasks"] = list;
                spec = parse_problem(j);
            }
            spec.validate();
            const Report r = run_problem(spec);
            if (!kernel_csv.empty() && r.kernel) {
                write_file(kernel_csv, [&](std::ostream& os) { write_kernel_csv(r.kernel->kernel, kernel_csv_n, os); });
            }
            if (!zeros_csv.empty()) {
                if (r.zeros_f1)
                    write_file(zeros_csv + "_F1.csv", [&](std::ostream& os) { write_zero_set_csv(*r.zeros_f1, os); });
                if (r.zeros_f21)
                    write_file(zeros_csv + "_F21.csv", [&](std::ostream& os) { write_zero_set_csv(*r.zeros_f21, os); });
            }
            if (!matrices_dir.empty()) {
                try {
                    export_matrices(spec, matrices_dir);
                } catch (const ZeroMass& e) {
                    std::cerr << "matrices: skipped, " << e.what() << '\n';
                }
            }
            return finish(r, verify_opts.output);
        }
        if (*grid_cmd) {
            const ProblemSpec spec = load_problem(grid_input);
            const std::size_t n = grid_nodes > 0 ? grid_nodes : static_cast<std::size_t>(spec.grid_n);
            write_file(grid_csv, [&](std::ostream& os) { emit_grid(spec, n, os); });
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
