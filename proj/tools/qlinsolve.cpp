// qlinsolve: state-vector simulator CLI for solving linear systems with the
// quantum phase-estimation + eigenvalue-inversion pipeline.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qls/example2x2.hpp"
#include "qls/hhl.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string format_double9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

json complex_to_json(const qls::Complex& z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const qls::ComplexVector& v) {
    json out = json::array();
    for (const qls::Complex& z : v) out.push_back(complex_to_json(z));
    return out;
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qls::ValidationError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw qls::ValidationError(path + ": " + e.what());
    }
}

/// Matrix file: {"rows": R, "cols": C, "entries": [[re, im], ...]} row-major.
qls::ComplexMatrix load_matrix(const std::string& path) {
    const json doc = parse_json_file(path);
    try {
        const std::size_t rows = doc.at("rows").get<std::size_t>();
        const std::size_t cols = doc.at("cols").get<std::size_t>();
        const json& entries = doc.at("entries");
        if (rows == 0 || cols == 0 || !entries.is_array() || entries.size() != rows * cols)
            throw qls::ValidationError(path + ": entries length must equal rows*cols");
        qls::ComplexMatrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const json& e = entries[i * cols + j];
                if (!e.is_array() || e.size() != 2)
                    throw qls::ValidationError(path + ": each entry must be [re, im]");
                m(i, j) = qls::Complex(e[0].get<double>(), e[1].get<double>());
            }
        return m;
    } catch (const json::exception& e) {
        throw qls::ValidationError(path + ": " + e.what());
    }
}

/// A vector is a matrix file with a single column (or a single row).
qls::ComplexVector load_vector(const std::string& path) {
    const qls::ComplexMatrix m = load_matrix(path);
    if (m.cols() != 1 && m.rows() != 1)
        throw qls::ValidationError(path + ": expected a single-column or single-row matrix");
    qls::ComplexVector v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw qls::ValidationError("cannot open output file: " + out_path);
    out << content;
}

void warn_low_r(double r) {
    if (qls::below_recommended_r(r))
        std::cerr << "warning: r=" << r << " is below log2(2*pi) ~ 2.65; "
                  << "the small-angle approximation degrades\n";
}

struct SolveArgs {
    std::string matrix_path;
    std::string rhs_path;
    int clock = 2;
    double t0 = 6.283185307179586476925287;
    std::optional<double> c;
    std::string mode = "exact";
    std::optional<double> r;
    std::string out = "-";
};

int cmd_solve(const SolveArgs& args) {
    qls::LinearSystemInstance instance;
    instance.A = load_matrix(args.matrix_path);
    instance.b = qls::normalized(load_vector(args.rhs_path));

    qls::HHLConfig config;
    config.n_clock = args.clock;
    config.t0 = args.t0;
    if (args.mode == "small-angle") {
        config.mode = qls::InversionMode::SmallAngle;
        if (!args.r)
            throw qls::ValidationError("--r is required with --mode small-angle");
        if (args.c) throw qls::ValidationError("--c does not apply to small-angle mode");
        config.r = args.r;
        warn_low_r(*args.r);
    } else {
        if (args.r) throw qls::ValidationError("--r requires --mode small-angle");
        config.C = args.c;
    }

    const qls::HHLResult result = qls::run_hhl(instance, config);

    json doc;
    doc["fidelity"] = result.fidelity_vs_classical;
    doc["probability"] = result.success_probability;
    doc["solution"] = vector_to_json(result.solution_state);
    json cfg;
    cfg["mode"] = args.mode;
    cfg["clock"] = args.clock;
    cfg["t0"] = args.t0;
    cfg["c"] = qls::rotation_constant(config);
    if (args.r)
        cfg["r"] = *args.r;
    else
        cfg["r"] = nullptr;
    doc["config"] = cfg;
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
}

struct ExampleArgs {
    double r = 4.0;
    double b1 = 1.0;
    double b2 = 0.0;
    std::string out = "-";
};

int cmd_example(const ExampleArgs& args) {
    qls::ComplexVector b{args.b1, args.b2};
    if (qls::norm(b) == 0.0) throw qls::ValidationError("b must be nonzero");
    b = qls::normalized(b);
    if (!(args.r > 0.0)) throw qls::ValidationError("r must be positive");
    warn_low_r(args.r);

    const qls::ExampleResult result = qls::run_example(args.r, b);

    json doc;
    doc["fidelity"] = result.fidelity;
    doc["probability"] = result.probability;
    doc["solution"] = vector_to_json(result.x_prime);
    json cfg;
    cfg["r"] = args.r;
    cfg["b1"] = args.b1;
    cfg["b2"] = args.b2;
    doc["config"] = cfg;
    write_output(args.out, doc.dump(2) + "\n");
    return 0;
}

struct SweepArgs {
    double r_min = 2.0;
    double r_max = 8.0;
    int steps = 25;
    double b1 = 1.0;
    double b2 = 0.0;
    std::string out = "-";
    std::string format = "csv";
};

int cmd_sweep(const SweepArgs& args) {
    qls::ComplexVector b{args.b1, args.b2};
    if (qls::norm(b) == 0.0) throw qls::ValidationError("b must be nonzero");
    b = qls::normalized(b);
    warn_low_r(args.r_min);

    const std::vector<qls::SweepRecord> records =
        qls::sweep_r(args.r_min, args.r_max, args.steps, b);

    std::string content;
    if (args.format == "csv") {
        content = "r,fidelity,probability\n";
        for (const qls::SweepRecord& rec : records)
            content += format_double9(rec.r) + "," + format_double9(rec.fidelity) + "," +
                       format_double9(rec.probability) + "\n";
    } else {
        json doc = json::array();
        for (const qls::SweepRecord& rec : records)
            doc.push_back({{"r", rec.r}, {"fidelity", rec.fidelity}, {"probability", rec.probability}});
        content = doc.dump(2) + "\n";
    }
    write_output(args.out, content);
    return 0;
}

int cmd_dump(double r) {
    if (!(r > 0.0)) throw qls::ValidationError("r must be positive");
    warn_low_r(r);
    std::cout << qls::dump_circuit(qls::build_example_circuit(r));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-vector simulation of the quantum linear-system solver"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    CLI::App* solve = app.add_subcommand("solve", "Solve a Hermitian system from JSON files");
    solve->add_option("--matrix", solve_args.matrix_path, "system matrix (JSON)")->required();
    solve->add_option("--rhs", solve_args.rhs_path, "right-hand side (JSON)")->required();
    solve->add_option("--clock", solve_args.clock, "clock-register qubit count")->required();
    solve->add_option("--t0", solve_args.t0, "evolution time (default 2*pi)");
    solve->add_option("--c", solve_args.c, "rotation constant (exact mode)");
    solve->add_option("--mode", solve_args.mode, "inversion mode")
        ->check(CLI::IsMember({"exact", "small-angle"}));
    solve->add_option("--r", solve_args.r, "small-angle parameter, C = 2^-r * pi");
    solve->add_option("--out", solve_args.out, "output path, - for stdout");

    ExampleArgs example_args;
    CLI::App* example = app.add_subcommand("example", "Run the 4-qubit 2x2 example circuit");
    example->add_option("--r", example_args.r, "rotation parameter")->required();
    example->add_option("--b1", example_args.b1, "first rhs amplitude");
    example->add_option("--b2", example_args.b2, "second rhs amplitude");
    example->add_option("--out", example_args.out, "output path, - for stdout");

    SweepArgs sweep_args;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep r and emit fidelity/probability rows");
    sweep->add_option("--r-min", sweep_args.r_min, "sweep start");
    sweep->add_option("--r-max", sweep_args.r_max, "sweep end");
    sweep->add_option("--steps", sweep_args.steps, "grid points");
    sweep->add_option("--b1", sweep_args.b1, "first rhs amplitude");
    sweep->add_option("--b2", sweep_args.b2, "second rhs amplitude");
    sweep->add_option("--out", sweep_args.out, "output path, - for stdout");
    sweep->add_option("--format", sweep_args.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    double dump_r = 0.0;
    CLI::App* dump = app.add_subcommand("dump", "Print the example circuit, one op per line");
    dump->add_option("--r", dump_r, "rotation parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(solve)) return cmd_solve(solve_args);
        if (app.got_subcommand(example)) return cmd_example(example_args);
        if (app.got_subcommand(sweep)) return cmd_sweep(sweep_args);
        if (app.got_subcommand(dump)) return cmd_dump(dump_r);
        return 2;
    } catch (const qls::ImpossibleOutcomeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qls::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
