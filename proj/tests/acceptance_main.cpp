// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cli_test_util.hpp"
#include "golden_data.hpp"
#include "qls/example2x2.hpp"
#include "qls/hhl.hpp"
#include "test_util.hpp"

using namespace qls;
using namespace qls::testing;

namespace {

using Failures = std::vector<std::string>;

void expect(Failures& fails, bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
}

void expect_near(Failures& fails, double got, double want, double tol, const std::string& what) {
    if (!(std::abs(got - want) <= tol))
        fails.push_back(what + ": got " + std::to_string(got) + ", want " +
                        std::to_string(want) + " +/- " + std::to_string(tol));
}

struct SweepRow {
    double r, fidelity, probability;
};

std::vector<SweepRow> parse_csv(const std::string& csv, Failures& fails) {
    std::vector<SweepRow> rows;
    std::size_t pos = csv.find('\n');
    if (csv.substr(0, pos) != "r,fidelity,probability") {
        fails.push_back("csv header mismatch");
        return rows;
    }
    ++pos;
    while (pos < csv.size()) {
        const std::size_t eol = csv.find('\n', pos);
        if (eol == std::string::npos) {
            fails.push_back("csv not LF-terminated");
            break;
        }
        SweepRow row{};
        if (std::sscanf(csv.substr(pos, eol - pos).c_str(), "%lf,%lf,%lf", &row.r,
                        &row.fidelity, &row.probability) != 3)
            fails.push_back("unparsable csv row");
        rows.push_back(row);
        pos = eol + 1;
    }
    return rows;
}

// ---- criterion 1: r-sweep trade-off curves through the CLI ---------------

Failures criterion_sweep_curves() {
    Failures fails;
    const auto start = std::chrono::steady_clock::now();
    const CommandResult res = run_command(cli("sweep --r-min 2 --r-max 8 --steps 25"));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(fails, res.exit_code == 0, "sweep exit code");
    expect(fails, seconds < 1.0, "sweep runtime " + std::to_string(seconds) + "s >= 1s");

    const std::vector<SweepRow> rows = parse_csv(res.out, fails);
    expect(fails, rows.size() == 25, "expected 25 rows");
    if (rows.size() != 25) return fails;

    for (std::size_t i = 1; i < rows.size(); ++i) {
        expect(fails, rows[i].fidelity >= rows[i - 1].fidelity - 1e-9,
               "fidelity not nondecreasing at r=" + std::to_string(rows[i].r));
        if (rows[i - 1].r >= 3.0)
            expect(fails, rows[i].probability < rows[i - 1].probability,
                   "probability not decreasing at r=" + std::to_string(rows[i].r));
    }
    for (const SweepRow& row : rows)
        if (row.r >= 4.0)
            expect(fails, row.fidelity >= 0.9999,
                   "fidelity below 0.9999 at r=" + std::to_string(row.r));

    // Spot rows against the closed-form oracle.
    for (const SweepRow& row : rows) {
        if (row.r != 2.0 && row.r != 4.0 && row.r != 6.0) continue;
        const OracleResult oracle = closed_form_oracle(row.r, {1.0, 0.0});
        expect_near(fails, row.probability, oracle.probability, 1e-6,
                    "probability vs oracle at r=" + std::to_string(row.r));
        expect_near(fails, row.fidelity, oracle.fidelity, 1e-6,
                    "fidelity vs oracle at r=" + std::to_string(row.r));
    }

    // Spot values, as confirmed by the brute-force dense simulation (see
    // tests/test_example2x2.cpp).
    const struct {
        double r, p, f;
    } frozen[] = {
        {2.0, 0.3232233047, 0.9994748013},
        {4.0, 0.0238337968, 0.9999981307},
        {6.0, 0.0015049543, 0.9999999927},
    };
    for (const auto& f : frozen) {
        const auto it = std::find_if(rows.begin(), rows.end(),
                                     [&](const SweepRow& row) { return row.r == f.r; });
        expect(fails, it != rows.end(), "missing grid point r=" + std::to_string(f.r));
        if (it == rows.end()) continue;
        expect_near(fails, it->probability, f.p, 1e-6,
                    "probability spot value at r=" + std::to_string(f.r));
        expect_near(fails, it->fidelity, f.f, 1e-6,
                    "fidelity spot value at r=" + std::to_string(f.r));
    }
    return fails;
}

// ---- criterion 2: eigenvalue encoding after phase estimation -------------

Failures criterion_encoding() {
    Failures fails;
    ComplexVector head(8);
    head[0] = 1.0;
    QuantumState s = QuantumState::from_amplitudes(4, kron(head, ComplexVector{1.0, 0.0}));
    s = run_circuit(example_phase_estimation_segment(), s);

    double w[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < 16; ++i) w[(i >> 1) & 3] += std::norm(s.amplitudes()[i]);
    expect_near(fails, w[1], 0.5, 1e-10, "clock weight on |01>");
    expect_near(fails, w[2], 0.5, 1e-10, "clock weight on |10>");
    expect(fails, w[0] < 1e-10 && w[3] < 1e-10, "clock weight outside |01>,|10>");
    return fails;
}

// ---- criterion 3: exact-mode correctness ---------------------------------

Failures criterion_exact_mode() {
    Failures fails;
    HHLConfig config;
    config.n_clock = 2;
    config.t0 = 2.0 * std::numbers::pi;
    config.C = 1.0;
    config.mode = InversionMode::ExactArcsin;
    const LinearSystemInstance instance{example_matrix(), {1.0, 0.0}};

    const HHLResult result = run_hhl(instance, config);
    expect_near(fails, result.fidelity_vs_classical, 1.0, 1e-8, "exact-mode fidelity");
    expect_near(fails, result.success_probability, 0.625, 1e-8, "exact-mode probability");
    expect_near(fails, success_probability_closed_form(instance, config), 0.625, 1e-12,
                "closed-form probability");
    return fails;
}

// ---- criterion 4: run_circuit vs assembled unitary ------------------------

Gate random_catalog_gate(std::mt19937& rng) {
    static const char* names[] = {"H", "S", "Sdag", "X", "Y", "SWAP"};
    std::uniform_int_distribution<int> pick(0, 6);
    const int which = pick(rng);
    if (which == 6) {
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        return ry_gate(angle(rng));
    }
    return standard_gate(names[which]);
}

Failures criterion_oracle_equivalence() {
    Failures fails;
    std::mt19937 rng(424242);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + trial % 4;  // up to 5 qubits
        std::uniform_int_distribution<int> n_ops_dist(1, 12);
        Circuit c(n);
        const int n_ops = n_ops_dist(rng);
        for (int i = 0; i < n_ops;) {
            const Gate g = random_catalog_gate(rng);
            if (g.arity() > n) continue;
            std::vector<int> qubits(n);
            std::iota(qubits.begin(), qubits.end(), 0);
            std::shuffle(qubits.begin(), qubits.end(), rng);
            std::vector<int> targets(qubits.begin(), qubits.begin() + g.arity());
            std::uniform_int_distribution<int> c_dist(0, std::min(2, n - g.arity()));
            std::vector<int> controls(qubits.begin() + g.arity(),
                                      qubits.begin() + g.arity() + c_dist(rng));
            c.append(g, targets, controls);
            ++i;
        }
        const ComplexVector init = random_state(rng, std::size_t{1} << n);
        const QuantumState out = run_circuit(c, QuantumState::from_amplitudes(n, init));
        const ComplexVector expected = circuit_to_unitary(c) * init;
        for (std::size_t i = 0; i < expected.size(); ++i)
            worst = std::max(worst, std::abs(out.amplitudes()[i] - expected[i]));
    }
    expect(fails, worst <= 1e-10,
           "max amplitude deviation " + std::to_string(worst) + " > 1e-10");
    return fails;
}

// ---- criterion 5: matrix-exponential suite --------------------------------

Failures criterion_exponential() {
    Failures fails;
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> tdist(-10.0, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_hermitian(rng, 2 + trial % 3);
        const double s = tdist(rng), t = tdist(rng);
        expect(fails, exp_iAt(a, t).is_unitary(1e-10), "exp(iAt) unitarity");
        expect(fails,
               max_abs_diff(exp_iAt(a, s) * exp_iAt(a, t), exp_iAt(a, s + t)) <= 1e-10,
               "group law");

        const EigenSystem sys = hermitian_eig(a);
        const ComplexMatrix u = exp_iAt(a, t);
        for (std::size_t j = 0; j < sys.eigenvalues.size(); ++j) {
            ComplexVector v(a.rows());
            for (std::size_t i = 0; i < a.rows(); ++i) v[i] = sys.eigenvectors(i, j);
            const ComplexVector uv = u * v;
            const Complex phase = std::polar(1.0, sys.eigenvalues[j] * t);
            double res = 0.0;
            for (std::size_t i = 0; i < a.rows(); ++i) res += std::norm(uv[i] - phase * v[i]);
            expect(fails, std::sqrt(res) <= 1e-10, "eigenvector phase action");
        }
    }
    expect(fails,
           max_abs_diff(exp_iAt(example_matrix(), 2.0 * std::numbers::pi),
                        ComplexMatrix::identity(2)) <= 1e-10,
           "exp(iA*2pi) = I");
    expect(fails,
           max_abs_diff(exp_iAt(example_matrix(), std::numbers::pi),
                        ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})) <= 1e-10,
           "exp(iA*pi) = X");
    return fails;
}

// ---- criterion 6: uncompute and dagger ------------------------------------

Failures criterion_uncompute() {
    Failures fails;
    const Circuit seg = example_pre_rotation_segment();
    const ComplexMatrix round_trip =
        circuit_to_unitary(dagger(seg)) * circuit_to_unitary(seg);
    expect(fails, max_abs_diff(round_trip, ComplexMatrix::identity(16)) <= 1e-10,
           "segment * dagger != identity");

    for (int n = 1; n <= 4; ++n) {
        std::vector<int> qubits(n);
        std::iota(qubits.begin(), qubits.end(), 0);
        const std::size_t dim = std::size_t{1} << n;
        ComplexMatrix dft(dim, dim);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                dft(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(dim)),
                                       2.0 * std::numbers::pi * static_cast<double>(j * k) /
                                           static_cast<double>(dim));
        const ComplexMatrix fwd = circuit_to_unitary(dagger(inverse_qft_circuit(n, qubits)));
        expect(fails, max_abs_diff(fwd, dft) <= 1e-10,
               "dagger(inverse QFT) != DFT matrix for n=" + std::to_string(n));
    }
    return fails;
}

// ---- criterion 7: probability scales as C^2 -------------------------------

Failures criterion_probability_scaling() {
    Failures fails;
    const LinearSystemInstance instance{example_matrix(), {0.6, 0.8}};
    auto probability = [&](double c) {
        HHLConfig config;
        config.n_clock = 2;
        config.t0 = 2.0 * std::numbers::pi;
        config.C = c;
        config.mode = InversionMode::ExactArcsin;
        return run_hhl(instance, config).success_probability;
    };
    const double base = probability(1.0);
    for (double c : {0.5, 0.25, 0.1}) {
        const double ratio = probability(c) / base;
        expect(fails, std::abs(ratio - c * c) <= 1e-8 * c * c,
               "P(" + std::to_string(c) + ")/P(1) != C^2");
    }
    return fails;
}

// ---- criterion 8: gate catalog --------------------------------------------

Failures criterion_gate_catalog() {
    Failures fails;
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    expect(fails,
           max_abs_diff(standard_gate("H").matrix,
                        ComplexMatrix::from_rows(
                            {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}})) <= 1e-15,
           "H matrix");
    expect(fails,
           max_abs_diff(standard_gate("Y").matrix,
                        ComplexMatrix::from_rows(
                            {{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}})) <= 1e-15,
           "Y matrix");
    expect(fails,
           max_abs_diff(standard_gate("S").matrix,
                        ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, Complex(0.0, 1.0)}})) <=
               1e-15,
           "S matrix");
    for (double theta : {0.0, 0.3, std::numbers::pi / 2.0, std::numbers::pi, 4.2}) {
        const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
        expect(fails,
               max_abs_diff(ry_gate(theta).matrix,
                            ComplexMatrix::from_rows({{c, -s}, {s, c}})) <= 1e-15,
               "Ry(" + std::to_string(theta) + ") matrix");
    }
    expect(fails,
           max_abs_diff(ry_gate(std::numbers::pi).matrix,
                        ComplexMatrix::from_rows({{0.0, -1.0}, {1.0, 0.0}})) <= 1e-15,
           "Ry(pi) matrix");
    return fails;
}

// ---- criterion 9: CLI determinism and exit codes ---------------------------

Failures criterion_cli() {
    Failures fails;
    const CommandResult dump1 = run_command(cli("dump --r 4"));
    const CommandResult dump2 = run_command(cli("dump --r 4"));
    expect(fails, dump1.exit_code == 0, "dump exit code");
    expect(fails, dump1.out == kDumpR4Golden, "dump golden bytes");
    expect(fails, dump1.out == dump2.out, "dump determinism");

    const CommandResult sweep1 = run_command(cli("sweep --r-min 2 --r-max 8 --steps 25"));
    const CommandResult sweep2 = run_command(cli("sweep --r-min 2 --r-max 8 --steps 25"));
    expect(fails, sweep1.exit_code == 0, "sweep exit code");
    expect(fails, sweep1.out == kSweepGolden, "sweep golden bytes");
    expect(fails, sweep1.out == sweep2.out, "sweep determinism");

    const TempDir dir;
    const std::string a = dir.file("A.json", kExampleMatrixJson);
    const std::string b = dir.file("b.json", kUnitRhsJson);
    expect(fails, run_command(cli("dump --r 0")).exit_code == 2, "dump --r 0 exits 2");
    expect(fails, run_command(cli("example --r -1")).exit_code == 2, "example --r -1 exits 2");
    expect(fails, run_command(cli("sweep --r-min 8 --r-max 2")).exit_code == 2,
           "inverted sweep grid exits 2");
    expect(fails,
           run_command(cli("solve --matrix /no/such/file --rhs " + b + " --clock 2"))
                   .exit_code == 2,
           "missing matrix file exits 2");
    expect(fails,
           run_command(cli("solve --matrix " + a + " --rhs " + b + " --clock 2 --c 1e-200"))
                   .exit_code == 3,
           "vanishing success branch exits 3");
    expect(fails, run_command(cli("example --r 4")).exit_code == 0, "example exits 0");
    return fails;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Failures()>>> criteria = {
        {"1. r-sweep trade-off: monotonic curves, spot values vs oracle, < 1s", criterion_sweep_curves},
        {"2. eigenvalue encoding: clock weights 0.5/0.5 on |01> and |10>", criterion_encoding},
        {"3. exact-mode correctness: fidelity 1, probability 0.625", criterion_exact_mode},
        {"4. oracle equivalence on 100 random circuits", criterion_oracle_equivalence},
        {"5. matrix-exponential suite", criterion_exponential},
        {"6. uncompute/dagger and inverse-QFT vs DFT matrix", criterion_uncompute},
        {"7. success probability scales as C^2", criterion_probability_scaling},
        {"8. gate catalog matches the stated matrices at 1e-15", criterion_gate_catalog},
        {"9. CLI determinism and exit-code contract", criterion_cli},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Failures fails;
        try {
            fails = fn();
        } catch (const std::exception& e) {
            fails.push_back(std::string("exception: ") + e.what());
        }
        if (fails.empty()) {
            std::printf("PASS  %s\n", name.c_str());
        } else {
            ++failed;
            std::printf("FAIL  %s\n", name.c_str());
            for (const std::string& f : fails) std::printf("      - %s\n", f.c_str());
        }
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
