#include "qls/hhl.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace qls {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxTotalQubits = 24;

int log2_exact(std::size_t dim) {
    int m = 0;
    while ((std::size_t{1} << m) < dim) ++m;
    if ((std::size_t{1} << m) != dim) return -1;
    return m;
}

void validate_config(const HHLConfig& config) {
    if (config.n_clock < 1) throw ValidationError("HHLConfig: n_clock must be >= 1");
    if (config.n_clock > 20) throw ValidationError("HHLConfig: n_clock too large");
    if (!(config.t0 > 0.0)) throw ValidationError("HHLConfig: t0 must be positive");
    if (config.mode == InversionMode::SmallAngle) {
        if (!config.r) throw ValidationError("HHLConfig: small-angle mode requires r");
        if (!(*config.r > 0.0)) throw ValidationError("HHLConfig: r must be positive");
    } else if (config.C && !(*config.C > 0.0)) {
        throw ValidationError("HHLConfig: C must be positive");
    }
}

void validate_instance(const LinearSystemInstance& instance) {
    if (!instance.A.is_square()) throw ValidationError("instance: matrix must be square");
    if (log2_exact(instance.A.rows()) < 0)
        throw ValidationError("instance: matrix dimension must be a power of two");
    if (!instance.A.is_hermitian()) throw ValidationError("instance: matrix is not Hermitian");
    if (instance.b.size() != instance.A.rows())
        throw ValidationError("instance: rhs dimension differs from matrix");
    if (!is_normalized(instance.b, 1e-8))
        throw ValidationError("instance: rhs must be normalized");
}

std::string time_label(double t) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "exp(iA*%.9g)", t);
    return buf;
}

}  // namespace

double min_recommended_r() { return std::log2(kTwoPi); }

double clock_eigenvalue(std::uint64_t ell, double t0) {
    return kTwoPi * static_cast<double>(ell) / t0;
}

double rotation_constant(const HHLConfig& config) {
    validate_config(config);
    if (config.mode == InversionMode::SmallAngle)
        return std::exp2(-*config.r) * std::numbers::pi;
    return config.C ? *config.C : clock_eigenvalue(1, config.t0);
}

Circuit build_phase_estimation(const ComplexMatrix& a, double t0,
                               const std::vector<int>& clock_qubits,
                               const std::vector<int>& system_qubits, int n_qubits) {
    if (clock_qubits.empty()) throw ValidationError("build_phase_estimation: empty clock register");
    const int m = log2_exact(a.rows());
    if (!a.is_square() || m < 0 || static_cast<std::size_t>(m) != system_qubits.size())
        throw ValidationError("build_phase_estimation: matrix dimension does not match system register");
    if (!a.is_hermitian()) throw ValidationError("build_phase_estimation: matrix is not Hermitian");

    const int nc = static_cast<int>(clock_qubits.size());
    Circuit c(n_qubits);
    for (int q : clock_qubits) c.append(standard_gate("H"), {q});
    // clock_qubits[i] holds bit nc-1-i of the clock integer, so it controls
    // exp(iA t0 2^{nc-1-i} / 2^{nc}).
    for (int i = 0; i < nc; ++i) {
        const double t = t0 * std::exp2(nc - 1 - i) / std::exp2(nc);
        c.append(matrix_gate(time_label(t), exp_iAt(a, t)), system_qubits, {clock_qubits[i]});
    }
    c.extend(inverse_qft_circuit(n_qubits, clock_qubits));
    return c;
}

Circuit build_inversion(const std::vector<int>& clock_qubits, int ancilla_qubit,
                        const HHLConfig& config, int n_qubits) {
    validate_config(config);
    if (clock_qubits.empty()) throw ValidationError("build_inversion: empty clock register");
    const int nc = static_cast<int>(clock_qubits.size());
    const double c_rot = rotation_constant(config);
    if (config.mode == InversionMode::ExactArcsin &&
        c_rot > clock_eigenvalue(1, config.t0) * (1.0 + 1e-12))
        throw DomainError("build_inversion: C exceeds the smallest representable eigenvalue");

    Circuit circ(n_qubits);
    const std::uint64_t n_ell = std::uint64_t{1} << nc;
    for (std::uint64_t ell = 1; ell < n_ell; ++ell) {
        const double lambda = clock_eigenvalue(ell, config.t0);
        const double theta = config.mode == InversionMode::ExactArcsin
                                 ? 2.0 * std::asin(c_rot / lambda)
                                 : 2.0 * c_rot / lambda;
        // 0-controls realized by conjugating with X on the zero bits.
        std::vector<int> zero_bits;
        for (int i = 0; i < nc; ++i)
            if (!((ell >> (nc - 1 - i)) & 1)) zero_bits.push_back(clock_qubits[i]);
        for (int q : zero_bits) circ.append(standard_gate("X"), {q});
        circ.append(ry_gate(theta), {ancilla_qubit}, clock_qubits);
        for (int q : zero_bits) circ.append(standard_gate("X"), {q});
    }
    return circ;
}

HHLResult run_hhl(const LinearSystemInstance& instance, const HHLConfig& config) {
    validate_config(config);
    validate_instance(instance);

    const int m = log2_exact(instance.A.rows());
    const int nc = config.n_clock;
    const int n_total = 1 + nc + m;
    if (n_total > kMaxTotalQubits)
        throw ResourceError("run_hhl: instance needs more than " +
                            std::to_string(kMaxTotalQubits) + " qubits");

    const int ancilla = 0;
    std::vector<int> clock(nc), system(m);
    for (int i = 0; i < nc; ++i) clock[i] = 1 + i;
    for (int i = 0; i < m; ++i) system[i] = 1 + nc + i;

    // |0>_anc |0...0>_clock tensor |b>
    ComplexVector head(std::uint64_t{1} << (1 + nc));
    head[0] = 1.0;
    QuantumState state =
        QuantumState::from_amplitudes(n_total, kron(head, normalized(instance.b)));

    const Circuit qpe = build_phase_estimation(instance.A, config.t0, clock, system, n_total);
    state = run_circuit(qpe, state);

    HHLResult result;
    {
        const ComplexVector& amps = state.amplitudes();
        for (std::uint64_t i = 0; i < amps.size(); ++i) {
            std::uint64_t ell = 0;
            for (int j = 0; j < nc; ++j)
                if (i & (std::uint64_t{1} << (n_total - 1 - clock[j])))
                    ell |= std::uint64_t{1} << (nc - 1 - j);
            result.clock_histogram[ell] += std::norm(amps[i]);
        }
    }

    state = run_circuit(build_inversion(clock, ancilla, config, n_total), state);
    state = run_circuit(dagger(qpe), state);

    auto [selected, p1] = postselect(state, ancilla, 1);
    result.success_probability = p1;

    // On non-representable spectra the uncompute cannot clear the clock
    // exactly; condition on the fully successful branch (clock back at 0)
    // so the solution is a pure register state.
    for (int q : clock) selected = postselect(selected, q, 0).first;

    std::vector<std::pair<int, int>> fixed{{ancilla, 1}};
    for (int q : clock) fixed.emplace_back(q, 0);
    result.solution_state = extract_subregister(selected, fixed, system);

    const ComplexVector x = normalized(classical_solve(instance.A, instance.b));
    result.fidelity_vs_classical = fidelity(result.solution_state, x);
    return result;
}

double expectation_value(const ComplexVector& x, const ComplexMatrix& m) {
    if (!m.is_square() || m.rows() != x.size())
        throw ValidationError("expectation_value: dimensions differ");
    if (!m.is_hermitian()) throw ValidationError("expectation_value: operator is not Hermitian");
    if (!is_normalized(x)) throw ValidationError("expectation_value: state must be normalized");
    const Complex q = inner_product(x, m * x);
    if (std::abs(q.imag()) >= 1e-10)
        throw ValidationError("expectation_value: non-real quadratic form");
    return q.real();
}

double success_probability_closed_form(const LinearSystemInstance& instance,
                                       const HHLConfig& config) {
    validate_config(config);
    validate_instance(instance);

    const EigenSystem sys = hermitian_eig(instance.A);
    const std::uint64_t max_ell = (std::uint64_t{1} << config.n_clock) - 1;
    const double c_rot = rotation_constant(config);
    const ComplexVector b = normalized(instance.b);

    double p = 0.0;
    for (std::size_t j = 0; j < sys.eigenvalues.size(); ++j) {
        const double lambda = sys.eigenvalues[j];
        const double ell = lambda * config.t0 / kTwoPi;
        const double nearest = std::round(ell);
        if (std::abs(ell - nearest) > kRepresentableTolerance || nearest < 1.0 ||
            nearest > static_cast<double>(max_ell))
            throw UnsupportedInstanceError(
                "success_probability_closed_form: eigenvalue not representable on the clock");
        ComplexVector u(sys.eigenvectors.rows());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = sys.eigenvectors(i, j);
        const double beta_sq = std::norm(inner_product(u, b));
        const double amp = config.mode == InversionMode::ExactArcsin
                               ? c_rot / lambda
                               : std::sin(c_rot / lambda);
        p += beta_sq * amp * amp;
    }
    return p;
}

}  // namespace qls
