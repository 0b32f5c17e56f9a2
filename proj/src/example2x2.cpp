#include "qls/example2x2.hpp"

#include <cmath>
#include <numbers>

#include "qls/hhl.hpp"

namespace qls {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void check_r(double r) {
    if (!(r > 0.0) || !std::isfinite(r))
        throw ValidationError("example circuit: r must be positive");
}

ComplexVector check_b(const ComplexVector& b) {
    if (b.size() != 2) throw ValidationError("run_example: b must have dimension 2");
    if (!is_normalized(b, 1e-8)) throw ValidationError("run_example: b must be normalized");
    return normalized(b);
}

}  // namespace

const ComplexMatrix& example_matrix() {
    static const ComplexMatrix a = ComplexMatrix::from_rows({{1.5, 0.5}, {0.5, 1.5}});
    return a;
}

bool below_recommended_r(double r) { return r < min_recommended_r(); }

Circuit example_phase_estimation_segment() {
    // Qubits (x1,x2,x3,x4) = (0,1,2,3): ancilla, two clock qubits, system.
    Circuit c(4);
    c.append(standard_gate("H"), {1});
    c.append(standard_gate("H"), {2});
    c.append(matrix_gate("exp(iAt0/4)", exp_iAt(example_matrix(), kTwoPi / 4.0)), {3}, {2});
    c.append(matrix_gate("exp(iAt0/2)", exp_iAt(example_matrix(), kTwoPi / 2.0)), {3}, {1});
    c.extend(inverse_qft_circuit(4, {1, 2}));
    return c;
}

Circuit example_pre_rotation_segment() {
    Circuit c = example_phase_estimation_segment();
    // The ad hoc inversion trick: swapping the clock qubits turns the
    // eigenvalue encodings |01>,|10> into encodings of 2/lambda.
    c.append(standard_gate("SWAP"), {1, 2});
    return c;
}

Circuit build_example_circuit(double r) {
    check_r(r);
    Circuit c = example_pre_rotation_segment();
    c.append(ry_gate(kTwoPi / std::exp2(r)), {0}, {1});
    c.append(ry_gate(std::numbers::pi / std::exp2(r)), {0}, {2});
    c.extend(dagger(example_pre_rotation_segment()));
    return c;
}

ExampleResult run_example(double r, const ComplexVector& b) {
    check_r(r);
    const ComplexVector b_hat = check_b(b);

    ComplexVector head(8);
    head[0] = 1.0;
    QuantumState state = QuantumState::from_amplitudes(4, kron(head, b_hat));
    state = run_circuit(build_example_circuit(r), state);

    auto [selected, probability] = postselect(state, 0, 1);
    ExampleResult result;
    result.probability = probability;
    result.x_prime = extract_subregister(selected, {{0, 1}, {1, 0}, {2, 0}}, {3});
    result.fidelity =
        fidelity(result.x_prime, normalized(classical_solve(example_matrix(), b_hat)));
    return result;
}

OracleResult closed_form_oracle(double r, const ComplexVector& b) {
    check_r(r);
    const ComplexVector b_hat = check_b(b);
    const ComplexVector u1{kInvSqrt2, -kInvSqrt2};  // eigenvalue 1
    const ComplexVector u2{kInvSqrt2, kInvSqrt2};   // eigenvalue 2

    const Complex beta1 = inner_product(u1, b_hat);
    const Complex beta2 = inner_product(u2, b_hat);
    const double s1 = std::sin(std::numbers::pi / std::exp2(r));
    const double s2 = std::sin(std::numbers::pi / std::exp2(r + 1.0));

    OracleResult result;
    result.probability = std::norm(beta1) * s1 * s1 + std::norm(beta2) * s2 * s2;

    ComplexVector x_prime(2), x(2);
    for (std::size_t i = 0; i < 2; ++i) {
        x_prime[i] = beta1 * s1 * u1[i] + beta2 * s2 * u2[i];
        x[i] = beta1 * u1[i] + 0.5 * beta2 * u2[i];
    }
    result.fidelity = fidelity(normalized(x_prime), normalized(x));
    return result;
}

std::vector<SweepRecord> sweep_r(double r_min, double r_max, int steps,
                                 const ComplexVector& b) {
    if (!(r_min < r_max)) throw ValidationError("sweep_r: r_min must be below r_max");
    if (steps < 2) throw ValidationError("sweep_r: need at least two steps");
    const ComplexVector b_hat = check_b(b);

    std::vector<SweepRecord> records;
    records.reserve(steps);
    const double h = (r_max - r_min) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        const double r = i + 1 == steps ? r_max : r_min + i * h;
        const ExampleResult point = run_example(r, b_hat);
        records.push_back({r, point.fidelity, point.probability});
    }
    return records;
}

}  // namespace qls
