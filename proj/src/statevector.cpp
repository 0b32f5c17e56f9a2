#include "qls/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qls {

namespace {

constexpr int kMaxQubits = 26;
constexpr double kInitNormTol = 1e-8;

void check_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits)
        throw ValidationError("qubit count must be between 1 and " + std::to_string(kMaxQubits));
}

void check_qubit_index(int n_qubits, int qubit) {
    if (qubit < 0 || qubit >= n_qubits)
        throw ValidationError("qubit index " + std::to_string(qubit) + " out of range");
}

std::uint64_t qubit_mask(int n_qubits, int qubit) {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

void check_index_sets(int n_qubits, const std::vector<int>& targets,
                      const std::vector<int>& controls) {
    if (targets.empty()) throw ValidationError("apply_gate: no target qubits");
    std::vector<int> seen;
    for (int q : targets) {
        check_qubit_index(n_qubits, q);
        seen.push_back(q);
    }
    for (int q : controls) {
        check_qubit_index(n_qubits, q);
        seen.push_back(q);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ValidationError("apply_gate: target/control qubits must be pairwise distinct");
}

}  // namespace

QuantumState QuantumState::basis(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) throw ValidationError("basis: index out of range");
    ComplexVector amps(dim);
    amps[index] = 1.0;
    return QuantumState(n_qubits, std::move(amps));
}

QuantumState QuantumState::from_amplitudes(int n_qubits, ComplexVector amplitudes) {
    check_qubit_count(n_qubits);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (amplitudes.size() != dim)
        throw ValidationError("from_amplitudes: expected 2^n_qubits amplitudes");
    const double n = norm(amplitudes);
    if (n == 0.0) throw ValidationError("from_amplitudes: zero amplitude vector");
    if (std::abs(n * n - 1.0) > kInitNormTol)
        throw ValidationError("from_amplitudes: amplitudes are not normalized");
    for (Complex& a : amplitudes) a /= n;
    return QuantumState(n_qubits, std::move(amplitudes));
}

void apply_gate_in_place(ComplexVector& amplitudes, int n_qubits, const ComplexMatrix& u,
                         const std::vector<int>& targets, const std::vector<int>& controls) {
    check_qubit_count(n_qubits);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (amplitudes.size() != dim)
        throw ValidationError("apply_gate: amplitude vector has wrong dimension");
    check_index_sets(n_qubits, targets, controls);

    const std::size_t k = targets.size();
    const std::uint64_t local_dim = std::uint64_t{1} << k;
    if (u.rows() != local_dim || u.cols() != local_dim)
        throw ValidationError("apply_gate: gate dimension does not match target count");
    if (!u.is_unitary()) throw ValidationError("apply_gate: gate matrix is not unitary");

    std::uint64_t target_mask = 0, control_mask = 0;
    for (int q : targets) target_mask |= qubit_mask(n_qubits, q);
    for (int q : controls) control_mask |= qubit_mask(n_qubits, q);

    // targets[0] is the most significant bit of the local index.
    std::vector<std::uint64_t> scatter(local_dim, 0);
    for (std::uint64_t a = 0; a < local_dim; ++a)
        for (std::size_t t = 0; t < k; ++t)
            if ((a >> (k - 1 - t)) & 1) scatter[a] |= qubit_mask(n_qubits, targets[t]);

    ComplexVector in(local_dim), out(local_dim);
    for (std::uint64_t base = 0; base < dim; ++base) {
        if (base & target_mask) continue;
        if ((base & control_mask) != control_mask) continue;
        for (std::uint64_t a = 0; a < local_dim; ++a) in[a] = amplitudes[base | scatter[a]];
        for (std::uint64_t a = 0; a < local_dim; ++a) {
            Complex acc = 0.0;
            for (std::uint64_t b = 0; b < local_dim; ++b) acc += u(a, b) * in[b];
            out[a] = acc;
        }
        for (std::uint64_t a = 0; a < local_dim; ++a) amplitudes[base | scatter[a]] = out[a];
    }
}

QuantumState apply_gate(QuantumState state, const ComplexMatrix& u,
                        const std::vector<int>& targets, const std::vector<int>& controls) {
    ComplexVector amps = state.amplitudes();
    apply_gate_in_place(amps, state.n_qubits(), u, targets, controls);
    return QuantumState::from_amplitudes(state.n_qubits(), std::move(amps));
}

double prob_of_outcome(const QuantumState& state, int qubit, int outcome) {
    check_qubit_index(state.n_qubits(), qubit);
    if (outcome != 0 && outcome != 1) throw ValidationError("prob_of_outcome: outcome must be 0 or 1");
    const std::uint64_t mask = qubit_mask(state.n_qubits(), qubit);
    double p = 0.0;
    const ComplexVector& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (((i & mask) != 0) == (outcome == 1)) p += std::norm(amps[i]);
    return p;
}

std::pair<QuantumState, double> postselect(const QuantumState& state, int qubit, int outcome) {
    const double p = prob_of_outcome(state, qubit, outcome);
    if (p < kPostselectTolerance)
        throw ImpossibleOutcomeError("postselect: outcome probability is numerically zero");
    const std::uint64_t mask = qubit_mask(state.n_qubits(), qubit);
    const double inv = 1.0 / std::sqrt(p);
    ComplexVector amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (((i & mask) != 0) == (outcome == 1))
            amps[i] *= inv;
        else
            amps[i] = 0.0;
    }
    return {QuantumState::from_amplitudes(state.n_qubits(), std::move(amps)), p};
}

ComplexVector extract_subregister(const QuantumState& state,
                                  const std::vector<std::pair<int, int>>& fixed,
                                  const std::vector<int>& keep) {
    const int n = state.n_qubits();
    std::vector<int> seen;
    std::uint64_t fixed_mask = 0, fixed_bits = 0;
    for (const auto& [qubit, bit] : fixed) {
        check_qubit_index(n, qubit);
        if (bit != 0 && bit != 1)
            throw ValidationError("extract_subregister: fixed bit must be 0 or 1");
        fixed_mask |= qubit_mask(n, qubit);
        if (bit == 1) fixed_bits |= qubit_mask(n, qubit);
        seen.push_back(qubit);
    }
    for (int q : keep) {
        check_qubit_index(n, q);
        seen.push_back(q);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end() ||
        seen.size() != static_cast<std::size_t>(n))
        throw ValidationError("extract_subregister: fixed and keep must partition the qubits");

    const ComplexVector& amps = state.amplitudes();
    double total = 0.0, violating = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double w = std::norm(amps[i]);
        total += w;
        if ((i & fixed_mask) != fixed_bits) violating += w;
    }
    if (violating >= kProductMassTolerance * total)
        throw NotProductStateError(
            "extract_subregister: amplitude mass outside the fixed bits is too large");

    const std::size_t k = keep.size();
    const std::uint64_t out_dim = std::uint64_t{1} << k;
    ComplexVector out(out_dim);
    for (std::uint64_t a = 0; a < out_dim; ++a) {
        std::uint64_t idx = fixed_bits;
        for (std::size_t t = 0; t < k; ++t)
            if ((a >> (k - 1 - t)) & 1) idx |= qubit_mask(n, keep[t]);
        out[a] = amps[idx];
    }
    return normalized(out);
}

}  // namespace qls
