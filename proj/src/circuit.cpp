#include "qls/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace qls {

namespace {

std::string format_double9(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

std::string format_index_list(const std::vector<int>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(xs[i]);
    }
    out += "]";
    return out;
}

}  // namespace

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw ValidationError("Circuit: need at least one qubit");
}

void Circuit::append(Gate gate, std::vector<int> targets, std::vector<int> controls) {
    std::vector<int> seen;
    for (int q : targets) {
        if (q < 0 || q >= n_qubits_) throw ValidationError("Circuit: target qubit out of range");
        seen.push_back(q);
    }
    for (int q : controls) {
        if (q < 0 || q >= n_qubits_) throw ValidationError("Circuit: control qubit out of range");
        seen.push_back(q);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ValidationError("Circuit: target/control qubits must be pairwise distinct");
    if (gate.matrix.rows() != (std::size_t{1} << targets.size()))
        throw ValidationError("Circuit: gate dimension does not match target count");
    ops_.push_back({std::move(gate), std::move(targets), std::move(controls)});
}

void Circuit::extend(const Circuit& tail) {
    if (tail.n_qubits() != n_qubits_)
        throw ValidationError("Circuit::extend: qubit counts differ");
    for (const CircuitOp& op : tail.ops()) ops_.push_back(op);
}

Circuit dagger(const Circuit& circuit) {
    Circuit out(circuit.n_qubits());
    const auto& ops = circuit.ops();
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
        out.append(dagger(it->gate), it->targets, it->controls);
    return out;
}

Circuit inverse_qft_circuit(int n_qubits, const std::vector<int>& qubits) {
    if (qubits.empty()) throw ValidationError("inverse_qft_circuit: need at least one qubit");
    std::vector<int> seen = qubits;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw ValidationError("inverse_qft_circuit: duplicate qubit indices");

    const int m = static_cast<int>(qubits.size());
    Circuit c(n_qubits);
    // Inverse of the textbook forward QFT (Hadamards and controlled phases,
    // closed by the bit-reversing swaps): swaps first, then per qubit the
    // daggered phases followed by its Hadamard.
    for (int i = m / 2 - 1; i >= 0; --i)
        c.append(standard_gate("SWAP"), {qubits[i], qubits[m - 1 - i]});
    for (int i = m - 1; i >= 0; --i) {
        for (int k = m - 1; k > i; --k) {
            // Controlled phase is diagonal, so control/target roles commute;
            // put the control on the more significant qubit.
            if (k - i + 1 == 2)
                c.append(standard_gate("Sdag"), {qubits[k]}, {qubits[i]});
            else
                c.append(phase_gate(-2.0 * std::numbers::pi / std::exp2(k - i + 1)),
                         {qubits[k]}, {qubits[i]});
        }
        c.append(standard_gate("H"), {qubits[i]});
    }
    return c;
}

ComplexMatrix op_to_unitary(const CircuitOp& op, int n_qubits) {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    const std::size_t k = op.targets.size();
    const std::uint64_t local_dim = std::uint64_t{1} << k;

    std::uint64_t target_mask = 0, control_mask = 0;
    for (int q : op.targets) target_mask |= std::uint64_t{1} << (n_qubits - 1 - q);
    for (int q : op.controls) control_mask |= std::uint64_t{1} << (n_qubits - 1 - q);

    std::vector<std::uint64_t> scatter(local_dim, 0);
    for (std::uint64_t a = 0; a < local_dim; ++a)
        for (std::size_t t = 0; t < k; ++t)
            if ((a >> (k - 1 - t)) & 1)
                scatter[a] |= std::uint64_t{1} << (n_qubits - 1 - op.targets[t]);

    ComplexMatrix e(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        if ((col & control_mask) != control_mask) {
            e(col, col) = 1.0;
            continue;
        }
        std::uint64_t local_col = 0;
        for (std::size_t t = 0; t < k; ++t)
            if (col & (std::uint64_t{1} << (n_qubits - 1 - op.targets[t])))
                local_col |= std::uint64_t{1} << (k - 1 - t);
        const std::uint64_t base = col & ~target_mask;
        for (std::uint64_t local_row = 0; local_row < local_dim; ++local_row)
            e(base | scatter[local_row], col) = op.gate.matrix(local_row, local_col);
    }
    return e;
}

ComplexMatrix circuit_to_unitary(const Circuit& circuit) {
    if (circuit.n_qubits() > kMaxUnitaryQubits)
        throw ResourceError("circuit_to_unitary: circuit exceeds the qubit cap");
    ComplexMatrix u = ComplexMatrix::identity(std::uint64_t{1} << circuit.n_qubits());
    for (const CircuitOp& op : circuit.ops()) u = op_to_unitary(op, circuit.n_qubits()) * u;
    return u;
}

QuantumState run_circuit(const Circuit& circuit, QuantumState state) {
    if (circuit.n_qubits() != state.n_qubits())
        throw ValidationError("run_circuit: circuit and state qubit counts differ");
    for (const CircuitOp& op : circuit.ops())
        state = apply_gate(std::move(state), op.gate.matrix, op.targets, op.controls);
    return state;
}

std::string format_op(const CircuitOp& op) {
    std::string line = op.gate.name;
    if (op.gate.angle) line += "(θ=" + format_double9(*op.gate.angle) + ")";
    line += " targets=" + format_index_list(op.targets);
    line += " controls=" + format_index_list(op.controls);
    return line;
}

std::string dump_circuit(const Circuit& circuit) {
    std::string out;
    for (const CircuitOp& op : circuit.ops()) {
        out += format_op(op);
        out += '\n';
    }
    return out;
}

}  // namespace qls
