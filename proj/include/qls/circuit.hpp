#pragma once

#include <string>
#include <vector>

#include "qls/gates.hpp"
#include "qls/statevector.hpp"

namespace qls {

/// Dimension cap for the full-unitary assembly oracle.
inline constexpr int kMaxUnitaryQubits = 10;

struct CircuitOp {
    Gate gate;
    std::vector<int> targets;
    std::vector<int> controls;
};

/// Ordered gate list on a fixed number of qubits.
class Circuit {
public:
    explicit Circuit(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    const std::vector<CircuitOp>& ops() const { return ops_; }
    std::size_t size() const { return ops_.size(); }

    /// Validates ranges, distinctness and the gate/target arity match.
    void append(Gate gate, std::vector<int> targets, std::vector<int> controls = {});
    /// Appends every op of `tail` (same qubit count).
    void extend(const Circuit& tail);

private:
    int n_qubits_;
    std::vector<CircuitOp> ops_;
};

/// Reversed op order, each gate conjugate-transposed.
Circuit dagger(const Circuit& circuit);

/// Standard inverse quantum Fourier transform over the given qubits
/// (qubits[0] most significant).  The assembled unitary is the conjugate
/// transpose of the DFT matrix W[j][k] = exp(2*pi*i*j*k/2^n)/sqrt(2^n).
Circuit inverse_qft_circuit(int n_qubits, const std::vector<int>& qubits);

/// Verification oracle: assembles the full 2^n x 2^n unitary by multiplying
/// the full-register embedding of each op (later ops on the left).  Capped at
/// kMaxUnitaryQubits qubits.
ComplexMatrix circuit_to_unitary(const Circuit& circuit);

/// Full-register embedding of a single op, built entrywise from the
/// controlled-gate definition (identity wherever a control bit is 0).
ComplexMatrix op_to_unitary(const CircuitOp& op, int n_qubits);

QuantumState run_circuit(const Circuit& circuit, QuantumState state);

/// `<name>[(θ=<angle, 9 significant digits>)] targets=[...] controls=[...]`
std::string format_op(const CircuitOp& op);
/// One op per line, LF-terminated.
std::string dump_circuit(const Circuit& circuit);

}  // namespace qls
