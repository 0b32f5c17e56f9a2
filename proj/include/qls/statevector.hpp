#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qls/complex_linalg.hpp"

namespace qls {

/// Outcomes below this probability are treated as impossible.
inline constexpr double kPostselectTolerance = 1e-12;
/// Maximum amplitude mass allowed outside the fixed bits when extracting a
/// subregister.
inline constexpr double kProductMassTolerance = 1e-8;

/// Normalized state of n qubits.  Qubit 0 is the most significant bit of the
/// basis index (the top wire of a circuit diagram), so the basis index of
/// |x1 x2 ... xn> is the integer x1 x2 ... xn read in binary.
class QuantumState {
public:
    static QuantumState basis(int n_qubits, std::uint64_t index);
    /// Amplitudes must already be normalized within 1e-8; they are
    /// renormalized exactly on construction.
    static QuantumState from_amplitudes(int n_qubits, ComplexVector amplitudes);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amplitudes_.size(); }
    const ComplexVector& amplitudes() const { return amplitudes_; }

private:
    QuantumState(int n_qubits, ComplexVector amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    int n_qubits_;
    ComplexVector amplitudes_;
};

/// Core kernel: applies a 2^k-dimensional unitary to the target qubits of a
/// raw amplitude vector, restricted to basis states whose control bits are
/// all 1.  targets[0] is the most significant bit of the gate's local index.
/// The vector need not be normalized; the map is linear and norm-preserving.
void apply_gate_in_place(ComplexVector& amplitudes, int n_qubits, const ComplexMatrix& u,
                         const std::vector<int>& targets, const std::vector<int>& controls);

QuantumState apply_gate(QuantumState state, const ComplexMatrix& u,
                        const std::vector<int>& targets, const std::vector<int>& controls = {});

/// Probability of reading `outcome` (0 or 1) on one qubit.
double prob_of_outcome(const QuantumState& state, int qubit, int outcome);

/// Projects onto the given outcome and renormalizes.  Returns the projected
/// state and the probability of the outcome before projection.
std::pair<QuantumState, double> postselect(const QuantumState& state, int qubit, int outcome);

/// Reads off the state of the `keep` qubits assuming every other qubit sits
/// at its `fixed` bit value (a product factor).  `fixed` and `keep` together
/// must cover all qubits exactly once; keep[0] is the most significant bit of
/// the result.  Throws NotProductStateError if the amplitude mass violating
/// the fixed bits exceeds kProductMassTolerance.
ComplexVector extract_subregister(const QuantumState& state,
                                  const std::vector<std::pair<int, int>>& fixed,
                                  const std::vector<int>& keep);

}  // namespace qls
