#pragma once

#include <vector>

#include "qls/circuit.hpp"
#include "qls/complex_linalg.hpp"

namespace qls {

/// One point of the r sweep.
struct SweepRecord {
    double r;
    double fidelity;
    double probability;
};

struct ExampleResult {
    double fidelity;
    double probability;
    ComplexVector x_prime;
};

struct OracleResult {
    double fidelity;
    double probability;
};

/// The hardwired system matrix (1/2)[[3,1],[1,3]], eigenvalues 1 and 2.
const ComplexMatrix& example_matrix();

/// True when r is below log2(2*pi), where the small-angle approximation
/// starts to degrade; such r are accepted but worth a warning.
bool below_recommended_r(double r);

/// Phase estimation on the 4-qubit example: H on the clock pair, the two
/// controlled exponentials, and the inverse QFT (8 ops).
Circuit example_phase_estimation_segment();

/// Phase estimation plus the eigenvalue-inversion SWAP (9 ops); everything
/// that precedes the controlled rotations.
Circuit example_pre_rotation_segment();

/// The full 20-op circuit: pre-rotation segment, the two controlled
/// Ry rotations (angles 2*pi/2^r and pi/2^r), then the dagger of the
/// pre-rotation segment.  Clock time t0 = 2*pi throughout.
Circuit build_example_circuit(double r);

/// Runs the circuit on |000> tensor b, postselects the ancilla on 1 and
/// extracts the solution qubit.  b must be a normalized 2-vector.
ExampleResult run_example(double r, const ComplexVector& b = {1.0, 0.0});

/// Closed-form fidelity and success probability: with b = beta1 u1 + beta2 u2
/// in the eigenbasis, the postselected solution is proportional to
/// beta1 sin(pi/2^r) u1 + beta2 sin(pi/2^{r+1}) u2 and the probability is
/// |beta1|^2 sin^2(pi/2^r) + |beta2|^2 sin^2(pi/2^{r+1}).
OracleResult closed_form_oracle(double r, const ComplexVector& b = {1.0, 0.0});

/// Uniform inclusive grid of run_example results.
std::vector<SweepRecord> sweep_r(double r_min, double r_max, int steps,
                                 const ComplexVector& b = {1.0, 0.0});

}  // namespace qls
