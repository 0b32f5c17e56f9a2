#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "qls/circuit.hpp"
#include "qls/complex_linalg.hpp"

namespace qls {

/// Eigenvalue representability: lambda*t0/(2*pi) must be an integer within
/// this tolerance for the clock register to encode it exactly.
inline constexpr double kRepresentableTolerance = 1e-9;

struct LinearSystemInstance {
    ComplexMatrix A;   // Hermitian, 2^m dimensional
    ComplexVector b;   // normalized right-hand side
};

enum class InversionMode { ExactArcsin, SmallAngle };

struct HHLConfig {
    int n_clock = 2;
    double t0 = 6.283185307179586476925287;  // 2*pi
    /// Rotation constant for exact mode; defaults to the smallest nonzero
    /// representable eigenvalue 2*pi/t0.
    std::optional<double> C;
    InversionMode mode = InversionMode::ExactArcsin;
    /// Small-angle parameter; defines C = 2^{-r} * pi in small-angle mode.
    std::optional<double> r;
};

struct HHLResult {
    ComplexVector solution_state;
    double success_probability = 0.0;
    double fidelity_vs_classical = 0.0;
    /// Clock-register weights right after phase estimation.
    std::map<std::uint64_t, double> clock_histogram;
};

/// Smallest r for which the small-angle approximation is considered sound:
/// log2(2*pi).  Lower values are accepted but flagged by callers.
double min_recommended_r();

/// The eigenvalue encoded by clock integer ell: 2*pi*ell/t0.
double clock_eigenvalue(std::uint64_t ell, double t0);

/// Resolves the rotation constant from the config (2^{-r}*pi in small-angle
/// mode, C or its default in exact mode).
double rotation_constant(const HHLConfig& config);

/// Walsh-Hadamard on the clock, controlled exp(iA * t0 * 2^k / 2^{n_clock})
/// per clock qubit of significance k, then the inverse QFT on the clock.
Circuit build_phase_estimation(const ComplexMatrix& a, double t0,
                               const std::vector<int>& clock_qubits,
                               const std::vector<int>& system_qubits, int n_qubits);

/// For every clock integer ell in [1, 2^{n_clock}-1], a multi-controlled
/// Ry(theta(ell)) on the ancilla with theta = 2*arcsin(C/lambda(ell)) in
/// exact mode or 2*C/lambda(ell) in small-angle mode; 0-controls realized by
/// X conjugation.  ell = 0 gets no rotation.
Circuit build_inversion(const std::vector<int>& clock_qubits, int ancilla_qubit,
                        const HHLConfig& config, int n_qubits);

/// Full pipeline: phase estimation, eigenvalue inversion, uncompute,
/// postselection of the ancilla on 1, solution extraction and fidelity
/// against the classical solve.
HHLResult run_hhl(const LinearSystemInstance& instance, const HHLConfig& config);

/// x^dagger M x for Hermitian M and normalized x.
double expectation_value(const ComplexVector& x, const ComplexMatrix& m);

/// sum_j |beta_j|^2 (C/lambda_j)^2 in exact mode, sum_j |beta_j|^2
/// sin^2(C/lambda_j) in small-angle mode.  Requires every eigenvalue to be
/// exactly representable on the clock.
double success_probability_closed_form(const LinearSystemInstance& instance,
                                       const HHLConfig& config);

}  // namespace qls
