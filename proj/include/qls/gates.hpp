#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qls/complex_linalg.hpp"

namespace qls {

/// A named unitary acting on `arity` qubits.  Rotation gates carry their
/// angle so circuit dumps can print it.
struct Gate {
    std::string name;
    ComplexMatrix matrix;
    std::optional<double> angle;

    int arity() const;
};

/// One of H, S, Sdag, X, Y, SWAP with the conventional matrix:
///   H = (1/sqrt 2)[[1,1],[1,-1]], S = diag(1,i), Y = [[0,-i],[i,0]],
///   SWAP the 4-dim exchange permutation.
Gate standard_gate(std::string_view name);

/// Ry(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]].
Gate ry_gate(double theta);

/// diag(1, e^{i*theta}).
Gate phase_gate(double theta);

/// Wraps an arbitrary unitary; throws if the matrix fails the unitarity check
/// or its dimension is not a power of two.
Gate matrix_gate(std::string name, ComplexMatrix matrix);

/// Conjugate transpose, with the name adjusted (Ry and Phase negate their
/// angle, self-inverse gates keep their name, anything else gets a "dag"
/// suffix toggled).
Gate dagger(const Gate& gate);

}  // namespace qls
