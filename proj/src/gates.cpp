#include "qls/gates.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace qls {

namespace {

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

ComplexMatrix h_matrix() {
    return ComplexMatrix::from_rows({{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}});
}

ComplexMatrix s_matrix() {
    return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, Complex(0.0, 1.0)}});
}

ComplexMatrix x_matrix() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }

ComplexMatrix y_matrix() {
    return ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
}

ComplexMatrix swap_matrix() {
    return ComplexMatrix::from_rows({{1.0, 0.0, 0.0, 0.0},
                                     {0.0, 0.0, 1.0, 0.0},
                                     {0.0, 1.0, 0.0, 0.0},
                                     {0.0, 0.0, 0.0, 1.0}});
}

bool self_inverse_name(const std::string& name) {
    return name == "H" || name == "X" || name == "Y" || name == "SWAP" || name == "I";
}

}  // namespace

int Gate::arity() const {
    int k = 0;
    for (std::size_t d = matrix.rows(); d > 1; d >>= 1) ++k;
    return k;
}

Gate standard_gate(std::string_view name) {
    if (name == "H") return {"H", h_matrix(), {}};
    if (name == "S") return {"S", s_matrix(), {}};
    if (name == "Sdag") return {"Sdag", s_matrix().dagger(), {}};
    if (name == "X") return {"X", x_matrix(), {}};
    if (name == "Y") return {"Y", y_matrix(), {}};
    if (name == "SWAP") return {"SWAP", swap_matrix(), {}};
    throw ValidationError("standard_gate: unknown gate name '" + std::string(name) + "'");
}

Gate ry_gate(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return {"Ry", ComplexMatrix::from_rows({{c, -s}, {s, c}}), theta};
}

Gate phase_gate(double theta) {
    return {"Phase", ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::polar(1.0, theta)}}),
            theta};
}

Gate matrix_gate(std::string name, ComplexMatrix matrix) {
    if (!matrix.is_square() || matrix.rows() == 0 ||
        (matrix.rows() & (matrix.rows() - 1)) != 0)
        throw ValidationError("matrix_gate: dimension must be a power of two");
    if (!matrix.is_unitary())
        throw ValidationError("matrix_gate: matrix '" + name + "' is not unitary");
    return {std::move(name), std::move(matrix), {}};
}

Gate dagger(const Gate& gate) {
    Gate out{gate.name, gate.matrix.dagger(), gate.angle};
    if (gate.angle) {
        out.angle = -*gate.angle;
    } else if (!self_inverse_name(gate.name)) {
        constexpr std::string_view suffix = "dag";
        if (out.name.size() > suffix.size() && out.name.ends_with(suffix))
            out.name.resize(out.name.size() - suffix.size());
        else
            out.name += suffix;
    }
    return out;
}

}  // namespace qls
