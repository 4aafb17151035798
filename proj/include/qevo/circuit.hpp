#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qevo/errors.hpp"

namespace qevo {

/// Clifford+T gate set. All single-qubit gates plus CNOT; T/Tdg are the
/// non-Clifford members and the costly resource the fitness function tracks.
enum class GateId : std::uint8_t { H, X, Y, Z, S, Sdg, T, Tdg, CNOT };

inline constexpr std::array<GateId, 9> kAllGates = {
    GateId::H, GateId::X, GateId::Y, GateId::Z,  GateId::S,
    GateId::Sdg, GateId::T, GateId::Tdg, GateId::CNOT};

inline constexpr std::array<GateId, 8> kSingleQubitGates = {
    GateId::H, GateId::X, GateId::Y, GateId::Z,
    GateId::S, GateId::Sdg, GateId::T, GateId::Tdg};

constexpr int arity(GateId g) { return g == GateId::CNOT ? 2 : 1; }

constexpr bool is_t_gate(GateId g) { return g == GateId::T || g == GateId::Tdg; }

std::string_view gate_name(GateId g);
std::optional<GateId> gate_from_name(std::string_view name);

using Complex = std::complex<double>;

/// Row-major unitary of the gate, 2x2 for single-qubit gates, 4x4 for CNOT.
/// For CNOT the row/column index encodes (control bit, target bit) with the
/// control as the high bit.
std::vector<Complex> gate_matrix(GateId g);

/// One gate application: the genome unit. wires[0..arity-1] are meaningful;
/// for CNOT wires[0] is the control and wires[1] the target.
struct Operation {
    GateId gate = GateId::H;
    std::array<int, 2> wires{0, 0};

    Operation() = default;
    Operation(GateId g, int w0) : gate(g), wires{w0, 0} {}
    Operation(GateId g, int w0, int w1) : gate(g), wires{w0, w1} {}

    int arity() const { return qevo::arity(gate); }

    bool acts_on(int wire) const {
        return wires[0] == wire || (arity() == 2 && wires[1] == wire);
    }

    /// True when the two operations touch no common wire (they commute).
    bool disjoint_from(const Operation& other) const {
        for (int i = 0; i < arity(); ++i)
            if (other.acts_on(wires[i])) return false;
        return true;
    }

    bool operator==(const Operation& o) const {
        if (gate != o.gate) return false;
        for (int i = 0; i < arity(); ++i)
            if (wires[i] != o.wires[i]) return false;
        return true;
    }
};

/// The candidate genome: an ordered operation list on a fixed register.
struct Circuit {
    int n_qubits = 1;
    std::vector<Operation> ops;

    Circuit() = default;
    Circuit(int n, std::vector<Operation> operations)
        : n_qubits(n), ops(std::move(operations)) {}

    bool operator==(const Circuit& o) const = default;
};

/// Throws InvalidWireError if any operation references an out-of-range or
/// duplicated wire, or if n_qubits is not positive.
void validate(const Circuit& c);

/// Depth of the genome: the operation count. The change/swap mutations keep
/// it constant, delete lowers it by one, add raises it by one.
inline int depth(const Circuit& c) { return static_cast<int>(c.ops.size()); }

/// Number of T/Tdg operations.
int t_count(const Circuit& c);

std::string operation_to_string(const Operation& op);
std::string circuit_to_string(const Circuit& c);

/// Canonical on-disk genome format:
///   {"n_qubits": int, "ops": [{"gate": "H", "wires": [0]}, ...]}
std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const std::string& text);

Circuit load_circuit(const std::string& path);
void save_circuit(const Circuit& c, const std::string& path);

}  // namespace qevo
