#include "qevo/circuit.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qevo {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

std::string_view gate_name(GateId g) {
    switch (g) {
        case GateId::H: return "H";
        case GateId::X: return "X";
        case GateId::Y: return "Y";
        case GateId::Z: return "Z";
        case GateId::S: return "S";
        case GateId::Sdg: return "Sdg";
        case GateId::T: return "T";
        case GateId::Tdg: return "Tdg";
        case GateId::CNOT: return "CNOT";
    }
    return "?";
}

std::optional<GateId> gate_from_name(std::string_view name) {
    for (GateId g : kAllGates)
        if (gate_name(g) == name) return g;
    return std::nullopt;
}

std::vector<Complex> gate_matrix(GateId g) {
    const Complex i{0.0, 1.0};
    switch (g) {
        case GateId::H:
            return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateId::X:
            return {0, 1, 1, 0};
        case GateId::Y:
            return {0, -i, i, 0};
        case GateId::Z:
            return {1, 0, 0, -1};
        case GateId::S:
            return {1, 0, 0, i};
        case GateId::Sdg:
            return {1, 0, 0, -i};
        case GateId::T:
            return {1, 0, 0, std::polar(1.0, M_PI / 4)};
        case GateId::Tdg:
            return {1, 0, 0, std::polar(1.0, -M_PI / 4)};
        case GateId::CNOT:
            // |c t> basis with the control as the high bit: |10> <-> |11>
            return {1, 0, 0, 0,
                    0, 1, 0, 0,
                    0, 0, 0, 1,
                    0, 0, 1, 0};
    }
    return {};
}

void validate(const Circuit& c) {
    if (c.n_qubits <= 0)
        throw InvalidWireError("circuit must have at least one qubit");
    for (std::size_t k = 0; k < c.ops.size(); ++k) {
        const Operation& op = c.ops[k];
        for (int j = 0; j < op.arity(); ++j) {
            const int w = op.wires[j];
            if (w < 0 || w >= c.n_qubits)
                throw InvalidWireError("op " + std::to_string(k) + " (" +
                                       std::string(gate_name(op.gate)) +
                                       ") references wire " + std::to_string(w) +
                                       " on a " + std::to_string(c.n_qubits) +
                                       "-qubit circuit");
        }
        if (op.arity() == 2 && op.wires[0] == op.wires[1])
            throw InvalidWireError("op " + std::to_string(k) +
                                   ": CNOT control and target must differ");
    }
}

int t_count(const Circuit& c) {
    int n = 0;
    for (const Operation& op : c.ops)
        if (is_t_gate(op.gate)) ++n;
    return n;
}

std::string operation_to_string(const Operation& op) {
    std::string s(gate_name(op.gate));
    s += "@";
    s += std::to_string(op.wires[0]);
    if (op.arity() == 2) s += "," + std::to_string(op.wires[1]);
    return s;
}

std::string circuit_to_string(const Circuit& c) {
    std::ostringstream os;
    os << c.n_qubits << "q [";
    for (std::size_t k = 0; k < c.ops.size(); ++k) {
        if (k) os << " ";
        os << operation_to_string(c.ops[k]);
    }
    os << "]";
    return os.str();
}

std::string circuit_to_json(const Circuit& c) {
    nlohmann::ordered_json j;
    j["n_qubits"] = c.n_qubits;
    j["ops"] = nlohmann::ordered_json::array();
    for (const Operation& op : c.ops) {
        nlohmann::ordered_json jop;
        jop["gate"] = std::string(gate_name(op.gate));
        std::vector<int> wires(op.wires.begin(), op.wires.begin() + op.arity());
        jop["wires"] = wires;
        j["ops"].push_back(std::move(jop));
    }
    return j.dump();
}

Circuit circuit_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid circuit JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n_qubits") || !j.contains("ops"))
        throw ParseError("circuit JSON must contain n_qubits and ops");
    Circuit c;
    if (!j["n_qubits"].is_number_integer())
        throw ParseError("n_qubits must be an integer");
    c.n_qubits = j["n_qubits"].get<int>();
    if (!j["ops"].is_array())
        throw ParseError("ops must be an array");
    for (const auto& jop : j["ops"]) {
        if (!jop.is_object() || !jop.contains("gate") || !jop.contains("wires"))
            throw ParseError("each op needs gate and wires");
        const auto name = jop["gate"].get<std::string>();
        const auto gate = gate_from_name(name);
        if (!gate)
            throw ParseError("unknown gate name '" + name + "'");
        const auto wires = jop["wires"].get<std::vector<int>>();
        if (static_cast<int>(wires.size()) != arity(*gate))
            throw ParseError("gate " + name + " expects " +
                             std::to_string(arity(*gate)) + " wires, got " +
                             std::to_string(wires.size()));
        Operation op;
        op.gate = *gate;
        op.wires[0] = wires[0];
        if (wires.size() > 1) op.wires[1] = wires[1];
        c.ops.push_back(op);
    }
    validate(c);
    return c;
}

Circuit load_circuit(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open circuit file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return circuit_from_json(buf.str());
}

void save_circuit(const Circuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write circuit file: " + path);
    out << circuit_to_json(c) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace qevo
