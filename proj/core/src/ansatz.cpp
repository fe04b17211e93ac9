#include "cvqe/ansatz.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace cvqe {

HeaTemplate::HeaTemplate(int n, int layers, std::vector<char> rotation_axes,
                         std::vector<int> slot_ids)
    : n_(n), p_(layers), axes_(std::move(rotation_axes)), slots_(std::move(slot_ids)) {
    if (n_ < 2) throw ValidationError("ansatz needs at least 2 qubits");
    if (n_ > kMaxQubits) throw SizeGuardError("ansatz qubit count exceeds 64");
    if (p_ < 1) throw ValidationError("ansatz needs at least 1 layer");
    if (axes_.empty()) throw ValidationError("rotation axes must be nonempty");
    for (char a : axes_)
        if (a != 'X' && a != 'Y' && a != 'Z')
            throw ValidationError(std::string("invalid rotation axis '") + a + "'");
    if (slots_.empty()) slots_.assign(static_cast<std::size_t>(p_) * n_, 0);
    if (static_cast<int>(slots_.size()) != p_ * n_)
        throw ValidationError("clifford slot count must equal layers * qubits");
    for (int id : slots_)
        if (id < 0 || id >= 24) throw ValidationError("clifford slot id out of [0, 24)");
}

ParamInfo HeaTemplate::param_info(int k) const {
    if (k < 0 || k >= num_parameters()) throw ValidationError("parameter index out of range");
    const int per_layer = n_ * static_cast<int>(axes_.size());
    const int layer = k / per_layer;
    const int rem = k % per_layer;
    return {layer, rem / static_cast<int>(axes_.size()),
            axes_[static_cast<std::size_t>(rem % static_cast<int>(axes_.size()))]};
}

std::vector<Gate> HeaTemplate::gates() const {
    std::vector<Gate> out;
    int k = 0;
    auto rotation_layer = [&] {
        for (int q = 0; q < n_; ++q)
            for (char a : axes_) {
                Gate g;
                g.kind = Gate::Kind::Rotation;
                g.qubit = q;
                g.axis = a;
                g.param_index = k++;
                out.push_back(g);
            }
    };
    rotation_layer();
    for (int layer = 1; layer <= p_; ++layer) {
        for (int q = 0; q + 1 < n_; ++q) {
            Gate g;
            g.kind = Gate::Kind::Cnot;
            g.qubit = q;
            g.qubit2 = q + 1;
            out.push_back(g);
        }
        for (int q = 0; q < n_; ++q) {
            Gate g;
            g.kind = Gate::Kind::Clifford1q;
            g.qubit = q;
            g.clifford_id = slots_[static_cast<std::size_t>((layer - 1) * n_ + q)];
            out.push_back(g);
        }
        rotation_layer();
    }
    return out;
}

HeaTemplate HeaTemplate::with_slots(std::vector<int> slot_ids) const {
    return HeaTemplate(n_, p_, axes_, std::move(slot_ids));
}

FlattenedAnsatz flatten(const HeaTemplate& t) {
    FlattenedAnsatz flat;
    std::vector<Gate> pending;
    for (const Gate& g : t.gates()) {
        if (g.kind == Gate::Kind::Rotation) {
            flat.entries.push_back({std::move(pending), g.axis, g.qubit, g.param_index});
            pending = {};
        } else {
            pending.push_back(g);
        }
    }
    if (!pending.empty()) throw InvariantError("trailing Clifford gates after last rotation");
    return flat;
}

CliffordTableau clifford_at_zero(const HeaTemplate& t) {
    CliffordTableau v(t.num_qubits());
    const auto& group = single_qubit_cliffords();
    for (const Gate& g : t.gates()) {
        switch (g.kind) {
            case Gate::Kind::Rotation: break;
            case Gate::Kind::Cnot: v.append_cnot(g.qubit, g.qubit2); break;
            case Gate::Kind::Clifford1q:
                v.append_single_qubit(group[static_cast<std::size_t>(g.clifford_id)], g.qubit);
                break;
        }
    }
    return v;
}

std::vector<PauliString> compute_q(const HeaTemplate& t) {
    const int n = t.num_qubits();
    std::vector<PauliString> qs(static_cast<std::size_t>(t.num_parameters()), PauliString(n));
    CliffordTableau prefix(n);
    const auto& group = single_qubit_cliffords();
    for (const Gate& g : t.gates()) {
        switch (g.kind) {
            case Gate::Kind::Rotation:
                qs[static_cast<std::size_t>(g.param_index)] =
                    prefix.conjugate(PauliString::single(n, g.qubit, g.axis));
                break;
            case Gate::Kind::Cnot: prefix.append_cnot(g.qubit, g.qubit2); break;
            case Gate::Kind::Clifford1q:
                prefix.append_single_qubit(group[static_cast<std::size_t>(g.clifford_id)], g.qubit);
                break;
        }
    }
    return qs;
}

void write_circuit(std::ostream& out, const HeaTemplate& t, bool expand_cliffords) {
    out << "# circuit v1\n";
    out << "# n=" << t.num_qubits() << " p=" << t.num_layers() << " axes=";
    for (char a : t.rotation_axes()) out << a;
    out << "\n";
    const auto& group = single_qubit_cliffords();
    for (const Gate& g : t.gates()) {
        switch (g.kind) {
            case Gate::Kind::Rotation:
                out << "rot " << g.axis << ' ' << g.qubit << ' ' << g.param_index << '\n';
                break;
            case Gate::Kind::Cnot:
                out << "cnot " << g.qubit << ' ' << g.qubit2 << '\n';
                break;
            case Gate::Kind::Clifford1q:
                if (expand_cliffords) {
                    for (char w : group[static_cast<std::size_t>(g.clifford_id)].word)
                        out << (w == 'H' ? "h " : "s ") << g.qubit << '\n';
                } else {
                    out << "cliff " << g.qubit << ' ' << g.clifford_id << '\n';
                }
                break;
        }
    }
}

HeaTemplate parse_circuit(std::istream& in) {
    int n = -1, p = -1;
    std::string axes_str;
    std::vector<std::pair<int, int>> cliffs;  // (flat slot position by order, id)
    std::vector<int> slot_ids;
    std::string line;
    int cliff_count = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::size_t pos = line.find("n=");
            if (pos != std::string::npos) {
                std::istringstream hdr(line.substr(1));
                std::string tok;
                while (hdr >> tok) {
                    if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
                    if (tok.rfind("p=", 0) == 0) p = std::stoi(tok.substr(2));
                    if (tok.rfind("axes=", 0) == 0) axes_str = tok.substr(5);
                }
            }
            continue;
        }
        std::istringstream ls(line);
        std::string op;
        ls >> op;
        if (op == "rot" || op == "cnot") continue;  // structure comes from the header
        if (op == "cliff") {
            int q, id;
            if (!(ls >> q >> id)) throw ValidationError("circuit: malformed cliff line");
            cliffs.emplace_back(cliff_count++, id);
            slot_ids.push_back(id);
            continue;
        }
        if (op == "h" || op == "s")
            throw ValidationError("circuit: expanded gate lists cannot be parsed back");
        throw ValidationError("circuit: unknown gate '" + op + "'");
    }
    if (n < 0 || p < 0 || axes_str.empty()) throw ValidationError("circuit: missing header");
    std::vector<char> axes(axes_str.begin(), axes_str.end());
    if (static_cast<int>(slot_ids.size()) != n * p)
        throw ValidationError("circuit: clifford slot count mismatch");
    return HeaTemplate(n, p, std::move(axes), std::move(slot_ids));
}

}  // namespace cvqe
