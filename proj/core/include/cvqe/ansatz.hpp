#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cvqe/clifford.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

/// One element of the circuit in execution order.
struct Gate {
    enum class Kind { Rotation, Cnot, Clifford1q };
    Kind kind = Kind::Rotation;
    int qubit = 0;        // rotation/Clifford target, CNOT control
    int qubit2 = -1;      // CNOT target
    char axis = 'Y';      // rotation generator
    int param_index = -1; // rotation parameter slot
    int clifford_id = 0;  // single-qubit Clifford slot
};

/// Maps a flat parameter index back to its position in the template.
struct ParamInfo {
    int layer;
    int qubit;
    char axis;
};

/// Layered hardware-efficient ansatz: a leading rotation layer, then p
/// blocks of [CNOT ladder, one Clifford slot per qubit, rotation layer].
/// Rotations within a layer run qubit-ascending, then in axis order, and
/// each carries one parameter, so the parameter count is
/// (p+1) * n * axes; the two-qubit gate count is (n-1) * p.
class HeaTemplate {
  public:
    /// slot_ids may be empty (all identity) or have exactly p*n entries in
    /// [0, 24), indexed as (layer-1)*n + qubit.
    HeaTemplate(int n, int layers, std::vector<char> rotation_axes,
                std::vector<int> slot_ids = {});

    int num_qubits() const { return n_; }
    int num_layers() const { return p_; }
    const std::vector<char>& rotation_axes() const { return axes_; }
    const std::vector<int>& clifford_slots() const { return slots_; }

    int num_parameters() const { return (p_ + 1) * n_ * static_cast<int>(axes_.size()); }
    int cnot_count() const { return (n_ - 1) * p_; }

    ParamInfo param_info(int k) const;

    /// Full circuit in execution order.
    std::vector<Gate> gates() const;

    /// Same template with different Clifford slot ids.
    HeaTemplate with_slots(std::vector<int> slot_ids) const;

  private:
    int n_;
    int p_;
    std::vector<char> axes_;
    std::vector<int> slots_;
};

/// The circuit rewritten as alternating Clifford segments and rotations:
/// segment j collects every Clifford gate between rotation j-1 and
/// rotation j (possibly none). Replaying prefix+rotation pairs in order
/// reproduces the template circuit exactly.
struct FlattenedAnsatz {
    struct Entry {
        std::vector<Gate> prefix;  // Clifford gates before this rotation
        char axis;
        int qubit;
        int param_index;
    };
    std::vector<Entry> entries;
};

FlattenedAnsatz flatten(const HeaTemplate& t);

/// Tableau of the circuit with every rotation angle set to zero (the
/// product of all Clifford segments).
CliffordTableau clifford_at_zero(const HeaTemplate& t);

/// Rotation generators pulled back through their Clifford prefixes:
/// Q_k = V_k^dag P_k V_k with V_k the product of all Clifford gates before
/// rotation k. The state derivative at zero angles is
/// -(i/2) U(0) Q_k |0...0>.
std::vector<PauliString> compute_q(const HeaTemplate& t);

/// Plain-text gate list, one gate per line:
///   rot <axis> <qubit> <param_index>
///   cnot <control> <target>
///   cliff <qubit> <clifford_id>
/// With expand_cliffords, cliff lines become their {H, S} words as
///   h <qubit> / s <qubit> lines (not parseable back into a template).
void write_circuit(std::ostream& out, const HeaTemplate& t, bool expand_cliffords);

/// Parses the unexpanded format written by write_circuit.
HeaTemplate parse_circuit(std::istream& in);

}  // namespace cvqe
