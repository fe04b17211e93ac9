#pragma once

#include <optional>
#include <string>

#include "cvqe/pauli.hpp"

namespace cvqe {

/// Qubit Hamiltonian document as produced by an external chemistry code:
/// a Pauli-term list with the Hartree-Fock occupation and optional
/// reference energies. JSON on disk, fields:
///   n_qubits        integer
///   terms           array of {pauli: letter string, coeff: number}
///   hf_occupation   bit-string, qubit 0 first
///   constant        optional number (identity offset, Hartree)
///   metadata        optional {name, e_hf, e_fci}
struct HamiltonianFile {
    PauliSum hamiltonian;
    HfFrame hf;
    std::optional<std::string> name;
    std::optional<double> e_hf;
    std::optional<double> e_fci;
};

HamiltonianFile load_hamiltonian_file(const std::string& path);
HamiltonianFile parse_hamiltonian_json(const std::string& text);
std::string hamiltonian_to_json(const HamiltonianFile& file);
void save_hamiltonian_file(const std::string& path, const HamiltonianFile& file);

}  // namespace cvqe
