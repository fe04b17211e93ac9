#pragma once

#include <string>
#include <vector>

#include "cvqe/gf2.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

/// One of the 24 single-qubit Clifford operators, identified by its
/// conjugation action U^dag P U on X and Z. The id is stable across runs:
/// the group is enumerated by closure over {H, S} words and sorted by a
/// canonical action code with the identity first.
struct SingleQubitClifford {
    int id = 0;
    PauliString x_image{1};  // U^dag X U, a signed 1-qubit Pauli
    PauliString z_image{1};  // U^dag Z U
    std::string word;        // shortest {H,S} word realizing the action

    bool is_identity() const {
        return x_image == PauliString::from_letters("X") && z_image == PauliString::from_letters("Z");
    }
};

/// All 24 single-qubit Cliffords in canonical id order.
const std::vector<SingleQubitClifford>& single_qubit_cliffords();

/// Action of a Clifford unitary U on the Pauli group, stored as the images
/// U^dag X[i] U and U^dag Z[i] U. conjugate() therefore maps P to U^dag P U.
///
/// Composition convention: compose(a, b) is the tableau of the circuit that
/// applies b first and a after it, i.e. the operator product A*B, so
/// conjugate(compose(a, b), P) == conjugate(b, conjugate(a, P)).
class CliffordTableau {
  public:
    /// Identity on n qubits.
    explicit CliffordTableau(int n);

    int num_qubits() const { return n_; }
    const PauliString& x_image(int i) const { return x_images_[static_cast<std::size_t>(i)]; }
    const PauliString& z_image(int i) const { return z_images_[static_cast<std::size_t>(i)]; }

    /// U^dag P U with exact phase tracking.
    PauliString conjugate(const PauliString& p) const;

    /// Appends a gate after the circuit this tableau represents.
    void append_h(int q);
    void append_s(int q);
    void append_x(int q);
    void append_cnot(int control, int target);
    void append_single_qubit(const SingleQubitClifford& c, int q);

    bool is_identity() const;
    bool operator==(const CliffordTableau& other) const;

    /// Checks the symplectic relations and image Hermiticity; throws
    /// InvariantError on violation.
    void check_valid() const;

    static CliffordTableau from_images(std::vector<PauliString> x_images,
                                       std::vector<PauliString> z_images);

  private:
    int n_;
    std::vector<PauliString> x_images_;
    std::vector<PauliString> z_images_;
};

CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b);
CliffordTableau inverse(const CliffordTableau& t);

/// Clifford U_C defined by an invertible GF(2) matrix m acting on X parts:
/// conjugating any Pauli h gives x' = m x_h, all generator images carry +
/// signs. The images are X[i] -> X^(column i of m) and
/// Z[i] -> Z^(row i of m^-1). Z-only Paulis map to Z-only Paulis, so U_C
/// fixes |0...0> up to global phase.
CliffordTableau tableau_from_xmatrix(const gf2::BitMatrix& m);

}  // namespace cvqe
