#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cvqe/common.hpp"

namespace cvqe {

/// N-qubit Pauli string in binary-symplectic form,
///
///     P = phase * prod_i (Z[i])^z[i] (X[i])^x[i],   i ascending,
///
/// with the phase stored as a power of i (phase = i^phase_power). Qubit i
/// lives at bit i of the x and z words, so a letter string maps to bits
/// with its first character at bit 0.
class PauliString {
  public:
    /// Identity on n qubits.
    explicit PauliString(int n);
    PauliString(int n, std::uint64_t x, std::uint64_t z, int phase_power);

    /// Parses a letter string over {I,X,Y,Z}; the optional sign multiplies
    /// the operator. Each Y factor contributes a phase of -i, so the result
    /// is always the Hermitian operator named by the letters.
    static PauliString from_letters(std::string_view letters, int sign = +1);

    /// Single X/Y/Z factor embedded at the given qubit.
    static PauliString single(int n, int qubit, char axis);

    int num_qubits() const { return n_; }
    std::uint64_t x() const { return x_; }
    std::uint64_t z() const { return z_; }
    int phase_power() const { return k_; }
    std::complex<double> phase() const;

    bool is_identity() const { return x_ == 0 && z_ == 0 && k_ == 0; }
    bool has_identity_support() const { return x_ == 0 && z_ == 0; }
    int y_count() const { return popcount64(x_ & z_); }
    bool is_hermitian() const;
    int weight() const { return popcount64(x_ | z_); }

    /// Exact operator product with phase tracking.
    PauliString operator*(const PauliString& other) const;
    /// Multiplies the phase by i^k.
    PauliString times_phase(int k) const { return {n_, x_, z_, (k_ + k) & 3}; }

    bool commutes_with(const PauliString& other) const;

    /// Letter-string form of a Hermitian Pauli: returns the sign in
    /// *sign_out and the letters. Throws InvariantError for phases that a
    /// signed letter string cannot represent.
    std::string to_letters(int* sign_out) const;

    bool operator==(const PauliString& other) const {
        return n_ == other.n_ && x_ == other.x_ && z_ == other.z_ && k_ == other.k_;
    }

  private:
    int n_;
    std::uint64_t x_;
    std::uint64_t z_;
    int k_;  // phase = i^k_, k_ in {0,1,2,3}
};

/// <0...0| P Q |0...0> evaluated in closed form: zero unless the X parts
/// match, otherwise (-1)^(z_Q . x_Q) phase_P phase_Q.
std::complex<double> vacuum_expectation(const PauliString& p, const PauliString& q);

/// Computational-basis Hartree-Fock occupation; applying the frame maps
/// the occupied determinant to the all-zeros state.
struct HfFrame {
    int n = 0;
    std::uint64_t occupation = 0;

    static HfFrame from_string(std::string_view bits);
    std::string to_string() const;
    bool is_trivial() const { return occupation == 0; }
};

struct PauliTerm {
    double coeff;
    PauliString pauli;  // Hermitian, phase canonicalized to {+1, +i}
};

/// Weighted sum of Hermitian Pauli terms plus an identity offset. Terms are
/// merged on construction by their (x, z) key, identity terms fold into the
/// constant, and merged coefficients below 1e-12 are dropped.
class PauliSum {
  public:
    explicit PauliSum(int n, double constant = 0.0);
    PauliSum(int n, double constant, std::vector<std::pair<double, PauliString>> raw_terms);

    int num_qubits() const { return n_; }
    double constant() const { return constant_; }
    const std::vector<PauliTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// True when every term has an even Y count (real matrix representation).
    bool all_terms_even_y() const;

  private:
    int n_;
    double constant_;
    std::vector<PauliTerm> terms_;
};

/// Conjugation of every term by X^occupation: coefficients flip sign where
/// the term's Z support overlaps the occupied bits. Involution.
PauliSum apply_hf_frame(const PauliSum& h, const HfFrame& frame);

/// <0...0|H|0...0> for a sum already in the all-zeros HF frame: the constant
/// plus the diagonal (x = 0) terms.
double hf_energy(const PauliSum& h);

}  // namespace cvqe
