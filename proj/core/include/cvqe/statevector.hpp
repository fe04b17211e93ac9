#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "cvqe/ansatz.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

using Amplitude = std::complex<double>;

/// Dense 2^n statevector. Guarded to n <= 16 qubits.
class StateVector {
  public:
    explicit StateVector(int n);

    int num_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    std::vector<Amplitude>& amplitudes() { return amps_; }

    void apply_rotation(int qubit, char axis, double theta);
    void apply_unitary1q(int qubit, const std::array<Amplitude, 4>& u);  // row-major 2x2
    void apply_h(int qubit);
    void apply_s(int qubit);
    void apply_x(int qubit);
    void apply_cnot(int control, int target);
    void apply_pauli(const PauliString& p);

    double norm() const;

  private:
    int n_;
    std::vector<Amplitude> amps_;
};

/// 2x2 unitary of a single-qubit Clifford, built from its {H, S} word.
std::array<Amplitude, 4> clifford_unitary(const SingleQubitClifford& c);

/// |psi(theta)> = U(theta)|0...0> with R(theta) = exp(-i theta/2 P).
StateVector simulate(const HeaTemplate& t, std::span<const double> params);

/// <psi|H|psi> including the constant. The imaginary residue must stay
/// below 1e-10 or an InvariantError is thrown.
double energy(const StateVector& state, const PauliSum& h);

/// H|psi> plus constant*|psi>.
StateVector apply_sum(const PauliSum& h, const StateVector& state);

/// Exact dE/dtheta_k for all parameters via one reverse (adjoint) sweep.
std::vector<double> energy_gradient(const HeaTemplate& t, std::span<const double> params,
                                    const PauliSum& h);

/// All 2^n eigenvalues of the dense Hermitian matrix, ascending.
/// Guarded to n <= 14.
std::vector<double> exact_spectrum(const PauliSum& h);

}  // namespace cvqe
