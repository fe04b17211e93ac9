#include "cvqe/statevector.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace cvqe {

namespace {
constexpr int kMaxSimQubits = 16;
constexpr int kMaxSpectrumQubits = 14;
}  // namespace

StateVector::StateVector(int n) : n_(n) {
    if (n < 1) throw ValidationError("statevector qubit count must be positive");
    if (n > kMaxSimQubits) throw SizeGuardError("statevector limited to 16 qubits");
    amps_.assign(std::size_t{1} << n, Amplitude{0, 0});
    amps_[0] = Amplitude{1, 0};
}

void StateVector::apply_unitary1q(int qubit, const std::array<Amplitude, 4>& u) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t c = 0; c < amps_.size(); ++c) {
        if (c & bit) continue;
        const Amplitude a0 = amps_[c];
        const Amplitude a1 = amps_[c | bit];
        amps_[c] = u[0] * a0 + u[1] * a1;
        amps_[c | bit] = u[2] * a0 + u[3] * a1;
    }
}

void StateVector::apply_rotation(int qubit, char axis, double theta) {
    const double ch = std::cos(theta / 2), sh = std::sin(theta / 2);
    std::array<Amplitude, 4> u;
    switch (axis) {
        case 'X': u = {Amplitude{ch, 0}, Amplitude{0, -sh}, Amplitude{0, -sh}, Amplitude{ch, 0}}; break;
        case 'Y': u = {Amplitude{ch, 0}, Amplitude{-sh, 0}, Amplitude{sh, 0}, Amplitude{ch, 0}}; break;
        case 'Z': u = {Amplitude{ch, -sh}, Amplitude{0, 0}, Amplitude{0, 0}, Amplitude{ch, sh}}; break;
        default: throw ValidationError("invalid rotation axis");
    }
    apply_unitary1q(qubit, u);
}

void StateVector::apply_h(int qubit) {
    const double r = 1.0 / std::sqrt(2.0);
    apply_unitary1q(qubit, {Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{-r, 0}});
}

void StateVector::apply_s(int qubit) {
    apply_unitary1q(qubit, {Amplitude{1, 0}, Amplitude{0, 0}, Amplitude{0, 0}, Amplitude{0, 1}});
}

void StateVector::apply_x(int qubit) {
    apply_unitary1q(qubit, {Amplitude{0, 0}, Amplitude{1, 0}, Amplitude{1, 0}, Amplitude{0, 0}});
}

void StateVector::apply_cnot(int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t c = 0; c < amps_.size(); ++c)
        if ((c & cbit) && !(c & tbit)) std::swap(amps_[c], amps_[c | tbit]);
}

void StateVector::apply_pauli(const PauliString& p) {
    if (p.num_qubits() != n_) throw ValidationError("apply_pauli: qubit count mismatch");
    const std::uint64_t x = p.x(), z = p.z();
    const Amplitude phase = p.phase();
    if (x == 0) {
        for (std::size_t c = 0; c < amps_.size(); ++c)
            amps_[c] *= parity64(z & c) ? -phase : phase;
        return;
    }
    for (std::size_t c = 0; c < amps_.size(); ++c) {
        const std::size_t d = c ^ x;
        if (c >= d) continue;
        const Amplitude ac = amps_[c], ad = amps_[d];
        amps_[c] = (parity64(z & c) ? -phase : phase) * ad;
        amps_[d] = (parity64(z & d) ? -phase : phase) * ac;
    }
}

double StateVector::norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

std::array<Amplitude, 4> clifford_unitary(const SingleQubitClifford& c) {
    const double r = 1.0 / std::sqrt(2.0);
    const std::array<Amplitude, 4> h = {Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{r, 0},
                                        Amplitude{-r, 0}};
    const std::array<Amplitude, 4> s = {Amplitude{1, 0}, Amplitude{0, 0}, Amplitude{0, 0},
                                        Amplitude{0, 1}};
    std::array<Amplitude, 4> u = {Amplitude{1, 0}, Amplitude{0, 0}, Amplitude{0, 0},
                                  Amplitude{1, 0}};
    for (char g : c.word) {
        const auto& m = g == 'H' ? h : s;
        // first word character acts first: u <- m * u
        u = {m[0] * u[0] + m[1] * u[2], m[0] * u[1] + m[1] * u[3],
             m[2] * u[0] + m[3] * u[2], m[2] * u[1] + m[3] * u[3]};
    }
    return u;
}

namespace {

void apply_gate(StateVector& sv, const Gate& g, std::span<const double> params, bool dagger) {
    switch (g.kind) {
        case Gate::Kind::Rotation: {
            const double theta = params[static_cast<std::size_t>(g.param_index)];
            sv.apply_rotation(g.qubit, g.axis, dagger ? -theta : theta);
            break;
        }
        case Gate::Kind::Cnot:
            sv.apply_cnot(g.qubit, g.qubit2);
            break;
        case Gate::Kind::Clifford1q: {
            auto u = clifford_unitary(
                single_qubit_cliffords()[static_cast<std::size_t>(g.clifford_id)]);
            if (dagger)
                u = {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
            sv.apply_unitary1q(g.qubit, u);
            break;
        }
    }
}

}  // namespace

StateVector simulate(const HeaTemplate& t, std::span<const double> params) {
    if (static_cast<int>(params.size()) != t.num_parameters())
        throw ValidationError("simulate: parameter count mismatch");
    StateVector sv(t.num_qubits());
    for (const Gate& g : t.gates()) apply_gate(sv, g, params, false);
    return sv;
}

StateVector apply_sum(const PauliSum& h, const StateVector& state) {
    if (h.num_qubits() != state.num_qubits()) throw ValidationError("apply_sum: qubit mismatch");
    StateVector out(state.num_qubits());
    auto& acc = out.amplitudes();
    const auto& in = state.amplitudes();
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] = h.constant() * in[c];
    for (const auto& term : h.terms()) {
        const std::uint64_t x = term.pauli.x(), z = term.pauli.z();
        const Amplitude w = term.coeff * term.pauli.phase();
        for (std::size_t c = 0; c < acc.size(); ++c)
            acc[c] += (parity64(z & c) ? -w : w) * in[c ^ x];
    }
    return out;
}

namespace {

Amplitude pauli_sandwich(const StateVector& bra, const PauliString& p, const StateVector& ket) {
    const std::uint64_t x = p.x(), z = p.z();
    const Amplitude phase = p.phase();
    const auto& b = bra.amplitudes();
    const auto& k = ket.amplitudes();
    Amplitude acc{0, 0};
    for (std::size_t c = 0; c < b.size(); ++c)
        acc += std::conj(b[c]) * (parity64(z & c) ? -phase : phase) * k[c ^ x];
    return acc;
}

}  // namespace

double energy(const StateVector& state, const PauliSum& h) {
    if (h.num_qubits() != state.num_qubits()) throw ValidationError("energy: qubit mismatch");
    Amplitude acc{h.constant(), 0};
    for (const auto& term : h.terms())
        acc += term.coeff * pauli_sandwich(state, term.pauli, state);
    if (std::abs(acc.imag()) >= 1e-10) throw InvariantError("energy has imaginary residue");
    return acc.real();
}

std::vector<double> energy_gradient(const HeaTemplate& t, std::span<const double> params,
                                    const PauliSum& h) {
    if (static_cast<int>(params.size()) != t.num_parameters())
        throw ValidationError("energy_gradient: parameter count mismatch");
    if (h.num_qubits() != t.num_qubits()) throw ValidationError("energy_gradient: qubit mismatch");

    StateVector psi = simulate(t, params);
    StateVector lambda = apply_sum(h, psi);

    std::vector<double> grad(params.size(), 0.0);
    const auto circuit = t.gates();
    const int n = t.num_qubits();
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
        if (it->kind == Gate::Kind::Rotation) {
            const PauliString p = PauliString::single(n, it->qubit, it->axis);
            grad[static_cast<std::size_t>(it->param_index)] = pauli_sandwich(lambda, p, psi).imag();
        }
        apply_gate(psi, *it, params, true);
        apply_gate(lambda, *it, params, true);
    }
    return grad;
}

std::vector<double> exact_spectrum(const PauliSum& h) {
    const int n = h.num_qubits();
    if (n > kMaxSpectrumQubits) throw SizeGuardError("exact_spectrum limited to 14 qubits");
    const std::size_t dim = std::size_t{1} << n;

    if (h.all_terms_even_y()) {
        // every phase is +-1, the matrix is real symmetric
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));
        for (std::size_t c = 0; c < dim; ++c) m(c, c) = h.constant();
        for (const auto& term : h.terms()) {
            const std::uint64_t x = term.pauli.x(), z = term.pauli.z();
            const double w = term.coeff * term.pauli.phase().real();
            for (std::size_t c = 0; c < dim; ++c) {
                const std::size_t r = c ^ x;
                m(r, c) += parity64(z & r) ? -w : w;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
        std::vector<double> evals(dim);
        for (std::size_t i = 0; i < dim; ++i) evals[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        return evals;
    }

    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) m(c, c) = h.constant();
    for (const auto& term : h.terms()) {
        const std::uint64_t x = term.pauli.x(), z = term.pauli.z();
        const Amplitude w = term.coeff * term.pauli.phase();
        for (std::size_t c = 0; c < dim; ++c) {
            const std::size_t r = c ^ x;
            m(r, c) += parity64(z & r) ? -w : w;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> evals(dim);
    for (std::size_t i = 0; i < dim; ++i) evals[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    return evals;
}

}  // namespace cvqe
