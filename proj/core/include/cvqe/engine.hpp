#pragma once

#include <cstdint>
#include <vector>

#include "cvqe/ansatz.hpp"
#include "cvqe/clifford.hpp"
#include "cvqe/gf2.hpp"
#include "cvqe/pauli.hpp"

namespace cvqe {

/// Hamiltonian terms grouped by their X component. Within a group the
/// signed coefficients are summed into one weight; the all-Z group (x = 0)
/// and zero-weight groups are dropped. The sum of squared weights is the
/// reward ceiling R_max.
class GroupedHamiltonian {
  public:
    struct Column {
        std::uint64_t x;
        double weight;        // sum of coeff * sign over the group
        std::uint64_t rep_z;  // a representative member, for diagnostics
        int rep_phase_power;
    };

    /// h must be in the all-zeros HF frame with real phases on every term.
    explicit GroupedHamiltonian(const PauliSum& h);

    int num_qubits() const { return n_; }
    const std::vector<Column>& columns() const { return columns_; }
    double reward_max() const { return reward_max_; }
    /// Column indices ordered by weight^2 descending (ties by x ascending).
    const std::vector<int>& weight_order() const { return weight_order_; }
    /// The greedy independent subsequence of weight_order (length = rank).
    const std::vector<int>& greedy_independent() const { return greedy_independent_; }
    int rank() const { return static_cast<int>(greedy_independent_.size()); }

  private:
    int n_;
    std::vector<Column> columns_;
    double reward_max_ = 0;
    std::vector<int> weight_order_;
    std::vector<int> greedy_independent_;
};

/// Rotation generators that can contribute a first-order gradient: only
/// Q with phase +-i survive (odd Y count), and repeated X components are
/// removed keeping the lowest parameter index. delta marks the retained
/// parameters.
struct ScreenedQ {
    struct Column {
        std::uint64_t x;
        int param_index;
        std::uint64_t z;
        int phase_power;
    };
    std::vector<Column> columns;  // in parameter order
    std::vector<bool> delta;      // size = total parameter count
};

ScreenedQ screen_q(const std::vector<PauliString>& qs);

struct GreedyMatch {
    gf2::BitMatrix m;          // invertible n x n over GF(2)
    int matched_rank;          // r = min(r_h, r_Q)
    double guaranteed_reward;  // sum of the matched groups' squared weights
};

/// Basis-matching construction of M: the first r independent Hamiltonian
/// columns in weight order are mapped onto the first r independent Q
/// columns found scanning sq in scan_order. scan_order is a sequence of
/// indices into sq.columns. With no matchable columns M is the identity.
GreedyMatch greedy_match(const GroupedHamiltonian& gh, const ScreenedQ& sq,
                         const std::vector<int>& scan_order);

/// R = sum of weight^2 over Hamiltonian groups whose mapped X component
/// m*x lands in the screened Q set.
double reward(const gf2::BitMatrix& m, const GroupedHamiltonian& gh, const ScreenedQ& sq);

/// Exact initial-state energy gradients for every parameter, evaluated
/// from the closed-form vacuum expectation with term signs taken from the
/// actual conjugated Hamiltonian (not from the X action alone). Parameters
/// whose generator has a real phase get an exactly zero entry.
std::vector<double> gradients(const PauliSum& h_framed, const std::vector<PauliString>& qs,
                              const CliffordTableau& u_c);

struct SaConfig {
    int iterations = 0;    // 0 means the default 50 * qubits * layers
    double t_start = 0.05;
    double t_end = 0.002;
    std::uint64_t seed = 0;
};

struct SaResult {
    std::vector<int> slots;     // Clifford slot ids, one per qubit per layer
    std::vector<int> s;         // parameter-index permutation steering the Q scan
    gf2::BitMatrix m;
    double reward;
    double reward_max;
    std::vector<double> trace;  // accepted reward after each iteration
};

/// Simulated annealing over the Clifford slots and the permutation s with
/// sqrt(R) as the objective. Each step changes one slot value and swaps two
/// entries of s; temperature falls log-evenly from t_start to t_end. Fully
/// deterministic for a fixed seed. Returns the best configuration seen.
SaResult anneal(const PauliSum& h_framed, const HeaTemplate& templ, const SaConfig& config);

struct EngineeredProblem {
    PauliSum h_prime;             // transformed Hamiltonian, HF frame
    CliffordTableau u_chem;       // the full transformation U_C * U_HEA(0)^dag
    gf2::BitMatrix m;
    std::vector<int> s;
    std::vector<int> slots;
    double reward = 0;
    double reward_max = 0;
    std::vector<double> grad;         // exact gradient at theta = 0
    std::vector<bool> zero_grad_mask; // |g_k| < 1e-6
    double hf_energy = 0;
    HeaTemplate ansatz;               // template with the optimized slots
};

/// Full engineering pipeline: HF frame change, annealing, synthesis of U_C
/// from the matched X action, Hamiltonian conjugation, and exact gradients.
/// Throws InvariantError if the engineered expectation at theta = 0 drifts
/// from the HF energy by more than 1e-10.
EngineeredProblem engineer(const PauliSum& h, const HfFrame& frame, const HeaTemplate& templ,
                           const SaConfig& config);

inline constexpr double kZeroGradThreshold = 1e-6;

}  // namespace cvqe
