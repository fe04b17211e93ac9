#include "cvqe/engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

namespace cvqe {

namespace {

gf2::BitVec to_bitvec(std::uint64_t bits, int n) {
    gf2::BitVec v(n);
    v.words()[0] = bits;
    return v;
}

std::uint64_t to_u64(const gf2::BitVec& v) { return v.words()[0]; }

/// Column view of a square bit matrix for fast x-vector mapping.
struct ColumnMatrix {
    std::vector<std::uint64_t> cols;
    explicit ColumnMatrix(const gf2::BitMatrix& m) : cols(static_cast<std::size_t>(m.cols()), 0) {
        for (int c = 0; c < m.cols(); ++c)
            for (int r = 0; r < m.rows(); ++r)
                if (m.get(r, c)) cols[static_cast<std::size_t>(c)] |= std::uint64_t{1} << r;
    }
    std::uint64_t apply(std::uint64_t x) const {
        std::uint64_t out = 0;
        while (x) {
            const int i = __builtin_ctzll(x);
            out ^= cols[static_cast<std::size_t>(i)];
            x &= x - 1;
        }
        return out;
    }
};

// Deterministic helpers on top of the engine; std::uniform_* would be
// implementation-defined across standard libraries.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }
double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

GroupedHamiltonian::GroupedHamiltonian(const PauliSum& h) : n_(h.num_qubits()) {
    std::unordered_map<std::uint64_t, int> index_of_x;
    for (const auto& term : h.terms()) {
        if (term.pauli.phase_power() & 1)
            throw ValidationError("grouping needs real term phases (even Y count)");
        const double signed_coeff = term.coeff * term.pauli.phase().real();
        const std::uint64_t x = term.pauli.x();
        if (x == 0) continue;  // diagonal group carries no gradient
        auto it = index_of_x.find(x);
        if (it == index_of_x.end()) {
            index_of_x.emplace(x, static_cast<int>(columns_.size()));
            columns_.push_back({x, signed_coeff, term.pauli.z(), term.pauli.phase_power()});
        } else {
            columns_[static_cast<std::size_t>(it->second)].weight += signed_coeff;
        }
    }
    columns_.erase(std::remove_if(columns_.begin(), columns_.end(),
                                  [](const Column& c) { return std::abs(c.weight) < 1e-12; }),
                   columns_.end());

    for (const auto& c : columns_) reward_max_ += c.weight * c.weight;

    weight_order_.resize(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) weight_order_[i] = static_cast<int>(i);
    std::sort(weight_order_.begin(), weight_order_.end(), [&](int a, int b) {
        const double wa = columns_[static_cast<std::size_t>(a)].weight * columns_[static_cast<std::size_t>(a)].weight;
        const double wb = columns_[static_cast<std::size_t>(b)].weight * columns_[static_cast<std::size_t>(b)].weight;
        if (wa != wb) return wa > wb;
        return columns_[static_cast<std::size_t>(a)].x < columns_[static_cast<std::size_t>(b)].x;
    });

    gf2::IndependenceFilter filter;
    for (int idx : weight_order_)
        if (filter.insert(to_bitvec(columns_[static_cast<std::size_t>(idx)].x, n_)))
            greedy_independent_.push_back(idx);
}

ScreenedQ screen_q(const std::vector<PauliString>& qs) {
    ScreenedQ out;
    out.delta.assign(qs.size(), false);
    std::unordered_map<std::uint64_t, bool> seen;
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const auto& q = qs[k];
        if (!(q.phase_power() & 1)) continue;  // real phase: no gradient contribution
        if (seen.emplace(q.x(), true).second) {
            out.columns.push_back({q.x(), static_cast<int>(k), q.z(), q.phase_power()});
            out.delta[k] = true;
        }
    }
    return out;
}

GreedyMatch greedy_match(const GroupedHamiltonian& gh, const ScreenedQ& sq,
                         const std::vector<int>& scan_order) {
    const int n = gh.num_qubits();
    std::vector<int> q_indep;
    gf2::IndependenceFilter filter;
    for (int idx : scan_order) {
        if (idx < 0 || idx >= static_cast<int>(sq.columns.size()))
            throw ValidationError("greedy_match: scan index out of range");
        if (filter.insert(to_bitvec(sq.columns[static_cast<std::size_t>(idx)].x, n)))
            q_indep.push_back(idx);
    }
    const int r = std::min(gh.rank(), static_cast<int>(q_indep.size()));
    if (r == 0) return {gf2::BitMatrix::identity(n), 0, 0.0};

    std::vector<gf2::BitVec> a_cols, b_cols;
    double guaranteed = 0;
    for (int i = 0; i < r; ++i) {
        const auto& hcol = gh.columns()[static_cast<std::size_t>(gh.greedy_independent()[static_cast<std::size_t>(i)])];
        a_cols.push_back(to_bitvec(hcol.x, n));
        guaranteed += hcol.weight * hcol.weight;
        b_cols.push_back(to_bitvec(sq.columns[static_cast<std::size_t>(q_indep[static_cast<std::size_t>(i)])].x, n));
    }
    return {gf2::basis_map(a_cols, b_cols), r, guaranteed};
}

double reward(const gf2::BitMatrix& m, const GroupedHamiltonian& gh, const ScreenedQ& sq) {
    std::vector<std::uint64_t> q_xs;
    q_xs.reserve(sq.columns.size());
    for (const auto& c : sq.columns) q_xs.push_back(c.x);
    std::sort(q_xs.begin(), q_xs.end());

    const ColumnMatrix cm(m);
    double r = 0;
    for (const auto& col : gh.columns())
        if (std::binary_search(q_xs.begin(), q_xs.end(), cm.apply(col.x)))
            r += col.weight * col.weight;
    return r;
}

std::vector<double> gradients(const PauliSum& h_framed, const std::vector<PauliString>& qs,
                              const CliffordTableau& u_c) {
    // Group the conjugated Hamiltonian by X component with tableau-exact
    // signs; with the all-plus sign completion these match the original
    // frame, but nothing here relies on that.
    std::unordered_map<std::uint64_t, double> weight_of_x;
    for (const auto& term : h_framed.terms()) {
        const PauliString conj = u_c.conjugate(term.pauli);
        if (conj.phase_power() & 1) throw InvariantError("conjugated term has non-real phase");
        const double sign = conj.phase_power() == 0 ? 1.0 : -1.0;
        if (conj.x() == 0) continue;
        weight_of_x[conj.x()] += term.coeff * sign;
    }

    std::vector<double> g(qs.size(), 0.0);
    for (std::size_t k = 0; k < qs.size(); ++k) {
        const auto& q = qs[k];
        if (!(q.phase_power() & 1)) continue;  // Im part vanishes exactly
        auto it = weight_of_x.find(q.x());
        if (it == weight_of_x.end()) continue;
        const double im_phase_q = q.phase_power() == 1 ? 1.0 : -1.0;
        const double z_sign = parity64(q.z() & q.x()) ? -1.0 : 1.0;
        g[k] = z_sign * im_phase_q * it->second;
    }
    return g;
}

namespace {

struct SaState {
    std::vector<int> slots;
    std::vector<int> s;
};

struct SaEval {
    double reward = 0;
    GreedyMatch match{gf2::BitMatrix::identity(1), 0, 0};
};

SaEval evaluate(const GroupedHamiltonian& gh, const HeaTemplate& templ, const SaState& state) {
    const HeaTemplate slotted = templ.with_slots(state.slots);
    const std::vector<PauliString> qs = compute_q(slotted);
    const ScreenedQ sq = screen_q(qs);

    // Scan the retained columns in the order induced by the s permutation.
    std::vector<int> column_of_param(qs.size(), -1);
    for (std::size_t i = 0; i < sq.columns.size(); ++i)
        column_of_param[static_cast<std::size_t>(sq.columns[i].param_index)] = static_cast<int>(i);
    std::vector<int> scan_order;
    scan_order.reserve(sq.columns.size());
    for (int param : state.s)
        if (column_of_param[static_cast<std::size_t>(param)] >= 0)
            scan_order.push_back(column_of_param[static_cast<std::size_t>(param)]);

    SaEval eval;
    eval.match = greedy_match(gh, sq, scan_order);
    eval.reward = reward(eval.match.m, gh, sq);
    return eval;
}

}  // namespace

SaResult anneal(const PauliSum& h_framed, const HeaTemplate& templ, const SaConfig& config) {
    if (config.t_start <= 0 || config.t_end <= 0 || config.t_end > config.t_start)
        throw ValidationError("annealing temperatures must satisfy 0 < t_end <= t_start");
    const int n = templ.num_qubits();
    const int p = templ.num_layers();
    const int iterations = config.iterations > 0 ? config.iterations : 50 * n * p;
    const int num_slots = n * p;
    const int num_params = templ.num_parameters();

    GroupedHamiltonian gh(h_framed);

    std::mt19937_64 rng(config.seed);
    SaState state;
    state.slots.resize(static_cast<std::size_t>(num_slots));
    for (auto& slot : state.slots) slot = static_cast<int>(rand_below(rng, 24));
    state.s.resize(static_cast<std::size_t>(num_params));
    for (int i = 0; i < num_params; ++i) state.s[static_cast<std::size_t>(i)] = i;
    for (int i = num_params - 1; i > 0; --i)
        std::swap(state.s[static_cast<std::size_t>(i)],
                  state.s[rand_below(rng, static_cast<std::uint64_t>(i + 1))]);

    SaEval current = evaluate(gh, templ, state);
    SaState best_state = state;
    SaEval best = current;

    SaResult result;
    result.trace.reserve(static_cast<std::size_t>(iterations));
    result.trace.push_back(current.reward);

    const double log_ratio = std::log(config.t_end / config.t_start);
    for (int iter = 1; iter < iterations; ++iter) {
        const double frac = static_cast<double>(iter) / static_cast<double>(iterations - 1);
        const double temp = config.t_start * std::exp(log_ratio * frac);

        SaState proposal = state;
        proposal.slots[rand_below(rng, static_cast<std::uint64_t>(num_slots))] =
            static_cast<int>(rand_below(rng, 24));
        if (num_params >= 2) {
            const auto a = rand_below(rng, static_cast<std::uint64_t>(num_params));
            auto b = rand_below(rng, static_cast<std::uint64_t>(num_params - 1));
            if (b >= a) ++b;
            std::swap(proposal.s[a], proposal.s[b]);
        }

        const SaEval eval = evaluate(gh, templ, proposal);
        const double delta = std::sqrt(eval.reward) - std::sqrt(current.reward);
        bool accept = delta >= 0;
        if (!accept) accept = rand_unit(rng) < std::exp(delta / temp);
        if (accept) {
            state = std::move(proposal);
            current = eval;
            if (current.reward > best.reward) {
                best = current;
                best_state = state;
            }
        }
        result.trace.push_back(current.reward);
    }

    result.slots = std::move(best_state.slots);
    result.s = std::move(best_state.s);
    result.m = best.match.m;
    result.reward = best.reward;
    result.reward_max = gh.reward_max();
    return result;
}

EngineeredProblem engineer(const PauliSum& h, const HfFrame& frame, const HeaTemplate& templ,
                           const SaConfig& config) {
    if (frame.n != h.num_qubits()) throw ValidationError("engineer: frame length mismatch");
    if (templ.num_qubits() != h.num_qubits()) throw ValidationError("engineer: qubit mismatch");

    const PauliSum framed = apply_hf_frame(h, frame);
    const double e_hf = hf_energy(framed);

    SaResult sa = anneal(framed, templ, config);
    HeaTemplate final_templ = templ.with_slots(sa.slots);

    const CliffordTableau u_c = tableau_from_xmatrix(sa.m);
    const CliffordTableau u_hea0 = clifford_at_zero(final_templ);
    const CliffordTableau u_chem = compose(u_c, inverse(u_hea0));

    std::vector<std::pair<double, PauliString>> conj_terms;
    conj_terms.reserve(framed.size());
    for (const auto& term : framed.terms())
        conj_terms.emplace_back(term.coeff, u_chem.conjugate(term.pauli));
    PauliSum h_prime(framed.num_qubits(), framed.constant(), std::move(conj_terms));
    if (h_prime.size() != framed.size())
        throw InvariantError("conjugation changed the Hamiltonian term count");

    const std::vector<PauliString> qs = compute_q(final_templ);
    std::vector<double> g = gradients(framed, qs, u_c);
    std::vector<bool> mask(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) mask[k] = std::abs(g[k]) < kZeroGradThreshold;

    const double anchored = hf_energy(h_prime);
    if (std::abs(anchored - e_hf) >= 1e-10)
        throw InvariantError("engineered Hamiltonian does not anchor at the HF energy");

    EngineeredProblem problem{std::move(h_prime), u_chem,      sa.m,
                              std::move(sa.s),    sa.slots,    sa.reward,
                              sa.reward_max,      std::move(g), std::move(mask),
                              e_hf,               final_templ};
    return problem;
}

}  // namespace cvqe
