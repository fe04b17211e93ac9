#include "cvqe/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace cvqe {

namespace {

void check_qubit_count(int n) {
    if (n < 1) throw ValidationError("qubit count must be positive");
    if (n > kMaxQubits) throw SizeGuardError("qubit count exceeds 64-qubit representation");
}

}  // namespace

PauliString::PauliString(int n) : n_(n), x_(0), z_(0), k_(0) { check_qubit_count(n); }

PauliString::PauliString(int n, std::uint64_t x, std::uint64_t z, int phase_power)
    : n_(n), x_(x), z_(z), k_(phase_power & 3) {
    check_qubit_count(n);
    if (n < 64 && ((x_ >> n) != 0 || (z_ >> n) != 0))
        throw ValidationError("Pauli bits outside qubit range");
}

PauliString PauliString::from_letters(std::string_view letters, int sign) {
    if (letters.empty()) throw ValidationError("empty Pauli string");
    if (sign != 1 && sign != -1) throw ValidationError("Pauli sign must be +1 or -1");
    const int n = static_cast<int>(letters.size());
    check_qubit_count(n);
    std::uint64_t x = 0, z = 0;
    int k = sign == -1 ? 2 : 0;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        switch (letters[i]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Z': z |= bit; break;
            case 'Y':
                x |= bit;
                z |= bit;
                k += 3;  // Y = -i Z X
                break;
            default:
                throw ValidationError(std::string("invalid Pauli character '") + letters[i] + "'");
        }
    }
    return {n, x, z, k & 3};
}

PauliString PauliString::single(int n, int qubit, char axis) {
    if (qubit < 0 || qubit >= n) throw ValidationError("qubit index out of range");
    std::string letters(static_cast<std::size_t>(n), 'I');
    letters[static_cast<std::size_t>(qubit)] = axis;
    return from_letters(letters);
}

std::complex<double> PauliString::phase() const {
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[k_];
}

bool PauliString::is_hermitian() const {
    // phase in {+1,-1} needs even x.z, phase in {+i,-i} needs odd x.z
    return (k_ & 1) == (y_count() & 1);
}

PauliString PauliString::operator*(const PauliString& other) const {
    if (n_ != other.n_) throw ValidationError("Pauli product: qubit count mismatch");
    const int reorder = parity64(x_ & other.z_) ? 2 : 0;  // X^xa Z^zb = (-1)^(xa.zb) Z^zb X^xa
    return {n_, x_ ^ other.x_, z_ ^ other.z_, (k_ + other.k_ + reorder) & 3};
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (n_ != other.n_) throw ValidationError("commutation check: qubit count mismatch");
    return parity64(x_ & other.z_) == parity64(z_ & other.x_);
}

std::string PauliString::to_letters(int* sign_out) const {
    std::string letters(static_cast<std::size_t>(n_), 'I');
    for (int i = 0; i < n_; ++i) {
        const bool bx = (x_ >> i) & 1, bz = (z_ >> i) & 1;
        if (bx && bz)
            letters[static_cast<std::size_t>(i)] = 'Y';
        else if (bx)
            letters[static_cast<std::size_t>(i)] = 'X';
        else if (bz)
            letters[static_cast<std::size_t>(i)] = 'Z';
    }
    const int canonical_k = (3 * y_count()) & 3;
    const int diff = (k_ - canonical_k) & 3;
    if (diff == 0) {
        if (sign_out) *sign_out = 1;
    } else if (diff == 2) {
        if (sign_out) *sign_out = -1;
    } else {
        throw InvariantError("Pauli phase not representable as a signed letter string");
    }
    return letters;
}

std::complex<double> vacuum_expectation(const PauliString& p, const PauliString& q) {
    if (p.num_qubits() != q.num_qubits())
        throw ValidationError("vacuum expectation: qubit count mismatch");
    if (p.x() != q.x()) return {0, 0};
    const double sign = parity64(q.z() & q.x()) ? -1.0 : 1.0;
    return sign * p.phase() * q.phase();
}

HfFrame HfFrame::from_string(std::string_view bits) {
    if (bits.empty()) throw ValidationError("empty occupation string");
    const int n = static_cast<int>(bits.size());
    check_qubit_count(n);
    HfFrame f;
    f.n = n;
    for (int i = 0; i < n; ++i) {
        if (bits[i] == '1')
            f.occupation |= std::uint64_t{1} << i;
        else if (bits[i] != '0')
            throw ValidationError("occupation string must contain only 0 and 1");
    }
    return f;
}

std::string HfFrame::to_string() const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((occupation >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

PauliSum::PauliSum(int n, double constant) : n_(n), constant_(constant) { check_qubit_count(n); }

PauliSum::PauliSum(int n, double constant, std::vector<std::pair<double, PauliString>> raw_terms)
    : n_(n), constant_(constant) {
    check_qubit_count(n);
    struct Slot {
        double coeff;
        PauliString pauli;
    };
    std::unordered_map<std::uint64_t, std::vector<Slot>> buckets;
    for (auto& [coeff, pauli] : raw_terms) {
        if (pauli.num_qubits() != n) throw ValidationError("term qubit count mismatch");
        if (!std::isfinite(coeff)) throw ValidationError("non-finite coefficient");
        if (!pauli.is_hermitian()) throw ValidationError("non-Hermitian Pauli term");
        // canonicalize phase to {+1, +i}: fold -1 into the coefficient
        double c = coeff;
        PauliString p = pauli;
        if (p.phase_power() >= 2) {
            c = -c;
            p = p.times_phase(2);
        }
        if (p.has_identity_support()) {
            constant_ += c;
            continue;
        }
        const std::uint64_t key = p.x() * 0x9e3779b97f4a7c15ull ^ p.z();
        auto& bucket = buckets[key];
        bool merged = false;
        for (auto& slot : bucket) {
            if (slot.pauli.x() == p.x() && slot.pauli.z() == p.z()) {
                slot.coeff += c;  // equal (x,z) implies equal canonical phase
                merged = true;
                break;
            }
        }
        if (!merged) bucket.push_back({c, p});
    }
    for (auto& [key, bucket] : buckets)
        for (auto& slot : bucket)
            if (std::abs(slot.coeff) >= 1e-12) terms_.push_back({slot.coeff, slot.pauli});
    std::sort(terms_.begin(), terms_.end(), [](const PauliTerm& a, const PauliTerm& b) {
        if (a.pauli.x() != b.pauli.x()) return a.pauli.x() < b.pauli.x();
        return a.pauli.z() < b.pauli.z();
    });
}

bool PauliSum::all_terms_even_y() const {
    for (const auto& t : terms_)
        if (t.pauli.y_count() & 1) return false;
    return true;
}

PauliSum apply_hf_frame(const PauliSum& h, const HfFrame& frame) {
    if (frame.n != h.num_qubits()) throw ValidationError("HF frame length mismatch");
    std::vector<std::pair<double, PauliString>> terms;
    terms.reserve(h.size());
    for (const auto& t : h.terms()) {
        const double sign = parity64(t.pauli.z() & frame.occupation) ? -1.0 : 1.0;
        terms.emplace_back(sign * t.coeff, t.pauli);
    }
    return {h.num_qubits(), h.constant(), std::move(terms)};
}

double hf_energy(const PauliSum& h) {
    double e = h.constant();
    for (const auto& t : h.terms())
        if (t.pauli.x() == 0) e += t.coeff;  // canonical phase is +1 for x = 0
    return e;
}

}  // namespace cvqe
