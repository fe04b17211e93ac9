#include "cvqe/clifford.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace cvqe {

namespace {

/// Canonical code for a signed 1-qubit Pauli, ordered so that the identity
/// action (X -> +X, Z -> +Z) sorts first among valid tableaux: letter order
/// X < Z < Y, then + before -.
int action_code(const PauliString& p) {
    const bool bx = p.x() & 1, bz = p.z() & 1;
    int letter;
    if (bx && bz)
        letter = 2;  // Y
    else if (bx)
        letter = 0;  // X
    else
        letter = 1;  // Z
    int sign_out = 0;
    const int canonical_k = (3 * p.y_count()) & 3;
    sign_out = ((p.phase_power() - canonical_k) & 3) == 2 ? 1 : 0;
    return letter * 2 + sign_out;
}

SingleQubitClifford apply_word_char(const SingleQubitClifford& c, char g) {
    // Extending the word by gate g maps images P -> T(g^dag P g) where T is
    // the current action; T distributes over the Z^z X^x decomposition.
    SingleQubitClifford out = c;
    out.word = c.word + g;
    auto push = [&](const PauliString& p) {
        PauliString acc(1);
        if (p.z() & 1) acc = acc * c.z_image;
        if (p.x() & 1) acc = acc * c.x_image;
        return acc.times_phase(p.phase_power());
    };
    if (g == 'H') {
        // H^dag X H = Z, H^dag Z H = X
        out.x_image = push(PauliString::from_letters("Z"));
        out.z_image = push(PauliString::from_letters("X"));
    } else {  // 'S'
        // S^dag X S = -Y, S^dag Z S = Z
        out.x_image = push(PauliString::from_letters("Y", -1));
        out.z_image = push(PauliString::from_letters("Z"));
    }
    return out;
}

std::vector<SingleQubitClifford> enumerate_group() {
    SingleQubitClifford identity;
    identity.x_image = PauliString::from_letters("X");
    identity.z_image = PauliString::from_letters("Z");
    identity.word = "";

    auto key = [](const SingleQubitClifford& c) {
        return std::make_tuple(c.x_image.x(), c.x_image.z(), c.x_image.phase_power(),
                               c.z_image.x(), c.z_image.z(), c.z_image.phase_power());
    };

    std::vector<SingleQubitClifford> found{identity};
    std::deque<SingleQubitClifford> frontier{identity};
    while (!frontier.empty()) {
        SingleQubitClifford cur = frontier.front();
        frontier.pop_front();
        for (char g : {'H', 'S'}) {
            SingleQubitClifford next = apply_word_char(cur, g);
            bool known = false;
            for (const auto& f : found)
                if (key(f) == key(next)) {
                    known = true;
                    break;
                }
            if (!known) {
                found.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    if (found.size() != 24) throw InvariantError("single-qubit Clifford enumeration != 24");
    std::sort(found.begin(), found.end(), [](const SingleQubitClifford& a, const SingleQubitClifford& b) {
        const int ax = action_code(a.x_image), bx = action_code(b.x_image);
        if (ax != bx) return ax < bx;
        return action_code(a.z_image) < action_code(b.z_image);
    });
    for (std::size_t i = 0; i < found.size(); ++i) found[i].id = static_cast<int>(i);
    if (!found.front().is_identity()) throw InvariantError("canonical id 0 is not the identity");
    return found;
}

}  // namespace

const std::vector<SingleQubitClifford>& single_qubit_cliffords() {
    static const std::vector<SingleQubitClifford> group = enumerate_group();
    return group;
}

CliffordTableau::CliffordTableau(int n) : n_(n) {
    if (n < 1) throw ValidationError("tableau qubit count must be positive");
    if (n > kMaxQubits) throw SizeGuardError("tableau qubit count exceeds 64");
    x_images_.reserve(static_cast<std::size_t>(n));
    z_images_.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        x_images_.push_back(PauliString::single(n, i, 'X'));
        z_images_.push_back(PauliString::single(n, i, 'Z'));
    }
}

PauliString CliffordTableau::conjugate(const PauliString& p) const {
    if (p.num_qubits() != n_) throw ValidationError("conjugate: qubit count mismatch");
    PauliString acc(n_);
    for (int i = 0; i < n_; ++i) {
        if ((p.z() >> i) & 1) acc = acc * z_images_[static_cast<std::size_t>(i)];
        if ((p.x() >> i) & 1) acc = acc * x_images_[static_cast<std::size_t>(i)];
    }
    return acc.times_phase(p.phase_power());
}

void CliffordTableau::append_h(int q) {
    std::swap(x_images_[static_cast<std::size_t>(q)], z_images_[static_cast<std::size_t>(q)]);
}

void CliffordTableau::append_s(int q) {
    // S^dag X S = -Y = i Z X
    auto& xi = x_images_[static_cast<std::size_t>(q)];
    xi = (z_images_[static_cast<std::size_t>(q)] * xi).times_phase(1);
}

void CliffordTableau::append_x(int q) {
    // X^dag Z X = -Z
    auto& zi = z_images_[static_cast<std::size_t>(q)];
    zi = zi.times_phase(2);
}

void CliffordTableau::append_cnot(int control, int target) {
    if (control == target) throw ValidationError("CNOT control equals target");
    auto& xc = x_images_[static_cast<std::size_t>(control)];
    auto& zt = z_images_[static_cast<std::size_t>(target)];
    xc = xc * x_images_[static_cast<std::size_t>(target)];
    zt = z_images_[static_cast<std::size_t>(control)] * zt;
}

void CliffordTableau::append_single_qubit(const SingleQubitClifford& c, int q) {
    auto embed = [&](const PauliString& small) {
        PauliString acc(n_);
        if (small.z() & 1) acc = acc * z_images_[static_cast<std::size_t>(q)];
        if (small.x() & 1) acc = acc * x_images_[static_cast<std::size_t>(q)];
        return acc.times_phase(small.phase_power());
    };
    PauliString new_x = embed(c.x_image);
    PauliString new_z = embed(c.z_image);
    x_images_[static_cast<std::size_t>(q)] = new_x;
    z_images_[static_cast<std::size_t>(q)] = new_z;
}

bool CliffordTableau::is_identity() const {
    for (int i = 0; i < n_; ++i) {
        if (!(x_images_[static_cast<std::size_t>(i)] == PauliString::single(n_, i, 'X'))) return false;
        if (!(z_images_[static_cast<std::size_t>(i)] == PauliString::single(n_, i, 'Z'))) return false;
    }
    return true;
}

bool CliffordTableau::operator==(const CliffordTableau& other) const {
    return n_ == other.n_ && x_images_ == other.x_images_ && z_images_ == other.z_images_;
}

void CliffordTableau::check_valid() const {
    for (int i = 0; i < n_; ++i) {
        const auto& xi = x_images_[static_cast<std::size_t>(i)];
        const auto& zi = z_images_[static_cast<std::size_t>(i)];
        if (!xi.is_hermitian() || !zi.is_hermitian())
            throw InvariantError("tableau image is not Hermitian");
        for (int j = 0; j < n_; ++j) {
            const auto& xj = x_images_[static_cast<std::size_t>(j)];
            const auto& zj = z_images_[static_cast<std::size_t>(j)];
            if (!xi.commutes_with(xj)) throw InvariantError("X images must commute");
            if (!zi.commutes_with(zj)) throw InvariantError("Z images must commute");
            const bool should_anticommute = i == j;
            if (xi.commutes_with(zj) == should_anticommute)
                throw InvariantError("X/Z image commutation violated");
        }
    }
}

CliffordTableau CliffordTableau::from_images(std::vector<PauliString> x_images,
                                             std::vector<PauliString> z_images) {
    if (x_images.empty() || x_images.size() != z_images.size())
        throw ValidationError("tableau images: bad dimensions");
    CliffordTableau t(static_cast<int>(x_images.size()));
    t.x_images_ = std::move(x_images);
    t.z_images_ = std::move(z_images);
    t.check_valid();
    return t;
}

CliffordTableau compose(const CliffordTableau& a, const CliffordTableau& b) {
    if (a.num_qubits() != b.num_qubits()) throw ValidationError("compose: qubit count mismatch");
    const int n = a.num_qubits();
    std::vector<PauliString> xs, zs;
    xs.reserve(static_cast<std::size_t>(n));
    zs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        xs.push_back(b.conjugate(a.x_image(i)));
        zs.push_back(b.conjugate(a.z_image(i)));
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

CliffordTableau inverse(const CliffordTableau& t) {
    const int n = t.num_qubits();
    // The linear part maps (x|z) of the input to (x|z) of the image; invert
    // it over GF(2), then fix each candidate's sign by conjugating forward.
    gf2::BitMatrix map(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        const auto put = [&](int col, const PauliString& img) {
            for (int r = 0; r < n; ++r) {
                map.set(r, col, (img.x() >> r) & 1);
                map.set(n + r, col, (img.z() >> r) & 1);
            }
        };
        put(i, t.x_image(i));
        put(n + i, t.z_image(i));
    }
    gf2::BitMatrix inv = gf2::invert(map);

    auto preimage = [&](int col_is_z, int qubit) {
        gf2::BitVec target(2 * n);
        target.set(col_is_z ? n + qubit : qubit, true);
        gf2::BitVec pre = inv.mul_vec(target);
        std::uint64_t x = 0, z = 0;
        for (int r = 0; r < n; ++r) {
            if (pre.get(r)) x |= std::uint64_t{1} << r;
            if (pre.get(n + r)) z |= std::uint64_t{1} << r;
        }
        PauliString candidate(n, x, z, (3 * popcount64(x & z)) & 3);  // Hermitian, + sign
        PauliString roundtrip = t.conjugate(candidate);
        PauliString want = PauliString::single(n, qubit, col_is_z ? 'Z' : 'X');
        if (roundtrip == want) return candidate;
        if (roundtrip == want.times_phase(2)) return candidate.times_phase(2);
        throw InvariantError("tableau inverse: sign reconstruction failed");
    };

    std::vector<PauliString> xs, zs;
    xs.reserve(static_cast<std::size_t>(n));
    zs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) xs.push_back(preimage(0, i));
    for (int i = 0; i < n; ++i) zs.push_back(preimage(1, i));
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

CliffordTableau tableau_from_xmatrix(const gf2::BitMatrix& m) {
    if (m.rows() != m.cols()) throw ValidationError("x-action matrix must be square");
    const int n = m.rows();
    if (n > kMaxQubits) throw SizeGuardError("x-action matrix exceeds 64 qubits");
    gf2::BitMatrix m_inv = gf2::invert(m);  // throws if singular
    std::vector<PauliString> xs, zs;
    xs.reserve(static_cast<std::size_t>(n));
    zs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::uint64_t xbits = 0;
        for (int r = 0; r < n; ++r)
            if (m.get(r, i)) xbits |= std::uint64_t{1} << r;  // column i of m
        xs.emplace_back(n, xbits, 0, 0);
        std::uint64_t zbits = 0;
        for (int c = 0; c < n; ++c)
            if (m_inv.get(i, c)) zbits |= std::uint64_t{1} << c;  // row i of m^-1
        zs.emplace_back(n, 0, zbits, 0);
    }
    return CliffordTableau::from_images(std::move(xs), std::move(zs));
}

}  // namespace cvqe
