#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cvqe {

/// Bad user input: malformed files, mismatched dimensions, invalid
/// configuration. Mapped to exit code 2 by the CLI.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A request exceeds a hard resource guard (e.g. qubit count too large
/// for dense simulation). Mapped to exit code 3 by the CLI.
struct SizeGuardError : std::runtime_error {
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed. This is a bug, not bad input.
/// Mapped to exit code 4 by the CLI.
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr const char* kVersion = "0.1.0";

/// Hard cap on qubit count for the bit-packed Pauli representation.
inline constexpr int kMaxQubits = 64;

inline int popcount64(std::uint64_t v) { return __builtin_popcountll(v); }

inline bool parity64(std::uint64_t v) { return popcount64(v) & 1; }

}  // namespace cvqe
