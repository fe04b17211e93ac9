#pragma once

#include <string>
#include <string_view>

namespace cvqe {

/// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(std::string_view data);

/// SHA-256 of a file's contents. Throws ValidationError if unreadable.
std::string sha256_file_hex(const std::string& path);

}  // namespace cvqe
