#pragma once

#include <string>
#include <string_view>

namespace burgers::io {

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

/// Digest of a file's bytes; throws std::runtime_error if unreadable.
std::string sha256_file(const std::string& path);

}  // namespace burgers::io
