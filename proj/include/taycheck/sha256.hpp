#pragma once

#include <string>

namespace taycheck {

/// Lowercase hex SHA-256 digest of the byte string.
std::string sha256_hex(const std::string& data);

}  // namespace taycheck
