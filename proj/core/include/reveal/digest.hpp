#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace reveal {

/// Lowercase-hex SHA-256.
std::string sha256_hex(const std::uint8_t* data, std::size_t size);
std::string sha256_hex(std::string_view text);
std::string sha256_hex(const std::vector<std::uint8_t>& bytes);

}  // namespace reveal
