// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gatesim {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// Discrete logical time; all ledgers, channels and timers share it.
using Tick = std::int64_t;

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);
Bytes to_bytes(std::string_view s);
std::string to_string(ByteView data);

inline ByteView view(const Bytes& b) { return ByteView{b.data(), b.size()}; }

} // namespace gatesim
