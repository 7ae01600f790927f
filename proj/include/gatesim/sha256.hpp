// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "gatesim/bytes.hpp"

namespace gatesim {

/// 32-byte SHA-256 output. Used for every digest in the system: keys,
/// transactions, block headers, message hashes, hash-lock images.
struct Digest {
  std::array<std::uint8_t, 32> v{};

  auto operator<=>(const Digest&) const = default;

  bool is_zero() const;
  std::string hex() const;
  std::string hex8() const; // first 4 bytes, for compact trace lines
  ByteView bytes() const { return ByteView{v.data(), v.size()}; }

  static Digest parse_hex(std::string_view hex);
};

Digest sha256(ByteView data);
inline Digest sha256(const Bytes& data) { return sha256(view(data)); }

} // namespace gatesim
