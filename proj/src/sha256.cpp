// SPDX-License-Identifier: Apache-2.0
#include "gatesim/sha256.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <stdexcept>

namespace gatesim {

bool Digest::is_zero() const {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

std::string Digest::hex() const {
  return to_hex(bytes());
}

std::string Digest::hex8() const {
  return to_hex(ByteView{v.data(), 4});
}

Digest Digest::parse_hex(std::string_view hex) {
  Bytes raw = from_hex(hex);
  if (raw.size() != 32) throw std::invalid_argument("Digest::parse_hex: need 32 bytes");
  Digest d;
  std::copy(raw.begin(), raw.end(), d.v.begin());
  return d;
}

Digest sha256(ByteView data) {
  Digest out;
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw std::runtime_error("sha256: ctx alloc failed");
  if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, out.v.data(), &len) != 1 || len != 32) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256: digest failed");
  }
  EVP_MD_CTX_free(ctx);
  return out;
}

} // namespace gatesim
