// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gatesim/bytes.hpp"
#include "gatesim/sha256.hpp"

namespace gatesim {

struct CodecError : std::runtime_error {
  explicit CodecError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical encoding shared by everything that is hashed or signed:
/// fields in declared order, each field a 4-byte big-endian length prefix
/// followed by the field bytes; integers carried as 8-byte big-endian
/// payloads. Nested records are encoded first and embedded as one field.
class Encoder {
public:
  Encoder& bytes(ByteView b);
  Encoder& bytes(const Bytes& b) { return bytes(view(b)); }
  Encoder& str(std::string_view s);
  Encoder& u64(std::uint64_t x);
  Encoder& i64(std::int64_t x) { return u64(static_cast<std::uint64_t>(x)); }
  Encoder& digest(const Digest& d) { return bytes(d.bytes()); }
  Encoder& flag(bool b) { return u64(b ? 1 : 0); }

  Bytes take() { return std::move(out_); }
  const Bytes& view_bytes() const { return out_; }

private:
  Bytes out_;
};

class Decoder {
public:
  explicit Decoder(ByteView data) : data_(data) {}

  Bytes bytes();
  std::string str();
  std::uint64_t u64();
  std::int64_t i64() { return static_cast<std::int64_t>(u64()); }
  Digest digest();
  bool flag();

  bool done() const { return pos_ == data_.size(); }
  void expect_done() const;

private:
  ByteView field();

  ByteView data_;
  std::size_t pos_ = 0;
};

} // namespace gatesim
