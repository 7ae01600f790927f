// SPDX-License-Identifier: Apache-2.0
#include "gatesim/codec.hpp"

#include <algorithm>

namespace gatesim {

Encoder& Encoder::bytes(ByteView b) {
  if (b.size() > 0xffffffffu) throw CodecError("encode: field too large");
  std::uint32_t n = static_cast<std::uint32_t>(b.size());
  out_.push_back(static_cast<std::uint8_t>(n >> 24));
  out_.push_back(static_cast<std::uint8_t>(n >> 16));
  out_.push_back(static_cast<std::uint8_t>(n >> 8));
  out_.push_back(static_cast<std::uint8_t>(n));
  out_.insert(out_.end(), b.begin(), b.end());
  return *this;
}

Encoder& Encoder::str(std::string_view s) {
  return bytes(ByteView{reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

Encoder& Encoder::u64(std::uint64_t x) {
  std::uint8_t buf[8];
  for (int i = 7; i >= 0; --i) {
    buf[i] = static_cast<std::uint8_t>(x & 0xff);
    x >>= 8;
  }
  return bytes(ByteView{buf, 8});
}

ByteView Decoder::field() {
  if (pos_ + 4 > data_.size()) throw CodecError("decode: truncated length prefix");
  std::uint32_t n = (static_cast<std::uint32_t>(data_[pos_]) << 24) |
                    (static_cast<std::uint32_t>(data_[pos_ + 1]) << 16) |
                    (static_cast<std::uint32_t>(data_[pos_ + 2]) << 8) |
                    static_cast<std::uint32_t>(data_[pos_ + 3]);
  pos_ += 4;
  if (pos_ + n > data_.size()) throw CodecError("decode: truncated field body");
  ByteView out = data_.subspan(pos_, n);
  pos_ += n;
  return out;
}

Bytes Decoder::bytes() {
  ByteView f = field();
  return Bytes(f.begin(), f.end());
}

std::string Decoder::str() {
  ByteView f = field();
  return std::string(f.begin(), f.end());
}

std::uint64_t Decoder::u64() {
  ByteView f = field();
  if (f.size() != 8) throw CodecError("decode: integer field must be 8 bytes");
  std::uint64_t x = 0;
  for (auto b : f) x = (x << 8) | b;
  return x;
}

Digest Decoder::digest() {
  ByteView f = field();
  if (f.size() != 32) throw CodecError("decode: digest field must be 32 bytes");
  Digest d;
  std::copy(f.begin(), f.end(), d.v.begin());
  return d;
}

bool Decoder::flag() {
  std::uint64_t x = u64();
  if (x > 1) throw CodecError("decode: flag must be 0 or 1");
  return x == 1;
}

void Decoder::expect_done() const {
  if (!done()) throw CodecError("decode: trailing bytes");
}

} // namespace gatesim
