#include "bellstir/binary_seq.hpp"

#include <bit>

#include "bellstir/errors.hpp"

namespace bellstir {

BinarySeq::BinarySeq(std::uint32_t value, int length) : value_(value), length_(length) {
  if (length < 0 || length > kMaxLength) throw PreconditionError("binary sequence length out of range");
  if (length < 32 && (value >> length) != 0) {
    throw PreconditionError("binary sequence value does not fit its length");
  }
}

BinarySeq BinarySeq::parse(std::string_view text) {
  if (static_cast<int>(text.size()) > kMaxLength) {
    throw PreconditionError("binary sequence too long");
  }
  std::uint32_t value = 0;
  for (char c : text) {
    if (c != '0' && c != '1') throw PreconditionError("binary sequence must contain only 0 and 1");
    value = (value << 1) | static_cast<std::uint32_t>(c == '1');
  }
  return BinarySeq(value, static_cast<int>(text.size()));
}

BinarySeq BinarySeq::flipped(int i) const {
  return BinarySeq(value_ ^ (1U << (length_ - 1 - i)), length_);
}

BinarySeq BinarySeq::with(int i, bool b) const { return at(i) == b ? *this : flipped(i); }

int BinarySeq::weight() const { return std::popcount(value_); }

int BinarySeq::hamming_distance(const BinarySeq& other) const {
  return std::popcount(value_ ^ other.value_);
}

BinarySeq BinarySeq::complemented() const {
  const std::uint32_t all = length_ == 0 ? 0U : ((1U << length_) - 1U);
  return BinarySeq(value_ ^ all, length_);
}

std::string BinarySeq::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) out += at(i) ? '1' : '0';
  return out;
}

}  // namespace bellstir
