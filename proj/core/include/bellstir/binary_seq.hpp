#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace bellstir {

// Fixed-length 0/1 sequence. Entry 0 is the leftmost character of the
// printed form and the most significant bit of value().
class BinarySeq {
 public:
  static constexpr int kMaxLength = 31;

  BinarySeq() = default;
  BinarySeq(std::uint32_t value, int length);
  static BinarySeq parse(std::string_view text);

  int length() const { return length_; }
  std::uint32_t value() const { return value_; }

  bool at(int i) const { return (value_ >> (length_ - 1 - i)) & 1U; }
  BinarySeq flipped(int i) const;
  BinarySeq with(int i, bool b) const;
  int weight() const;
  bool odd() const { return weight() % 2 == 1; }
  int hamming_distance(const BinarySeq& other) const;
  BinarySeq complemented() const;

  std::string to_string() const;

  friend auto operator<=>(const BinarySeq&, const BinarySeq&) = default;

 private:
  std::uint32_t value_ = 0;
  int length_ = 0;
};

}  // namespace bellstir
