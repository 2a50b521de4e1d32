#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "thompson/errors.hpp"

namespace thompson {

/// A finite word over {0,1}: the address of a node in a rooted binary tree.
///
/// Bits are packed left-aligned into a 64-bit word (the first letter is the
/// most significant bit) and the unused low bits are always zero. With that
/// layout the pair (bits, length) compares exactly like the lexicographic
/// order on words in which a prefix precedes its extensions.
class BinarySeq {
 public:
  static constexpr std::size_t kMaxLength = 64;

  constexpr BinarySeq() = default;

  /// Parses "e" (or "") as the empty word, otherwise a string of 0/1.
  static BinarySeq parse(std::string_view text);

  /// The word 0^n or 1^n.
  static BinarySeq repeated(int bit, std::size_t n);

  constexpr std::size_t size() const { return length_; }
  constexpr bool empty() const { return length_ == 0; }

  constexpr int operator[](std::size_t i) const {
    return static_cast<int>((bits_ >> (63 - i)) & 1u);
  }
  /// Final digit; the word must be nonempty.
  constexpr int back() const { return (*this)[length_ - 1]; }

  BinarySeq& push_back(int bit) {
    if (length_ == kMaxLength) {
      throw ResourceLimit("binary word longer than 64 letters");
    }
    if (bit) bits_ |= std::uint64_t{1} << (63 - length_);
    ++length_;
    return *this;
  }

  BinarySeq child(int bit) const {
    BinarySeq out = *this;
    out.push_back(bit);
    return out;
  }

  /// u⌢v
  BinarySeq concat(const BinarySeq& tail) const {
    if (length_ + tail.length_ > kMaxLength) {
      throw ResourceLimit("binary word longer than 64 letters");
    }
    BinarySeq out;
    out.bits_ = bits_ | (length_ == 64 ? 0 : (tail.bits_ >> length_));
    out.length_ = static_cast<std::uint8_t>(length_ + tail.length_);
    return out;
  }

  /// True when *this is a (not necessarily proper) prefix of `other`.
  constexpr bool is_prefix_of(const BinarySeq& other) const {
    if (length_ > other.length_) return false;
    if (length_ == 0) return true;
    return ((bits_ ^ other.bits_) >> (64 - length_)) == 0;
  }

  /// First n letters.
  constexpr BinarySeq prefix(std::size_t n) const {
    BinarySeq out;
    out.length_ = static_cast<std::uint8_t>(n);
    out.bits_ = n == 0 ? 0 : (bits_ & (~std::uint64_t{0} << (64 - n)));
    return out;
  }

  /// Letters from position n on.
  constexpr BinarySeq drop(std::size_t n) const {
    BinarySeq out;
    out.length_ = static_cast<std::uint8_t>(length_ - n);
    out.bits_ = n == 64 ? 0 : bits_ << n;
    return out;
  }

  /// Exchange of 0 and 1 in every letter (reverses the lexicographic order
  /// on antichains).
  constexpr BinarySeq flipped() const {
    BinarySeq out;
    out.length_ = length_;
    out.bits_ = length_ == 0 ? 0 : (~bits_ & (~std::uint64_t{0} << (64 - length_)));
    return out;
  }

  /// Left-aligned packed bits; exposes the block ordering used by Tree.
  constexpr std::uint64_t packed() const { return bits_; }

  std::string to_string() const;

  friend constexpr bool operator==(const BinarySeq&, const BinarySeq&) = default;
  friend constexpr std::strong_ordering operator<=>(const BinarySeq& a, const BinarySeq& b) {
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.length_ <=> b.length_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint8_t length_ = 0;
};

}  // namespace thompson

template <>
struct std::hash<thompson::BinarySeq> {
  std::size_t operator()(const thompson::BinarySeq& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.packed() ^ (static_cast<std::uint64_t>(s.size()) * 0x9e3779b97f4a7c15ULL));
  }
};
