#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sopfault {

/// Fixed-width packed bit vector. Bits past size() in the last word are kept
/// zero so word-wise comparison and hashing are exact.
class BitVector {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value = true) noexcept {
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  void fill(bool value);

  std::size_t count() const noexcept;
  bool any() const noexcept;
  bool none() const noexcept { return !any(); }

  /// popcount(*this & other) without materializing the intersection.
  std::size_t count_and(const BitVector& other) const noexcept;

  BitVector& operator&=(const BitVector& other) noexcept;
  BitVector& operator|=(const BitVector& other) noexcept;
  BitVector& operator^=(const BitVector& other) noexcept;
  BitVector operator~() const;

  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector& lhs, const BitVector& rhs) {
    if (auto c = lhs.size_ <=> rhs.size_; c != 0) return c;
    return lhs.words_ <=> rhs.words_;
  }

  const std::vector<Word>& words() const noexcept { return words_; }
  std::vector<Word>& mutable_words() noexcept { return words_; }
  /// Re-zero the padding bits after writing through mutable_words().
  void trim() noexcept;

  std::size_t hash() const noexcept;

  /// Bit 0 first, e.g. "0110".
  std::string to_string() const;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace sopfault

template <>
struct std::hash<sopfault::BitVector> {
  std::size_t operator()(const sopfault::BitVector& v) const noexcept { return v.hash(); }
};
