#include "sopfault/bit_vector.hpp"

#include <bit>

#include "sopfault/error.hpp"

namespace sopfault {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyTerm: return "EmptyTerm";
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::DoubleComplement: return "DoubleComplement";
    case ErrorCode::DuplicateVariableInTerm: return "DuplicateVariableInTerm";
    case ErrorCode::TooManyVariables: return "TooManyVariables";
    case ErrorCode::EmptyExpression: return "EmptyExpression";
    case ErrorCode::RowOutOfRange: return "RowOutOfRange";
    case ErrorCode::DimensionOverflow: return "DimensionOverflow";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NoSplittingRow: return "NoSplittingRow";
    case ErrorCode::NotDistinguishing: return "NotDistinguishing";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::UnknownFaultId: return "UnknownFaultId";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

BitVector::BitVector(std::size_t size, bool value)
    : size_(size), words_((size + kWordBits - 1) / kWordBits, value ? ~Word{0} : Word{0}) {
  trim();
}

void BitVector::fill(bool value) {
  for (auto& w : words_) w = value ? ~Word{0} : Word{0};
  trim();
}

void BitVector::trim() noexcept {
  const std::size_t tail = size_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::any() const noexcept {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count_and(const BitVector& other) const noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

BitVector& BitVector::operator&=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

std::size_t BitVector::hash() const noexcept {
  // FNV-1a over words, mixed with the size.
  std::size_t h = 1469598103934665603ull ^ size_;
  for (Word w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h;
}

std::string BitVector::to_string() const {
  std::string out(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

}  // namespace sopfault
