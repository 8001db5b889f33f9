#include "bdc/bitstring.hpp"

#include <stdexcept>

namespace bdc {

BitString BitString::from_string(std::string_view text) {
  BitString s;
  s.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString: character outside {0,1}");
    }
    s.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return s;
}

BitString BitString::from_bits(std::uint64_t value, int length) {
  if (length < 0 || length > 64) {
    throw std::invalid_argument("BitString: length outside [0,64]");
  }
  BitString s;
  s.bits_.resize(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    s.bits_[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((value >> (length - 1 - i)) & 1);
  }
  return s;
}

std::string BitString::to_string() const {
  std::string text;
  text.reserve(bits_.size());
  for (std::uint8_t b : bits_) text.push_back(static_cast<char>('0' + b));
  return text;
}

BitString BitString::complement() const {
  BitString s = *this;
  for (auto& b : s.bits_) b ^= 1;
  return s;
}

std::uint64_t BitString::to_index() const {
  if (bits_.size() > 64) {
    throw std::domain_error("BitString: too long for 64-bit index");
  }
  std::uint64_t v = 0;
  for (std::uint8_t b : bits_) v = (v << 1) | b;
  return v;
}

DeletionProb::DeletionProb(double d) : d_(d) {
  if (!(d >= 0.0 && d <= 1.0)) {
    throw std::domain_error("DeletionProb: d outside [0,1]");
  }
}

}  // namespace bdc
