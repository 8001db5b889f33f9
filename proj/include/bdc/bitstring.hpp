#ifndef BDC_BITSTRING_HPP
#define BDC_BITSTRING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bdc {

// Finite binary sequence; the channel input/output alphabet element.
// The empty string is a valid value and denotes the null output (all bits
// deleted). Text form is a string over '0'/'1', empty text = null.
class BitString {
 public:
  BitString() = default;

  // throws std::invalid_argument on characters outside {0,1}
  static BitString from_string(std::string_view text);

  // MSB-first encoding of `value` over exactly `length` bits, length <= 64
  static BitString from_bits(std::uint64_t value, int length);

  void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }

  int operator[](std::size_t i) const { return bits_[i]; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  std::string to_string() const;
  BitString complement() const;

  // MSB-first integer value; requires size() <= 64
  std::uint64_t to_index() const;

  bool operator==(const BitString&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Deletion probability, validated to [0,1] on construction.
class DeletionProb {
 public:
  explicit DeletionProb(double d);
  double value() const { return d_; }

 private:
  double d_;
};

}  // namespace bdc

#endif
