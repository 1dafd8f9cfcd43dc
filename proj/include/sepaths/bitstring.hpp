#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sepaths {

// Fixed-length bit vector; bit i is the i-th character of to_string().
class Bitstring {
 public:
  Bitstring() = default;
  explicit Bitstring(int size) : size_(size), words_((size + 63) / 64, 0) {}
  static Bitstring parse(const std::string& s);  // '0'/'1' characters

  int size() const { return size_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(int i, bool value = true) {
    if (value)
      words_[i >> 6] |= 1ULL << (i & 63);
    else
      words_[i >> 6] &= ~(1ULL << (i & 63));
  }
  int popcount() const;
  int hamming(const Bitstring& other) const;
  bool none() const;
  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  friend auto operator<=>(const Bitstring&, const Bitstring&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitstringHash {
  std::size_t operator()(const Bitstring& b) const;
};

}  // namespace sepaths
