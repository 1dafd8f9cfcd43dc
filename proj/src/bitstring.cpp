#include "sepaths/bitstring.hpp"

#include <bit>

#include "sepaths/errors.hpp"
#include "sepaths/rng.hpp"

namespace sepaths {

Bitstring Bitstring::parse(const std::string& s) {
  Bitstring b(static_cast<int>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') throw InvalidInput("bitstring must consist of 0/1");
    if (s[i] == '1') b.set(static_cast<int>(i));
  }
  return b;
}

int Bitstring::popcount() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

int Bitstring::hamming(const Bitstring& other) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] ^ other.words_[i]);
  return c;
}

bool Bitstring::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::string Bitstring::to_string() const {
  std::string s(size_, '0');
  for (int i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::size_t BitstringHash::operator()(const Bitstring& b) const {
  std::uint64_t h = static_cast<std::uint64_t>(b.size());
  for (auto w : b.words()) h = splitmix64(h ^ w);
  return static_cast<std::size_t>(h);
}

}  // namespace sepaths
