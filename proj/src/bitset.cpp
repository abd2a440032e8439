#include "oqkit/bitset.hpp"

#include <bit>

namespace oqkit {

Bitset Bitset::full(int size) {
  Bitset b(size);
  for (auto& w : b.words_) w = ~std::uint64_t(0);
  if (size & 63) b.words_.back() >>= 64 - (size & 63);
  return b;
}

Bitset Bitset::from_indices(int size, const std::vector<int>& indices) {
  Bitset b(size);
  for (int i : indices) b.set(i);
  return b;
}

bool Bitset::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

int Bitset::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset b = full(n_);
  for (std::size_t i = 0; i < words_.size(); ++i) b.words_[i] &= ~words_[i];
  return b;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

int Bitset::lex_compare(const Bitset& a, const Bitset& b) {
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);  // lowest differing bit
      return (a.words_[i] & low) ? 1 : -1;
    }
  }
  return 0;
}

std::vector<int> Bitset::to_indices() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

std::string Bitset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i : to_indices()) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace oqkit
