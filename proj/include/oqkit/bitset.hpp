#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oqkit {

// Fixed-size bit vector; used for element subsets, filters, and frame
// relations. Bits past `size()` are kept zero so equality and comparison can
// work word-wise.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : n_(size), words_((size + 63) / 64, 0) {}

  static Bitset full(int size);
  static Bitset from_indices(int size, const std::vector<int>& indices);

  int size() const { return n_; }
  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    words_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    words_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  bool any() const;
  bool none() const { return !any(); }
  int count() const;

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset complement() const;
  bool is_subset_of(const Bitset& o) const;

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Lexicographic order on the characteristic vector, bit 0 first; a clear
  // bit sorts before a set bit. Returns <0, 0, >0.
  static int lex_compare(const Bitset& a, const Bitset& b);

  std::vector<int> to_indices() const;
  std::string to_string() const;  // "{1,3}"

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace oqkit
