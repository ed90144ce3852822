#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <vector>

namespace af {

// Fixed-capacity bit set over the dense argument indices 0..n-1 of one
// framework. Set algebra works word-wise; iteration is ascending.
class ArgumentSet {
public:
  ArgumentSet() = default;

  explicit ArgumentSet(int capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {
    assert(capacity >= 0);
  }

  static ArgumentSet full(int capacity) {
    ArgumentSet s(capacity);
    for (int i = 0; i < capacity; ++i) s.insert(i);
    return s;
  }

  int capacity() const { return capacity_; }

  bool contains(int index) const {
    assert(index >= 0 && index < capacity_);
    return (words_[index >> 6] >> (index & 63)) & 1u;
  }

  void insert(int index) {
    assert(index >= 0 && index < capacity_);
    words_[index >> 6] |= std::uint64_t{1} << (index & 63);
  }

  void erase(int index) {
    assert(index >= 0 && index < capacity_);
    words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63));
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int size() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  ArgumentSet& operator|=(const ArgumentSet& other) {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ArgumentSet& operator&=(const ArgumentSet& other) {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  ArgumentSet& operator-=(const ArgumentSet& other) {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  bool subset_of(const ArgumentSet& other) const {
    assert(capacity_ == other.capacity_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int bit = std::countr_zero(w);
        fn(static_cast<int>(i * 64) + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const ArgumentSet&, const ArgumentSet&) = default;

  // Lexicographic over the membership words, word 0 first. Fixes the
  // deterministic output order of extension lists.
  static bool word_less(const ArgumentSet& a, const ArgumentSet& b) {
    assert(a.capacity_ == b.capacity_);
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

private:
  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace af
