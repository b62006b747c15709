#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isoperimetric/error.hpp"

namespace isoperimetric {

// Fixed-width bit vector over the vertices 0..universe-1 of a group or graph.
//
// Sets compare in canonical order: lexicographic on their sorted index
// sequences, so {0} < {0,1} < {0,2} < {1}. Every set containing 0 sorts
// before every set that does not.
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  ElementSet(std::size_t universe, std::initializer_list<int> elems)
      : ElementSet(universe) {
    for (int e : elems) insert(e);
  }

  static ElementSet from_indices(std::size_t universe, std::span<const int> elems) {
    ElementSet s(universe);
    for (int e : elems) s.insert(e);
    return s;
  }

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  // Low `universe` bits of `mask`; universe must be at most 64.
  static ElementSet from_mask(std::size_t universe, Word mask) {
    if (universe > kWordBits) throw Error("from_mask: universe exceeds 64");
    ElementSet s(universe);
    if (universe > 0) s.words_[0] = mask;
    s.trim();
    return s;
  }

  Word to_mask() const {
    if (universe_ > kWordBits) throw Error("to_mask: universe exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::size_t universe() const noexcept { return universe_; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool contains(int e) const noexcept {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_) return false;
    return (words_[e / kWordBits] >> (e % kWordBits)) & 1U;
  }

  void insert(int e) {
    check_index(e);
    words_[e / kWordBits] |= Word{1} << (e % kWordBits);
  }

  void erase(int e) {
    check_index(e);
    words_[e / kWordBits] &= ~(Word{1} << (e % kWordBits));
  }

  // Smallest element, or -1 when empty.
  int first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<int>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        f(static_cast<int>(i * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  ElementSet complement() const {
    ElementSet s(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = ~words_[i];
    s.trim();
    return s;
  }

  bool is_subset_of(const ElementSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  const std::vector<Word>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    // d = least element of the symmetric difference. The set holding d is
    // smaller unless the other set has nothing at or above d (a strict prefix).
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const Word diff = a.words_[i] ^ b.words_[i];
      if (diff == 0) continue;
      const int bit = std::countr_zero(diff);
      const bool in_a = (a.words_[i] >> bit) & 1U;
      const ElementSet& other = in_a ? b : a;
      const bool other_continues = other.has_element_at_or_above(i, bit);
      const bool a_less = in_a == other_continues;
      return a_less ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](int e) {
      if (!first_elem) s += ",";
      s += std::to_string(e);
      first_elem = false;
    });
    return s + "}";
  }

 private:
  void trim() {
    const std::size_t rem = universe_ % kWordBits;
    if (rem != 0 && !words_.empty()) words_.back() &= (Word{1} << rem) - 1;
  }

  void check_index(int e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= universe_)
      throw Error("element " + std::to_string(e) + " outside universe of size " +
                  std::to_string(universe_));
  }

  void check_same(const ElementSet& o) const {
    if (o.universe_ != universe_)
      throw Error("universe mismatch: " + std::to_string(universe_) + " vs " +
                  std::to_string(o.universe_));
  }

  bool has_element_at_or_above(std::size_t word, int bit) const {
    if ((words_[word] >> bit) != 0) return true;
    for (std::size_t i = word + 1; i < words_.size(); ++i)
      if (words_[i] != 0) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace isoperimetric
