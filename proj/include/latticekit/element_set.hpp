#ifndef LATTICEKIT_ELEMENT_SET_HPP
#define LATTICEKIT_ELEMENT_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <vector>

namespace latticekit {

/// Dense element index into a finite lattice or poset.
using Element = std::uint32_t;

inline constexpr Element kNoElement = std::numeric_limits<Element>::max();

/// Fixed-universe bitset over {0, ..., universe_size - 1}.
///
/// Used both for operation results (J(L), Neu L, Cen L, ...) and as the row
/// type of order tables. Bits beyond `universe_size` are kept at zero so that
/// equality, hashing and counting work on whole words.
class ElementSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe_size)
      : size_(universe_size), words_((universe_size + kWordBits - 1) / kWordBits, 0) {}
  ElementSet(std::size_t universe_size, std::initializer_list<Element> members)
      : ElementSet(universe_size) {
    for (Element m : members) insert(m);
  }

  static ElementSet full(std::size_t universe_size) {
    ElementSet s(universe_size);
    for (auto& w : s.words_) w = ~word_type{0};
    s.trim();
    return s;
  }

  std::size_t universe_size() const noexcept { return size_; }

  bool contains(Element i) const noexcept {
    return i < size_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
  }

  void insert(Element i) {
    check(i);
    words_[i / kWordBits] |= word_type{1} << (i % kWordBits);
  }

  void erase(Element i) {
    check(i);
    words_[i / kWordBits] &= ~(word_type{1} << (i % kWordBits));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// First member at index >= from, or kNoElement.
  Element next(Element from) const noexcept {
    if (from >= size_) return kNoElement;
    std::size_t wi = from / kWordBits;
    word_type w = words_[wi] & (~word_type{0} << (from % kWordBits));
    while (true) {
      if (w != 0) return static_cast<Element>(wi * kWordBits + std::countr_zero(w));
      if (++wi == words_.size()) return kNoElement;
      w = words_[wi];
    }
  }

  Element first() const noexcept { return next(0); }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      word_type w = words_[wi];
      while (w != 0) {
        f(static_cast<Element>(wi * kWordBits + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  bool is_subset_of(ElementSet const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool intersects(ElementSet const& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator&=(ElementSet const& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(ElementSet const& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(ElementSet const& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, ElementSet const& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, ElementSet const& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, ElementSet const& b) { return a -= b; }

  /// Complement relative to the universe.
  ElementSet operator~() const {
    ElementSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend bool operator==(ElementSet const&, ElementSet const&) = default;

  /// Orders first by universe size, then colexicographically on the bits.
  friend bool operator<(ElementSet const& a, ElementSet const& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (auto w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  std::vector<word_type> const& words() const noexcept { return words_; }

 private:
  void check(Element i) const {
    if (i >= size_) throw std::out_of_range("ElementSet: index outside universe");
  }
  void trim() {
    if (size_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (word_type{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const& s) const noexcept { return s.hash(); }
};

}  // namespace latticekit

#endif  // LATTICEKIT_ELEMENT_SET_HPP
