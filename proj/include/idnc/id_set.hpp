#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace idnc {

/// Ordered set of small positive ids (device ids 1..M, packet ids 1..N),
/// stored as a fixed-capacity bitset. Ids outside [1, kMaxId] are rejected.
class IdSet {
 public:
  static constexpr int kMaxId = 128;

  constexpr IdSet() = default;

  IdSet(std::initializer_list<int> ids) {
    for (int id : ids) insert(id);
  }

  /// The set {1, 2, ..., n}.
  static IdSet full(int n) {
    check_id_bound(n);
    IdSet s;
    for (int id = 1; id <= n; ++id) s.insert(id);
    return s;
  }

  void insert(int id) {
    check_id(id);
    words_[word(id)] |= bit(id);
  }

  void erase(int id) {
    check_id(id);
    words_[word(id)] &= ~bit(id);
  }

  bool contains(int id) const {
    if (id < 1 || id > kMaxId) return false;
    return (words_[word(id)] & bit(id)) != 0;
  }

  int size() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }

  bool empty() const { return words_[0] == 0 && words_[1] == 0; }

  void clear() { words_ = {0, 0}; }

  /// Smallest element, or 0 when empty.
  int first() const {
    if (words_[0] != 0) return std::countr_zero(words_[0]) + 1;
    if (words_[1] != 0) return std::countr_zero(words_[1]) + 65;
    return 0;
  }

  /// True when the set holds an element strictly greater than id.
  bool any_greater(int id) const {
    if (id <= 0) return !empty();
    if (id >= kMaxId) return false;
    // Keep only bits for ids in (id, kMaxId].
    int w = word(id);
    std::uint64_t high = words_[w] & ~(bit(id) | (bit(id) - 1));
    if (high != 0) return true;
    return w == 0 && words_[1] != 0;
  }

  IdSet operator|(const IdSet& o) const {
    IdSet r;
    r.words_[0] = words_[0] | o.words_[0];
    r.words_[1] = words_[1] | o.words_[1];
    return r;
  }

  IdSet operator&(const IdSet& o) const {
    IdSet r;
    r.words_[0] = words_[0] & o.words_[0];
    r.words_[1] = words_[1] & o.words_[1];
    return r;
  }

  /// Set difference.
  IdSet operator-(const IdSet& o) const {
    IdSet r;
    r.words_[0] = words_[0] & ~o.words_[0];
    r.words_[1] = words_[1] & ~o.words_[1];
    return r;
  }

  /// Symmetric difference.
  IdSet operator^(const IdSet& o) const {
    IdSet r;
    r.words_[0] = words_[0] ^ o.words_[0];
    r.words_[1] = words_[1] ^ o.words_[1];
    return r;
  }

  IdSet& operator|=(const IdSet& o) { return *this = *this | o; }
  IdSet& operator&=(const IdSet& o) { return *this = *this & o; }
  IdSet& operator-=(const IdSet& o) { return *this = *this - o; }

  bool intersects(const IdSet& o) const {
    return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
  }

  bool is_subset_of(const IdSet& o) const { return (*this - o).empty(); }

  bool operator==(const IdSet& o) const { return words_ == o.words_; }
  bool operator!=(const IdSet& o) const { return words_ != o.words_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int id : *this) out.push_back(id);
    return out;
  }

  /// Forward iteration over elements in ascending order.
  class iterator {
   public:
    iterator(const IdSet* s, int id) : set_(s), id_(id) { advance(); }
    int operator*() const { return id_; }
    iterator& operator++() {
      ++id_;
      advance();
      return *this;
    }
    bool operator!=(const iterator& o) const { return id_ != o.id_; }

   private:
    void advance() {
      while (id_ <= kMaxId && !set_->contains(id_)) ++id_;
      if (id_ > kMaxId) id_ = kMaxId + 1;
    }
    const IdSet* set_;
    int id_;
  };

  iterator begin() const { return iterator(this, 1); }
  iterator end() const { return iterator(this, kMaxId + 1); }

 private:
  static int word(int id) { return (id - 1) >> 6; }
  static std::uint64_t bit(int id) {
    return std::uint64_t{1} << ((id - 1) & 63);
  }
  static void check_id(int id) {
    if (id < 1 || id > kMaxId) throw std::out_of_range("IdSet: id out of range");
  }
  static void check_id_bound(int n) {
    if (n < 0 || n > kMaxId) throw std::out_of_range("IdSet: size out of range");
  }

  std::array<std::uint64_t, 2> words_{0, 0};
};

/// Lexicographic order on the ascending element sequences, with a proper
/// prefix ordered before its extensions: {} < {1} < {1,2} < {2}.
inline bool lex_less(const IdSet& a, const IdSet& b) {
  IdSet diff = a ^ b;
  if (diff.empty()) return false;
  int m = diff.first();
  if (a.contains(m)) return b.any_greater(m);
  return !a.any_greater(m);
}

/// Strict order usable as a map/sort comparator; same relation as lex_less.
struct IdSetLess {
  bool operator()(const IdSet& a, const IdSet& b) const { return lex_less(a, b); }
};

}  // namespace idnc
