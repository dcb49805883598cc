#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace nafaba {

/// Dense integer handle into a symbol table. The tag keeps atom ids and
/// sentence ids from being mixed up.
template <class Tag>
struct StrongId {
  std::uint32_t value = 0;

  constexpr StrongId() = default;
  constexpr explicit StrongId(std::uint32_t v) : value(v) {}
  constexpr explicit StrongId(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit StrongId(int v) : value(static_cast<std::uint32_t>(v)) {}

  friend constexpr auto operator<=>(StrongId, StrongId) = default;
};

template <class Tag>
constexpr std::size_t id_index(StrongId<Tag> id) noexcept {
  return id.value;
}

template <class Tag>
constexpr void id_from_index(std::size_t i, StrongId<Tag>& out) noexcept {
  out = StrongId<Tag>(i);
}

/// A subset of a fixed finite universe of keys.
///
/// `Key` must supply `id_index(Key)` and `id_from_index(std::size_t, Key&)`
/// via ADL. Ordering is the canonical output order: by cardinality, then
/// lexicographically on the ascending member sequence. Since symbol tables
/// assign ids in name order, this is also lexicographic by name.
template <class Key>
class IdSet {
public:
  using key_type = Key;

  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe) {}
  IdSet(std::size_t universe, std::initializer_list<Key> keys) : bits_(universe) {
    for (Key k : keys)
      insert(k);
  }

  /// Members are bit positions of `mask`; the universe must hold them.
  static IdSet from_mask(std::size_t universe, std::uint64_t mask) {
    IdSet s(universe);
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1U)
        s.bits_.set(i);
    return s;
  }

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Key k) const {
    const std::size_t i = id_index(k);
    return i < bits_.size() && bits_.test(i);
  }
  void insert(Key k) { bits_.set(id_index(k)); }
  void erase(Key k) { bits_.reset(id_index(k)); }

  /// Inserts and reports whether the key was new.
  bool add(Key k) {
    const std::size_t i = id_index(k);
    if (bits_.test(i))
      return false;
    bits_.set(i);
    return true;
  }

  bool is_subset_of(const IdSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const IdSet& other) const { return bits_.intersects(other.bits_); }

  IdSet& operator|=(const IdSet& o) {
    bits_ |= o.bits_;
    return *this;
  }
  IdSet& operator&=(const IdSet& o) {
    bits_ &= o.bits_;
    return *this;
  }
  IdSet& operator-=(const IdSet& o) {
    bits_ -= o.bits_;
    return *this;
  }
  friend IdSet operator|(IdSet a, const IdSet& b) { return a |= b; }
  friend IdSet operator&(IdSet a, const IdSet& b) { return a &= b; }
  friend IdSet operator-(IdSet a, const IdSet& b) { return a -= b; }

  /// Complement relative to the universe.
  IdSet complement() const {
    IdSet s = *this;
    s.bits_.flip();
    return s;
  }

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<std::uint64_t>::npos;
         i = bits_.find_next(i)) {
      Key k;
      id_from_index(i, k);
      f(k);
    }
  }

  std::vector<Key> members() const {
    std::vector<Key> out;
    out.reserve(size());
    for_each([&](Key k) { out.push_back(k); });
    return out;
  }

  friend bool operator==(const IdSet& a, const IdSet& b) { return a.bits_ == b.bits_; }

  friend std::strong_ordering operator<=>(const IdSet& a, const IdSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0)
      return c;
    auto i = a.bits_.find_first();
    auto j = b.bits_.find_first();
    constexpr auto npos = boost::dynamic_bitset<std::uint64_t>::npos;
    while (i != npos && j != npos) {
      if (i != j)
        return i <=> j;
      i = a.bits_.find_next(i);
      j = b.bits_.find_next(j);
    }
    return a.universe() <=> b.universe();
  }

  std::size_t hash() const {
    std::size_t h = bits_.size();
    for_each([&](Key k) { h = h * 1099511628211ULL ^ (id_index(k) + 1); });
    return h;
  }

private:
  boost::dynamic_bitset<std::uint64_t> bits_;
};

} // namespace nafaba
