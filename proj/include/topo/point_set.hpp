#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace topo {

using Point = std::uint32_t;

/// Largest ambient size a PointSet can address.
inline constexpr std::size_t kMaxPoints = 64;

/// A subset of {0..n-1} stored as a 64-bit mask. The ambient size is not
/// carried; callers pair a PointSet with the FinSpace it lives in.
class PointSet {
 public:
  using Mask = std::uint64_t;

  constexpr PointSet() = default;
  constexpr explicit PointSet(Mask bits) : bits_(bits) {}
  PointSet(std::initializer_list<Point> members) {
    for (Point p : members) insert(p);
  }

  static constexpr PointSet full(std::size_t n) {
    return PointSet(n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1));
  }
  static constexpr PointSet singleton(Point p) { return PointSet(Mask{1} << p); }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Point p) const { return p < 64 && ((bits_ >> p) & 1U) != 0; }
  constexpr void insert(Point p) { bits_ |= Mask{1} << p; }
  constexpr void erase(Point p) { bits_ &= ~(Mask{1} << p); }

  constexpr bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(PointSet other) const { return (bits_ & other.bits_) != 0; }
  /// Complement relative to {0..n-1}.
  constexpr PointSet complement(std::size_t n) const { return PointSet(~bits_ & full(n).bits_); }
  /// Smallest member; undefined on the empty set.
  constexpr Point front() const { return static_cast<Point>(std::countr_zero(bits_)); }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }
  constexpr PointSet& operator|=(PointSet o) { bits_ |= o.bits_; return *this; }
  constexpr PointSet& operator&=(PointSet o) { bits_ &= o.bits_; return *this; }
  constexpr PointSet& operator-=(PointSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(PointSet, PointSet) = default;
  friend constexpr auto operator<=>(PointSet a, PointSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Point;
    using difference_type = std::ptrdiff_t;
    using pointer = const Point*;
    using reference = Point;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr Point operator*() const { return static_cast<Point>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    Mask rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Point> members() const { return {begin(), end()}; }
  /// Brace notation used by the space DSL, e.g. "{0 2}".
  std::string to_string() const;

 private:
  Mask bits_ = 0;
};

/// Calls fn(s) for every subset s of universe, in increasing mask order.
template <typename Fn>
void for_each_subset(PointSet universe, Fn&& fn) {
  const PointSet::Mask mask = universe.bits();
  PointSet::Mask s = 0;
  while (true) {
    fn(PointSet(s));
    if (s == mask) break;
    s = (s - mask) & mask;
  }
}

/// Like for_each_subset but stops as soon as fn returns false. Returns
/// false iff it stopped early.
template <typename Fn>
bool all_subsets(PointSet universe, Fn&& fn) {
  const PointSet::Mask mask = universe.bits();
  PointSet::Mask s = 0;
  while (true) {
    if (!fn(PointSet(s))) return false;
    if (s == mask) return true;
    s = (s - mask) & mask;
  }
}

}  // namespace topo
