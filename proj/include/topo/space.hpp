#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "topo/point_set.hpp"

namespace topo {

/// A topology on the points {0..n-1}.
///
/// Finite spaces are Alexandrov, so the topology is determined by the
/// minimal open neighbourhood of each point. That vector is the canonical
/// stored form: two FinSpace values describe the same topology iff their
/// neighbourhood vectors are equal. The family of open sets is derived on
/// demand, sorted by mask value.
class FinSpace {
 public:
  /// The empty space.
  FinSpace() = default;

  /// Validates an explicit family of open sets. Throws NotATopology naming
  /// the offending set or pair.
  static FinSpace make(std::size_t n, std::span<const PointSet> opens);
  static FinSpace make(std::size_t n, std::initializer_list<PointSet> opens) {
    return make(n, std::span<const PointSet>(opens.begin(), opens.size()));
  }

  /// Smallest topology containing every subbasis member.
  static FinSpace generate(std::size_t n, std::span<const PointSet> subbasis);

  /// Builds a space from minimal neighbourhoods; each entry must contain
  /// its point and the induced relation must be transitive.
  static FinSpace from_neighbourhoods(std::vector<PointSet> nbhds);

  static FinSpace discrete(std::size_t n);
  static FinSpace indiscrete(std::size_t n);
  /// {0,1} with opens {}, {0}, {0,1}: 0 is the open point.
  static FinSpace sierpinski();

  std::size_t size() const { return nbhd_.size(); }
  PointSet points() const { return PointSet::full(size()); }

  PointSet min_nbhd(Point x) const { return nbhd_[x]; }
  std::span<const PointSet> neighbourhoods() const { return nbhd_; }

  /// x lies in every open set containing y.
  bool specializes(Point x, Point y) const { return nbhd_[y].contains(x); }

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const { return is_open(a.complement(size())); }

  /// All open sets in increasing mask order.
  std::vector<PointSet> opens() const;
  std::size_t open_count() const { return opens().size(); }

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  explicit FinSpace(std::vector<PointSet> nbhd) : nbhd_(std::move(nbhd)) {}

  std::vector<PointSet> nbhd_;
};

PointSet closure(const FinSpace& x, PointSet a);
PointSet interior(const FinSpace& x, PointSet a);

/// Specialization preorder as an adjacency matrix: result[x][y] iff x ⊑ y.
std::vector<std::vector<bool>> specialization_preorder(const FinSpace& x);

/// Monotonicity for the specialization preorders; for finite spaces this is
/// equivalent to continuity.
bool is_continuous(const FinSpace& dom, const FinSpace& cod, std::span<const Point> image);

class ContinuousMap {
 public:
  /// Throws NotContinuous if image is out of range or not continuous.
  static ContinuousMap make(FinSpace dom, FinSpace cod, std::vector<Point> image);
  static ContinuousMap identity(const FinSpace& x);

  const FinSpace& dom() const { return dom_; }
  const FinSpace& cod() const { return cod_; }
  std::span<const Point> image() const { return image_; }

  Point operator()(Point x) const { return image_[x]; }
  PointSet preimage(PointSet u) const;
  PointSet image_of(PointSet a) const;

  /// this ∘ inner
  ContinuousMap after(const ContinuousMap& inner) const;

  friend bool operator==(const ContinuousMap&, const ContinuousMap&) = default;

 private:
  ContinuousMap(FinSpace dom, FinSpace cod, std::vector<Point> image)
      : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {}

  FinSpace dom_;
  FinSpace cod_;
  std::vector<Point> image_;
};

struct ProductSpace {
  FinSpace space;
  ContinuousMap first;
  ContinuousMap second;
};

/// Point (x, y) is numbered x * Y.size() + y.
ProductSpace product(const FinSpace& x, const FinSpace& y);
inline Point pair_index(const FinSpace& y, Point a, Point b) {
  return static_cast<Point>(a * y.size() + b);
}
/// The diagonal {(x,x)} of product(x, x).
PointSet diagonal(const FinSpace& x);

struct CoproductSpace {
  FinSpace space;
  ContinuousMap left;
  ContinuousMap right;
};

/// Points of X keep their labels; Y's points follow, shifted by X.size().
CoproductSpace coproduct(const FinSpace& x, const FinSpace& y);

struct Subspace {
  FinSpace space;
  /// Members of A in increasing order; new point i is old point members[i].
  std::vector<Point> members;
  ContinuousMap inclusion;
};

Subspace subspace(const FinSpace& x, PointSet a);

struct QuotientSpace {
  FinSpace space;
  ContinuousMap projection;
};

/// Block i of the partition becomes point i. Throws InvalidPartition.
QuotientSpace quotient(const FinSpace& x, std::span<const PointSet> blocks);

struct DoubledSpace {
  FinSpace space;
  /// (original, twin) pairs; twins are numbered from X.size() upward in
  /// increasing order of the original.
  std::vector<std::pair<Point, Point>> twins;
};

/// Adjoins a twin x' for each x in d. The topology is generated by the opens
/// U of X together with (U - S) ∪ S' for every S ⊆ d ∩ U, where S' holds the
/// twins of S. Swapping any x with x' is a homeomorphism.
DoubledSpace double_points(const FinSpace& x, PointSet d);

/// Every continuous map Z -> X, lexicographic in the image array.
std::vector<ContinuousMap> enumerate_continuous_maps(const FinSpace& z, const FinSpace& x);

/// Visits images of continuous maps z -> x in lexicographic order. Images
/// for point 0 may be restricted with first_point to shard the search.
/// The visitor returns false to stop; the function returns false iff stopped.
template <typename Visitor>
bool for_each_continuous_map(const FinSpace& z, const FinSpace& x, Visitor&& visit,
                             std::optional<Point> first_point = std::nullopt);

/// Returns a bijection p with opens(y) = p(opens(x)) if one exists.
std::optional<std::vector<Point>> find_homeomorphism(const FinSpace& x, const FinSpace& y);
inline bool is_homeomorphic(const FinSpace& x, const FinSpace& y) {
  return find_homeomorphism(x, y).has_value();
}

}  // namespace topo

#include "topo/detail/map_search.hpp"
