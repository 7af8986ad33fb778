#include "topo/space.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "topo/errors.hpp"

namespace topo {

std::string PointSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Point p : *this) {
    if (!first) out += ' ';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

void require_size(std::size_t n) {
  if (n > kMaxPoints) {
    throw SpaceTooLarge("space has " + std::to_string(n) + " points; at most " +
                        std::to_string(kMaxPoints) + " are supported");
  }
}

}  // namespace

FinSpace FinSpace::make(std::size_t n, std::span<const PointSet> opens) {
  require_size(n);
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> family(opens.begin(), opens.end());
  for (PointSet u : family) {
    if (!u.subset_of(all)) {
      throw NotATopology("open set " + u.to_string() + " is not a subset of the " + std::to_string(n) +
                         " points");
    }
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  auto has = [&](PointSet u) { return std::binary_search(family.begin(), family.end(), u); };
  if (!has(PointSet{})) throw NotATopology("empty set is not open");
  if (!has(all)) throw NotATopology("full set " + all.to_string() + " is not open");
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const PointSet u = family[i];
      const PointSet v = family[j];
      if (!has(u | v)) {
        throw NotATopology("union of " + u.to_string() + " and " + v.to_string() + " is not open");
      }
      if (!has(u & v)) {
        throw NotATopology("intersection of " + u.to_string() + " and " + v.to_string() + " is not open");
      }
    }
  }

  std::vector<PointSet> nbhd(n, all);
  for (PointSet u : family) {
    for (Point x : u) nbhd[x] &= u;
  }
  return FinSpace(std::move(nbhd));
}

FinSpace FinSpace::generate(std::size_t n, std::span<const PointSet> subbasis) {
  require_size(n);
  const PointSet all = PointSet::full(n);
  std::vector<PointSet> nbhd(n, all);
  for (PointSet s : subbasis) {
    if (!s.subset_of(all)) {
      throw NotATopology("subbasis member " + s.to_string() + " is not a subset of the " + std::to_string(n) +
                         " points");
    }
    for (Point x : s) nbhd[x] &= s;
  }
  return FinSpace(std::move(nbhd));
}

FinSpace FinSpace::from_neighbourhoods(std::vector<PointSet> nbhds) {
  const std::size_t n = nbhds.size();
  require_size(n);
  const PointSet all = PointSet::full(n);
  for (Point x = 0; x < n; ++x) {
    if (!nbhds[x].subset_of(all) || !nbhds[x].contains(x)) {
      throw NotATopology("neighbourhood " + nbhds[x].to_string() + " of point " + std::to_string(x) +
                         " is invalid");
    }
    for (Point y : nbhds[x]) {
      if (!nbhds[y].subset_of(nbhds[x])) {
        throw NotATopology("neighbourhoods of " + std::to_string(x) + " and " + std::to_string(y) +
                           " are not nested");
      }
    }
  }
  return FinSpace(std::move(nbhds));
}

FinSpace FinSpace::discrete(std::size_t n) {
  require_size(n);
  std::vector<PointSet> nbhd;
  nbhd.reserve(n);
  for (Point x = 0; x < n; ++x) nbhd.push_back(PointSet::singleton(x));
  return FinSpace(std::move(nbhd));
}

FinSpace FinSpace::indiscrete(std::size_t n) {
  require_size(n);
  return FinSpace(std::vector<PointSet>(n, PointSet::full(n)));
}

FinSpace FinSpace::sierpinski() { return FinSpace({PointSet{0}, PointSet{0, 1}}); }

bool FinSpace::is_open(PointSet a) const {
  for (Point x : a) {
    if (x >= size() || !nbhd_[x].subset_of(a)) return false;
  }
  return true;
}

std::vector<PointSet> FinSpace::opens() const {
  // Every open set is a union of minimal neighbourhoods.
  std::unordered_set<PointSet::Mask> seen{0};
  std::vector<PointSet> out{PointSet{}};
  for (PointSet nb : nbhd_) {
    const std::size_t current = out.size();
    for (std::size_t i = 0; i < current; ++i) {
      const PointSet u = out[i] | nb;
      if (seen.insert(u.bits()).second) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet closure(const FinSpace& x, PointSet a) {
  PointSet out;
  for (Point p = 0; p < x.size(); ++p) {
    if (x.min_nbhd(p).intersects(a)) out.insert(p);
  }
  return out;
}

PointSet interior(const FinSpace& x, PointSet a) {
  PointSet out;
  for (Point p = 0; p < x.size(); ++p) {
    if (x.min_nbhd(p).subset_of(a)) out.insert(p);
  }
  return out;
}

std::vector<std::vector<bool>> specialization_preorder(const FinSpace& x) {
  const std::size_t n = x.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Point a = 0; a < n; ++a) {
    for (Point b = 0; b < n; ++b) rel[a][b] = x.specializes(a, b);
  }
  return rel;
}

bool is_continuous(const FinSpace& dom, const FinSpace& cod, std::span<const Point> image) {
  if (image.size() != dom.size()) return false;
  for (Point v : image) {
    if (v >= cod.size()) return false;
  }
  for (Point y = 0; y < dom.size(); ++y) {
    const PointSet target = cod.min_nbhd(image[y]);
    for (Point x : dom.min_nbhd(y)) {
      if (!target.contains(image[x])) return false;
    }
  }
  return true;
}

ContinuousMap ContinuousMap::make(FinSpace dom, FinSpace cod, std::vector<Point> image) {
  if (!is_continuous(dom, cod, image)) {
    std::ostringstream msg;
    msg << "map [";
    for (std::size_t i = 0; i < image.size(); ++i) msg << (i ? " " : "") << image[i];
    msg << "] is not a continuous map from a " << dom.size() << "-point space to a " << cod.size()
        << "-point space";
    throw NotContinuous(msg.str());
  }
  return ContinuousMap(std::move(dom), std::move(cod), std::move(image));
}

ContinuousMap ContinuousMap::identity(const FinSpace& x) {
  std::vector<Point> image(x.size());
  for (Point p = 0; p < x.size(); ++p) image[p] = p;
  return ContinuousMap(x, x, std::move(image));
}

PointSet ContinuousMap::preimage(PointSet u) const {
  PointSet out;
  for (Point x = 0; x < image_.size(); ++x) {
    if (u.contains(image_[x])) out.insert(x);
  }
  return out;
}

PointSet ContinuousMap::image_of(PointSet a) const {
  PointSet out;
  for (Point x : a) out.insert(image_[x]);
  return out;
}

ContinuousMap ContinuousMap::after(const ContinuousMap& inner) const {
  if (!(inner.cod_ == dom_)) throw NotContinuous("composition of maps with mismatched spaces");
  std::vector<Point> image(inner.image_.size());
  for (std::size_t i = 0; i < image.size(); ++i) image[i] = image_[inner.image_[i]];
  return ContinuousMap(inner.dom_, cod_, std::move(image));
}

ProductSpace product(const FinSpace& x, const FinSpace& y) {
  const std::size_t n = x.size() * y.size();
  require_size(n);
  std::vector<PointSet> nbhd(n);
  std::vector<Point> first(n);
  std::vector<Point> second(n);
  for (Point a = 0; a < x.size(); ++a) {
    for (Point b = 0; b < y.size(); ++b) {
      PointSet nb;
      for (Point c : x.min_nbhd(a)) {
        for (Point d : y.min_nbhd(b)) nb.insert(pair_index(y, c, d));
      }
      const Point p = pair_index(y, a, b);
      nbhd[p] = nb;
      first[p] = a;
      second[p] = b;
    }
  }
  FinSpace space = FinSpace::from_neighbourhoods(std::move(nbhd));
  auto p1 = ContinuousMap::make(space, x, std::move(first));
  auto p2 = ContinuousMap::make(space, y, std::move(second));
  return {std::move(space), std::move(p1), std::move(p2)};
}

PointSet diagonal(const FinSpace& x) {
  PointSet out;
  for (Point a = 0; a < x.size(); ++a) out.insert(pair_index(x, a, a));
  return out;
}

CoproductSpace coproduct(const FinSpace& x, const FinSpace& y) {
  const std::size_t n = x.size() + y.size();
  require_size(n);
  const auto shift = static_cast<Point>(x.size());
  std::vector<PointSet> nbhd(x.neighbourhoods().begin(), x.neighbourhoods().end());
  for (PointSet nb : y.neighbourhoods()) nbhd.push_back(PointSet(nb.bits() << shift));
  FinSpace space = FinSpace::from_neighbourhoods(std::move(nbhd));

  std::vector<Point> left(x.size());
  for (Point p = 0; p < x.size(); ++p) left[p] = p;
  std::vector<Point> right(y.size());
  for (Point p = 0; p < y.size(); ++p) right[p] = p + shift;
  auto l = ContinuousMap::make(x, space, std::move(left));
  auto r = ContinuousMap::make(y, space, std::move(right));
  return {std::move(space), std::move(l), std::move(r)};
}

Subspace subspace(const FinSpace& x, PointSet a) {
  if (!a.subset_of(x.points())) throw Error("subspace " + a.to_string() + " is not a subset of the space");
  std::vector<Point> members = a.members();
  std::vector<Point> index(x.size(), 0);
  for (Point i = 0; i < members.size(); ++i) index[members[i]] = i;
  std::vector<PointSet> nbhd;
  nbhd.reserve(members.size());
  for (Point m : members) {
    PointSet nb;
    for (Point p : x.min_nbhd(m) & a) nb.insert(index[p]);
    nbhd.push_back(nb);
  }
  FinSpace space = FinSpace::from_neighbourhoods(std::move(nbhd));
  auto inclusion = ContinuousMap::make(space, x, members);
  return {std::move(space), std::move(members), std::move(inclusion)};
}

QuotientSpace quotient(const FinSpace& x, std::span<const PointSet> blocks) {
  const std::size_t n = x.size();
  std::vector<Point> label(n, 0);
  PointSet covered;
  for (Point b = 0; b < blocks.size(); ++b) {
    const PointSet block = blocks[b];
    if (block.empty()) throw InvalidPartition("partition block " + std::to_string(b) + " is empty");
    if (!block.subset_of(x.points())) {
      throw InvalidPartition("partition block " + block.to_string() + " contains points outside the space");
    }
    if (block.intersects(covered)) {
      throw InvalidPartition("partition block " + block.to_string() + " overlaps an earlier block");
    }
    covered |= block;
    for (Point p : block) label[p] = b;
  }
  if (covered != x.points()) {
    throw InvalidPartition("partition does not cover points " + (x.points() - covered).to_string());
  }

  // The smallest saturated open set containing a block is reached by
  // alternately closing under minimal neighbourhoods and under blocks.
  std::vector<PointSet> nbhd(blocks.size());
  for (Point b = 0; b < blocks.size(); ++b) {
    PointSet up = blocks[b];
    while (true) {
      PointSet next = up;
      for (Point p : up) next |= x.min_nbhd(p);
      for (Point p : next) next |= blocks[label[p]];
      if (next == up) break;
      up = next;
    }
    PointSet labels;
    for (Point p : up) labels.insert(label[p]);
    nbhd[b] = labels;
  }
  FinSpace space = FinSpace::from_neighbourhoods(std::move(nbhd));
  auto projection = ContinuousMap::make(x, space, std::move(label));
  return {std::move(space), std::move(projection)};
}

DoubledSpace double_points(const FinSpace& x, PointSet d) {
  if (!d.subset_of(x.points())) throw Error("doubled set " + d.to_string() + " is not a subset of the space");
  const std::size_t n = x.size() + d.size();
  require_size(n);
  std::vector<std::pair<Point, Point>> twins;
  auto next = static_cast<Point>(x.size());
  for (Point p : d) twins.emplace_back(p, next++);

  // Generated by U and every (U - S) ∪ S' with S ⊆ D ∩ U. Intersecting the
  // members containing a point gives its neighbourhood in closed form.
  std::vector<PointSet> nbhd(n);
  for (Point p = 0; p < x.size(); ++p) {
    const PointSet others = d - PointSet::singleton(p);
    nbhd[p] = x.min_nbhd(p) - others;
  }
  for (auto [orig, twin] : twins) {
    nbhd[twin] = nbhd[orig];
    nbhd[twin].erase(orig);
    nbhd[twin].insert(twin);
  }
  return {FinSpace::from_neighbourhoods(std::move(nbhd)), std::move(twins)};
}

std::vector<ContinuousMap> enumerate_continuous_maps(const FinSpace& z, const FinSpace& x) {
  std::vector<ContinuousMap> out;
  for_each_continuous_map(z, x, [&](const std::vector<Point>& img) {
    out.push_back(ContinuousMap::make(z, x, img));
    return true;
  });
  return out;
}

namespace {

bool extend_bijection(const FinSpace& x, const FinSpace& y, std::vector<Point>& perm, PointSet used, Point i) {
  if (i == x.size()) return true;
  const std::size_t want = x.min_nbhd(i).size();
  for (Point c = 0; c < y.size(); ++c) {
    if (used.contains(c) || y.min_nbhd(c).size() != want) continue;
    bool ok = true;
    for (Point j = 0; j < i && ok; ++j) {
      ok = x.specializes(j, i) == y.specializes(perm[j], c) && x.specializes(i, j) == y.specializes(c, perm[j]);
    }
    if (!ok) continue;
    perm[i] = c;
    PointSet now = used;
    now.insert(c);
    if (extend_bijection(x, y, perm, now, i + 1)) return true;
  }
  return false;
}

std::vector<std::size_t> nbhd_profile(const FinSpace& s) {
  std::vector<std::size_t> sizes;
  for (PointSet nb : s.neighbourhoods()) sizes.push_back(nb.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace

std::optional<std::vector<Point>> find_homeomorphism(const FinSpace& x, const FinSpace& y) {
  if (x.size() != y.size() || nbhd_profile(x) != nbhd_profile(y)) return std::nullopt;
  std::vector<Point> perm(x.size(), 0);
  if (!extend_bijection(x, y, perm, PointSet{}, 0)) return std::nullopt;
  return perm;
}

}  // namespace topo
