#include "topo/generated.hpp"

#include "topo/convergence.hpp"
#include "topo/errors.hpp"

namespace topo {

TestClass TestClass::explicit_class(std::string name, std::vector<FinSpace> members, std::size_t bound) {
  if (members.empty()) throw InvalidClass("class '" + name + "' has no members");
  for (const FinSpace& m : members) {
    if (m.size() > bound) {
      throw InvalidClass("class '" + name + "' has a " + std::to_string(m.size()) +
                         "-point member; members are limited to " + std::to_string(bound) + " points");
    }
  }
  return TestClass(std::move(name), Kind::Explicit, std::move(members));
}

TestClass TestClass::P() { return TestClass("P", Kind::P, {FinSpace::indiscrete(2)}); }
TestClass TestClass::A() { return TestClass("A", Kind::A, {FinSpace::sierpinski()}); }
TestClass TestClass::Sfin() { return TestClass("Sfin", Kind::Sfin, {}); }

bool c_closed(const FinSpace& x, const TestClass& c, PointSet a) {
  if (!a.subset_of(x.points())) throw Error("set " + a.to_string() + " is not a subset of the space");
  if (c.uses_profiles()) return is_limit_closed(x, a);
  for (const FinSpace& z : c.members()) {
    const bool all_closed = for_each_continuous_map(z, x, [&](const std::vector<Point>& f) {
      PointSet pre;
      for (Point i = 0; i < f.size(); ++i) {
        if (a.contains(f[i])) pre.insert(i);
      }
      return z.is_closed(pre);
    });
    if (!all_closed) return false;
  }
  return true;
}

bool c_open(const FinSpace& x, const TestClass& c, PointSet u) {
  if (!u.subset_of(x.points())) throw Error("set " + u.to_string() + " is not a subset of the space");
  return c_closed(x, c, u.complement(x.size()));
}

FinSpace coreflection(const FinSpace& x, const TestClass& c) {
  if (x.size() > 20) {
    throw SpaceTooLarge("coreflection tests every subset; " + std::to_string(x.size()) + " points is too many");
  }
  std::vector<PointSet> opens;
  for_each_subset(x.points(), [&](PointSet u) {
    if (c_open(x, c, u)) opens.push_back(u);
  });
  return FinSpace::make(x.size(), opens);
}

bool is_c_generated(const FinSpace& x, const TestClass& c) { return coreflection(x, c) == x; }

bool is_c_hausdorff(const FinSpace& x, const TestClass& c) {
  const ProductSpace sq = product(x, x);
  return c_closed(sq.space, c, diagonal(x));
}

bool is_h_generated(const FinSpace& x) { return is_sequential_style(x, SequentialMode::Sequential); }

bool is_k_generated(const FinSpace& x, CompactVariant) {
  return is_sequential_style(x, SequentialMode::Sequential);
}

}  // namespace topo
