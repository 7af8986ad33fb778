#include "topo/properties.hpp"

#include "topo/axioms.hpp"
#include "topo/convergence.hpp"
#include "topo/generated.hpp"

namespace topo {

const std::vector<FiniteCheck>& finite_checks() {
  static const std::vector<FiniteCheck> checks = [] {
    std::vector<FiniteCheck> c;
    auto add = [&](std::string id, std::string description, std::function<bool(const FinSpace&)> fn) {
      c.push_back({std::move(id), std::move(description), std::move(fn)});
    };
    add("T0", "no two points topologically indistinguishable", is_t0);
    add("T1", "singletons closed", is_t1);
    add("T2", "Hausdorff", is_t2);
    add("discrete", "every subset open", is_discrete);
    add("compact", "whole space compact", [](const FinSpace& x) { return is_compact_subset(x, x.points()); });
    add("KC", "compact subsets closed", is_kc);
    add("anticompact", "compact subsets finite", is_anticompact);
    add("lH", "locally Hausdorff", is_lh);
    add("sH", "semi-Hausdorff", is_sh);
    add("RC", "retracts closed", [](const FinSpace& x) { return is_rc(x); });
    add("hyperconnected", "nonempty opens pairwise meet", is_hyperconnected);
    add("partition", "topologically partitioned", is_partition_topology);
    add("Alexandrov", "opens closed under arbitrary intersection", is_alexandrov);
    add("US", "unique sequential limits", is_us);
    add("UR", "unique transfinite limits", is_ur);
    add("UCR", "unique continuous transfinite limits", is_ucr);
    add("seq-discrete", "convergent sequences eventually constant", is_sequentially_discrete);
    add("FU", "Frechet-Urysohn",
        [](const FinSpace& x) { return is_radial_style(x, RadialMode::FrechetUrysohn); });
    add("C-radial", "closure reached by continuous transfinite sequences",
        [](const FinSpace& x) { return is_radial_style(x, RadialMode::CRadial); });
    add("radial", "closure reached by transfinite sequences",
        [](const FinSpace& x) { return is_radial_style(x, RadialMode::Radial); });
    add("sequential", "sequentially closed sets closed",
        [](const FinSpace& x) { return is_sequential_style(x, SequentialMode::Sequential); });
    add("pseudo-C-radial", "C-radially closed sets closed",
        [](const FinSpace& x) { return is_sequential_style(x, SequentialMode::PseudoCRadial); });
    add("pseudoradial", "radially closed sets closed",
        [](const FinSpace& x) { return is_sequential_style(x, SequentialMode::Pseudoradial); });
    add("k1-space", "K1-generated", [](const FinSpace& x) { return is_k_generated(x, CompactVariant::K1); });
    add("k2-space", "K2-generated", [](const FinSpace& x) { return is_k_generated(x, CompactVariant::K2); });
    add("H-generated", "generated by Hausdorff spaces", is_h_generated);
    add("P-generated", "coreflection by P is trivial",
        [](const FinSpace& x) { return is_c_generated(x, TestClass::P()); });
    add("A-generated", "coreflection by A is trivial",
        [](const FinSpace& x) { return is_c_generated(x, TestClass::A()); });
    add("Sfin-generated", "coreflection by convergent sequences is trivial",
        [](const FinSpace& x) { return is_c_generated(x, TestClass::Sfin()); });
    add("P-Hausdorff", "diagonal P-closed", [](const FinSpace& x) { return is_c_hausdorff(x, TestClass::P()); });
    add("A-Hausdorff", "diagonal A-closed", [](const FinSpace& x) { return is_c_hausdorff(x, TestClass::A()); });
    add("Sfin-Hausdorff", "diagonal sequentially closed",
        [](const FinSpace& x) { return is_c_hausdorff(x, TestClass::Sfin()); });
    return c;
  }();
  return checks;
}

const FiniteCheck* find_check(std::string_view id) {
  for (const FiniteCheck& c : finite_checks()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace topo
