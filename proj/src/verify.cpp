#include "topo/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "topo/axioms.hpp"
#include "topo/convergence.hpp"
#include "topo/enumerate.hpp"
#include "topo/errors.hpp"
#include "topo/generated.hpp"
#include "topo/properties.hpp"

namespace topo {

namespace {

using Check = std::function<std::optional<std::string>(std::size_t)>;

struct Tally {
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::optional<std::pair<std::size_t, std::string>> first;
};

// Runs check(i) for i in [0, count) on up to `threads` workers. Each worker
// owns a strided slice and a private tally; merging picks the lowest index,
// so the outcome is independent of scheduling.
Tally run_cases(std::size_t count, std::size_t threads, const Check& check) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  std::vector<Tally> partial(threads);
  auto work = [&](std::size_t t) {
    for (std::size_t i = t; i < count; i += threads) {
      ++partial[t].cases;
      std::optional<std::string> bad;
      try {
        bad = check(i);
      } catch (const std::exception& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (bad) {
        ++partial[t].violations;
        if (!partial[t].first) partial[t].first.emplace(i, std::move(*bad));
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (Tally& p : partial) {
    total.cases += p.cases;
    total.violations += p.violations;
    if (p.first && (!total.first || p.first->first < total.first->first)) total.first = std::move(p.first);
  }
  return total;
}

std::string describe(const FinSpace& x) {
  std::string out = "n=" + std::to_string(x.size()) + " nbhds";
  for (PointSet nb : x.neighbourhoods()) out += " " + nb.to_string();
  return out;
}

// Every open of `coarse` is open in `fine`.
bool is_finer(const FinSpace& fine, const FinSpace& coarse) {
  for (PointSet u : coarse.opens()) {
    if (!fine.is_open(u)) return false;
  }
  return true;
}

// Continuity from the definition: preimages of opens are open.
bool preimage_continuous(const FinSpace& dom, const FinSpace& cod, const std::vector<Point>& f) {
  for (PointSet u : cod.opens()) {
    PointSet pre;
    for (Point i = 0; i < f.size(); ++i) {
      if (u.contains(f[i])) pre.insert(i);
    }
    if (!dom.is_open(pre)) return false;
  }
  return true;
}

// Calls fn for every function dom -> cod (|cod|^|dom| of them).
template <typename Fn>
void for_each_function(std::size_t dom, std::size_t cod, Fn&& fn) {
  std::vector<Point> f(dom, 0);
  if (dom > 0 && cod == 0) return;
  while (true) {
    fn(static_cast<const std::vector<Point>&>(f));
    std::size_t i = dom;
    while (i > 0) {
      --i;
      if (++f[i] < cod) break;
      f[i] = 0;
      if (i == 0) return;
    }
    if (dom == 0) return;
  }
}

// Number of topologies on n points by filtering every family of subsets;
// independent of the preorder search.
std::size_t brute_force_topology_count(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  const PointSet::Mask full = PointSet::full(n).bits();
  std::size_t count = 0;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    auto in = [&](PointSet::Mask s) { return ((family >> s) & 1U) != 0; };
    if (!in(0) || !in(full)) continue;
    bool closed = true;
    for (PointSet::Mask a = 0; a < subsets && closed; ++a) {
      if (!in(a)) continue;
      for (PointSet::Mask b = 0; b < subsets && closed; ++b) {
        if (in(b) && (!in(a | b) || !in(a & b))) closed = false;
      }
    }
    if (closed) ++count;
  }
  return count;
}

std::vector<FinSpace> census_upto(const std::vector<FinSpace>& all, std::size_t n) {
  std::vector<FinSpace> out;
  for (const FinSpace& s : all) {
    if (s.size() <= n) out.push_back(s);
  }
  return out;
}

std::vector<std::vector<PointSet>> partitions(std::size_t n) {
  std::vector<std::vector<PointSet>> out;
  std::vector<PointSet> blocks;
  std::function<void(Point)> place = [&](Point p) {
    if (p == n) {
      out.push_back(blocks);
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].insert(p);
      place(p + 1);
      blocks[b].erase(p);
    }
    blocks.push_back(PointSet::singleton(p));
    place(p + 1);
    blocks.pop_back();
  };
  place(0);
  return out;
}

FinSpace relabel(const FinSpace& x, const std::vector<Point>& perm) {
  std::vector<PointSet> nbhd(x.size());
  for (Point p = 0; p < x.size(); ++p) {
    PointSet nb;
    for (Point q : x.min_nbhd(p)) nb.insert(perm[q]);
    nbhd[perm[p]] = nb;
  }
  return FinSpace::from_neighbourhoods(std::move(nbhd));
}

struct Context {
  const VerifyOptions& options;
  const KnowledgeBase& kb;
  std::vector<FinSpace> spaces;
  std::vector<TestClass> classes;
  std::vector<std::pair<TestClass, TestClass>> nested;
};

using Suite = std::function<Tally(const Context&)>;

Tally per_space(const Context& ctx, const std::vector<FinSpace>& spaces,
                const std::function<std::optional<std::string>(const FinSpace&)>& fn) {
  return run_cases(spaces.size(), ctx.options.threads, [&](std::size_t i) -> std::optional<std::string> {
    if (auto bad = fn(spaces[i])) return describe(spaces[i]) + ": " + *bad;
    return std::nullopt;
  });
}

Tally single(const std::function<std::optional<std::string>()>& fn) {
  Tally t;
  t.cases = 1;
  if (auto bad = fn()) {
    t.violations = 1;
    t.first.emplace(0, *bad);
  }
  return t;
}

std::optional<std::string> when(bool ok, const std::string& msg) {
  if (ok) return std::nullopt;
  return msg;
}

// ---------------------------------------------------------------------------
// topology-core

Tally constructors_valid(const Context& ctx) {
  const auto small = census_upto(ctx.spaces, 3);
  return per_space(ctx, small, [](const FinSpace& x) -> std::optional<std::string> {
    auto valid = [](const FinSpace& s) { return FinSpace::make(s.size(), s.opens()) == s; };
    if (!valid(product(x, x).space)) return "product";
    if (!valid(coproduct(x, FinSpace::sierpinski()).space)) return "coproduct";
    std::optional<std::string> bad;
    for_each_subset(x.points(), [&](PointSet a) {
      if (bad) return;
      if (!valid(subspace(x, a).space)) bad = "subspace " + a.to_string();
      if (!valid(double_points(x, a).space)) bad = "double_points " + a.to_string();
    });
    if (bad) return bad;
    for (const auto& blocks : partitions(x.size())) {
      if (!valid(quotient(x, blocks).space)) return "quotient";
    }
    return std::nullopt;
  });
}

Tally continuity_vs_monotone(const Context& ctx) {
  const auto small = census_upto(ctx.spaces, 3);
  const std::size_t k = small.size();
  return run_cases(k * k, ctx.options.threads, [&](std::size_t i) -> std::optional<std::string> {
    const FinSpace& z = small[i / k];
    const FinSpace& x = small[i % k];
    std::optional<std::string> bad;
    for_each_function(z.size(), x.size(), [&](const std::vector<Point>& f) {
      if (!bad && is_continuous(z, x, f) != preimage_continuous(z, x, f)) {
        bad = "map from " + describe(z) + " to " + describe(x);
      }
    });
    return bad;
  });
}

Tally closure_laws(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) -> std::optional<std::string> {
    const std::size_t n = x.size();
    std::optional<std::string> bad;
    for_each_subset(x.points(), [&](PointSet a) {
      if (bad) return;
      const PointSet cl = closure(x, a);
      const PointSet in = interior(x, a);
      if (!a.subset_of(cl) || closure(x, cl) != cl || !x.is_closed(cl)) bad = "closure of " + a.to_string();
      if (!in.subset_of(a) || interior(x, in) != in || !x.is_open(in)) bad = "interior of " + a.to_string();
      if (cl != interior(x, a.complement(n)).complement(n)) bad = "duality at " + a.to_string();
      for_each_subset(a, [&](PointSet b) {
        if (!closure(x, b).subset_of(cl) || !interior(x, b).subset_of(in)) bad = "monotonicity at " + a.to_string();
      });
    });
    return bad;
  });
}

Tally product_universal(const Context& ctx) {
  const auto tiny = census_upto(ctx.spaces, 2);
  const std::size_t k = tiny.size();
  return run_cases(k * k * k, ctx.options.threads, [&](std::size_t i) -> std::optional<std::string> {
    const FinSpace& w = tiny[i / (k * k)];
    const FinSpace& x = tiny[(i / k) % k];
    const FinSpace& y = tiny[i % k];
    const ProductSpace xy = product(x, y);
    std::optional<std::string> bad;
    for_each_function(w.size(), xy.space.size(), [&](const std::vector<Point>& g) {
      std::vector<Point> g1(g.size());
      std::vector<Point> g2(g.size());
      for (std::size_t j = 0; j < g.size(); ++j) {
        g1[j] = xy.first(g[j]);
        g2[j] = xy.second(g[j]);
      }
      const bool joint = preimage_continuous(w, xy.space, g);
      const bool parts = preimage_continuous(w, x, g1) && preimage_continuous(w, y, g2);
      if (!bad && joint != parts) bad = "map into product of " + describe(x) + " and " + describe(y);
    });
    return bad;
  });
}

Tally census_counts(const Context& ctx) {
  static constexpr std::size_t kKnown[] = {1, 1, 4, 29, 355, 6942};
  const std::size_t top = ctx.options.max_points;
  return run_cases(top + 1, 1, [&](std::size_t n) -> std::optional<std::string> {
    const std::size_t got = enumerate_topologies(n, std::max(top, kDefaultCensusBound)).size();
    if (got != kKnown[n]) return "n=" + std::to_string(n) + " counted " + std::to_string(got);
    if (n <= 3 && brute_force_topology_count(n) != got) return "n=" + std::to_string(n) + " disagrees with brute force";
    std::set<std::vector<PointSet::Mask>> distinct;
    std::size_t sharded = 0;
    for (std::size_t s = 0; s < 3; ++s) {
      for_each_topology(n, [&](const FinSpace& x) {
        std::vector<PointSet::Mask> key;
        for (PointSet nb : x.neighbourhoods()) key.push_back(nb.bits());
        distinct.insert(key);
        ++sharded;
      }, Shard{s, 3}, std::max(top, kDefaultCensusBound));
    }
    if (sharded != got || distinct.size() != got) return "n=" + std::to_string(n) + " shards overlap or miss spaces";
    return std::nullopt;
  });
}

Tally homeomorphism_class_counts(const Context& ctx) {
  static constexpr std::size_t kKnown[] = {1, 1, 3, 9, 33, 139};
  const std::size_t top = std::min<std::size_t>(ctx.options.max_points, 4);
  return run_cases(top + 1, ctx.options.threads, [&](std::size_t n) -> std::optional<std::string> {
    const auto spaces = enumerate_topologies(n, std::max(ctx.options.max_points, kDefaultCensusBound));
    const std::size_t got = homeomorphism_classes(spaces).size();
    return when(got == kKnown[n], "n=" + std::to_string(n) + " has " + std::to_string(got) + " classes");
  });
}

Tally twin_symmetry(const Context& ctx) {
  const auto small = census_upto(ctx.spaces, 3);
  return per_space(ctx, small, [](const FinSpace& x) -> std::optional<std::string> {
    std::optional<std::string> bad;
    for_each_subset(x.points(), [&](PointSet d) {
      const DoubledSpace doubled = double_points(x, d);
      for (auto [orig, twin] : doubled.twins) {
        std::vector<Point> swap(doubled.space.size());
        std::iota(swap.begin(), swap.end(), Point{0});
        std::swap(swap[orig], swap[twin]);
        if (!bad && relabel(doubled.space, swap) != doubled.space) bad = "twin swap " + std::to_string(orig);
      }
    });
    return bad;
  });
}

// ---------------------------------------------------------------------------
// convergence

Tally limits_antitone(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) -> std::optional<std::string> {
    std::optional<std::string> bad;
    for_each_subset(x.points(), [&](PointSet big) {
      if (big.empty() || bad) return;
      const PointSet lim = limits(x, big);
      for_each_subset(big, [&](PointSet s) {
        if (!s.empty() && !lim.subset_of(limits(x, s))) bad = "profile " + s.to_string() + " in " + big.to_string();
      });
    });
    return bad;
  });
}

Tally constant_converges(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) -> std::optional<std::string> {
    for (Point p = 0; p < x.size(); ++p) {
      if (!limits(x, PointSet::singleton(p)).contains(p)) return "point " + std::to_string(p);
    }
    return std::nullopt;
  });
}

Tally unique_limit_collapse(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) {
    const bool d = is_discrete(x);
    return when(is_us(x) == d && is_ur(x) == d && is_ucr(x) == d, "US/UR/UCR differ from discreteness");
  });
}

Tally seq_discrete_collapse(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) {
    return when(is_sequentially_discrete(x) == is_discrete(x), "sequential discreteness differs from discreteness");
  });
}

Tally mode_independence(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) -> std::optional<std::string> {
    const bool fu = is_radial_style(x, RadialMode::FrechetUrysohn);
    if (fu != is_radial_style(x, RadialMode::CRadial) || fu != is_radial_style(x, RadialMode::Radial)) {
      return "radial modes disagree";
    }
    const bool seq = is_sequential_style(x, SequentialMode::Sequential);
    if (seq != is_sequential_style(x, SequentialMode::PseudoCRadial) ||
        seq != is_sequential_style(x, SequentialMode::Pseudoradial)) {
      return "sequential modes disagree";
    }
    if (!fu || !seq) return "finite space not Frechet-Urysohn/sequential";
    return std::nullopt;
  });
}

// Limits of an eventually periodic omega-sequence straight from the
// definition: every open neighbourhood contains a tail.
PointSet literal_limits(const FinSpace& x, const std::vector<Point>& prefix, const std::vector<Point>& cycle) {
  auto at = [&](std::size_t k) { return k < prefix.size() ? prefix[k] : cycle[(k - prefix.size()) % cycle.size()]; };
  const std::size_t horizon = prefix.size() + 2 * cycle.size();
  PointSet out;
  const std::vector<PointSet> opens = x.opens();
  for (Point p = 0; p < x.size(); ++p) {
    bool limit = true;
    for (PointSet u : opens) {
      if (!u.contains(p)) continue;
      bool tail = false;
      for (std::size_t start = 0; start <= prefix.size() + cycle.size() && !tail; ++start) {
        bool inside = true;
        for (std::size_t k = start; k < horizon && inside; ++k) inside = u.contains(at(k));
        tail = inside;
      }
      if (!tail) {
        limit = false;
        break;
      }
    }
    if (limit) out.insert(p);
  }
  return out;
}

Tally periodic_oracle(const Context& ctx) {
  const auto small = census_upto(ctx.spaces, 3);
  return per_space(ctx, small, [](const FinSpace& x) -> std::optional<std::string> {
    const std::size_t n = x.size();
    std::optional<std::string> bad;
    for (std::size_t period = 1; period <= n && !bad; ++period) {
      for_each_function(period, n, [&](const std::vector<Point>& cycle) {
        PointSet values;
        for (Point v : cycle) values.insert(v);
        for (std::size_t plen = 0; plen <= 1 && !bad; ++plen) {
          for_each_function(plen, n, [&](const std::vector<Point>& prefix) {
            if (!bad && literal_limits(x, prefix, cycle) != limits(x, values)) {
              bad = "cycle over " + values.to_string();
            }
          });
        }
      });
    }
    return bad;
  });
}

// ---------------------------------------------------------------------------
// axioms

Tally diagram_soundness(const Context& ctx) {
  using P = bool (*)(const FinSpace&);
  static const std::vector<std::tuple<const char*, P, const char*, P>> edges{
      {"T2", is_t2, "lH", is_lh},   {"T2", is_t2, "sH", is_sh},   {"T2", is_t2, "UR", is_ur},
      {"T2", is_t2, "KC", is_kc},   {"KC", is_kc, "UCR", is_ucr}, {"UCR", is_ucr, "US", is_us},
      {"KC", is_kc, "US", is_us},   {"UR", is_ur, "US", is_us},   {"US", is_us, "T1", is_t1},
      {"lH", is_lh, "T1", is_t1},   {"sH", is_sh, "T1", is_t1},   {"T1", is_t1, "T0", is_t0},
  };
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) -> std::optional<std::string> {
    for (const auto& [a, pa, b, pb] : edges) {
      if (pa(x) && !pb(x)) return std::string(a) + " without " + b;
    }
    if (is_t2(x) && !is_rc(x)) return "T2 without RC";
    if (is_rc(x) && !is_t1(x)) return "RC without T1";
    return std::nullopt;
  });
}

Tally finite_collapse(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) -> std::optional<std::string> {
    const bool d = is_discrete(x);
    const std::vector<std::pair<const char*, bool>> values{
        {"T1", is_t1(x)}, {"T2", is_t2(x)}, {"KC", is_kc(x)}, {"US", is_us(x)},   {"UR", is_ur(x)},
        {"UCR", is_ucr(x)}, {"lH", is_lh(x)}, {"sH", is_sh(x)}, {"RC", is_rc(x)},
        {"seq-discrete", is_sequentially_discrete(x)},
    };
    for (const auto& [name, v] : values) {
      if (v != d) return std::string(name) + " differs from discreteness";
    }
    return std::nullopt;
  });
}

Tally sh_implies_t1(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) { return when(!is_sh(x) || is_t1(x), "sH but not T1"); });
}

Tally homeomorphism_invariance(const Context& ctx) {
  std::mt19937_64 rng(ctx.options.seed);
  std::vector<std::vector<Point>> perms;
  for (const FinSpace& x : ctx.spaces) {
    std::vector<Point> p(x.size());
    std::iota(p.begin(), p.end(), Point{0});
    std::shuffle(p.begin(), p.end(), rng);
    perms.push_back(std::move(p));
  }
  return run_cases(ctx.spaces.size(), ctx.options.threads, [&](std::size_t i) -> std::optional<std::string> {
    const FinSpace& x = ctx.spaces[i];
    const FinSpace y = relabel(x, perms[i]);
    if (!is_homeomorphic(x, y)) return describe(x) + ": relabeling not recognised as homeomorphic";
    for (const FiniteCheck& c : finite_checks()) {
      if (c.check(x) != c.check(y)) return describe(x) + ": " + c.id + " changes under relabeling";
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// generated

Tally coreflection_finer(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [&](const FinSpace& x) -> std::optional<std::string> {
    for (const TestClass& c : ctx.classes) {
      if (!is_finer(coreflection(x, c), x)) return "class " + c.name();
    }
    return std::nullopt;
  });
}

Tally coreflection_idempotent(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [&](const FinSpace& x) -> std::optional<std::string> {
    for (const TestClass& c : ctx.classes) {
      const FinSpace once = coreflection(x, c);
      if (coreflection(once, c) != once) return "class " + c.name();
    }
    return std::nullopt;
  });
}

Tally functoriality(const Context& ctx) {
  const auto tiny = census_upto(ctx.spaces, 2);
  const std::size_t k = tiny.size();
  return run_cases(k * k, ctx.options.threads, [&](std::size_t i) -> std::optional<std::string> {
    const FinSpace& x = tiny[i / k];
    const FinSpace& y = tiny[i % k];
    for (const TestClass& c : ctx.classes) {
      const FinSpace xc = coreflection(x, c);
      const FinSpace yc = coreflection(y, c);
      std::optional<std::string> bad;
      for_each_continuous_map(x, y, [&](const std::vector<Point>& f) {
        if (!preimage_continuous(xc, yc, f)) bad = "class " + c.name() + " from " + describe(x) + " to " + describe(y);
        return !bad;
      });
      if (bad) return bad;
    }
    return std::nullopt;
  });
}

Tally class_monotonicity(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [&](const FinSpace& x) -> std::optional<std::string> {
    for (const auto& [small, big] : ctx.nested) {
      if (!is_finer(coreflection(x, small), coreflection(x, big))) return small.name() + " vs " + big.name();
      if (is_c_generated(x, small) && !is_c_generated(x, big)) return "generation " + small.name();
      if (is_c_hausdorff(x, big) && !is_c_hausdorff(x, small)) return "Hausdorff " + big.name();
    }
    return std::nullopt;
  });
}

Tally contravariance(const Context& ctx) {
  Tally premise = single([] {
    return when(is_c_generated(FinSpace::indiscrete(2), TestClass::A()), "indiscrete pair is not A-generated");
  });
  Tally t = per_space(ctx, ctx.spaces, [](const FinSpace& x) {
    return when(!is_c_hausdorff(x, TestClass::A()) || is_c_hausdorff(x, TestClass::P()),
                "A-Hausdorff but not P-Hausdorff");
  });
  t.cases += premise.cases;
  t.violations += premise.violations;
  if (premise.first) t.first = premise.first;
  return t;
}

Tally characterization(const Context& ctx) {
  return per_space(ctx, ctx.spaces, [](const FinSpace& x) -> std::optional<std::string> {
    const TestClass p = TestClass::P();
    const TestClass a = TestClass::A();
    const TestClass s = TestClass::Sfin();
    if (is_c_hausdorff(x, p) != is_t0(x)) return "P-Hausdorff vs T0";
    if (is_c_hausdorff(x, a) != is_t1(x)) return "A-Hausdorff vs T1";
    if (is_c_hausdorff(x, s) != is_us(x)) return "Sfin-Hausdorff vs US";
    if (is_c_hausdorff(x, s) != is_ur(x)) return "Sfin-Hausdorff vs UR";
    if (is_c_hausdorff(x, s) != is_ucr(x)) return "Sfin-Hausdorff vs UCR";
    if (is_c_generated(x, p) != is_partition_topology(x)) return "P-generated vs partitioned";
    if (!is_c_generated(x, a) || !is_alexandrov(x)) return "A-generated vs Alexandrov";
    if (!is_c_generated(x, s) || !is_sequential_style(x, SequentialMode::Sequential)) return "Sfin-generated";
    if (!is_h_generated(x) || !is_k_generated(x, CompactVariant::K1) || !is_k_generated(x, CompactVariant::K2)) {
      return "H/k-generated";
    }
    return std::nullopt;
  });
}

Tally builtin_explicit_equivalence(const Context& ctx) {
  const TestClass p = TestClass::P();
  const TestClass a = TestClass::A();
  const TestClass ep = TestClass::explicit_class("explicit-P", {FinSpace::indiscrete(2)});
  const TestClass ea = TestClass::explicit_class("explicit-A", {FinSpace::sierpinski()});
  return per_space(ctx, ctx.spaces, [&](const FinSpace& x) -> std::optional<std::string> {
    if (coreflection(x, p) != coreflection(x, ep) || is_c_hausdorff(x, p) != is_c_hausdorff(x, ep)) return "P";
    if (coreflection(x, a) != coreflection(x, ea) || is_c_hausdorff(x, a) != is_c_hausdorff(x, ea)) return "A";
    return std::nullopt;
  });
}

Tally quotient_coproduct_stability(const Context& ctx) {
  const TestClass p = TestClass::P();
  std::vector<FinSpace> generated;
  for (const FinSpace& x : census_upto(ctx.spaces, 3)) {
    if (is_c_generated(x, p)) generated.push_back(x);
  }
  const std::size_t k = generated.size();
  return run_cases(k, ctx.options.threads, [&](std::size_t i) -> std::optional<std::string> {
    const FinSpace& x = generated[i];
    for (const auto& blocks : partitions(x.size())) {
      if (!is_c_generated(quotient(x, blocks).space, p)) return describe(x) + ": quotient";
    }
    for (const FinSpace& y : generated) {
      if (!is_c_generated(coproduct(x, y).space, p)) return describe(x) + ": coproduct with " + describe(y);
    }
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// deduction

Tally derive_idempotent_monotone(const Context& ctx) {
  return single([&]() -> std::optional<std::string> {
    const ClosedKnowledgeBase closed = derive(ctx.kb);
    const ClosedKnowledgeBase again = derive(closed.as_asserted());
    for (const ClosedRecord& r : closed.records()) {
      const ClosedRecord* s = again.find(r.name);
      if (!s || s->traits.size() != r.traits.size()) return "re-deriving changes " + r.name;
      for (const auto& [prop, trait] : r.traits) {
        if (s->value(prop) != trait.value) return "re-deriving changes " + r.name + " at " + prop;
      }
    }
    for (std::size_t i = 0; i < ctx.kb.spaces().size(); ++i) {
      const SpaceRecord& full = ctx.kb.spaces()[i];
      for (std::size_t drop = 0; drop < full.traits.size(); ++drop) {
        SpaceRecord fewer = full;
        fewer.traits.erase(fewer.traits.begin() + static_cast<std::ptrdiff_t>(drop));
        const ClosedKnowledgeBase part = derive(ctx.kb.with_spaces({fewer}));
        for (const auto& [prop, trait] : part.records()[0].traits) {
          if (closed.records()[i].value(prop) != trait.value) return "dropping a fact changes " + full.name;
        }
      }
    }
    return std::nullopt;
  });
}

Tally status_reflexive(const Context& ctx) {
  return single([&]() -> std::optional<std::string> {
    const ClosedKnowledgeBase closed = derive(ctx.kb);
    for (const Property& p : ctx.kb.properties()) {
      const ImplicationStatus st = status(closed, p.id, p.id);
      if (st.kind != ImplicationStatus::Kind::Implies || !st.chain.empty()) return p.id;
    }
    return std::nullopt;
  });
}

Tally witness_provenance(const Context& ctx) {
  return single([&]() -> std::optional<std::string> {
    const ClosedKnowledgeBase closed = derive(ctx.kb);
    for (const Property& p : ctx.kb.properties()) {
      for (const Property& q : ctx.kb.properties()) {
        const ImplicationStatus st = status(closed, p.id, q.id);
        if (st.kind != ImplicationStatus::Kind::NotImplies) continue;
        const std::string asserted = st.witness + ": ";
        for (const auto* chain : {&st.positive_chain, &st.negative_chain}) {
          if (chain->empty() || chain->front().rfind(asserted, 0) != 0) return p.id + " vs " + q.id;
        }
      }
    }
    return std::nullopt;
  });
}

Tally complete_no_contradiction(const Context& ctx) {
  return single([&]() -> std::optional<std::string> {
    try {
      const ClosedKnowledgeBase closed = derive(ctx.kb);
      const auto unknown = completeness_report(closed, diagram_properties());
      if (!unknown.empty()) return std::to_string(unknown.size()) + " unresolved pairs, first " +
                                   unknown.front().first + " vs " + unknown.front().second;
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::nullopt;
  });
}

Tally census_consistency(const Context& ctx) {
  const CensusConsistencyReport report = check_census_consistency(ctx.kb, ctx.options.max_points);
  Tally t;
  t.cases = report.spaces_checked;
  t.violations = report.contradictions.size();
  if (!report.ok()) t.first.emplace(0, report.contradictions.front());
  return t;
}

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> all{
      {"core.constructors-valid", constructors_valid},
      {"core.continuity-vs-monotone", continuity_vs_monotone},
      {"core.closure-laws", closure_laws},
      {"core.product-universal", product_universal},
      {"core.census-counts", census_counts},
      {"core.homeomorphism-classes", homeomorphism_class_counts},
      {"core.doubling-twin-symmetry", twin_symmetry},
      {"conv.limits-antitone", limits_antitone},
      {"conv.constant-converges", constant_converges},
      {"conv.unique-limit-collapse", unique_limit_collapse},
      {"conv.seq-discrete-collapse", seq_discrete_collapse},
      {"conv.mode-independence", mode_independence},
      {"conv.periodic-sequence-oracle", periodic_oracle},
      {"axioms.diagram-soundness", diagram_soundness},
      {"axioms.finite-collapse", finite_collapse},
      {"axioms.sh-implies-t1", sh_implies_t1},
      {"axioms.homeomorphism-invariance", homeomorphism_invariance},
      {"gen.coreflection-finer", coreflection_finer},
      {"gen.idempotence", coreflection_idempotent},
      {"gen.functoriality", functoriality},
      {"gen.class-monotonicity", class_monotonicity},
      {"gen.contravariance", contravariance},
      {"gen.characterization", characterization},
      {"gen.builtin-explicit-equivalence", builtin_explicit_equivalence},
      {"gen.quotient-coproduct-stability", quotient_coproduct_stability},
      {"kb.derive-idempotent-monotone", derive_idempotent_monotone},
      {"kb.status-reflexive", status_reflexive},
      {"kb.witness-provenance", witness_provenance},
      {"kb.complete-no-contradiction", complete_no_contradiction},
      {"kb.census-consistency", census_consistency},
  };
  return all;
}

// Random explicit classes drawn from the 1- and 2-point spaces, plus
// nested pairs C ⊆ D built by dropping members.
void seed_classes(Context& ctx) {
  ctx.classes = {TestClass::P(), TestClass::A(), TestClass::Sfin()};
  std::vector<FinSpace> pool;
  for (const FinSpace& s : ctx.spaces) {
    if (s.size() == 1 || s.size() == 2) pool.push_back(s);
  }
  if (pool.empty()) {
    pool = {FinSpace::discrete(1), FinSpace::indiscrete(2), FinSpace::sierpinski(), FinSpace::discrete(2)};
  }
  ctx.nested.emplace_back(TestClass::explicit_class("{P}", {FinSpace::indiscrete(2)}),
                          TestClass::explicit_class("{P,A}", {FinSpace::indiscrete(2), FinSpace::sierpinski()}));
  ctx.nested.emplace_back(TestClass::explicit_class("{A}", {FinSpace::sierpinski()}),
                          TestClass::explicit_class("{A,P}", {FinSpace::sierpinski(), FinSpace::indiscrete(2)}));
  std::mt19937_64 rng(ctx.options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 3; ++i) {
    std::vector<FinSpace> members{pool[pick(rng)], pool[pick(rng)], pool[pick(rng)]};
    const std::string name = "random" + std::to_string(i);
    ctx.classes.push_back(TestClass::explicit_class(name, {members[0], members[1]}));
    ctx.nested.emplace_back(TestClass::explicit_class(name + "-sub", {members[0]}),
                            TestClass::explicit_class(name + "-sup", members));
  }
}

}  // namespace

std::vector<std::string> verification_suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, suite] : suites()) names.push_back(name);
  return names;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options, const std::vector<std::string>& only) {
  for (const std::string& name : only) {
    const auto names = verification_suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw Error("unknown suite '" + name + "'");
  }
  Context ctx{options, options.kb ? *options.kb : paper_kb(), {}, {}, {}};
  ctx.spaces = census(options.max_points, std::max(options.max_points, kDefaultCensusBound));
  seed_classes(ctx);

  std::vector<SuiteResult> results;
  for (const auto& [name, suite] : suites()) {
    if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end()) continue;
    SuiteResult r{name, false, 0, 0, {}};
    try {
      const Tally t = suite(ctx);
      r.cases = t.cases;
      r.violations = t.violations;
      if (t.first) r.detail = t.first->second;
    } catch (const std::exception& e) {
      r.violations = std::max<std::size_t>(r.violations, 1);
      r.detail = std::string("exception: ") + e.what();
    }
    r.passed = r.violations == 0;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace topo
