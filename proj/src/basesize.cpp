#include "basecert/basesize.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "basecert/error.hpp"

namespace basecert {

namespace {

struct BfsNode {
  IdSet ids;
  int32_t parent = -1;   // index into the node arena
  ElemId conjugator = 0; // witness step that produced this node
};

}  // namespace

BaseCertificate base_size(const Subgroup& h, const SearchOptions& opts) {
  const Group& g = *h.ambient();
  Subgroup kernel = normal_core(h);

  BaseCertificate cert;
  cert.kernel_order = kernel.order();

  if (h.ids() == kernel.ids()) {
    cert.base = 1;
    cert.distinct_intersections = 1;
    cert.minimality_evidence =
        "H equals its own core, so the single intersection H suffices";
    return cert;
  }

  const std::vector<ConjugateSet> conjs = distinct_conjugates(h);
  const size_t nconj = conjs.size();

  std::vector<BfsNode> arena;
  arena.push_back(BfsNode{h.ids(), -1, 0});
  std::map<IdSet, size_t> seen;
  seen.emplace(h.ids(), 0);

  std::vector<size_t> level{0};
  std::atomic<uint64_t> steps{0};

  for (unsigned depth = 2;; ++depth) {
    // product phase: every (node, conjugate) pair of this level
    const size_t pairs = level.size() * nconj;
    std::vector<IdSet> results(pairs);
    std::atomic<bool> over_budget{false};
    auto compute = [&](size_t idx) {
      const IdSet& s = arena[level[idx / nconj]].ids;
      const IdSet& c = conjs[idx % nconj].ids;
      uint64_t cost = s.size() + c.size();
      if (steps.fetch_add(cost, std::memory_order_relaxed) + cost > opts.budget) {
        over_budget.store(true, std::memory_order_relaxed);
        return;
      }
      results[idx] = intersect_ids(s, c);
    };
    if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (long long i = 0; i < static_cast<long long>(pairs); ++i)
        compute(static_cast<size_t>(i));
    } else {
      for (size_t i = 0; i < pairs; ++i) compute(i);
    }
    if (over_budget.load())
      throw WorkBudgetExceeded("base-size search exceeded budget of " +
                               std::to_string(opts.budget) + " steps");

    // merge phase, canonical order: level position first, conjugate second
    std::vector<size_t> next;
    int64_t kernel_node = -1;
    for (size_t idx = 0; idx < pairs; ++idx) {
      IdSet& t = results[idx];
      if (seen.contains(t)) continue;
      BfsNode node;
      node.parent = static_cast<int32_t>(level[idx / nconj]);
      node.conjugator = conjs[idx % nconj].conjugator;
      node.ids = std::move(t);
      arena.push_back(std::move(node));
      seen.emplace(arena.back().ids, arena.size() - 1);
      next.push_back(arena.size() - 1);
      if (kernel_node < 0 && arena.back().ids == kernel.ids())
        kernel_node = static_cast<int64_t>(arena.size() - 1);
    }

    if (kernel_node >= 0) {
      cert.base = depth;
      for (int64_t at = kernel_node; arena[at].parent >= 0; at = arena[at].parent)
        cert.witnesses.push_back(arena[at].conjugator);
      std::reverse(cert.witnesses.begin(), cert.witnesses.end());
      cert.distinct_intersections = arena.size();
      std::ostringstream evidence;
      evidence << "breadth-first closure over " << nconj
               << " conjugates enumerated all " << (arena.size() - next.size())
               << " distinct intersection values at depths 1.." << (depth - 1)
               << " without reaching the kernel (order " << kernel.order()
               << "); it first appears at depth " << depth;
      cert.minimality_evidence = evidence.str();
      return cert;
    }

    if (next.empty())
      throw Error("intersection closure terminated without the kernel");
    level = std::move(next);
  }
}

bool verify_certificate(const Subgroup& h, const BaseCertificate& cert) {
  const Group& g = *h.ambient();
  if (cert.base < 1) return false;
  if (cert.witnesses.size() != static_cast<size_t>(cert.base) - 1) return false;
  for (ElemId w : cert.witnesses)
    if (w >= g.order()) return false;
  IdSet acc = h.ids();
  for (ElemId w : cert.witnesses)
    acc = intersect_ids(acc, conjugate_ids(g, h.ids(), w));
  Subgroup kernel = normal_core(h);
  if (cert.kernel_order != kernel.order()) return false;
  return acc == kernel.ids();
}

namespace {

// interned pointwise-stabilizer registry of the image group
struct StabRegistry {
  std::vector<IdSet> stabs;
  std::map<IdSet, uint32_t> intern;
  std::vector<std::vector<uint32_t>> children;  // [stab][point]
  std::vector<char> expanded;

  uint32_t add(IdSet ids) {
    auto it = intern.find(ids);
    if (it != intern.end()) return it->second;
    uint32_t sid = static_cast<uint32_t>(stabs.size());
    intern.emplace(ids, sid);
    stabs.push_back(std::move(ids));
    children.emplace_back();
    expanded.push_back(0);
    return sid;
  }
};

}  // namespace

BigInt regular_tuple_count(const CosetSpace& space, unsigned m,
                           const SearchOptions& opts) {
  if (m < 1) throw Error("tuple length must be at least 1");
  const Group& image = *space.image();
  const uint32_t npoints = space.point_count();

  StabRegistry reg;
  IdSet root(image.order());
  for (uint64_t i = 0; i < image.order(); ++i) root[i] = static_cast<ElemId>(i);
  uint32_t root_id = reg.add(std::move(root));

  std::atomic<uint64_t> steps{0};
  std::vector<uint32_t> frontier;
  if (reg.stabs[root_id].size() > 1) frontier.push_back(root_id);

  for (unsigned depth = 1; depth <= m && !frontier.empty(); ++depth) {
    // children of one stabilizer: filter by each point, independent work
    std::vector<std::vector<IdSet>> raw(frontier.size());
    std::atomic<bool> over_budget{false};
    auto expand = [&](size_t fi) {
      const IdSet& p = reg.stabs[frontier[fi]];
      uint64_t cost = static_cast<uint64_t>(p.size()) * npoints;
      if (steps.fetch_add(cost, std::memory_order_relaxed) + cost > opts.budget) {
        over_budget.store(true, std::memory_order_relaxed);
        return;
      }
      raw[fi].resize(npoints);
      for (uint32_t pt = 0; pt < npoints; ++pt) {
        IdSet fixed;
        for (ElemId e : p)
          if (image.element(e).apply(pt) == pt) fixed.push_back(e);
        raw[fi][pt] = std::move(fixed);
      }
    };
    if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
      for (long long i = 0; i < static_cast<long long>(frontier.size()); ++i)
        expand(static_cast<size_t>(i));
    } else {
      for (size_t i = 0; i < frontier.size(); ++i) expand(i);
    }
    if (over_budget.load())
      throw WorkBudgetExceeded("tuple search exceeded budget of " +
                               std::to_string(opts.budget) + " steps");

    // intern in canonical order
    std::vector<uint32_t> next;
    for (size_t fi = 0; fi < frontier.size(); ++fi) {
      reg.expanded[frontier[fi]] = 1;
      reg.children[frontier[fi]].resize(npoints);
      for (uint32_t pt = 0; pt < npoints; ++pt) {
        size_t before = reg.stabs.size();
        uint32_t sid = reg.add(std::move(raw[fi][pt]));
        reg.children[frontier[fi]][pt] = sid;
        if (reg.stabs.size() > before && reg.stabs[sid].size() > 1)
          next.push_back(sid);
      }
    }
    frontier = std::move(next);
  }

  // dynamic program over (stabilizer, remaining length)
  const BigInt omega = npoints;
  std::map<std::pair<uint32_t, unsigned>, BigInt> memo;
  auto count = [&](auto&& self, uint32_t sid, unsigned d) -> BigInt {
    if (reg.stabs[sid].size() == 1) return big_pow(omega, d);
    if (d == 0) return BigInt(0);
    auto key = std::make_pair(sid, d);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    for (uint32_t pt = 0; pt < npoints; ++pt)
      total += self(self, reg.children[sid][pt], d - 1);
    memo.emplace(key, total);
    return total;
  };
  return count(count, root_id, m);
}

BigInt regular_orbit_count(const CosetSpace& space, unsigned m,
                           const SearchOptions& opts) {
  BigInt tuples = regular_tuple_count(space, m, opts);
  BigInt image_order = space.image()->order();
  if (tuples % image_order != 0)
    throw Error("regular tuple count is not a multiple of the image order");
  return tuples / image_order;
}

BigInt regular_orbit_count(const Subgroup& h, unsigned m,
                           const SearchOptions& opts) {
  return regular_orbit_count(CosetSpace::build(h.ambient(), h, opts.exec), m,
                             opts);
}

Rational q_exact(const CosetSpace& space, unsigned c,
                 const SearchOptions& opts) {
  BigInt regular = regular_tuple_count(space, c, opts);
  BigInt total = big_pow(BigInt(space.point_count()), c);
  return Rational(total - regular, total);
}

Rational q_exact(const Subgroup& h, unsigned c, const SearchOptions& opts) {
  return q_exact(CosetSpace::build(h.ambient(), h, opts.exec), c, opts);
}

namespace {

BigInt reference_count(const Group& image, uint32_t npoints, const IdSet& p,
                       unsigned d, uint64_t& budget) {
  if (p.size() == 1) return big_pow(BigInt(npoints), d);
  if (d == 0) return BigInt(0);
  uint64_t cost = static_cast<uint64_t>(p.size()) * npoints;
  if (cost > budget)
    throw WorkBudgetExceeded("reference tuple recursion exceeded its budget");
  budget -= cost;
  BigInt total = 0;
  for (uint32_t pt = 0; pt < npoints; ++pt) {
    IdSet fixed;
    for (ElemId e : p)
      if (image.element(e).apply(pt) == pt) fixed.push_back(e);
    total += reference_count(image, npoints, fixed, d - 1, budget);
  }
  return total;
}

}  // namespace

BigInt regular_tuple_count_reference(const CosetSpace& space, unsigned m,
                                     uint64_t budget) {
  const Group& image = *space.image();
  IdSet root(image.order());
  for (uint64_t i = 0; i < image.order(); ++i) root[i] = static_cast<ElemId>(i);
  return reference_count(image, space.point_count(), root, m, budget);
}

}  // namespace basecert
