#include "basecert/group.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "basecert/error.hpp"

namespace basecert {

namespace {

std::vector<Permutation> closure_elements(Point degree,
                                          const std::vector<Permutation>& gens,
                                          uint64_t cap, Exec exec) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> frontier;
  {
    Permutation id = Permutation::identity(degree);
    seen.insert(id);
    frontier.push_back(std::move(id));
  }
  while (!frontier.empty()) {
    const size_t total = frontier.size() * gens.size();
    std::vector<Permutation> products(total);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (long long i = 0; i < static_cast<long long>(total); ++i)
        products[i] = frontier[i / gens.size()] * gens[i % gens.size()];
    } else {
      size_t i = 0;
      for (const Permutation& f : frontier)
        for (const Permutation& g : gens) products[i++] = f * g;
    }
    std::vector<Permutation> next;
    for (Permutation& p : products) {
      auto [it, inserted] = seen.insert(std::move(p));
      if (!inserted) continue;
      if (seen.size() > cap)
        throw CapExceeded("element closure exceeds cap " + std::to_string(cap));
      next.push_back(*it);
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

uint64_t p_part_of(uint64_t n, uint64_t p) {
  uint64_t part = 1;
  while (n % p == 0) {
    part *= p;
    n /= p;
  }
  return part;
}

ElemId elem_pow(const Group& g, ElemId base, uint64_t exp) {
  ElemId result = 0;  // identity
  ElemId b = base;
  while (exp != 0) {
    if (exp & 1u) result = g.multiply(result, b);
    b = g.multiply(b, b);
    exp >>= 1u;
  }
  return result;
}

}  // namespace

GroupRef Group::generate(Point degree, std::vector<Permutation> generators,
                         uint64_t cap, Exec exec) {
  if (degree == 0) throw BadPermutation("degree must be positive");
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw BadPermutation("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " +
                           std::to_string(degree));
  auto group = std::shared_ptr<Group>(new Group());
  group->degree_ = degree;
  group->elements_ = closure_elements(degree, generators, cap, exec);
  group->gens_ = std::move(generators);
  group->build_tables(exec);
  return group;
}

GroupRef Group::adopt(Point degree, std::vector<Permutation> elements,
                      std::vector<Permutation> generators) {
  auto group = std::shared_ptr<Group>(new Group());
  group->degree_ = degree;
  group->elements_ = std::move(elements);
  group->gens_ = std::move(generators);
  if (!std::is_sorted(group->elements_.begin(), group->elements_.end()))
    throw Error("adopted element table is not sorted");
  if (group->elements_.empty() || !group->elements_[0].is_identity())
    throw Error("adopted element table lacks the identity");
  group->build_tables(Exec::parallel);
  return group;
}

void Group::build_tables(Exec exec) {
  const long long n = static_cast<long long>(elements_.size());
  inverses_.resize(n);
  orders_.resize(n);
  auto fill = [&](long long i) {
    const Permutation& p = elements_[i];
    Permutation inv = p.inverse();
    auto it = std::lower_bound(elements_.begin(), elements_.end(), inv);
    inverses_[i] = static_cast<ElemId>(it - elements_.begin());
    orders_[i] = p.order();
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) fill(i);
  } else {
    for (long long i = 0; i < n; ++i) fill(i);
  }
  gen_ids_.clear();
  for (const Permutation& g : gens_) gen_ids_.push_back(index_of(g));
}

std::optional<ElemId> Group::find(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<ElemId>(it - elements_.begin());
}

ElemId Group::index_of(const Permutation& p) const {
  auto id = find(p);
  if (!id)
    throw ElementNotInAmbient("permutation " + p.to_cycles() +
                              " is not in the group");
  return *id;
}

ElemId Group::multiply(ElemId a, ElemId b) const {
  return index_of(elements_[a] * elements_[b]);
}

ElemId Group::conjugate_elem(ElemId x, ElemId g) const {
  return multiply(multiply(inverses_[g], x), g);
}

// ---- Subgroup ----

Subgroup Subgroup::from_elements(GroupRef ambient, IdSet ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty() || ids[0] != 0)
    throw NotSubgroup("element set lacks the identity");
  for (ElemId id : ids)
    if (id >= ambient->order())
      throw ElementNotInAmbient("id " + std::to_string(id) + " out of range");
  std::vector<char> member(ambient->order(), 0);
  for (ElemId id : ids) member[id] = 1;

  // greedy generator extraction doubles as a closure check
  IdSet gens;
  IdSet closed{0};
  std::vector<char> inclosed(ambient->order(), 0);
  inclosed[0] = 1;
  for (ElemId id : ids) {
    if (inclosed[id]) continue;
    gens.push_back(id);
    closed = closure_ids(*ambient, gens);
    for (ElemId e : closed) {
      if (!member[e])
        throw NotSubgroup("element set is not closed under composition");
      inclosed[e] = 1;
    }
  }
  Subgroup h;
  h.ambient_ = std::move(ambient);
  h.ids_ = std::move(ids);
  h.gen_ids_ = std::move(gens);
  return h;
}

Subgroup Subgroup::generated_ids(GroupRef ambient, IdSet gen_ids) {
  IdSet ids = closure_ids(*ambient, gen_ids);
  std::sort(gen_ids.begin(), gen_ids.end());
  gen_ids.erase(std::unique(gen_ids.begin(), gen_ids.end()), gen_ids.end());
  if (!gen_ids.empty() && gen_ids[0] == 0) gen_ids.erase(gen_ids.begin());
  Subgroup h;
  h.ambient_ = std::move(ambient);
  h.ids_ = std::move(ids);
  h.gen_ids_ = std::move(gen_ids);
  return h;
}

Subgroup Subgroup::generated(GroupRef ambient,
                             const std::vector<Permutation>& gens) {
  IdSet gen_ids;
  for (const Permutation& g : gens) {
    if (g.degree() != ambient->degree())
      throw BadPermutation("generator degree " + std::to_string(g.degree()) +
                           " does not match ambient degree " +
                           std::to_string(ambient->degree()));
    auto id = ambient->find(g);
    if (!id)
      throw NotSubgroup("declared generator " + g.to_cycles() +
                        " lies outside the ambient group");
    gen_ids.push_back(*id);
  }
  return generated_ids(std::move(ambient), std::move(gen_ids));
}

Subgroup Subgroup::whole(GroupRef ambient) {
  Subgroup h;
  h.ids_.resize(ambient->order());
  for (uint64_t i = 0; i < ambient->order(); ++i)
    h.ids_[i] = static_cast<ElemId>(i);
  h.gen_ids_ = ambient->generator_ids();
  h.ambient_ = std::move(ambient);
  return h;
}

Subgroup Subgroup::trivial(GroupRef ambient) {
  Subgroup h;
  h.ambient_ = std::move(ambient);
  h.ids_ = {0};
  return h;
}

std::vector<Permutation> Subgroup::generator_perms() const {
  std::vector<Permutation> out;
  for (ElemId id : gen_ids_) out.push_back(ambient_->element(id));
  return out;
}

bool Subgroup::contains(ElemId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

// ---- id-set kernels ----

IdSet intersect_ids(const IdSet& a, const IdSet& b) {
  IdSet out;
  out.reserve(std::min(a.size(), b.size()));
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

IdSet conjugate_ids(const Group& g, const IdSet& ids, ElemId conjugator) {
  IdSet out(ids.size());
  for (size_t i = 0; i < ids.size(); ++i)
    out[i] = g.conjugate_elem(ids[i], conjugator);
  std::sort(out.begin(), out.end());
  return out;
}

IdSet closure_ids(const Group& g, IdSet seed_ids) {
  std::sort(seed_ids.begin(), seed_ids.end());
  seed_ids.erase(std::unique(seed_ids.begin(), seed_ids.end()),
                 seed_ids.end());
  std::vector<char> mark(g.order(), 0);
  IdSet work{0};
  mark[0] = 1;
  for (size_t i = 0; i < work.size(); ++i) {
    for (ElemId s : seed_ids) {
      ElemId y = g.multiply(work[i], s);
      if (!mark[y]) {
        mark[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

bool subset_ids(const IdSet& a, const IdSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---- subgroup operations ----

namespace {

void require_same_ambient(const Subgroup& a, const Subgroup& b) {
  if (a.ambient().get() != b.ambient().get())
    throw AmbientMismatch("subgroup handles have different ambient groups");
}

// ids form a subgroup by construction here; from_elements re-verifies,
// which keeps every public handle honest at desk-scale cost
Subgroup wrap_ids(const GroupRef& ambient, IdSet ids) {
  return Subgroup::from_elements(ambient, std::move(ids));
}

}  // namespace

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  return wrap_ids(a.ambient(), intersect_ids(a.ids(), b.ids()));
}

Subgroup conjugate_subgroup(const Subgroup& h, ElemId g) {
  if (g >= h.ambient()->order())
    throw ElementNotInAmbient("conjugator id out of range");
  return wrap_ids(h.ambient(), conjugate_ids(*h.ambient(), h.ids(), g));
}

Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g) {
  return conjugate_subgroup(h, h.ambient()->index_of(g));
}

std::vector<ElemId> right_transversal(const Subgroup& h) {
  const Group& g = *h.ambient();
  std::vector<char> assigned(g.order(), 0);
  std::vector<ElemId> reps;
  for (uint64_t id = 0; id < g.order(); ++id) {
    if (assigned[id]) continue;
    reps.push_back(static_cast<ElemId>(id));
    for (ElemId x : h.ids()) assigned[g.multiply(x, static_cast<ElemId>(id))] = 1;
  }
  return reps;
}

Subgroup normal_core(const Subgroup& h) {
  const Group& g = *h.ambient();
  IdSet core = h.ids();
  for (ElemId rep : right_transversal(h)) {
    if (rep == 0) continue;
    core = intersect_ids(core, conjugate_ids(g, h.ids(), rep));
    if (core.size() == 1) break;
  }
  return wrap_ids(h.ambient(), std::move(core));
}

Subgroup normalizer(const Subgroup& h) {
  const Group& g = *h.ambient();
  IdSet norm;
  for (uint64_t id = 0; id < g.order(); ++id) {
    bool ok = true;
    for (ElemId hg : h.generator_ids())
      if (!h.contains(g.conjugate_elem(hg, static_cast<ElemId>(id)))) {
        ok = false;
        break;
      }
    if (ok) norm.push_back(static_cast<ElemId>(id));
  }
  return wrap_ids(h.ambient(), std::move(norm));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const Group& g = *h.ambient();
  const IdSet& hgens = h.generator_ids();
  IdSet seeds;
  for (ElemId a : hgens)
    for (ElemId b : hgens) {
      // [a,b] = a^-1 b^-1 a b
      ElemId c = g.multiply(g.multiply(g.multiply(g.inverse_of(a), g.inverse_of(b)), a), b);
      if (c != 0) seeds.push_back(c);
    }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  // normal closure of the commutators inside H
  IdSet closure = closure_ids(g, seeds);
  for (;;) {
    IdSet fresh;
    for (ElemId hg : hgens)
      for (ElemId s : seeds) {
        ElemId c = g.conjugate_elem(s, hg);
        if (!std::binary_search(closure.begin(), closure.end(), c))
          fresh.push_back(c);
      }
    if (fresh.empty()) break;
    for (ElemId f : fresh) seeds.push_back(f);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    closure = closure_ids(g, seeds);
  }
  return wrap_ids(h.ambient(), std::move(closure));
}

bool is_normal(const Subgroup& h) {
  const Group& g = *h.ambient();
  for (ElemId gg : g.generator_ids())
    for (ElemId hg : h.generator_ids())
      if (!h.contains(g.conjugate_elem(hg, gg))) return false;
  return true;
}

bool is_abelian(const Subgroup& h) {
  const Group& g = *h.ambient();
  const IdSet& gens = h.generator_ids();
  for (ElemId a : gens)
    for (ElemId b : gens)
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
  return true;
}

bool is_solvable(const Subgroup& h) {
  Subgroup current = h;
  for (;;) {
    if (current.is_trivial()) return true;
    Subgroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
}

bool hall_orders(uint64_t order, uint64_t index, const PrimeSet& pi) {
  for (uint64_t p : prime_divisors(order))
    if (!pi.contains(p)) return false;
  for (uint64_t p : prime_divisors(index))
    if (pi.contains(p)) return false;
  return true;
}

bool is_hall(const Subgroup& h, const PrimeSet& pi) {
  return hall_orders(h.order(), h.index(), pi);
}

Subgroup sylow_subgroup(const GroupRef& gref, uint64_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  const Group& g = *gref;
  const uint64_t p_part = p_part_of(g.order(), p);
  if (p_part == 1) return Subgroup::trivial(gref);

  // seed with a cyclic p-subgroup of maximal order (least id wins ties)
  ElemId best = 0;
  uint64_t best_pow = 1;
  for (uint64_t id = 0; id < g.order(); ++id) {
    uint64_t pk = p_part_of(g.element_order(static_cast<ElemId>(id)), p);
    if (pk > best_pow) {
      best_pow = pk;
      best = static_cast<ElemId>(id);
    }
  }
  ElemId seed = elem_pow(g, best, g.element_order(best) / best_pow);
  Subgroup sylow = Subgroup::generated_ids(gref, {seed});

  while (sylow.order() < p_part) {
    Subgroup norm = normalizer(sylow);
    bool extended = false;
    for (ElemId y : norm.ids()) {
      if (sylow.contains(y)) continue;
      uint64_t o = g.element_order(y);
      uint64_t opk = p_part_of(o, p);
      if (opk == 1) continue;
      ElemId yp = elem_pow(g, y, o / opk);
      if (yp == 0 || sylow.contains(yp)) continue;
      IdSet gens = sylow.generator_ids();
      gens.push_back(yp);
      Subgroup bigger = Subgroup::generated_ids(gref, std::move(gens));
      if (bigger.order() > sylow.order()) {
        sylow = std::move(bigger);
        extended = true;
        break;
      }
    }
    if (!extended)
      throw Error("sylow extension stalled below the full p-part");
  }
  return sylow;
}

Subgroup fitting_subgroup(const GroupRef& gref) {
  IdSet gens;
  for (uint64_t p : prime_divisors(gref->order())) {
    Subgroup op = normal_core(sylow_subgroup(gref, p));
    for (ElemId id : op.ids())
      if (id != 0) gens.push_back(id);
  }
  return Subgroup::generated_ids(gref, std::move(gens));
}

Subgroup o_pi(const Subgroup& h, const PrimeSet& pi) {
  if (!is_hall(h, pi))
    throw NotHall("subgroup of order " + std::to_string(h.order()) +
                  " and index " + std::to_string(h.index()) +
                  " is not a {" + pi.to_string() + "}-Hall subgroup");
  return normal_core(h);
}

std::vector<ConjugateSet> distinct_conjugates(const Subgroup& h) {
  const Group& g = *h.ambient();
  std::map<IdSet, ElemId> seen;
  for (ElemId rep : right_transversal(h)) {
    IdSet conj = conjugate_ids(g, h.ids(), rep);
    seen.emplace(std::move(conj), rep);  // first (least) transversal rep wins
  }
  std::vector<ConjugateSet> out;
  out.reserve(seen.size());
  for (auto& [ids, conjugator] : seen)
    out.push_back(ConjugateSet{ids, conjugator});
  return out;
}

}  // namespace basecert
