#include "basecert/classes.hpp"

#include <algorithm>

#include "basecert/error.hpp"

namespace basecert {

std::vector<ConjugacyClass> conjugacy_classes(const GroupRef& gref, Exec exec) {
  const Group& g = *gref;
  const uint64_t n = g.order();
  const IdSet& gens = g.generator_ids();
  const size_t ngens = gens.size();

  // conjugation edges e -> e^gen, computed in bulk
  std::vector<ElemId> edges(n * ngens);
  auto fill = [&](uint64_t e) {
    for (size_t k = 0; k < ngens; ++k)
      edges[e * ngens + k] = g.conjugate_elem(static_cast<ElemId>(e), gens[k]);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long e = 0; e < static_cast<long long>(n); ++e)
      fill(static_cast<uint64_t>(e));
  } else {
    for (uint64_t e = 0; e < n; ++e) fill(e);
  }

  // serial union phase: BFS from ascending ids gives least-rep classes
  std::vector<char> assigned(n, 0);
  std::vector<ConjugacyClass> classes;
  for (uint64_t start = 0; start < n; ++start) {
    if (assigned[start]) continue;
    ConjugacyClass cls;
    cls.representative = static_cast<ElemId>(start);
    cls.element_order = g.element_order(static_cast<ElemId>(start));
    IdSet work{static_cast<ElemId>(start)};
    assigned[start] = 1;
    for (size_t i = 0; i < work.size(); ++i)
      for (size_t k = 0; k < ngens; ++k) {
        ElemId y = edges[static_cast<uint64_t>(work[i]) * ngens + k];
        if (!assigned[y]) {
          assigned[y] = 1;
          work.push_back(y);
        }
      }
    std::sort(work.begin(), work.end());
    cls.size = work.size();
    cls.members = std::move(work);
    classes.push_back(std::move(cls));
  }
  return classes;
}

PrimeOrderProfile prime_order_profile(const GroupRef& gref, const Subgroup& h,
                                      Exec exec) {
  if (h.ambient().get() != gref.get())
    throw AmbientMismatch("subgroup handle does not belong to the group");
  std::vector<char> in_h(gref->order(), 0);
  for (ElemId id : h.ids()) in_h[id] = 1;

  PrimeOrderProfile profile;
  profile.min_class_size = 0;
  for (ConjugacyClass& cls : conjugacy_classes(gref, exec)) {
    if (!is_prime(cls.element_order)) continue;
    uint64_t hits = 0;
    for (ElemId member : cls.members) hits += in_h[member];
    ProfiledClass pc;
    pc.hall_hits = hits;
    pc.fpr = Rational(hits, cls.size);
    if (profile.min_class_size == 0 || cls.size < profile.min_class_size)
      profile.min_class_size = cls.size;
    profile.hall_hits_total += hits;
    pc.cls = std::move(cls);
    profile.classes.push_back(std::move(pc));
  }
  if (profile.min_class_size == 0) profile.min_class_size = 1;  // no classes
  return profile;
}

namespace {

Rational rational_pow(const Rational& r, unsigned c) {
  return Rational(big_pow(boost::multiprecision::numerator(r), c),
                  big_pow(boost::multiprecision::denominator(r), c));
}

}  // namespace

Rational q_hat(const PrimeOrderProfile& profile, unsigned c) {
  if (c < 1) throw Error("q_hat needs c >= 1");
  Rational sum = 0;
  for (const ProfiledClass& pc : profile.classes)
    sum += Rational(pc.cls.size) * rational_pow(pc.fpr, c);
  return sum;
}

Rational q_hat(const GroupRef& g, const Subgroup& h, unsigned c, Exec exec) {
  return q_hat(prime_order_profile(g, h, exec), c);
}

Rational class_sum_majorant(uint64_t a, uint64_t b, unsigned c) {
  if (a < 1 || b < 1) throw Error("majorant needs a >= 1 and b >= 1");
  if (c < 1) throw Error("majorant needs c >= 1");
  return Rational(big_pow(BigInt(a), c), big_pow(BigInt(b), c - 1));
}

std::optional<unsigned> conclude_base_bound(const GroupRef& g,
                                            const Subgroup& h, unsigned c,
                                            Exec exec) {
  if (q_hat(g, h, c, exec) < 1) return c;
  return std::nullopt;
}

}  // namespace basecert
