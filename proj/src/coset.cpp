#include "basecert/coset.hpp"

#include <algorithm>

#include "basecert/error.hpp"

namespace basecert {

CosetSpace CosetSpace::build(GroupRef g, const Subgroup& h, Exec exec) {
  if (h.ambient().get() != g.get())
    throw AmbientMismatch("subgroup handle does not belong to the group");
  CosetSpace space;
  space.ambient_ = g;
  space.stabilizer_ = h;
  space.kernel_ = normal_core(h);

  const uint64_t n = g->order();
  space.coset_of_.assign(n, UINT32_MAX);
  for (uint64_t id = 0; id < n; ++id) {
    if (space.coset_of_[id] != UINT32_MAX) continue;
    // ids ascend, so each new coset is named by its least element
    const uint32_t point = static_cast<uint32_t>(space.reps_.size());
    space.reps_.push_back(static_cast<ElemId>(id));
    for (ElemId x : h.ids())
      space.coset_of_[g->multiply(x, static_cast<ElemId>(id))] = point;
  }

  const uint32_t npoints = space.point_count();
  space.action_.resize(n);
  auto fill_action = [&](uint64_t id) {
    std::vector<Point> images(npoints);
    for (uint32_t pt = 0; pt < npoints; ++pt)
      images[pt] = space.coset_of_[g->multiply(space.reps_[pt], static_cast<ElemId>(id))];
    space.action_[id] = Permutation(std::move(images));
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long id = 0; id < static_cast<long long>(n); ++id)
      fill_action(static_cast<uint64_t>(id));
  } else {
    for (uint64_t id = 0; id < n; ++id) fill_action(id);
  }

  std::vector<Permutation> image_elems(space.action_);
  std::sort(image_elems.begin(), image_elems.end());
  image_elems.erase(std::unique(image_elems.begin(), image_elems.end()),
                    image_elems.end());
  std::vector<Permutation> image_gens;
  for (ElemId gen : g->generator_ids()) image_gens.push_back(space.action_[gen]);
  space.image_ = Group::adopt(npoints, std::move(image_elems), std::move(image_gens));

  if (space.image_->order() * space.kernel_.order() != n)
    throw Error("coset action image order disagrees with the kernel index");

  space.image_of_.resize(n);
  auto fill_image_of = [&](uint64_t id) {
    space.image_of_[id] = space.image_->index_of(space.action_[id]);
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long id = 0; id < static_cast<long long>(n); ++id)
      fill_image_of(static_cast<uint64_t>(id));
  } else {
    for (uint64_t id = 0; id < n; ++id) fill_image_of(id);
  }
  return space;
}

uint32_t CosetSpace::fix_count(const Permutation& x) const {
  return fix_count(ambient_->index_of(x));
}

Rational CosetSpace::fpr(ElemId id) const {
  return Rational(fix_count(id), point_count());
}

Rational CosetSpace::fpr(const Permutation& x) const {
  return fpr(ambient_->index_of(x));
}

IdSet conjugacy_class_of(const Group& g, ElemId x) {
  std::vector<char> mark(g.order(), 0);
  IdSet work{x};
  mark[x] = 1;
  for (size_t i = 0; i < work.size(); ++i) {
    for (ElemId gen : g.generator_ids()) {
      ElemId y = g.conjugate_elem(work[i], gen);
      if (!mark[y]) {
        mark[y] = 1;
        work.push_back(y);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

Rational fpr_via_class(const Subgroup& h, ElemId x) {
  const Group& g = *h.ambient();
  IdSet cls = conjugacy_class_of(g, x);
  uint64_t hits = 0;
  for (ElemId member : cls)
    if (h.contains(member)) ++hits;
  return Rational(hits, cls.size());
}

Rational fpr_via_class(const Subgroup& h, const Permutation& x) {
  return fpr_via_class(h, h.ambient()->index_of(x));
}

}  // namespace basecert
