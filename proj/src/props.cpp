#include "basecert/props.hpp"

#include <map>
#include <set>
#include <sstream>

#include "basecert/classes.hpp"
#include "basecert/coset.hpp"
#include "basecert/primes.hpp"

namespace basecert {

namespace {

struct SuiteState {
  PropertySuiteReport report;

  void add(std::string property, std::string subject, bool passed, std::string detail) {
    report.all_passed = report.all_passed && passed;
    report.results.push_back(
        {std::move(property), std::move(subject), passed, std::move(detail)});
  }
};

std::string order_pair(uint64_t a, uint64_t b) {
  return std::to_string(a) + "/" + std::to_string(b);
}

// Distinct groups in first-appearance order, with the cases that use them.
struct GroupUse {
  GroupRef group;
  std::string label;
};

std::vector<GroupUse> distinct_groups(const std::vector<LoadedCase>& corpus) {
  std::vector<GroupUse> out;
  std::set<const Group*> seen;
  for (const auto& lc : corpus) {
    if (seen.insert(lc.group.get()).second) out.push_back({lc.group, lc.decl.group_file});
  }
  return out;
}

void check_hall_verification(SuiteState& state, const std::vector<LoadedCase>& corpus) {
  for (const auto& lc : corpus) {
    if (lc.decl.pi.empty()) continue;
    bool hall = is_hall(lc.subgroup, lc.decl.pi);
    bool solvable = is_solvable(lc.subgroup);
    std::ostringstream detail;
    detail << "pi = {" << lc.decl.pi.to_string() << "}, orders "
           << order_pair(lc.subgroup.order(), lc.group->order())
           << (hall ? ", Hall" : ", NOT Hall") << (solvable ? ", solvable" : ", NOT solvable");
    state.add("hall-verification", lc.decl.name, hall && solvable, detail.str());
  }
}

void check_hall_heredity(SuiteState& state, const std::vector<LoadedCase>& corpus) {
  for (const auto& lc : corpus) {
    if (lc.decl.pi.empty() || !is_hall(lc.subgroup, lc.decl.pi)) continue;
    std::map<IdSet, std::string> normals;
    normals.emplace(normal_core(lc.subgroup).ids(), "core(H)");
    for (uint64_t p : prime_divisors(lc.group->order())) {
      Subgroup op = normal_core(sylow_subgroup(lc.group, p));
      normals.emplace(op.ids(), "O_" + std::to_string(p) + "(G)");
    }
    normals.emplace(fitting_subgroup(lc.group).ids(), "F(G)");

    for (const auto& [ids, label] : normals) {
      Subgroup a = Subgroup::from_elements(lc.group, ids);
      Subgroup meet = subgroup_intersection(lc.subgroup, a);
      bool sub_side = hall_orders(meet.order(), a.order() / meet.order(), lc.decl.pi);
      uint64_t image_order = lc.subgroup.order() / meet.order();  // |HA/A|
      uint64_t quotient_order = lc.group->order() / a.order();
      bool quot_side = hall_orders(image_order, quotient_order / image_order, lc.decl.pi);
      std::ostringstream detail;
      detail << label << " of order " << a.order() << ": |H∩A| = " << meet.order()
             << ", |HA/A| = " << image_order;
      state.add("hall-heredity", lc.decl.name + " / " + label, sub_side && quot_side,
                detail.str());
    }
  }
}

// Abelian subgroups in canonical order: cyclic groups generated by the
// ascending element list first, then a few non-cyclic ones generated by
// commuting pairs.
std::vector<Subgroup> sample_abelian(const GroupRef& g, size_t cyclic_target) {
  std::vector<Subgroup> out;
  std::set<IdSet> seen;
  for (ElemId e = 1; e < g->order() && out.size() < cyclic_target; ++e) {
    Subgroup sub = Subgroup::generated_ids(g, {e});
    if (seen.insert(sub.ids()).second) out.push_back(std::move(sub));
  }
  auto is_cyclic = [&](const Subgroup& sub) {
    for (ElemId e : sub.ids())
      if (g->element_order(e) == sub.order()) return true;
    return false;
  };
  const ElemId scan_cap = static_cast<ElemId>(std::min<uint64_t>(g->order(), 200));
  size_t found = 0;
  for (ElemId a = 1; a < scan_cap && found < 3; ++a) {
    for (ElemId b = a + 1; b < scan_cap && found < 3; ++b) {
      if (g->multiply(a, b) != g->multiply(b, a)) continue;
      Subgroup sub = Subgroup::generated_ids(g, {a, b});
      if (is_cyclic(sub) || !seen.insert(sub.ids()).second) continue;
      out.push_back(std::move(sub));
      ++found;
    }
  }
  return out;
}

void check_abelian_fitting(SuiteState& state, const std::vector<GroupUse>& groups,
                           size_t cyclic_target) {
  for (const auto& gu : groups) {
    Subgroup fitting = fitting_subgroup(gu.group);
    std::vector<Subgroup> samples = sample_abelian(gu.group, cyclic_target);
    size_t witnessed = 0;
    std::string failure;
    for (const Subgroup& a : samples) {
      bool found = false;
      for (ElemId x = 0; x < gu.group->order(); ++x) {
        IdSet meet = intersect_ids(a.ids(), conjugate_ids(*gu.group, a.ids(), x));
        if (subset_ids(meet, fitting.ids())) {
          found = true;
          break;
        }
      }
      if (found) {
        ++witnessed;
      } else if (failure.empty()) {
        failure = "no witness for the subgroup generated by element " +
                  std::to_string(a.generator_ids().front());
      }
    }
    std::ostringstream detail;
    detail << samples.size() << " abelian subgroups sampled, " << witnessed << " witnessed";
    if (!failure.empty()) detail << "; " << failure;
    state.add("abelian-fitting", gu.label, witnessed == samples.size(), detail.str());
  }
}

void check_three_sylow(SuiteState& state, const std::vector<GroupUse>& groups) {
  for (const auto& gu : groups) {
    for (uint64_t p : prime_divisors(gu.group->order())) {
      Subgroup sylow = sylow_subgroup(gu.group, p);
      IdSet radical = normal_core(sylow).ids();
      std::vector<ConjugateSet> conjugates = distinct_conjugates(sylow);
      bool found = false;
      size_t found_i = 0, found_j = 0;
      for (size_t i = 0; i < conjugates.size() && !found; ++i) {
        IdSet pair_meet = intersect_ids(sylow.ids(), conjugates[i].ids);
        for (size_t j = i; j < conjugates.size(); ++j) {
          if (intersect_ids(pair_meet, conjugates[j].ids) == radical) {
            found = true;
            found_i = i;
            found_j = j;
            break;
          }
        }
      }
      std::ostringstream detail;
      detail << "p = " << p << ", " << conjugates.size() << " conjugates";
      if (found) detail << ", first triple at pair (" << found_i << ", " << found_j << ")";
      state.add("three-sylow", gu.label + " / p=" + std::to_string(p), found, detail.str());
    }
  }
}

void check_fpr_identity(SuiteState& state, const std::vector<LoadedCase>& corpus,
                        const std::map<const Group*, std::vector<ConjugacyClass>>& class_cache,
                        Exec exec) {
  for (const auto& lc : corpus) {
    CosetSpace space = CosetSpace::build(lc.group, lc.subgroup, exec);
    const auto& classes = class_cache.at(lc.group.get());
    bool all = true;
    for (const auto& cls : classes) {
      if (space.fpr(cls.representative) != fpr_via_class(lc.subgroup, cls.representative)) {
        all = false;
        break;
      }
    }
    state.add("fpr-identity", lc.decl.name, all,
              std::to_string(classes.size()) + " classes compared");
  }
}

void check_q_chain(SuiteState& state, const std::vector<LoadedCase>& corpus,
                   const PropertyOptions& opts) {
  for (const auto& lc : corpus) {
    SearchOptions sopts{opts.budget, opts.exec};
    PrimeOrderProfile profile = prime_order_profile(lc.group, lc.subgroup, opts.exec);
    unsigned base = base_size(lc.subgroup, sopts).base;
    CosetSpace space = CosetSpace::build(lc.group, lc.subgroup, opts.exec);
    bool ok = true;
    std::string violation;
    unsigned concluded = 0;
    for (unsigned c = 1; c <= 5 && ok; ++c) {
      Rational qe = q_exact(space, c, sopts);
      Rational qh = q_hat(profile, c);
      Rational majorant = class_sum_majorant(
          std::max<uint64_t>(profile.hall_hits_total, 1), profile.min_class_size, c);
      if (!(qe <= qh)) {
        ok = false;
        violation = "q_exact > q_hat at c = " + std::to_string(c);
      } else if (!(qh <= majorant)) {
        ok = false;
        violation = "q_hat above the pair majorant at c = " + std::to_string(c);
      } else if (qh < 1 && base > c) {
        ok = false;
        violation = "q_hat < 1 at c = " + std::to_string(c) + " but base = " +
                    std::to_string(base);
      }
      if (concluded == 0 && qh < 1) concluded = c;
    }
    std::ostringstream detail;
    detail << "c = 1..5 chain, base " << base;
    if (concluded > 0)
      detail << ", q_hat first concludes at c = " << concluded;
    else
      detail << ", q_hat never concludes";
    if (!ok) detail << "; " << violation;
    state.add("q-chain", lc.decl.name, ok, detail.str());
  }
}

void check_hall_mass(SuiteState& state, const std::vector<LoadedCase>& corpus,
                     Exec exec) {
  for (const auto& lc : corpus) {
    if (lc.subgroup.order() <= 1) continue;
    PrimeOrderProfile profile = prime_order_profile(lc.group, lc.subgroup, exec);
    bool ok = profile.hall_hits_total < lc.subgroup.order();
    state.add("hall-mass", lc.decl.name, ok,
              "A = " + std::to_string(profile.hall_hits_total) + " vs |H| = " +
                  std::to_string(lc.subgroup.order()));
  }
}

void check_base_reg(SuiteState& state, const std::vector<LoadedCase>& corpus,
                    const PropertyOptions& opts) {
  for (const auto& lc : corpus) {
    SearchOptions sopts{opts.budget, opts.exec};
    CosetSpace space = CosetSpace::build(lc.group, lc.subgroup, opts.exec);
    if (space.point_count() < 2) continue;
    unsigned base = base_size(lc.subgroup, sopts).base;
    if (base > 4) continue;
    BigInt reg5 = regular_orbit_count(space, 5, sopts);
    state.add("base4-reg5", lc.decl.name, reg5 >= 5,
              "base " + std::to_string(base) + ", " + reg5.str() + " regular 5-orbits");
  }
}

}  // namespace

PropertySuiteReport run_property_suite(const std::vector<LoadedCase>& corpus,
                                       const PropertyOptions& opts) {
  SuiteState state;
  std::vector<GroupUse> groups = distinct_groups(corpus);
  std::map<const Group*, std::vector<ConjugacyClass>> class_cache;
  for (const auto& gu : groups)
    class_cache.emplace(gu.group.get(), conjugacy_classes(gu.group, opts.exec));

  check_hall_verification(state, corpus);
  check_hall_heredity(state, corpus);
  check_abelian_fitting(state, groups, opts.abelian_samples);
  check_three_sylow(state, groups);
  check_fpr_identity(state, corpus, class_cache, opts.exec);
  check_q_chain(state, corpus, opts);
  check_hall_mass(state, corpus, opts.exec);
  check_base_reg(state, corpus, opts);
  return state.report;
}

}  // namespace basecert
