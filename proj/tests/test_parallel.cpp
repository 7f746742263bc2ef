#include <doctest.h>

#include <map>
#include <vector>

#include "basecert/basesize.hpp"
#include "basecert/classes.hpp"
#include "basecert/group_io.hpp"

using namespace basecert;

namespace {

const std::vector<LoadedCase>& corpus(Exec exec) {
  static const std::vector<LoadedCase> serial =
      load_corpus(BASECERT_CORPUS_DIR, kDefaultElementCap, Exec::serial);
  static const std::vector<LoadedCase> parallel =
      load_corpus(BASECERT_CORPUS_DIR, kDefaultElementCap, Exec::parallel);
  return exec == Exec::serial ? serial : parallel;
}

std::vector<const Group*> distinct_groups(const std::vector<LoadedCase>& cases) {
  std::vector<const Group*> out;
  for (const LoadedCase& lc : cases) {
    if (out.empty() || out.back() != lc.group.get()) out.push_back(lc.group.get());
  }
  return out;
}

}  // namespace

TEST_CASE("group enumeration agrees between execution modes corpus-wide") {
  const auto& ser = corpus(Exec::serial);
  const auto& par = corpus(Exec::parallel);
  REQUIRE(ser.size() == par.size());
  for (size_t i = 0; i < ser.size(); ++i) {
    CAPTURE(ser[i].decl.name);
    REQUIRE(ser[i].decl.name == par[i].decl.name);
    CHECK(ser[i].group->elements() == par[i].group->elements());
    CHECK(ser[i].group->generator_ids() == par[i].group->generator_ids());
    CHECK(ser[i].subgroup.ids() == par[i].subgroup.ids());
  }
}

TEST_CASE("conjugacy class partitions agree between execution modes") {
  const auto& ser = corpus(Exec::serial);
  const auto& par = corpus(Exec::parallel);
  std::vector<const Group*> sg = distinct_groups(ser);
  std::vector<const Group*> pg = distinct_groups(par);
  REQUIRE(sg.size() == pg.size());
  for (size_t i = 0; i < sg.size(); ++i) {
    auto a = conjugacy_classes(sg[i]->shared_from_this(), Exec::serial);
    auto b = conjugacy_classes(pg[i]->shared_from_this(), Exec::parallel);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].representative == b[k].representative);
      CHECK(a[k].size == b[k].size);
      CHECK(a[k].element_order == b[k].element_order);
      CHECK(a[k].members == b[k].members);
    }
  }
}

TEST_CASE("coset actions, base certificates, and tuple counts agree") {
  const auto& ser = corpus(Exec::serial);
  const auto& par = corpus(Exec::parallel);
  SearchOptions sopts{kDefaultWorkBudget, Exec::serial};
  SearchOptions popts{kDefaultWorkBudget, Exec::parallel};
  for (size_t i = 0; i < ser.size(); ++i) {
    CAPTURE(ser[i].decl.name);
    CosetSpace a = CosetSpace::build(ser[i].group, ser[i].subgroup, Exec::serial);
    CosetSpace b = CosetSpace::build(par[i].group, par[i].subgroup, Exec::parallel);
    REQUIRE(a.point_count() == b.point_count());
    CHECK(a.kernel().ids() == b.kernel().ids());
    CHECK(a.image()->order() == b.image()->order());
    bool actions_equal = true;
    for (ElemId id = 0; id < ser[i].group->order(); ++id) {
      if (a.action(id) != b.action(id)) actions_equal = false;
    }
    CHECK(actions_equal);

    CHECK(base_size(ser[i].subgroup, sopts) == base_size(par[i].subgroup, popts));
    for (unsigned m = 1; m <= 3; ++m) {
      CHECK(regular_tuple_count(a, m, sopts) == regular_tuple_count(b, m, popts));
    }
    CHECK(q_exact(a, 4, sopts) == q_exact(b, 4, popts));
  }
}

TEST_CASE("the unmemoized reference counter confirms both execution modes") {
  const auto& par = corpus(Exec::parallel);
  SearchOptions sopts{kDefaultWorkBudget, Exec::serial};
  SearchOptions popts{kDefaultWorkBudget, Exec::parallel};
  size_t covered = 0;
  for (const LoadedCase& lc : par) {
    CosetSpace space = CosetSpace::build(lc.group, lc.subgroup, Exec::parallel);
    if (space.point_count() > 10) continue;
    ++covered;
    CAPTURE(lc.decl.name);
    for (unsigned m = 1; m <= 3; ++m) {
      BigInt expected = regular_tuple_count_reference(space, m);
      CHECK(regular_tuple_count(space, m, sopts) == expected);
      CHECK(regular_tuple_count(space, m, popts) == expected);
    }
  }
  CHECK(covered >= 8);
}
