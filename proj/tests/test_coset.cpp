#include <doctest.h>

#include "basecert/coset.hpp"
#include "basecert/error.hpp"
#include "basecert/group_io.hpp"

using namespace basecert;

static const std::string kCorpus = BASECERT_CORPUS_DIR;

namespace {

GroupRef sym3() {
  return Group::generate(3, {Permutation::from_cycles(3, "(1 2)"),
                             Permutation::from_cycles(3, "(1 2 3)")});
}

}  // namespace

TEST_CASE("sym3 on cosets of a point stabilizer") {
  GroupRef g = sym3();
  Subgroup h = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  CosetSpace space = CosetSpace::build(g, h);

  CHECK(space.point_count() == 3);
  CHECK(space.kernel().is_trivial());
  CHECK(space.image()->order() == 6);
  CHECK(space.rep(0) == 0);

  CHECK(space.fix_count(Permutation::identity(3)) == 3);
  CHECK(space.fix_count(Permutation::from_cycles(3, "(1 2 3)")) == 0);
  CHECK(space.fix_count(Permutation::from_cycles(3, "(1 2)")) == 1);

  CHECK(space.fpr(Permutation::identity(3)) == Rational(1));
  CHECK(space.fpr(Permutation::from_cycles(3, "(1 2)")) == Rational(1, 3));
  CHECK(space.fpr(Permutation::from_cycles(3, "(1 2 3)")) == Rational(0));
}

TEST_CASE("whole group gives one point and full kernel") {
  GroupRef g = sym3();
  CosetSpace space = CosetSpace::build(g, Subgroup::whole(g));
  CHECK(space.point_count() == 1);
  CHECK(space.kernel().is_whole());
  CHECK(space.image()->order() == 1);
  CHECK(space.fpr(Permutation::from_cycles(3, "(1 2 3)")) == Rational(1));
}

TEST_CASE("line stabilizer space has seven points") {
  GroupFileData gd = read_group_file(kCorpus + "/sl32.grp");
  GroupRef g = Group::generate(gd.degree, std::move(gd.generators));
  GroupFileData hd = read_group_file(kCorpus + "/sl32_line.grp");
  Subgroup h = Subgroup::generated(g, hd.generators);
  CosetSpace space = CosetSpace::build(g, h);
  CHECK(space.point_count() == 7);
  CHECK(space.kernel().is_trivial());
  CHECK(space.image()->order() == 168);
}

TEST_CASE("action is a homomorphism with the core as kernel") {
  GroupFileData gd = read_group_file(kCorpus + "/sym4.grp");
  GroupRef g = Group::generate(gd.degree, std::move(gd.generators));
  GroupFileData hd = read_group_file(kCorpus + "/sym4_d8.grp");
  Subgroup h = Subgroup::generated(g, hd.generators);
  CosetSpace space = CosetSpace::build(g, h);
  CHECK(space.point_count() == 3);
  CHECK(space.kernel().order() == 4);  // V4 core inside Dih8
  CHECK(space.image()->order() == 6);

  for (ElemId a = 0; a < g->order(); ++a)
    for (ElemId b : g->generator_ids())
      CHECK(space.action(g->multiply(a, b)) == space.action(a) * space.action(b));

  for (ElemId a = 0; a < g->order(); ++a)
    CHECK((space.action(a).is_identity()) == space.kernel().contains(a));
}

TEST_CASE("transitivity: generators reach every point from point 0") {
  GroupFileData gd = read_group_file(kCorpus + "/sl33.grp");
  GroupRef g = Group::generate(gd.degree, std::move(gd.generators));
  GroupFileData hd = read_group_file(kCorpus + "/sl33_borel.grp");
  Subgroup h = Subgroup::generated(g, hd.generators);
  CosetSpace space = CosetSpace::build(g, h);
  CHECK(space.point_count() == 52);

  std::vector<char> seen(space.point_count(), 0);
  std::vector<uint32_t> work{0};
  seen[0] = 1;
  for (size_t i = 0; i < work.size(); ++i)
    for (ElemId gen : g->generator_ids()) {
      uint32_t next = space.action(gen).apply(work[i]);
      if (!seen[next]) {
        seen[next] = 1;
        work.push_back(next);
      }
    }
  CHECK(work.size() == space.point_count());
}

TEST_CASE("fix_count rejects foreign permutations") {
  GroupRef g = sym3();
  Subgroup h = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  CosetSpace space = CosetSpace::build(g, h);
  CHECK_THROWS_AS(space.fix_count(Permutation::identity(5)), ElementNotInAmbient);
}

TEST_CASE("fpr via class formula") {
  GroupRef g = sym3();
  Subgroup h = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  CHECK(fpr_via_class(h, Permutation::from_cycles(3, "(1 2)")) == Rational(1, 3));
  CHECK(fpr_via_class(h, Permutation::from_cycles(3, "(1 2 3)")) == Rational(0));

  // class formula agrees with the geometric ratio on a full pair
  CosetSpace space = CosetSpace::build(g, h);
  for (ElemId x = 0; x < g->order(); ++x)
    CHECK(space.fpr(x) == fpr_via_class(h, x));
}

TEST_CASE("class formula is representative independent") {
  GroupRef g = sym3();
  Subgroup h = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  IdSet cls = conjugacy_class_of(*g, g->index_of(Permutation::from_cycles(3, "(1 3)")));
  CHECK(cls.size() == 3);
  for (ElemId member : cls)
    CHECK(fpr_via_class(h, member) == Rational(1, 3));
}
