#include <doctest.h>

#include <algorithm>

#include "basecert/error.hpp"
#include "basecert/group.hpp"

using namespace basecert;

namespace {

GroupRef sym3() {
  return Group::generate(3, {Permutation::from_cycles(3, "(1 2)"),
                             Permutation::from_cycles(3, "(1 2 3)")});
}

GroupRef sym4() {
  return Group::generate(4, {Permutation::from_cycles(4, "(1 2)"),
                             Permutation::from_cycles(4, "(1 2 3 4)")});
}

GroupRef sl32() {
  return Group::generate(7, {Permutation::from_cycles(7, "(1 2 3 4 5 6 7)"),
                             Permutation::from_cycles(7, "(2 3)(4 7)")});
}

GroupRef dih8() {
  return Group::generate(4, {Permutation::from_cycles(4, "(1 2 3 4)"),
                             Permutation::from_cycles(4, "(1 3)")});
}

}  // namespace

TEST_CASE("element enumeration with exact orders") {
  CHECK(sym3()->order() == 6);
  CHECK(sym4()->order() == 24);
  CHECK(sl32()->order() == 168);
  CHECK(dih8()->order() == 8);
  CHECK(Group::generate(4, {})->order() == 1);
}

TEST_CASE("identity gets id zero and tables are consistent") {
  GroupRef g = sl32();
  CHECK(g->element(0).is_identity());
  for (ElemId id = 0; id < g->order(); ++id) {
    CHECK(g->multiply(id, g->inverse_of(id)) == 0);
    CHECK(g->element_order(id) == g->element(id).order());
  }
  CHECK(std::is_sorted(g->elements().begin(), g->elements().end()));
}

TEST_CASE("closure cap is enforced") {
  CHECK_THROWS_AS(Group::generate(7, {Permutation::from_cycles(7, "(1 2 3 4 5 6 7)"),
                                      Permutation::from_cycles(7, "(2 3)(4 7)")},
                                  100),
                  CapExceeded);
}

TEST_CASE("generator degree mismatch is rejected") {
  CHECK_THROWS_AS(Group::generate(3, {Permutation::from_cycles(4, "(1 2)(3 4)")}),
                  BadPermutation);
}

TEST_CASE("subgroup construction paths agree") {
  GroupRef g = sym3();
  Subgroup a = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  CHECK(a.order() == 2);
  Subgroup b = Subgroup::from_elements(g, a.ids());
  CHECK(a == b);
  CHECK(Subgroup::whole(g).order() == 6);
  CHECK(Subgroup::trivial(g).order() == 1);

  IdSet not_closed = {0, a.ids()[1],
                      Subgroup::generated(g, {Permutation::from_cycles(3, "(1 3)")}).ids()[1]};
  CHECK_THROWS_AS(Subgroup::from_elements(g, not_closed), NotSubgroup);
  CHECK_THROWS_AS(Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2 3)"),
                                          Permutation::identity(4)}),
                  BadPermutation);
  CHECK_THROWS_AS(Subgroup::generated(dih8(), {Permutation::from_cycles(4, "(1 2)")}),
                  NotSubgroup);
}

TEST_CASE("intersection matches set intersection") {
  GroupRef g = sym3();
  Subgroup a = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  Subgroup b = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 3)")});
  CHECK(subgroup_intersection(a, a) == a);
  CHECK(subgroup_intersection(a, b).is_trivial());

  GroupRef g2 = sym3();
  CHECK_THROWS_AS(subgroup_intersection(a, Subgroup::whole(g2)), AmbientMismatch);
}

TEST_CASE("conjugation moves point stabilizers around") {
  GroupRef g = sym3();
  Subgroup a = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  Subgroup c = conjugate_subgroup(a, Permutation::from_cycles(3, "(1 3)"));
  Subgroup expected = Subgroup::generated(g, {Permutation::from_cycles(3, "(2 3)")});
  CHECK(c == expected);
  CHECK(conjugate_subgroup(a, ElemId{0}) == a);
  CHECK(c.order() == a.order());

  // H ∩ H^x trivial for a point stabilizer and a 3-cycle
  Subgroup moved = conjugate_subgroup(a, Permutation::from_cycles(3, "(1 2 3)"));
  CHECK(subgroup_intersection(a, moved).is_trivial());
}

TEST_CASE("normal core") {
  GroupRef g3 = sym3();
  Subgroup a = Subgroup::generated(g3, {Permutation::from_cycles(3, "(1 2)")});
  CHECK(normal_core(a).is_trivial());
  CHECK(normal_core(Subgroup::whole(g3)).is_whole());

  GroupRef g4 = sym4();
  Subgroup d8 = Subgroup::generated(g4, {Permutation::from_cycles(4, "(1 2 3 4)"),
                                         Permutation::from_cycles(4, "(1 3)")});
  CHECK(d8.order() == 8);
  Subgroup v4 = normal_core(d8);
  CHECK(v4.order() == 4);
  Subgroup v4_expected = Subgroup::generated(
      g4, {Permutation::from_cycles(4, "(1 2)(3 4)"),
           Permutation::from_cycles(4, "(1 3)(2 4)")});
  CHECK(v4 == v4_expected);
  CHECK(is_normal(v4));
}

TEST_CASE("core is fixed by conjugation by every generator") {
  GroupRef g4 = sym4();
  Subgroup d8 = Subgroup::generated(g4, {Permutation::from_cycles(4, "(1 2 3 4)"),
                                         Permutation::from_cycles(4, "(1 3)")});
  Subgroup core = normal_core(d8);
  for (ElemId gen : g4->generator_ids())
    CHECK(conjugate_subgroup(core, gen) == core);
}

TEST_CASE("hall detection") {
  GroupRef g = sym3();
  Subgroup c3 = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2 3)")});
  Subgroup c2 = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  CHECK(is_hall(c3, PrimeSet({3})));
  CHECK(is_hall(c2, PrimeSet({2})));
  CHECK_FALSE(is_hall(c2, PrimeSet({2, 3})));
  CHECK(is_hall(Subgroup::whole(g), PrimeSet({2, 3})));
  CHECK(is_hall(Subgroup::trivial(g), PrimeSet()));
}

TEST_CASE("solvability via derived series") {
  CHECK(is_solvable(Subgroup::whole(sym4())));
  CHECK(is_solvable(Subgroup::whole(dih8())));
  CHECK_FALSE(is_solvable(Subgroup::whole(sl32())));
  CHECK(is_solvable(Subgroup::trivial(sl32())));
}

TEST_CASE("derived subgroup of sym4 is alt4") {
  GroupRef g = sym4();
  Subgroup d = derived_subgroup(Subgroup::whole(g));
  CHECK(d.order() == 12);
  Subgroup dd = derived_subgroup(d);
  CHECK(dd.order() == 4);
}

TEST_CASE("sylow subgroups have the exact p-part order") {
  GroupRef g3 = sym3();
  Subgroup s3 = sylow_subgroup(g3, 3);
  CHECK(s3.order() == 3);
  CHECK(s3 == Subgroup::generated(g3, {Permutation::from_cycles(3, "(1 2 3)")}));

  CHECK(sylow_subgroup(sym4(), 2).order() == 8);
  CHECK(sylow_subgroup(sym4(), 3).order() == 3);
  CHECK(sylow_subgroup(sl32(), 7).order() == 7);
  CHECK(sylow_subgroup(sl32(), 2).order() == 8);
  CHECK(sylow_subgroup(sl32(), 5).is_trivial());
  CHECK_THROWS_AS(sylow_subgroup(sym4(), 6), NotPrime);
}

TEST_CASE("sylow construction is deterministic") {
  GroupRef g = sl32();
  Subgroup a = sylow_subgroup(g, 2);
  Subgroup b = sylow_subgroup(g, 2);
  CHECK(a == b);
}

TEST_CASE("fitting subgroups") {
  CHECK(fitting_subgroup(sym4()).order() == 4);
  CHECK(fitting_subgroup(sl32()).is_trivial());
  CHECK(fitting_subgroup(dih8()).is_whole());
}

TEST_CASE("o_pi returns the core and polices the hall precondition") {
  GroupRef g3 = sym3();
  Subgroup c3 = Subgroup::generated(g3, {Permutation::from_cycles(3, "(1 2 3)")});
  CHECK(o_pi(c3, PrimeSet({3})) == c3);

  Subgroup c2 = Subgroup::generated(g3, {Permutation::from_cycles(3, "(1 2)")});
  CHECK(o_pi(c2, PrimeSet({2})).is_trivial());
  CHECK_THROWS_AS(o_pi(c2, PrimeSet({2, 3})), NotHall);

  GroupRef g4 = sym4();
  Subgroup syl2 = sylow_subgroup(g4, 2);
  CHECK(o_pi(syl2, PrimeSet({2})).order() == 4);
}

TEST_CASE("transversal and distinct conjugates") {
  GroupRef g = sym3();
  Subgroup a = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2)")});
  auto reps = right_transversal(a);
  CHECK(reps.size() == 3);
  CHECK(reps[0] == 0);

  auto conjs = distinct_conjugates(a);
  CHECK(conjs.size() == 3);  // three point stabilizers
  for (const auto& c : conjs) CHECK(c.ids.size() == 2);

  Subgroup c3 = Subgroup::generated(g, {Permutation::from_cycles(3, "(1 2 3)")});
  CHECK(distinct_conjugates(c3).size() == 1);  // normal
}

TEST_CASE("intersection is commutative and associative on corpus-sized sets") {
  GroupRef g = sym4();
  Subgroup a = sylow_subgroup(g, 2);
  Subgroup b = conjugate_subgroup(a, g->index_of(Permutation::from_cycles(4, "(1 2 3)")));
  Subgroup c = Subgroup::generated(g, {Permutation::from_cycles(4, "(1 2 3)")});
  CHECK(subgroup_intersection(a, b) == subgroup_intersection(b, a));
  CHECK(subgroup_intersection(subgroup_intersection(a, b), c) ==
        subgroup_intersection(a, subgroup_intersection(b, c)));
}

TEST_CASE("abelian detection") {
  GroupRef g = dih8();
  CHECK_FALSE(is_abelian(Subgroup::whole(g)));
  CHECK(is_abelian(Subgroup::generated(g, {Permutation::from_cycles(4, "(1 2 3 4)")})));
}
