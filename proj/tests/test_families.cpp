#include <doctest.h>

#include <algorithm>
#include <random>

#include "basecert/error.hpp"
#include "basecert/families.hpp"

using namespace basecert;

namespace {

const FamilyCheck& find_check(const FamilyReport& report, const std::string& name) {
  for (const auto& chk : report.checks)
    if (chk.name == name) return chk;
  throw Error("no check named " + name);
}

}  // namespace

TEST_CASE("family names round trip") {
  auto families = all_families();
  REQUIRE(families.size() == 7);
  std::vector<std::string> names;
  for (Family f : families) {
    names.push_back(family_name(f));
    CHECK(family_from_string(family_name(f)) == f);
  }
  CHECK(names == std::vector<std::string>{"E8", "E7", "E6+", "E6-", "F4", "G2", "3D4"});
  CHECK_THROWS_AS((void)family_from_string("E9"), UnknownFamily);
  CHECK_THROWS_AS((void)family_from_string("e8"), UnknownFamily);
}

TEST_CASE("frozen case parameters") {
  struct Expected {
    Family family;
    unsigned c;
    long q_min;
    int order_degree;
    int gap;
  };
  // Order degrees are the dimensions of the ambient algebraic groups.
  const std::vector<Expected> expected = {
      {Family::E8, 2, 2, 248, 112},   {Family::E7, 2, 2, 133, 64},
      {Family::E6Plus, 4, 2, 78, 32}, {Family::E6Minus, 4, 2, 78, 32},
      {Family::F4, 4, 3, 52, 16},     {Family::G2, 4, 3, 14, 7},
      {Family::TriD4, 4, 2, 28, 16},
  };
  for (const auto& e : expected) {
    FamilyCase fc = family_case(e.family);
    CHECK(fc.c == e.c);
    CHECK(fc.q_min == e.q_min);
    CHECK(fc.group_order.degree() == e.order_degree);
    CHECK(fc.group_order.degree() - fc.max_centralizer.degree() == e.gap);
    CHECK(!fc.hall_bounds.empty());
    CHECK(!fc.class_bounds.empty());
    CHECK(!fc.displays.empty());
  }
  CHECK(family_case(Family::E6Plus).graph_centralizer.has_value());
  CHECK(family_case(Family::E6Minus).graph_centralizer.has_value());
  CHECK(!family_case(Family::E8).graph_centralizer.has_value());
  CHECK(!family_case(Family::G2).graph_centralizer.has_value());
  CHECK(family_case(Family::F4).excluded_q == BigInt(2));
  CHECK(family_case(Family::G2).excluded_q == BigInt(2));
  CHECK(!family_case(Family::E8).excluded_q.has_value());
}

TEST_CASE("order polynomials match known group orders at q = 2") {
  CHECK(family_case(Family::G2).group_order(2) == BigInt(12096));
  CHECK(family_case(Family::TriD4).group_order(2) == BigInt(211341312));
  CHECK(family_case(Family::F4).group_order(2) == BigInt("3311126603366400"));
  CHECK(family_case(Family::E6Plus).group_order(2) == BigInt("214841575522005575270400"));
  // Three times the simple group order: the polynomial counts the full
  // universal version and gcd(3, q+1) = 3 at q = 2.
  CHECK(family_case(Family::E6Minus).group_order(2) ==
        BigInt(3) * BigInt("76532479683774853939200"));
}

TEST_CASE("every family verifies end to end") {
  auto reports = verify_all_families();
  REQUIRE(reports.size() == 7);
  size_t total_checks = 0;
  for (const auto& rep : reports) {
    CHECK(rep.all_ok);
    total_checks += rep.checks.size();
    for (const auto& chk : rep.checks) {
      CHECK(chk.ok);
      CHECK(chk.certificate.verdict == chk.expected);
      CHECK(recheck_certificate(chk.statement, chk.certificate));
    }
  }
  CHECK(total_checks == 30);

  CHECK(reports[0].checks.size() == 3);  // E8
  CHECK(reports[1].checks.size() == 4);  // E7: two printed variants
  CHECK(reports[2].checks.size() == 5);  // E6+: two class-bound branches
  CHECK(reports[3].checks.size() == 5);  // E6-
  CHECK(reports[4].checks.size() == 4);  // F4: excluded-point probe
  CHECK(reports[5].checks.size() == 4);  // G2
  CHECK(reports[6].checks.size() == 5);  // 3D4: two Hall branches
}

TEST_CASE("excluded field sizes really fail") {
  for (Family f : {Family::F4, Family::G2}) {
    FamilyReport rep = verify_family(f);
    const FamilyCheck& probe = find_check(rep, "excluded point");
    CHECK(probe.expected == Verdict::refuted);
    CHECK(probe.certificate.verdict == Verdict::refuted);
    REQUIRE(probe.certificate.counterexample.has_value());
    CHECK(*probe.certificate.counterexample == 2);
    CHECK(probe.ok);
  }
}

TEST_CASE("exact equality branch is exercised by the data") {
  FamilyReport rep = verify_family(Family::G2);
  const FamilyCheck& consistency = find_check(rep, "class bound consistency");
  CHECK(!consistency.statement.strict);
  CHECK(consistency.certificate.verdict == Verdict::proved);
  CHECK(consistency.certificate.detail == "difference is identically zero");
}

TEST_CASE("proved inequalities hold at sampled points") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<long> dist(0, 50);
  for (const auto& rep : verify_all_families()) {
    for (const auto& chk : rep.checks) {
      if (chk.certificate.verdict != Verdict::proved) continue;
      for (int trial = 0; trial < 20; ++trial) {
        BigInt q = chk.statement.q_min + dist(rng);
        Rational lhs = chk.statement.lhs(q);
        Rational rhs = chk.statement.rhs(q);
        if (chk.statement.strict) {
          CHECK(lhs < rhs);
        } else {
          CHECK(lhs <= rhs);
        }
      }
    }
  }
}

TEST_CASE("display values shrink as q grows") {
  for (const auto& rep : verify_all_families()) {
    for (const auto& chk : rep.checks) {
      if (chk.name.rfind("display", 0) != 0) continue;
      BigInt q = chk.statement.q_min;
      Rational prev = chk.statement.lhs(q);
      for (int step = 0; step < 8; ++step) {
        ++q;
        Rational next = chk.statement.lhs(q);
        CHECK(next < prev);
        prev = next;
      }
    }
  }
}

TEST_CASE("tampered bound data is caught by the assembled checks") {
  FamilyCase tampered = family_case(Family::E8);
  tampered.hall_bounds[0].poly =
      tampered.hall_bounds[0].poly + IntPolynomial::constant(big_pow(2, 60));
  FamilyReport rep = verify_family_case(tampered);
  CHECK(!rep.all_ok);
  const FamilyCheck& assembly = find_check(rep, "assembly");
  CHECK(assembly.certificate.verdict == Verdict::refuted);
  REQUIRE(assembly.certificate.counterexample.has_value());
  CHECK(*assembly.certificate.counterexample == 2);
  // The independently authored display inequality is untouched.
  CHECK(find_check(rep, "display").ok);
}

TEST_CASE("lower bound for q can be overridden") {
  FamilyReport at2 = verify_family(Family::F4, BigInt(2));
  CHECK(!at2.all_ok);
  const FamilyCheck& disp = find_check(at2, "display");
  CHECK(disp.certificate.verdict == Verdict::refuted);
  for (const auto& chk : at2.checks) CHECK(chk.name.rfind("excluded", 0) != 0);

  FamilyReport at4 = verify_family(Family::F4, BigInt(4));
  CHECK(at4.all_ok);
  CHECK(find_check(at4, "display").certificate.scanned_points.front() == 4);
}

TEST_CASE("graph branch requires the graph centralizer data") {
  FamilyCase broken = family_case(Family::E6Plus);
  broken.graph_centralizer.reset();
  CHECK_THROWS_AS((void)verify_family_case(broken), Error);
}
