#include <doctest.h>

#include <algorithm>
#include <functional>

#include "basecert/basesize.hpp"
#include "basecert/error.hpp"
#include "basecert/group_io.hpp"

using namespace basecert;

static const std::string kCorpus = BASECERT_CORPUS_DIR;

namespace {

struct Pair {
  GroupRef g;
  Subgroup h;
};

Pair load_pair(const std::string& gfile, const std::string& hfile) {
  GroupFileData gd = read_group_file(kCorpus + "/" + gfile);
  GroupRef g = Group::generate(gd.degree, std::move(gd.generators));
  Subgroup h = Subgroup::generated(g, read_group_file(kCorpus + "/" + hfile).generators);
  return {g, h};
}

// oracle 1: minimal k by exhaustive combinations of distinct conjugates,
// entirely independent of the production BFS
unsigned brute_base(const Subgroup& h) {
  Subgroup kernel = normal_core(h);
  if (h.ids() == kernel.ids()) return 1;
  auto conjs = distinct_conjugates(h);
  for (unsigned k = 2;; ++k) {
    // choose k-1 conjugates with repetition
    std::vector<size_t> pick(k - 1, 0);
    for (;;) {
      IdSet acc = h.ids();
      for (size_t idx : pick) acc = intersect_ids(acc, conjs[idx].ids);
      if (acc == kernel.ids()) return k;
      size_t at = 0;
      while (at < pick.size() && ++pick[at] == conjs.size()) pick[at++] = 0;
      if (at == pick.size()) break;
    }
  }
}

// oracle 2: regular tuples by full enumeration of the point power set
BigInt brute_regular_tuples(const CosetSpace& space, unsigned m) {
  const Group& image = *space.image();
  const uint32_t n = space.point_count();
  BigInt count = 0;
  std::vector<uint32_t> tuple(m, 0);
  for (;;) {
    uint64_t stab = 0;
    for (uint64_t e = 0; e < image.order(); ++e) {
      bool fixes_all = true;
      for (uint32_t pt : tuple)
        if (image.element(static_cast<ElemId>(e)).apply(pt) != pt) {
          fixes_all = false;
          break;
        }
      if (fixes_all) ++stab;
    }
    if (stab == 1) ++count;
    size_t at = 0;
    while (at < m && ++tuple[at] == n) tuple[at++] = 0;
    if (at == m) break;
  }
  return count;
}

}  // namespace

TEST_CASE("production counters agree with the brute-force oracles") {
  for (auto& [gfile, hfile] : std::vector<std::pair<std::string, std::string>>{
           {"sym3.grp", "sym3_c2.grp"},
           {"sym3.grp", "sym3_c3.grp"},
           {"sym4.grp", "sym4_d8.grp"},
           {"sym4.grp", "sym4_c3.grp"},
           {"dih8.grp", "dih8_c2.grp"},
           {"dih8.grp", "dih8_v4.grp"},
           {"dih8.grp", "dih8.grp"}}) {
    CAPTURE(gfile);
    CAPTURE(hfile);
    Pair p = load_pair(gfile, hfile);
    CHECK(base_size(p.h).base == brute_base(p.h));
    CosetSpace space = CosetSpace::build(p.g, p.h);
    for (unsigned m = 1; m <= 4; ++m) {
      CAPTURE(m);
      BigInt expected = brute_regular_tuples(space, m);
      CHECK(regular_tuple_count(space, m) == expected);
      CHECK(regular_tuple_count_reference(space, m) == expected);
    }
  }
}

TEST_CASE("sym3 pair worked example") {
  Pair p = load_pair("sym3.grp", "sym3_c2.grp");
  CosetSpace space = CosetSpace::build(p.g, p.h);
  CHECK(regular_tuple_count(space, 2) == 6);
  CHECK(regular_orbit_count(space, 2) == 1);
  CHECK(q_exact(space, 2) == Rational(1, 3));

  BaseCertificate cert = base_size(p.h);
  CHECK(cert.base == 2);
  CHECK(cert.witnesses.size() == 1);
  CHECK(verify_certificate(p.h, cert));
}

TEST_CASE("normal subgroups give base one") {
  Pair c3 = load_pair("sym3.grp", "sym3_c3.grp");
  BaseCertificate cert = base_size(c3.h);
  CHECK(cert.base == 1);
  CHECK(cert.witnesses.empty());
  CHECK(verify_certificate(c3.h, cert));

  Pair v4 = load_pair("dih8.grp", "dih8_v4.grp");
  CHECK(base_size(v4.h).base == 1);
}

TEST_CASE("whole group degenerate case") {
  Pair p = load_pair("dih8.grp", "dih8.grp");
  BaseCertificate cert = base_size(p.h);
  CHECK(cert.base == 1);
  CHECK(verify_certificate(p.h, cert));
  CosetSpace space = CosetSpace::build(p.g, p.h);
  for (unsigned c = 1; c <= 5; ++c) CHECK(q_exact(space, c) == Rational(0));
  CHECK(regular_orbit_count(space, 3) == 1);
}

TEST_CASE("tuples shorter than the base are never regular") {
  Pair p = load_pair("sl32.grp", "sl32_line.grp");
  CosetSpace space = CosetSpace::build(p.g, p.h);
  BaseCertificate cert = base_size(p.h);
  for (unsigned m = 1; m < cert.base; ++m)
    CHECK(regular_tuple_count(space, m) == 0);
  CHECK(regular_tuple_count(space, cert.base) > 0);
}

TEST_CASE("regular orbit count grows with tuple length") {
  Pair p = load_pair("sym4.grp", "sym4_d8.grp");
  CosetSpace space = CosetSpace::build(p.g, p.h);
  BigInt prev = regular_orbit_count(space, 1);
  for (unsigned m = 2; m <= 5; ++m) {
    BigInt cur = regular_orbit_count(space, m);
    if (prev > 0) CHECK(cur > 0);
    prev = cur;
  }
}

TEST_CASE("base equals the least c with q_exact below one") {
  for (auto& [gfile, hfile] : std::vector<std::pair<std::string, std::string>>{
           {"sym3.grp", "sym3_c2.grp"},
           {"sym4.grp", "sym4_c3.grp"},
           {"dih8.grp", "dih8_c2.grp"}}) {
    Pair p = load_pair(gfile, hfile);
    CosetSpace space = CosetSpace::build(p.g, p.h);
    unsigned base = base_size(p.h).base;
    unsigned least = 0;
    for (unsigned c = 1; c <= 5 && least == 0; ++c)
      if (q_exact(space, c) < 1) least = c;
    CHECK(base == least);
  }
}

TEST_CASE("certificate tampering is detected") {
  Pair p = load_pair("sym4.grp", "sym4_d8.grp");
  BaseCertificate cert = base_size(p.h);
  REQUIRE(verify_certificate(p.h, cert));
  REQUIRE(cert.witnesses.size() >= 1);

  BaseCertificate bad = cert;
  bad.witnesses[0] = 0;  // identity conjugate cannot cut H down
  CHECK_FALSE(verify_certificate(p.h, bad));

  bad = cert;
  bad.base += 1;
  CHECK_FALSE(verify_certificate(p.h, bad));

  bad = cert;
  bad.witnesses.push_back(0);
  CHECK_FALSE(verify_certificate(p.h, bad));

  bad = cert;
  bad.kernel_order += 1;
  CHECK_FALSE(verify_certificate(p.h, bad));

  bad = cert;
  bad.witnesses[0] = static_cast<ElemId>(p.g->order() + 5);
  CHECK_FALSE(verify_certificate(p.h, bad));
}

TEST_CASE("work budgets trip") {
  Pair p = load_pair("sl32.grp", "sl32_line.grp");
  SearchOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(base_size(p.h, tiny), WorkBudgetExceeded);
  CosetSpace space = CosetSpace::build(p.g, p.h);
  CHECK_THROWS_AS(regular_tuple_count(space, 3, tiny), WorkBudgetExceeded);
  CHECK_THROWS_AS(regular_tuple_count_reference(space, 3, 10), WorkBudgetExceeded);
}

TEST_CASE("serial and parallel searches give identical certificates") {
  for (auto& [gfile, hfile] : std::vector<std::pair<std::string, std::string>>{
           {"sym4.grp", "sym4_d8.grp"}, {"sl32.grp", "sl32_line.grp"}}) {
    Pair p = load_pair(gfile, hfile);
    SearchOptions ser{kDefaultWorkBudget, Exec::serial};
    SearchOptions par{kDefaultWorkBudget, Exec::parallel};
    BaseCertificate a = base_size(p.h, ser);
    BaseCertificate b = base_size(p.h, par);
    CHECK(a.base == b.base);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.minimality_evidence == b.minimality_evidence);
    CosetSpace space = CosetSpace::build(p.g, p.h);
    for (unsigned m = 1; m <= 4; ++m)
      CHECK(regular_tuple_count(space, m, ser) == regular_tuple_count(space, m, par));
  }
}
