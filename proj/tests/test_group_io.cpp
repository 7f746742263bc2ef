#include <doctest.h>

#include "basecert/error.hpp"
#include "basecert/group_io.hpp"

using namespace basecert;

static const std::string kCorpus = BASECERT_CORPUS_DIR;

TEST_CASE("group file parsing") {
  GroupFileData d = parse_group_text(
      "# a comment\n"
      "degree 7\n"
      "\n"
      "gen (1 2 3 4 5 6 7)\n"
      "gen (2 3)(4 7)\n",
      "inline");
  CHECK(d.degree == 7);
  CHECK(d.generators.size() == 2);
  CHECK(d.generators[0].to_cycles() == "(1 2 3 4 5 6 7)");

  CHECK_THROWS_AS(parse_group_text("gen (1 2)\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree 0\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree 3\ndegree 3\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree 3\ngen (1 5)\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("degree 3\nfoo (1 2)\n", "inline"), ParseError);
  CHECK_THROWS_AS(parse_group_text("", "inline"), ParseError);
}

TEST_CASE("manifest parsing") {
  CHECK_THROWS_AS(read_manifest(kCorpus + "/no_such_manifest.txt"), ParseError);
  auto cases = read_manifest(kCorpus + "/manifest.txt");
  CHECK(cases.size() == 13);
  CHECK(cases[0].name == "sym3_c2");
  CHECK(cases[0].group_file == "sym3.grp");
  CHECK(cases[0].pi == PrimeSet({2}));
  bool found_empty_pi = false;
  for (const auto& c : cases)
    if (c.pi.empty()) found_empty_pi = true;
  CHECK(found_empty_pi);
}

TEST_CASE("corpus loads with asserted orders") {
  auto corpus = load_corpus(kCorpus);
  CHECK(corpus.size() == 13);
  for (const auto& lc : corpus) {
    CHECK(lc.subgroup.ambient().get() == lc.group.get());
    CHECK(lc.group->order() % lc.subgroup.order() == 0);
  }

  // shared group files materialize once
  const LoadedCase* line = nullptr;
  const LoadedCase* plane = nullptr;
  for (const auto& lc : corpus) {
    if (lc.decl.name == "sl32_line") line = &lc;
    if (lc.decl.name == "sl32_plane") plane = &lc;
  }
  REQUIRE(line != nullptr);
  REQUIRE(plane != nullptr);
  CHECK(line->group.get() == plane->group.get());
  CHECK(line->group->order() == 168);
  CHECK(line->subgroup.order() == 24);
  CHECK(plane->subgroup.order() == 24);
  CHECK_FALSE(line->subgroup == plane->subgroup);
}

TEST_CASE("declared hall pairs really are solvable hall subgroups") {
  for (const auto& lc : load_corpus(kCorpus)) {
    if (lc.decl.pi.empty()) continue;
    CHECK(is_hall(lc.subgroup, lc.decl.pi));
    CHECK(is_solvable(lc.subgroup));
  }
}

TEST_CASE("subgroup file of mismatched degree is rejected") {
  // sl33 subgroup against sl42 group cannot load: degrees 13 vs 15
  GroupFileData g = read_group_file(kCorpus + "/sl42.grp");
  GroupFileData h = read_group_file(kCorpus + "/sl33_borel.grp");
  CHECK(g.degree == 15);
  CHECK(h.degree == 13);
  GroupRef big = Group::generate(g.degree, std::move(g.generators));
  CHECK_THROWS_AS(Subgroup::generated(big, h.generators), BadPermutation);
}
