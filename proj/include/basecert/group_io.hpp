#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basecert/group.hpp"
#include "basecert/perm.hpp"

namespace basecert {

/// Parsed contents of a group file: `degree N` line, then one
/// `gen <cycles>` line per generator (1-based points, disjoint cycles).
/// Blank lines and `#` comments are ignored.
struct GroupFileData {
  Point degree = 0;
  std::vector<Permutation> generators;
};

GroupFileData parse_group_text(const std::string& text,
                               const std::string& origin);
GroupFileData read_group_file(const std::string& path);

/// One manifest line: `case <name> group=<file> subgroup=<file> pi=<p1,...>`.
/// An empty pi value means the pair carries no Hall claim.
struct CorpusCase {
  std::string name;
  std::string group_file;
  std::string subgroup_file;
  PrimeSet pi;
};

std::vector<CorpusCase> read_manifest(const std::string& path);

/// Optional per-case order assertions kept next to the manifest
/// (`<case> <group order> <subgroup order>` per line).
struct OrderAssertion {
  std::string name;
  uint64_t group_order = 0;
  uint64_t subgroup_order = 0;
};

std::vector<OrderAssertion> read_order_assertions(const std::string& path);

/// A corpus case materialized into live objects.  Group objects are shared
/// between cases that reference the same file.
struct LoadedCase {
  CorpusCase decl;
  GroupRef group;
  Subgroup subgroup;
};

std::vector<LoadedCase> load_corpus(const std::string& dir,
                                    uint64_t cap = kDefaultElementCap,
                                    Exec exec = Exec::parallel);

}  // namespace basecert
