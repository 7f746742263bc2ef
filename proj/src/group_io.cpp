#include "basecert/group_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "basecert/error.hpp"

namespace basecert {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

GroupFileData parse_group_text(const std::string& text,
                               const std::string& origin) {
  GroupFileData data;
  bool have_degree = false;
  std::istringstream in(text);
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError(origin + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (keyword == "degree") {
      if (have_degree) throw fail("duplicate degree line");
      long long value = -1;
      ls >> value;
      if (ls.fail() || value <= 0) throw fail("bad degree value");
      data.degree = static_cast<Point>(value);
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree) throw fail("gen line before degree line");
      std::string rest;
      std::getline(ls, rest);
      rest = strip(rest);
      if (rest.empty()) throw fail("gen line without cycles");
      try {
        data.generators.push_back(Permutation::from_cycles(data.degree, rest));
      } catch (const Error& e) {
        throw fail(e.what());
      }
    } else {
      throw fail("unknown keyword '" + keyword + "'");
    }
  }
  if (!have_degree) throw ParseError(origin + ": missing degree line");
  return data;
}

GroupFileData read_group_file(const std::string& path) {
  return parse_group_text(read_text(path), path);
}

std::vector<CorpusCase> read_manifest(const std::string& path) {
  std::vector<CorpusCase> cases;
  std::istringstream in(read_text(path));
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    if (keyword != "case") throw fail("expected 'case' line");
    CorpusCase c;
    ls >> c.name;
    if (c.name.empty()) throw fail("case without a name");
    std::string tok;
    bool have_group = false, have_subgroup = false, have_pi = false;
    while (ls >> tok) {
      size_t eq = tok.find('=');
      if (eq == std::string::npos) throw fail("expected key=value, got " + tok);
      std::string key = tok.substr(0, eq);
      std::string value = tok.substr(eq + 1);
      if (key == "group") {
        c.group_file = value;
        have_group = true;
      } else if (key == "subgroup") {
        c.subgroup_file = value;
        have_subgroup = true;
      } else if (key == "pi") {
        try {
          c.pi = PrimeSet::parse(value);
        } catch (const Error& e) {
          throw fail(e.what());
        }
        have_pi = true;
      } else {
        throw fail("unknown key '" + key + "'");
      }
    }
    if (!have_group || !have_subgroup || !have_pi)
      throw fail("case needs group=, subgroup= and pi=");
    cases.push_back(std::move(c));
  }
  return cases;
}

std::vector<OrderAssertion> read_order_assertions(const std::string& path) {
  std::vector<OrderAssertion> out;
  std::istringstream in(read_text(path));
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    OrderAssertion a;
    ls >> a.name >> a.group_order >> a.subgroup_order;
    if (ls.fail())
      throw ParseError(path + ":" + std::to_string(lineno) +
                       ": expected '<case> <order> <suborder>'");
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<LoadedCase> load_corpus(const std::string& dir, uint64_t cap,
                                    Exec exec) {
  auto cases = read_manifest(dir + "/manifest.txt");
  std::map<std::string, GroupRef> groups;
  auto group_for = [&](const std::string& file) -> GroupRef {
    auto it = groups.find(file);
    if (it != groups.end()) return it->second;
    GroupFileData data = read_group_file(dir + "/" + file);
    GroupRef g = Group::generate(data.degree, std::move(data.generators), cap, exec);
    groups.emplace(file, g);
    return g;
  };

  std::vector<LoadedCase> loaded;
  for (const CorpusCase& c : cases) {
    LoadedCase lc;
    lc.decl = c;
    lc.group = group_for(c.group_file);
    GroupFileData sub = read_group_file(dir + "/" + c.subgroup_file);
    if (sub.degree != lc.group->degree())
      throw ParseError(c.subgroup_file + ": degree " +
                       std::to_string(sub.degree) +
                       " does not match group degree " +
                       std::to_string(lc.group->degree()));
    lc.subgroup = Subgroup::generated(lc.group, sub.generators);
    loaded.push_back(std::move(lc));
  }

  // enforce the checked-in order assertions when the file is present
  std::ifstream probe(dir + "/orders.txt");
  if (probe) {
    probe.close();
    std::map<std::string, const LoadedCase*> by_name;
    for (const LoadedCase& lc : loaded) by_name[lc.decl.name] = &lc;
    for (const OrderAssertion& a : read_order_assertions(dir + "/orders.txt")) {
      auto it = by_name.find(a.name);
      if (it == by_name.end())
        throw ParseError("orders.txt names unknown case " + a.name);
      if (it->second->group->order() != a.group_order ||
          it->second->subgroup.order() != a.subgroup_order)
        throw Error("case " + a.name + ": computed orders " +
                    std::to_string(it->second->group->order()) + "/" +
                    std::to_string(it->second->subgroup.order()) +
                    " disagree with asserted " +
                    std::to_string(a.group_order) + "/" +
                    std::to_string(a.subgroup_order));
    }
  }
  return loaded;
}

}  // namespace basecert
