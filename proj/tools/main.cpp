#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "basecert/error.hpp"
#include "basecert/group_io.hpp"
#include "basecert/report.hpp"

using namespace basecert;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct PairOpts {
  std::string group_path;
  std::string subgroup_path;
  std::string pi_text;
  uint64_t cap = kDefaultElementCap;
  uint64_t budget = kDefaultWorkBudget;
  std::string format = "text";
};

Subgroup load_pair(const PairOpts& o) {
  GroupFileData gd = read_group_file(o.group_path);
  GroupRef g = Group::generate(gd.degree, gd.generators, o.cap);
  GroupFileData sd = read_group_file(o.subgroup_path);
  return Subgroup::generated(g, sd.generators);
}

void emit(const Json& doc, const std::string& format, const std::string& text) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_verify(const std::vector<std::string>& names, std::optional<int64_t> qmin,
               const std::string& format) {
  std::optional<BigInt> override_q;
  if (qmin) override_q = BigInt(*qmin);
  std::vector<FamilyReport> reports;
  if (names.empty()) {
    for (Family f : all_families()) reports.push_back(verify_family(f, override_q));
  } else {
    for (const std::string& n : names) {
      reports.push_back(verify_family(family_from_string(n), override_q));
    }
  }
  bool all_ok = true;
  Json fams = Json::array();
  std::string text;
  for (const FamilyReport& r : reports) {
    all_ok = all_ok && r.all_ok;
    fams.push_back(family_json(r));
    text += family_transcript(r) + "\n";
  }
  text += all_ok ? "all families certified\n" : "certification FAILED\n";
  Json doc = Json::object();
  doc["families"] = std::move(fams);
  doc["all_ok"] = all_ok;
  emit(doc, format, text);
  return all_ok ? kOk : kCheckFailed;
}

std::string basesize_text(const Json& r) {
  std::ostringstream os;
  os << "group " << r["group"].get<std::string>() << ": order " << r["order"]
     << "\n";
  os << "subgroup " << r["subgroup"].get<std::string>() << ": index " << r["index"]
     << ", kernel order " << r["kernel_order"] << "\n";
  if (r.contains("pi")) {
    os << "pi = {" << r["pi"].get<std::string>() << "}: "
       << (r["is_hall"].get<bool>() ? "Hall" : "NOT Hall") << ", "
       << (r["is_solvable"].get<bool>() ? "solvable" : "NOT solvable") << "\n";
  }
  os << "base " << r["base"] << "\n";
  for (const Json& w : r["witnesses"]) os << "  witness " << w.get<std::string>() << "\n";
  os << "reg_5 " << r["reg_5"].get<std::string>() << "\n";
  if (r.contains("reg_m")) {
    os << "reg_" << r["reg_m"]["m"] << " " << r["reg_m"]["value"].get<std::string>()
       << "\n";
  }
  os << "q_exact:";
  for (auto it = r["q_exact_by_c"].begin(); it != r["q_exact_by_c"].end(); ++it) {
    os << "  c=" << it.key() << " " << it.value().get<std::string>();
  }
  os << "\n";
  return os.str();
}

int run_basesize(const PairOpts& o, unsigned extra_m) {
  Subgroup h = load_pair(o);
  BasesizeRequest req;
  req.group_label = o.group_path;
  req.subgroup_label = o.subgroup_path;
  req.pi = PrimeSet::parse(o.pi_text);
  req.extra_m = extra_m;
  req.opts.budget = o.budget;
  Json doc = basesize_json(h, req);
  emit(doc, o.format, basesize_text(doc));
  if (!req.pi.empty() &&
      (!doc["is_hall"].get<bool>() || !doc["is_solvable"].get<bool>())) {
    return kCheckFailed;
  }
  return kOk;
}

int run_fpr(const PairOpts& o) {
  Subgroup h = load_pair(o);
  Json doc = fpr_json(h, o.group_path, o.subgroup_path, Exec::parallel);
  std::ostringstream os;
  os << "group " << o.group_path << ", subgroup " << o.subgroup_path << ": "
     << doc["points"] << " points, kernel order " << doc["kernel_order"] << "\n";
  for (const Json& row : doc["classes"]) {
    os << "  rep " << row["rep"].get<std::string>() << "  order " << row["order"]
       << "  size " << row["size"] << "  fix " << row["fix_count"] << "  fpr "
       << row["fpr"].get<std::string>();
    if (row["fpr"] != row["fpr_via_class"]) {
      os << "  MISMATCH via classes: " << row["fpr_via_class"].get<std::string>();
    }
    os << "\n";
  }
  bool ok = doc["identity_holds"].get<bool>();
  os << (ok ? "fixed-point ratio identity holds on every class\n"
            : "fixed-point ratio identity FAILED\n");
  emit(doc, o.format, os.str());
  return ok ? kOk : kCheckFailed;
}

int run_qhat(const PairOpts& o, unsigned c_max) {
  Subgroup h = load_pair(o);
  Json doc = probbound_json(h, o.group_path, o.subgroup_path, c_max, Exec::parallel);
  std::ostringstream os;
  os << "group " << o.group_path << ", subgroup " << o.subgroup_path << "\n";
  os << "prime-order classes:\n";
  for (const Json& row : doc["classes"]) {
    os << "  rep " << row["rep"].get<std::string>() << "  order " << row["order"]
       << "  size " << row["size"] << "  hall hits " << row["hall_hits"] << "  fpr "
       << row["fpr"].get<std::string>() << "\n";
  }
  os << "A = " << doc["hall_hits_total"] << ", B = " << doc["min_class_size"]
     << "\n";
  for (auto it = doc["q_hat_by_c"].begin(); it != doc["q_hat_by_c"].end(); ++it) {
    os << "  c=" << it.key() << "  q_hat " << it.value().get<std::string>()
       << "  pair bound "
       << doc["lemma5_bound_by_c"][it.key()].get<std::string>() << "\n";
  }
  if (doc["concluded_c"].is_null()) {
    os << "no c in range concludes a base bound\n";
  } else {
    os << "base <= " << doc["concluded_c"] << " certified by q_hat < 1\n";
  }
  emit(doc, o.format, os.str());
  return kOk;
}

int run_props(const std::string& corpus_dir, uint64_t cap, uint64_t budget,
              const std::string& format) {
  std::vector<LoadedCase> corpus = load_corpus(corpus_dir, cap);
  if (corpus.empty()) {
    std::cerr << "warning: corpus at " << corpus_dir << " declares no cases\n";
  }
  PropertyOptions opts;
  opts.budget = budget;
  PropertySuiteReport suite = run_property_suite(corpus, opts);
  emit(props_json(suite), format, props_text(suite));
  return suite.all_passed ? kOk : kCheckFailed;
}

int run_report(const std::string& corpus_dir, uint64_t cap, uint64_t budget,
               const std::string& format) {
  bool all_ok = true;
  Json fams = Json::array();
  std::string text;
  for (const FamilyReport& r : verify_all_families()) {
    all_ok = all_ok && r.all_ok;
    fams.push_back(family_json(r));
    text += family_transcript(r) + "\n";
  }

  std::vector<LoadedCase> corpus = load_corpus(corpus_dir, cap);
  Json pairs = Json::array();
  for (const LoadedCase& lc : corpus) {
    BasesizeRequest req;
    req.group_label = lc.decl.group_file;
    req.subgroup_label = lc.decl.subgroup_file;
    req.pi = lc.decl.pi;
    req.opts.budget = budget;
    Json body = basesize_json(lc.subgroup, req);
    if (body.contains("is_hall") &&
        (!body["is_hall"].get<bool>() || !body["is_solvable"].get<bool>())) {
      all_ok = false;
    }
    text += "case " + lc.decl.name + ": base " + body["base"].dump() + ", reg_5 " +
            body["reg_5"].get<std::string>() + ", kernel order " +
            body["kernel_order"].dump() + "\n";
    Json row = Json::object();
    row["case"] = lc.decl.name;
    row["basesize"] = std::move(body);
    pairs.push_back(std::move(row));
  }
  text += "\n";

  PropertyOptions opts;
  opts.budget = budget;
  PropertySuiteReport suite = run_property_suite(corpus, opts);
  all_ok = all_ok && suite.all_passed;
  text += props_text(suite);
  text += all_ok ? "report: all checks passed\n" : "report: FAILURES present\n";

  Json doc = Json::object();
  doc["families"] = std::move(fams);
  doc["corpus"] = std::move(pairs);
  doc["properties"] = props_json(suite);
  doc["all_ok"] = all_ok;
  emit(doc, format, text);
  return all_ok ? kOk : kCheckFailed;
}

void add_format_flag(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of base-size results on finite groups"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify-exceptional",
      "certify the closed-form inequalities for the exceptional families");
  std::vector<std::string> family_names;
  std::optional<int64_t> qmin;
  std::string verify_format = "text";
  verify->add_option("--family", family_names,
                     "family name (repeatable); default all");
  verify->add_option("--qmin", qmin, "override the lower field-size threshold")
      ->check(CLI::PositiveNumber);
  add_format_flag(verify, verify_format);

  PairOpts base_opts;
  unsigned extra_m = 0;
  auto* basesize = app.add_subcommand(
      "basesize", "exact base size, witnesses, and regular-orbit counts");
  basesize->add_option("--group", base_opts.group_path, "group file")->required();
  basesize->add_option("--subgroup", base_opts.subgroup_path, "subgroup file")
      ->required();
  basesize->add_option("--pi", base_opts.pi_text,
                       "comma-separated primes; verifies the Hall claim");
  basesize->add_option("--m", extra_m, "extra regular-orbit count length")
      ->check(CLI::PositiveNumber);
  basesize->add_option("--cap", base_opts.cap, "element enumeration cap");
  basesize->add_option("--budget", base_opts.budget, "search work budget");
  add_format_flag(basesize, base_opts.format);

  PairOpts fpr_opts;
  auto* fpr = app.add_subcommand(
      "fpr", "fixed-point ratios per conjugacy class, both formulas");
  fpr->add_option("--group", fpr_opts.group_path, "group file")->required();
  fpr->add_option("--subgroup", fpr_opts.subgroup_path, "subgroup file")->required();
  fpr->add_option("--cap", fpr_opts.cap, "element enumeration cap");
  add_format_flag(fpr, fpr_opts.format);

  PairOpts qhat_opts;
  unsigned c_max = 5;
  auto* qhat = app.add_subcommand(
      "qhat", "probabilistic base bound from prime-order classes");
  qhat->add_option("--group", qhat_opts.group_path, "group file")->required();
  qhat->add_option("--subgroup", qhat_opts.subgroup_path, "subgroup file")
      ->required();
  qhat->add_option("--c", c_max, "largest tuple length")->check(CLI::PositiveNumber);
  qhat->add_option("--cap", qhat_opts.cap, "element enumeration cap");
  add_format_flag(qhat, qhat_opts.format);

  std::string props_corpus = BASECERT_CORPUS_DIR;
  uint64_t props_cap = kDefaultElementCap;
  uint64_t props_budget = kDefaultWorkBudget;
  std::string props_format = "text";
  auto* props = app.add_subcommand("props", "corpus-wide property suite");
  props->add_option("--corpus", props_corpus, "corpus directory");
  props->add_option("--cap", props_cap, "element enumeration cap");
  props->add_option("--budget", props_budget, "search work budget");
  add_format_flag(props, props_format);

  std::string report_corpus = BASECERT_CORPUS_DIR;
  uint64_t report_cap = kDefaultElementCap;
  uint64_t report_budget = kDefaultWorkBudget;
  std::string report_format = "text";
  auto* report = app.add_subcommand(
      "report", "family certificates, corpus base sizes, and properties");
  report->add_option("--corpus", report_corpus, "corpus directory");
  report->add_option("--cap", report_cap, "element enumeration cap");
  report->add_option("--budget", report_budget, "search work budget");
  add_format_flag(report, report_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(family_names, qmin, verify_format);
    if (basesize->parsed()) return run_basesize(base_opts, extra_m);
    if (fpr->parsed()) return run_fpr(fpr_opts);
    if (qhat->parsed()) return run_qhat(qhat_opts, c_max);
    if (props->parsed()) return run_props(props_corpus, props_cap, props_budget, props_format);
    if (report->parsed())
      return run_report(report_corpus, report_cap, report_budget, report_format);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const WorkBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
