#include "basecert/report.hpp"

#include <sstream>

namespace basecert {

namespace {

// JSON numbers stay inside the double-exact integer range; anything
// larger is emitted as a decimal string.
Json int_json(const BigInt& v) {
  static const BigInt bound = BigInt(1) << 53;
  if (v > -bound && v < bound) return v.convert_to<int64_t>();
  return v.str();
}

}  // namespace

Json basesize_json(const Subgroup& h, const BasesizeRequest& req) {
  const GroupRef& g = h.ambient();
  Json out = Json::object();
  out["group"] = req.group_label;
  out["subgroup"] = req.subgroup_label;
  if (!req.pi.empty()) {
    out["pi"] = req.pi.to_string();
    out["is_hall"] = is_hall(h, req.pi);
    out["is_solvable"] = is_solvable(h);
  }
  out["order"] = g->order();
  out["index"] = h.index();

  BaseCertificate cert = base_size(h, req.opts);
  out["kernel_order"] = cert.kernel_order;
  out["base"] = cert.base;
  Json witnesses = Json::array();
  for (ElemId w : cert.witnesses) witnesses.push_back(g->element(w).to_cycles());
  out["witnesses"] = std::move(witnesses);

  CosetSpace space = CosetSpace::build(g, h, req.opts.exec);
  out["reg_5"] = regular_orbit_count(space, 5, req.opts).str();
  if (req.extra_m != 0 && req.extra_m != 5) {
    Json extra = Json::object();
    extra["m"] = req.extra_m;
    extra["value"] = regular_orbit_count(space, req.extra_m, req.opts).str();
    out["reg_m"] = std::move(extra);
  }
  Json by_c = Json::object();
  for (unsigned c = 1; c <= 5; ++c) {
    by_c[std::to_string(c)] = rational_string(q_exact(space, c, req.opts));
  }
  out["q_exact_by_c"] = std::move(by_c);
  return out;
}

Json fpr_json(const Subgroup& h, const std::string& group_label,
              const std::string& subgroup_label, Exec exec) {
  const GroupRef& g = h.ambient();
  CosetSpace space = CosetSpace::build(g, h, exec);
  Json rows = Json::array();
  bool identity_holds = true;
  for (const ConjugacyClass& cls : conjugacy_classes(g, exec)) {
    Rational geometric = space.fpr(cls.representative);
    Rational via_class = fpr_via_class(h, cls.representative);
    if (geometric != via_class) identity_holds = false;
    Json row = Json::object();
    row["rep"] = g->element(cls.representative).to_cycles();
    row["order"] = cls.element_order;
    row["size"] = cls.size;
    row["fix_count"] = space.fix_count(cls.representative);
    row["fpr"] = rational_string(geometric);
    row["fpr_via_class"] = rational_string(via_class);
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["group"] = group_label;
  out["subgroup"] = subgroup_label;
  out["points"] = space.point_count();
  out["kernel_order"] = space.kernel().order();
  out["classes"] = std::move(rows);
  out["identity_holds"] = identity_holds;
  return out;
}

Json probbound_json(const Subgroup& h, const std::string& group_label,
                    const std::string& subgroup_label, unsigned c_max, Exec exec) {
  const GroupRef& g = h.ambient();
  PrimeOrderProfile profile = prime_order_profile(g, h, exec);
  Json rows = Json::array();
  for (const ProfiledClass& pc : profile.classes) {
    Json row = Json::object();
    row["rep"] = g->element(pc.cls.representative).to_cycles();
    row["order"] = pc.cls.element_order;
    row["size"] = pc.cls.size;
    row["hall_hits"] = pc.hall_hits;
    row["fpr"] = rational_string(pc.fpr);
    rows.push_back(std::move(row));
  }
  Json q_map = Json::object();
  Json bound_map = Json::object();
  std::optional<unsigned> concluded;
  for (unsigned c = 1; c <= c_max; ++c) {
    Rational qh = q_hat(profile, c);
    q_map[std::to_string(c)] = rational_string(qh);
    Rational bound = profile.hall_hits_total == 0
                         ? Rational(0)
                         : class_sum_majorant(profile.hall_hits_total,
                                              profile.min_class_size, c);
    bound_map[std::to_string(c)] = rational_string(bound);
    if (!concluded && qh < 1) concluded = c;
  }
  Json out = Json::object();
  out["group"] = group_label;
  out["subgroup"] = subgroup_label;
  out["classes"] = std::move(rows);
  out["hall_hits_total"] = profile.hall_hits_total;
  out["min_class_size"] = profile.min_class_size;
  out["q_hat_by_c"] = std::move(q_map);
  out["lemma5_bound_by_c"] = std::move(bound_map);
  out["concluded_c"] = concluded ? Json(*concluded) : Json(nullptr);
  return out;
}

Json positivity_json(const PositivityCertificate& cert) {
  Json out = Json::object();
  out["expression"] = cert.statement;
  out["q_min"] = int_json(cert.q_min);
  out["strict"] = cert.strict;
  out["verdict"] = verdict_string(cert.verdict);
  out["q0"] = int_json(cert.q0);
  Json points = Json::array();
  for (const BigInt& p : cert.scanned_points) points.push_back(int_json(p));
  out["scanned_points"] = std::move(points);
  out["shifted_coefficient_count"] = cert.shifted_coefficients.size();
  if (cert.counterexample) out["counterexample"] = int_json(*cert.counterexample);
  out["detail"] = cert.detail;
  return out;
}

Json family_json(const FamilyReport& report) {
  const FamilyCase& data = report.data;
  Json out = Json::object();
  out["family"] = family_name(data.family);
  out["c"] = data.c;
  out["q_min"] = int_json(data.q_min);
  if (data.excluded_q) out["excluded_q"] = int_json(*data.excluded_q);
  out["degree_gap"] = report.degree_gap;
  out["all_ok"] = report.all_ok;
  out["notes"] = data.notes;
  Json checks = Json::array();
  for (const FamilyCheck& chk : report.checks) {
    Json body = positivity_json(chk.certificate);
    body["expected"] = verdict_string(chk.expected);
    body["ok"] = chk.ok;
    Json row = Json::object();
    row["name"] = chk.name;
    for (auto it = body.begin(); it != body.end(); ++it) row[it.key()] = *it;
    checks.push_back(std::move(row));
  }
  out["checks"] = std::move(checks);
  return out;
}

std::string family_transcript(const FamilyReport& report) {
  const FamilyCase& data = report.data;
  std::ostringstream os;
  os << "family " << family_name(data.family) << "  (c = " << data.c
     << ", q >= " << data.q_min.str();
  if (data.excluded_q) os << ", q = " << data.excluded_q->str() << " excluded";
  os << ")\n";
  os << "  order degree " << data.group_order.degree() << ", centralizer bound degree "
     << data.max_centralizer.degree() << ", gap " << report.degree_gap << "\n";
  for (const std::string& note : data.notes) os << "  note: " << note << "\n";
  for (const FamilyCheck& chk : report.checks) {
    const PositivityCertificate& cert = chk.certificate;
    os << "  [" << (chk.ok ? "ok" : "FAIL") << "] " << chk.name << ": "
       << cert.statement << "\n";
    os << "       " << verdict_string(cert.verdict);
    if (cert.verdict != chk.expected) {
      os << " (expected " << verdict_string(chk.expected) << ")";
    }
    os << "; " << cert.detail;
    if (cert.verdict == Verdict::proved && !cert.scanned_points.empty()) {
      os << "; scanned q = " << cert.scanned_points.front().str();
      if (cert.scanned_points.size() > 1) {
        os << ".." << cert.scanned_points.back().str();
      }
      os << "; " << cert.shifted_coefficients.size() << " shifted coefficients";
    }
    os << "\n";
  }
  os << "  " << (report.all_ok ? "OK" : "FAILED") << " (" << report.checks.size()
     << " checks)\n";
  return os.str();
}

Json props_json(const PropertySuiteReport& report) {
  Json rows = Json::array();
  uint64_t failures = 0;
  for (const PropertyResult& r : report.results) {
    if (!r.passed) ++failures;
    Json row = Json::object();
    row["property"] = r.property;
    row["subject"] = r.subject;
    row["passed"] = r.passed;
    row["detail"] = r.detail;
    rows.push_back(std::move(row));
  }
  Json out = Json::object();
  out["results"] = std::move(rows);
  out["total"] = report.results.size();
  out["failures"] = failures;
  out["all_passed"] = report.all_passed;
  return out;
}

std::string props_text(const PropertySuiteReport& report) {
  std::ostringstream os;
  uint64_t failures = 0;
  for (const PropertyResult& r : report.results) {
    if (!r.passed) ++failures;
    os << (r.passed ? "pass" : "FAIL") << "  " << r.property << "  [" << r.subject
       << "]  " << r.detail << "\n";
  }
  if (report.all_passed) {
    os << "all " << report.results.size() << " property rows hold\n";
  } else {
    os << failures << " of " << report.results.size() << " property rows failed\n";
  }
  return os.str();
}

}  // namespace basecert
