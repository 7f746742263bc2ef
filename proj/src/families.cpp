#include "basecert/families.hpp"

#include <utility>

#include "basecert/error.hpp"

namespace basecert {

std::string family_name(Family f) {
  switch (f) {
    case Family::E8: return "E8";
    case Family::E7: return "E7";
    case Family::E6Plus: return "E6+";
    case Family::E6Minus: return "E6-";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
    case Family::TriD4: return "3D4";
  }
  throw Error("unknown family");
}

Family family_from_string(const std::string& name) {
  for (Family f : all_families())
    if (family_name(f) == name) return f;
  throw UnknownFamily("unknown family name: " + name);
}

std::vector<Family> all_families() {
  return {Family::E8, Family::E7, Family::E6Plus, Family::E6Minus,
          Family::F4, Family::G2, Family::TriD4};
}

namespace {

IntPolynomial qpow(unsigned d) { return IntPolynomial::monomial(1, d); }

IntPolynomial qd_minus_1(unsigned d) {
  return qpow(d) - IntPolynomial::constant(1);
}

IntPolynomial qd_plus_1(unsigned d) {
  return qpow(d) + IntPolynomial::constant(1);
}

IntPolynomial cpoly(const BigInt& v) { return IntPolynomial::constant(v); }

IntPolynomial pow2(unsigned e) { return cpoly(big_pow(2, e)); }

PositivityStatement display(RationalExpr lhs, BigInt q_min, std::string label) {
  PositivityStatement st;
  st.lhs = std::move(lhs);
  st.rhs = RationalExpr(cpoly(1));
  st.q_min = std::move(q_min);
  st.strict = true;
  st.label = std::move(label);
  return st;
}

FamilyCase make_e8() {
  FamilyCase fc;
  fc.family = Family::E8;
  fc.name = "E8";
  fc.c = 2;
  fc.q_min = 2;
  fc.group_order = qpow(120);
  for (unsigned d : {2u, 8u, 12u, 14u, 18u, 20u, 24u, 30u}) fc.group_order = fc.group_order * qd_minus_1(d);
  fc.max_centralizer = qpow(64) * qd_minus_1(18) * qd_minus_1(14) * qd_minus_1(12) *
                       qd_minus_1(10) * qd_minus_1(8) * qd_minus_1(6) * qd_minus_1(2).pow(2);
  fc.hall_bounds = {{"", "(q+1)^8*2^14", qd_plus_1(1).pow(8) * pow2(14)}};
  fc.class_bounds = {{"", "q^112", RationalExpr(qpow(112)), CentralizerKind::semisimple}};
  fc.displays = {display(RationalExpr((qd_plus_1(1).pow(8) * pow2(14)).pow(2), qpow(112)),
                         fc.q_min, "((q+1)^8*2^14)^2 / q^112 < 1")};
  return fc;
}

FamilyCase make_e7() {
  FamilyCase fc;
  fc.family = Family::E7;
  fc.name = "E7";
  fc.c = 2;
  fc.q_min = 2;
  fc.group_order = qpow(63);
  for (unsigned d : {2u, 6u, 8u, 10u, 12u, 14u, 18u}) fc.group_order = fc.group_order * qd_minus_1(d);
  fc.max_centralizer = qpow(31) * qd_minus_1(2).pow(2) * qd_minus_1(4) * qd_minus_1(6).pow(2) *
                       qd_minus_1(8) * qd_minus_1(10);
  fc.hall_bounds = {{"", "(q+1)^7*2^10", qd_plus_1(1).pow(7) * pow2(10)}};
  fc.class_bounds = {{"", "q^64/2", RationalExpr(qpow(64), cpoly(2)), CentralizerKind::semisimple}};
  fc.displays = {
      display(RationalExpr((qd_plus_1(1).pow(7) * pow2(20)).pow(2) * cpoly(2), qpow(64)),
              fc.q_min, "((q+1)^7*2^20)^2*2 / q^64 < 1"),
      display(RationalExpr((qd_plus_1(1).pow(7) * pow2(10)).pow(2) * cpoly(2), qpow(64)),
              fc.q_min, "((q+1)^7*2^10)^2*2 / q^64 < 1")};
  fc.notes = {"the closed-form majorant as printed carries 2^20 where the Hall-order bound "
              "gives 2^10; both variants are certified"};
  return fc;
}

FamilyCase make_e6(bool twisted) {
  FamilyCase fc;
  fc.family = twisted ? Family::E6Minus : Family::E6Plus;
  fc.name = twisted ? "E6-" : "E6+";
  fc.c = 4;
  fc.q_min = 2;
  auto q5 = twisted ? qd_plus_1(5) : qd_minus_1(5);
  auto q9 = twisted ? qd_plus_1(9) : qd_minus_1(9);
  auto q1 = twisted ? qd_plus_1(1) : qd_minus_1(1);
  fc.group_order = qpow(36) * qd_minus_1(2) * q5 * qd_minus_1(6) * qd_minus_1(8) * q9 *
                   qd_minus_1(12);
  fc.max_centralizer =
      qpow(20) * q1 * qd_minus_1(2) * qd_minus_1(4) * qd_minus_1(6) * qd_minus_1(8) * q5;
  fc.graph_centralizer =
      qpow(24) * qd_minus_1(2) * qd_minus_1(6) * qd_minus_1(8) * qd_minus_1(12);
  fc.hall_bounds = {{"", "(q+1)^6*2^7", qd_plus_1(1).pow(6) * pow2(7)}};
  fc.class_bounds = {
      {"semisimple", "q^30/3", RationalExpr(qpow(30), cpoly(3)), CentralizerKind::semisimple},
      {"graph", "q^12*(q^5-1)*(q^9-1)/3",
       RationalExpr(qpow(12) * qd_minus_1(5) * qd_minus_1(9), cpoly(3)),
       CentralizerKind::graph}};
  fc.displays = {display(
      RationalExpr(qd_plus_1(1).pow(24) * pow2(28) * cpoly(27),
                   qpow(36) * qd_minus_1(5).pow(3) * qd_minus_1(9).pow(3)),
      fc.q_min, "(q+1)^24*2^28*3^3 / (q^36*(q^5-1)^3*(q^9-1)^3) < 1")};
  fc.notes = {"the class-size bound splits into a semisimple branch and a graph-automorphism "
              "branch whose fixed subgroup has type F4"};
  return fc;
}

FamilyCase make_f4() {
  FamilyCase fc;
  fc.family = Family::F4;
  fc.name = "F4";
  fc.c = 4;
  fc.q_min = 3;
  fc.group_order = qpow(24) * qd_minus_1(2) * qd_minus_1(6) * qd_minus_1(8) * qd_minus_1(12);
  fc.max_centralizer = qpow(16) * qd_minus_1(2) * qd_minus_1(4) * qd_minus_1(6) * qd_minus_1(8);
  fc.hall_bounds = {{"", "(q+1)^4*2^7*3^2", qd_plus_1(1).pow(4) * cpoly(1152)}};
  fc.class_bounds = {{"", "q^16", RationalExpr(qpow(16)), CentralizerKind::semisimple}};
  fc.displays = {display(
      RationalExpr(qd_plus_1(1).pow(16) * pow2(28) * cpoly(6561), qpow(48)), fc.q_min,
      "(q+1)^16*2^28*3^8 / q^48 < 1")};
  fc.excluded_q = 2;
  fc.notes = {"q = 2 lies outside the certified range: the closed-form bound fails there, and "
              "for that field size the subgroup is a Sylow 3-subgroup or abelian, which is "
              "settled by other means"};
  return fc;
}

FamilyCase make_g2() {
  FamilyCase fc;
  fc.family = Family::G2;
  fc.name = "G2";
  fc.c = 4;
  fc.q_min = 3;
  fc.group_order = qpow(6) * qd_minus_1(2) * qd_minus_1(6);
  fc.max_centralizer = qpow(2) * qd_minus_1(2) * qd_plus_1(3);
  fc.hall_bounds = {{"", "(q+1)^2*12", qd_plus_1(1).pow(2) * cpoly(12)}};
  fc.class_bounds = {
      {"", "q^4*(q^3-1)", RationalExpr(qpow(4) * qd_minus_1(3)), CentralizerKind::semisimple}};
  fc.displays = {display(
      RationalExpr(qd_plus_1(1).pow(8) * cpoly(20736), qpow(12) * qd_minus_1(3).pow(3)),
      fc.q_min, "(q+1)^8*12^4 / (q^12*(q^3-1)^3) < 1")};
  fc.excluded_q = 2;
  fc.notes = {"q = 2 lies outside the certified range: the closed-form bound fails there, and "
              "for that field size the subgroup is a Sylow 3-subgroup or abelian, which is "
              "settled by other means",
              "the class-size bound meets group_order / centralizer_bound with exact equality"};
  return fc;
}

FamilyCase make_3d4() {
  FamilyCase fc;
  fc.family = Family::TriD4;
  fc.name = "3D4";
  fc.c = 4;
  fc.q_min = 2;
  fc.group_order =
      qpow(12) * (qpow(8) + qpow(4) + cpoly(1)) * qd_minus_1(6) * qd_minus_1(2);
  fc.max_centralizer = qpow(4) * qd_minus_1(6) * qd_minus_1(2);
  fc.hall_bounds = {
      {"torus", "(q^2+q+1)^2", (qpow(2) + qpow(1) + cpoly(1)).pow(2)},
      {"involution", "48*(q+1)^2", qd_plus_1(1).pow(2) * cpoly(48)}};
  fc.class_bounds = {{"", "q^16", RationalExpr(qpow(16)), CentralizerKind::semisimple}};
  fc.displays = {
      display(RationalExpr((qpow(2) + qpow(1) + cpoly(1)).pow(8), qpow(48)), fc.q_min,
              "(q^2+q+1)^8 / q^48 < 1"),
      display(RationalExpr((qd_plus_1(1).pow(2) * cpoly(48)).pow(4), qpow(48)), fc.q_min,
              "((q+1)^2*48)^4 / q^48 < 1")};
  fc.notes = {"the centralizer-order majorant q^4*(q^6-1)*(q^2-1) is taken from published "
              "centralizer-order tables",
              "the Hall-order bound has a torus branch and an involution-centralizer branch; "
              "both are certified"};
  return fc;
}

}  // namespace

FamilyCase family_case(Family f) {
  switch (f) {
    case Family::E8: return make_e8();
    case Family::E7: return make_e7();
    case Family::E6Plus: return make_e6(false);
    case Family::E6Minus: return make_e6(true);
    case Family::F4: return make_f4();
    case Family::G2: return make_g2();
    case Family::TriD4: return make_3d4();
  }
  throw Error("unknown family");
}

FamilyReport verify_family_case(const FamilyCase& data, std::optional<BigInt> q_min_override) {
  FamilyReport report;
  report.data = data;
  report.degree_gap = data.group_order.degree() - data.max_centralizer.degree();
  const BigInt qm = q_min_override ? *q_min_override : data.q_min;

  auto run = [&](std::string name, PositivityStatement st, Verdict expected) {
    FamilyCheck check;
    check.name = std::move(name);
    check.statement = std::move(st);
    check.expected = expected;
    check.certificate = verify_positive_for_all_q(check.statement);
    check.ok = check.certificate.verdict == expected &&
               recheck_certificate(check.statement, check.certificate);
    report.all_ok = report.all_ok && check.ok;
    report.checks.push_back(std::move(check));
  };

  unsigned display_index = 0;
  for (const auto& d : data.displays) {
    ++display_index;
    PositivityStatement st = d;
    st.q_min = qm;
    std::string name = "display";
    if (data.displays.size() > 1) name += " " + std::to_string(display_index);
    run(std::move(name), std::move(st), Verdict::proved);
  }

  for (const auto& hb : data.hall_bounds) {
    for (const auto& cb : data.class_bounds) {
      PositivityStatement st;
      st.lhs = RationalExpr(hb.poly).pow(data.c) / cb.expr.pow(data.c - 1);
      st.rhs = RationalExpr(cpoly(1));
      st.q_min = qm;
      st.strict = true;
      st.label = "(" + hb.display + ")^" + std::to_string(data.c) + " / (" + cb.display +
                 ")^" + std::to_string(data.c - 1) + " < 1";
      std::string name = "assembly";
      if (data.hall_bounds.size() > 1) name += "[" + hb.branch + "]";
      if (data.class_bounds.size() > 1) name += "[" + cb.branch + "]";
      run(std::move(name), std::move(st), Verdict::proved);
    }
  }

  for (const auto& cb : data.class_bounds) {
    const IntPolynomial* centralizer = &data.max_centralizer;
    std::string centralizer_name = "centralizer_bound";
    if (cb.kind == CentralizerKind::graph) {
      if (!data.graph_centralizer) throw Error("family data lacks a graph centralizer order");
      centralizer = &*data.graph_centralizer;
      centralizer_name = "graph_fixed_subgroup_order";
    }
    PositivityStatement st;
    st.lhs = cb.expr;
    st.rhs = RationalExpr(data.group_order, *centralizer);
    st.q_min = qm;
    st.strict = false;
    st.label = cb.display + " <= group_order / " + centralizer_name;
    std::string name = "class bound consistency";
    if (data.class_bounds.size() > 1) name += "[" + cb.branch + "]";
    run(std::move(name), std::move(st), Verdict::proved);
  }

  if (!q_min_override && data.excluded_q) {
    unsigned probe_index = 0;
    for (const auto& d : data.displays) {
      ++probe_index;
      PositivityStatement st = d;
      st.q_min = *data.excluded_q;
      st.label += " [probed at q = " + data.excluded_q->str() + "]";
      std::string name = "excluded point";
      if (data.displays.size() > 1) name += " " + std::to_string(probe_index);
      run(std::move(name), std::move(st), Verdict::refuted);
    }
  }

  return report;
}

FamilyReport verify_family(Family f, std::optional<BigInt> q_min_override) {
  return verify_family_case(family_case(f), std::move(q_min_override));
}

std::vector<FamilyReport> verify_all_families() {
  std::vector<FamilyReport> reports;
  for (Family f : all_families()) reports.push_back(verify_family(f));
  return reports;
}

}  // namespace basecert
