#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basecert/positivity.hpp"

namespace basecert {

enum class Family { E8, E7, E6Plus, E6Minus, F4, G2, TriD4 };

std::string family_name(Family f);
Family family_from_string(const std::string& name);
std::vector<Family> all_families();

// One branch of the Hall-order majorant |H| <= poly(q).
struct HallBound {
  std::string branch;
  std::string display;
  IntPolynomial poly;
};

enum class CentralizerKind { semisimple, graph };

// One branch of the lower bound on the size of any conjugacy class of
// prime-order elements meeting the Hall subgroup. The kind selects which
// centralizer-order majorant the bound is checked against.
struct ClassBound {
  std::string branch;
  std::string display;
  RationalExpr expr;
  CentralizerKind kind = CentralizerKind::semisimple;
};

// Frozen data for one family of groups of Lie type: exact order and
// centralizer-order polynomials in the defining field size q, the
// Hall-order and class-size bounds, and the printed closed-form
// inequalities whose truth for all q >= q_min yields base size <= c.
struct FamilyCase {
  Family family = Family::E8;
  std::string name;
  unsigned c = 0;
  BigInt q_min;
  IntPolynomial group_order;
  IntPolynomial max_centralizer;
  std::optional<IntPolynomial> graph_centralizer;
  std::vector<HallBound> hall_bounds;
  std::vector<ClassBound> class_bounds;
  std::vector<PositivityStatement> displays;
  std::optional<BigInt> excluded_q;
  std::vector<std::string> notes;
};

FamilyCase family_case(Family f);

struct FamilyCheck {
  std::string name;
  PositivityStatement statement;
  Verdict expected = Verdict::proved;
  PositivityCertificate certificate;
  bool ok = false;
};

struct FamilyReport {
  FamilyCase data;
  std::vector<FamilyCheck> checks;
  int degree_gap = 0;
  bool all_ok = true;
};

// Certifies, for every integer q >= q_min (or the override):
//   - each printed display inequality,
//   - hall^c / class^(c-1) < 1 assembled from the bound data for every
//     pair of branches,
//   - each class bound against group_order / centralizer,
// and, when the data marks an excluded field size and no override is
// given, that the displays really fail there.
FamilyReport verify_family_case(const FamilyCase& data,
                                std::optional<BigInt> q_min_override = std::nullopt);
FamilyReport verify_family(Family f, std::optional<BigInt> q_min_override = std::nullopt);
std::vector<FamilyReport> verify_all_families();

}  // namespace basecert
