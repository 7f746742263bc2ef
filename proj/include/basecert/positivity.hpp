#pragma once

#include <optional>
#include <string>
#include <vector>

#include "basecert/poly.hpp"

namespace basecert {

// Claim that lhs < rhs (strict) or lhs <= rhs holds for every integer
// q >= q_min.
struct PositivityStatement {
  RationalExpr lhs;
  RationalExpr rhs;
  BigInt q_min;
  bool strict = true;
  std::string label;
};

enum class Verdict { proved, refuted, inconclusive };

std::string verdict_string(Verdict v);

// Checkable evidence for a verdict on a PositivityStatement. For a
// proved claim the witness is a shift base q0 >= q_min such that the
// difference polynomial rewritten in t = q - q0 has only nonnegative
// coefficients (with positive constant term when strict), together with
// the finitely many points q_min..q0 that were checked by direct
// evaluation. For a refuted claim the witness is a single counterexample.
struct PositivityCertificate {
  std::string statement;
  BigInt q_min;
  bool strict = true;
  Verdict verdict = Verdict::inconclusive;
  BigInt q0;
  std::vector<BigInt> shifted_coefficients;
  std::vector<BigInt> scanned_points;
  std::optional<BigInt> counterexample;
  std::string detail;

  bool operator==(const PositivityCertificate&) const = default;
};

inline constexpr long kDefaultShiftSearchLimit = 1000;

// Decides the statement for all integers q >= q_min. Requires both
// denominators to be certifiably positive on that range and throws Error
// otherwise. Throws NotEventuallyPositive when the difference has a
// negative leading coefficient, i.e. the claim fails for all large q.
PositivityCertificate verify_positive_for_all_q(const PositivityStatement& statement,
                                                long shift_search_limit = kDefaultShiftSearchLimit);

// Re-derives every field of the certificate from the statement and
// returns false on any discrepancy.
bool recheck_certificate(const PositivityStatement& statement,
                         const PositivityCertificate& cert);

}  // namespace basecert
