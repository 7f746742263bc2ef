#include "basecert/positivity.hpp"

#include <utility>

#include "basecert/error.hpp"

namespace basecert {

std::string verdict_string(Verdict v) {
  switch (v) {
    case Verdict::proved: return "proved";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  throw Error("unknown verdict");
}

namespace {

struct PolyDecision {
  Verdict verdict = Verdict::inconclusive;
  BigInt q0;
  std::vector<BigInt> shifted_coefficients;
  std::vector<BigInt> scanned_points;
  std::optional<BigInt> counterexample;
  std::string detail;
};

bool shift_witnesses(const IntPolynomial& shifted, bool strict) {
  for (const auto& c : shifted.coefficients())
    if (c < 0) return false;
  if (strict && shifted.coefficient(0) <= 0) return false;
  return true;
}

// Decides whether d(q) > 0 (strict) or d(q) >= 0 holds for all integers
// q >= q_min. A shift base q0 with all-nonnegative coefficients of
// d(q0 + t) settles every q >= q0; the points below it are checked by
// direct evaluation while searching.
PolyDecision decide_poly(const IntPolynomial& d, const BigInt& q_min, bool strict, long limit) {
  PolyDecision out;
  if (d.is_zero()) {
    if (strict) {
      out.verdict = Verdict::refuted;
      out.counterexample = q_min;
      out.detail = "difference is identically zero";
    } else {
      out.verdict = Verdict::proved;
      out.q0 = q_min;
      out.detail = "difference is identically zero";
    }
    return out;
  }
  if (d.leading() < 0) {
    BigInt q = q_min > 1 ? q_min : BigInt(1);
    while (d(q) >= 0) q *= 2;
    throw NotEventuallyPositive("difference has negative leading coefficient, fails at q = " +
                                q.str());
  }
  std::vector<BigInt> scanned;
  for (long k = 0; k <= limit; ++k) {
    BigInt s = q_min + k;
    BigInt v = d(s);
    if (v < 0 || (strict && v == 0)) {
      out.verdict = Verdict::refuted;
      out.counterexample = s;
      out.detail = "fails at q = " + s.str();
      return out;
    }
    scanned.push_back(s);
    IntPolynomial sh = d.shifted(s);
    if (shift_witnesses(sh, strict)) {
      out.verdict = Verdict::proved;
      out.q0 = std::move(s);
      out.shifted_coefficients = sh.coefficients();
      out.scanned_points = std::move(scanned);
      out.detail = "nonnegative coefficients after substituting q = " + out.q0.str() + " + t";
      return out;
    }
  }
  out.verdict = Verdict::inconclusive;
  out.detail = "no shift base found within " + std::to_string(limit) + " steps of q_min";
  return out;
}

void ensure_positive_denominator(const IntPolynomial& den, const BigInt& q_min, long limit,
                                 const char* side) {
  PolyDecision dec = decide_poly(den, q_min, /*strict=*/true, limit);
  if (dec.verdict != Verdict::proved) {
    throw Error(std::string(side) + " denominator not certified positive for q >= " +
                q_min.str() + ": " + dec.detail);
  }
}

std::string default_statement(const PositivityStatement& st) {
  return st.lhs.to_string() + (st.strict ? " < " : " <= ") + st.rhs.to_string() +
         " for all q >= " + st.q_min.str();
}

IntPolynomial difference_numerator(const PositivityStatement& st) {
  return st.rhs.num * st.lhs.den - st.lhs.num * st.rhs.den;
}

}  // namespace

PositivityCertificate verify_positive_for_all_q(const PositivityStatement& statement,
                                                long shift_search_limit) {
  if (shift_search_limit < 0) throw Error("negative shift search limit");
  ensure_positive_denominator(statement.lhs.den, statement.q_min, shift_search_limit, "left");
  ensure_positive_denominator(statement.rhs.den, statement.q_min, shift_search_limit, "right");
  IntPolynomial d = difference_numerator(statement);
  PolyDecision dec = decide_poly(d, statement.q_min, statement.strict, shift_search_limit);

  PositivityCertificate cert;
  cert.statement = statement.label.empty() ? default_statement(statement) : statement.label;
  cert.q_min = statement.q_min;
  cert.strict = statement.strict;
  cert.verdict = dec.verdict;
  cert.q0 = std::move(dec.q0);
  cert.shifted_coefficients = std::move(dec.shifted_coefficients);
  cert.scanned_points = std::move(dec.scanned_points);
  cert.counterexample = std::move(dec.counterexample);
  cert.detail = std::move(dec.detail);
  return cert;
}

bool recheck_certificate(const PositivityStatement& statement,
                         const PositivityCertificate& cert) {
  try {
    std::string expected =
        statement.label.empty() ? default_statement(statement) : statement.label;
    if (cert.statement != expected) return false;
    if (cert.q_min != statement.q_min) return false;
    if (cert.strict != statement.strict) return false;

    ensure_positive_denominator(statement.lhs.den, statement.q_min, kDefaultShiftSearchLimit,
                                "left");
    ensure_positive_denominator(statement.rhs.den, statement.q_min, kDefaultShiftSearchLimit,
                                "right");
    IntPolynomial d = difference_numerator(statement);

    switch (cert.verdict) {
      case Verdict::proved: {
        if (d.is_zero()) {
          return !cert.strict && cert.q0 == statement.q_min &&
                 cert.shifted_coefficients.empty() && cert.scanned_points.empty() &&
                 !cert.counterexample.has_value();
        }
        if (cert.counterexample.has_value()) return false;
        if (cert.q0 < statement.q_min) return false;
        IntPolynomial sh = d.shifted(cert.q0);
        if (sh.coefficients() != cert.shifted_coefficients) return false;
        if (!shift_witnesses(sh, cert.strict)) return false;
        BigInt expect_point = statement.q_min;
        for (const auto& p : cert.scanned_points) {
          if (p != expect_point) return false;
          BigInt v = d(p);
          if (v < 0 || (cert.strict && v == 0)) return false;
          ++expect_point;
        }
        return expect_point == cert.q0 + 1;
      }
      case Verdict::refuted: {
        if (!cert.counterexample.has_value()) return false;
        if (!cert.shifted_coefficients.empty() || !cert.scanned_points.empty()) return false;
        if (cert.q0 != 0) return false;
        const BigInt& c = *cert.counterexample;
        if (c < statement.q_min) return false;
        BigInt v = d(c);
        return v < 0 || (cert.strict && v == 0);
      }
      case Verdict::inconclusive:
        return cert.shifted_coefficients.empty() && cert.scanned_points.empty() &&
               !cert.counterexample.has_value() && cert.q0 == 0;
    }
    return false;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace basecert
