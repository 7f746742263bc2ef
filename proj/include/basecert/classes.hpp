#pragma once

#include <optional>

#include "basecert/coset.hpp"
#include "basecert/group.hpp"
#include "basecert/rational.hpp"

namespace basecert {

struct ConjugacyClass {
  ElemId representative = 0;  // least member id
  uint64_t size = 0;
  uint64_t element_order = 0;
  IdSet members;
};

/// Exact partition of G into conjugacy classes, sorted by representative.
/// The identity class always comes first.
std::vector<ConjugacyClass> conjugacy_classes(const GroupRef& g,
                                              Exec exec = Exec::parallel);

struct ProfiledClass {
  ConjugacyClass cls;
  uint64_t hall_hits = 0;  // |x^G ∩ H|
  Rational fpr;            // hall_hits / size
};

/// Classes of prime element order with their intersection counts against H.
struct PrimeOrderProfile {
  std::vector<ProfiledClass> classes;
  uint64_t hall_hits_total = 0;  // the A of the pair bound
  uint64_t min_class_size = 1;   // the B of the pair bound
};

PrimeOrderProfile prime_order_profile(const GroupRef& g, const Subgroup& h,
                                      Exec exec = Exec::parallel);

/// Σ size_i · fpr_i^c over the prime-order classes, exact.
Rational q_hat(const PrimeOrderProfile& profile, unsigned c);
Rational q_hat(const GroupRef& g, const Subgroup& h, unsigned c,
               Exec exec = Exec::parallel);

/// b·(a/b)^c = a^c / b^(c-1), the pair majorant of the profile sum.
Rational class_sum_majorant(uint64_t a, uint64_t b, unsigned c);

/// If q_hat(G,H,c) < 1 this returns c as a certified upper bound for the
/// base size; otherwise nothing.
std::optional<unsigned> conclude_base_bound(const GroupRef& g,
                                            const Subgroup& h, unsigned c,
                                            Exec exec = Exec::parallel);

}  // namespace basecert
