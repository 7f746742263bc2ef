#pragma once

#include <string>
#include <vector>

#include "basecert/basesize.hpp"
#include "basecert/group_io.hpp"

namespace basecert {

struct PropertyResult {
  std::string property;
  std::string subject;
  bool passed = false;
  std::string detail;
};

struct PropertySuiteReport {
  std::vector<PropertyResult> results;
  bool all_passed = true;
};

struct PropertyOptions {
  Exec exec = Exec::parallel;
  uint64_t budget = kDefaultWorkBudget;
  size_t abelian_samples = 20;
};

/// Checks structural facts across the corpus, one result row per
/// (property, subject) pair:
///   hall-verification  declared Hall pairs are solvable Hall subgroups
///   hall-heredity      H Hall in G forces H∩A Hall in A and HA/A Hall in
///                      G/A for normal A arising as cores and the Fitting
///                      subgroup
///   abelian-fitting    sampled abelian A admit x with A ∩ A^x inside F(G)
///   three-sylow        some three conjugates of a Sylow p-subgroup
///                      intersect in O_p(G), for every p dividing |G|
///   fpr-identity       fixed-point ratio equals |x^G ∩ H| / |x^G| on
///                      every conjugacy class
///   q-chain            q_exact <= q_hat <= pair majorant for c = 1..5,
///                      and q_hat < 1 forces base <= c
///   hall-mass          prime-order hit total stays below |H|
///   base4-reg5         base <= 4 forces at least five regular 5-tuple
///                      orbits (nontrivial coset actions; the one-point
///                      action has a single orbit)
PropertySuiteReport run_property_suite(const std::vector<LoadedCase>& corpus,
                                       const PropertyOptions& opts = {});

}  // namespace basecert
