#pragma once

#include <string>

#include "basecert/coset.hpp"
#include "basecert/group.hpp"
#include "basecert/rational.hpp"

namespace basecert {

inline constexpr uint64_t kDefaultWorkBudget = 100'000'000;

struct SearchOptions {
  uint64_t budget = kDefaultWorkBudget;
  Exec exec = Exec::parallel;
};

/// Proof object for an exact base size: intersecting H with its conjugates
/// by the witnesses reproduces the kernel, and the breadth-first search
/// enumerated every distinct intersection value at all shallower depths.
struct BaseCertificate {
  unsigned base = 0;
  std::vector<ElemId> witnesses;  // conjugators x_2..x_base
  uint64_t kernel_order = 0;
  uint64_t distinct_intersections = 0;  // values seen through the final level
  std::string minimality_evidence;

  bool operator==(const BaseCertificate&) const = default;
};

/// Exact minimal k with H ∩ H^{x_2} ∩ … ∩ H^{x_k} = core(G,H), by
/// breadth-first closure over distinct intersection subgroups.
BaseCertificate base_size(const Subgroup& h, const SearchOptions& opts = {});

/// Re-intersects the witnesses and compares against a freshly computed
/// core; also rejects certificates whose witness count disagrees with the
/// claimed base.
bool verify_certificate(const Subgroup& h, const BaseCertificate& cert);

/// Number of m-tuples of coset points with trivial pointwise stabilizer in
/// the faithful image group.  Counted by stabilizer-pruned depth-first
/// extension with bulk counting below trivial stabilizers.
BigInt regular_tuple_count(const CosetSpace& space, unsigned m,
                           const SearchOptions& opts = {});

/// regular_tuple_count / |image|; every regular orbit has full size.
BigInt regular_orbit_count(const CosetSpace& space, unsigned m,
                           const SearchOptions& opts = {});
BigInt regular_orbit_count(const Subgroup& h, unsigned m,
                           const SearchOptions& opts = {});

/// 1 - (regular c-tuple count)/|Ω|^c: the probability that a uniform
/// random c-tuple of points is NOT a base.
Rational q_exact(const CosetSpace& space, unsigned c,
                 const SearchOptions& opts = {});
Rational q_exact(const Subgroup& h, unsigned c, const SearchOptions& opts = {});

/// Unmemoized single-threaded recursion; exists so the production counter
/// has an independent witness in the tests.
BigInt regular_tuple_count_reference(const CosetSpace& space, unsigned m,
                                     uint64_t budget = kDefaultWorkBudget);

}  // namespace basecert
