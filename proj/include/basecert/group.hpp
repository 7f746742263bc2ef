#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "basecert/exec.hpp"
#include "basecert/perm.hpp"
#include "basecert/primes.hpp"

namespace basecert {

using ElemId = uint32_t;

// strictly increasing list of element ids; the canonical identity of a
// subgroup inside a fixed ambient group
using IdSet = std::vector<ElemId>;

inline constexpr uint64_t kDefaultElementCap = uint64_t{1} << 21;

class Group;
using GroupRef = std::shared_ptr<const Group>;

/// Fully enumerated permutation group with a sorted element table.
/// Ids index the table; the identity always gets id 0 because it is the
/// lexicographically least permutation of its degree.
class Group : public std::enable_shared_from_this<Group> {
 public:
  /// Enumerates the closure of `generators`.  Throws CapExceeded when the
  /// closure grows past `cap`, BadPermutation on degree mismatches.
  static GroupRef generate(Point degree, std::vector<Permutation> generators,
                           uint64_t cap = kDefaultElementCap,
                           Exec exec = Exec::parallel);

  /// Wraps an element set already known to be closed (e.g. the image of a
  /// homomorphism).  Closure is spot-checked, not re-enumerated.
  static GroupRef adopt(Point degree, std::vector<Permutation> elements,
                        std::vector<Permutation> generators);

  Point degree() const { return degree_; }
  uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const std::vector<ElemId>& generator_ids() const { return gen_ids_; }

  const Permutation& element(ElemId id) const { return elements_[id]; }
  std::optional<ElemId> find(const Permutation& p) const;
  ElemId index_of(const Permutation& p) const;  // throws ElementNotInAmbient
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  ElemId multiply(ElemId a, ElemId b) const;  // apply a, then b
  ElemId inverse_of(ElemId a) const { return inverses_[a]; }
  ElemId conjugate_elem(ElemId x, ElemId g) const;  // g^-1 x g
  uint64_t element_order(ElemId a) const { return orders_[a]; }

 private:
  Group() = default;
  void build_tables(Exec exec);

  Point degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> gens_;
  std::vector<ElemId> gen_ids_;
  std::vector<ElemId> inverses_;
  std::vector<uint64_t> orders_;
};

/// Handle to a subgroup of a fixed ambient group: the sorted id set plus a
/// small generating set.  Value-semantic; equality is ambient identity plus
/// element-set equality.
class Subgroup {
 public:
  Subgroup() = default;

  /// Wraps an explicit element set; verifies it really is a subgroup
  /// (throws NotSubgroup otherwise) and derives a generating set greedily.
  static Subgroup from_elements(GroupRef ambient, IdSet ids);

  /// Closure of `gen_ids` inside the ambient group.
  static Subgroup generated_ids(GroupRef ambient, IdSet gen_ids);

  /// Closure of explicit permutations; each must lie in the ambient group
  /// (throws NotSubgroup otherwise).
  static Subgroup generated(GroupRef ambient,
                            const std::vector<Permutation>& gens);

  static Subgroup whole(GroupRef ambient);
  static Subgroup trivial(GroupRef ambient);

  const GroupRef& ambient() const { return ambient_; }
  const IdSet& ids() const { return ids_; }
  const std::vector<ElemId>& generator_ids() const { return gen_ids_; }
  std::vector<Permutation> generator_perms() const;

  uint64_t order() const { return ids_.size(); }
  uint64_t index() const { return ambient_->order() / order(); }
  bool contains(ElemId id) const;
  bool is_trivial() const { return ids_.size() == 1; }
  bool is_whole() const { return ids_.size() == ambient_->order(); }

  bool operator==(const Subgroup& rhs) const {
    return ambient_.get() == rhs.ambient_.get() && ids_ == rhs.ids_;
  }

 private:
  GroupRef ambient_;
  IdSet ids_;
  std::vector<ElemId> gen_ids_;
};

// ---- low-level id-set kernels (ambient fixed and implicit) ----

IdSet intersect_ids(const IdSet& a, const IdSet& b);
IdSet conjugate_ids(const Group& g, const IdSet& ids, ElemId conjugator);
IdSet closure_ids(const Group& g, IdSet seed_ids);
bool subset_ids(const IdSet& a, const IdSet& b);

// ---- subgroup operations ----

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);
Subgroup conjugate_subgroup(const Subgroup& h, const Permutation& g);
Subgroup conjugate_subgroup(const Subgroup& h, ElemId g);

/// Largest normal subgroup of the ambient group contained in H; equals the
/// intersection of the conjugates of H over a right transversal.
Subgroup normal_core(const Subgroup& h);

Subgroup normalizer(const Subgroup& h);
Subgroup derived_subgroup(const Subgroup& h);
bool is_normal(const Subgroup& h);
bool is_abelian(const Subgroup& h);
bool is_solvable(const Subgroup& h);

/// True iff |H| has all prime divisors in pi and the index |G:H| has none.
bool is_hall(const Subgroup& h, const PrimeSet& pi);
bool hall_orders(uint64_t order, uint64_t index, const PrimeSet& pi);

/// Subgroup of order equal to the exact p-part of |G| (trivial if p does
/// not divide the order).  Built by normalizer extension from a cyclic
/// p-subgroup of maximal order; deterministic.
Subgroup sylow_subgroup(const GroupRef& g, uint64_t p);

/// Product of the cores of the Sylow subgroups over all primes dividing |G|.
Subgroup fitting_subgroup(const GroupRef& g);

/// core(G,H) for a pi-Hall subgroup H; throws NotHall when H is not one.
Subgroup o_pi(const Subgroup& h, const PrimeSet& pi);

/// Lexicographically least element of each right coset Hg, in increasing
/// id order; the first entry is always the identity.
std::vector<ElemId> right_transversal(const Subgroup& h);

struct ConjugateSet {
  IdSet ids;
  ElemId conjugator;  // least transversal element producing this conjugate
};

/// All distinct conjugates of H, sorted by element set.
std::vector<ConjugateSet> distinct_conjugates(const Subgroup& h);

}  // namespace basecert
