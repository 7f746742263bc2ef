#pragma once

#include <cstdint>

#include "basecert/group.hpp"
#include "basecert/rational.hpp"

namespace basecert {

/// Action of G on the right cosets of H by right multiplication.  The
/// induced image group on coset points is faithful for G/core(G,H) and
/// transitive.  Points are numbered by increasing least coset element, so
/// point 0 is the coset H itself.
class CosetSpace {
 public:
  static CosetSpace build(GroupRef g, const Subgroup& h,
                          Exec exec = Exec::parallel);

  const GroupRef& ambient() const { return ambient_; }
  const Subgroup& stabilizer() const { return stabilizer_; }
  const Subgroup& kernel() const { return kernel_; }

  uint32_t point_count() const { return static_cast<uint32_t>(reps_.size()); }
  ElemId rep(uint32_t point) const { return reps_[point]; }
  uint32_t coset_of(ElemId id) const { return coset_of_[id]; }

  /// Permutation of the coset points induced by an ambient element.
  const Permutation& action(ElemId id) const { return action_[id]; }

  /// The image group on coset points.
  const GroupRef& image() const { return image_; }

  /// Homomorphism G -> image() in element ids.
  ElemId image_of(ElemId id) const { return image_of_[id]; }

  uint32_t fix_count(ElemId id) const { return action_[id].fixed_point_count(); }
  uint32_t fix_count(const Permutation& x) const;

  Rational fpr(ElemId id) const;
  Rational fpr(const Permutation& x) const;

 private:
  GroupRef ambient_;
  Subgroup stabilizer_;
  Subgroup kernel_;
  std::vector<ElemId> reps_;
  std::vector<uint32_t> coset_of_;
  std::vector<Permutation> action_;
  GroupRef image_;
  std::vector<ElemId> image_of_;
};

/// |x^G ∩ H| / |x^G| from the conjugacy class of x, no coset space needed.
Rational fpr_via_class(const Subgroup& h, ElemId x);
Rational fpr_via_class(const Subgroup& h, const Permutation& x);

/// The conjugacy class of x as a sorted id set.
IdSet conjugacy_class_of(const Group& g, ElemId x);

}  // namespace basecert
