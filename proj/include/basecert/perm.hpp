#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace basecert {

using Point = uint32_t;

/// Permutation of {0, ..., degree-1} stored as an image table.
/// Composition is left-to-right: (p * q) means "apply p, then q".
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(Point degree);

  /// Validates that `images` is a bijection, throws BadPermutation otherwise.
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint-cycle text with 1-based points, e.g. "(1 2 3)(4 5)".
  /// "()" denotes the identity.  Points must not exceed `degree`.
  static Permutation from_cycles(Point degree, const std::string& text);

  /// 1-based disjoint-cycle form; "()" for the identity.
  std::string to_cycles() const;

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point apply(Point i) const { return images_[i]; }
  Point operator()(Point i) const { return images_[i]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;
  uint64_t order() const;
  Point fixed_point_count() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation& rhs) const {
    return images_ <=> rhs.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  size_t operator()(const Permutation& p) const;
};

}  // namespace basecert
