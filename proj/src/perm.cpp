#include "basecert/perm.hpp"

#include <numeric>
#include <sstream>

#include "basecert/error.hpp"

namespace basecert {

Permutation Permutation::identity(Point degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point img : images_) {
    if (img >= images_.size() || seen[img])
      throw BadPermutation("image table is not a bijection on " +
                           std::to_string(images_.size()) + " points");
    seen[img] = 1;
  }
}

Permutation Permutation::from_cycles(Point degree, const std::string& text) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});

  std::vector<char> used(degree, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle text: " + text);
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point in cycle text: " + text);
      uint64_t v = 0;
      while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<uint64_t>(text[i] - '0');
        if (v > degree) throw ParseError("point exceeds degree in cycle text: " + text);
        ++i;
      }
      if (v == 0) throw ParseError("points are 1-based, got 0: " + text);
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unclosed cycle in: " + text);
    ++i;  // ')'
    any = true;
    for (size_t k = 0; k < cycle.size(); ++k) {
      Point from = cycle[k];
      Point to = cycle[(k + 1) % cycle.size()];
      if (used[from]) throw ParseError("point repeated in cycle text: " + text);
      used[from] = 1;
      images[from] = to;
    }
    skip_ws();
  }
  if (!any) throw ParseError("empty cycle text");
  return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<char> seen(images_.size(), 0);
  bool any = false;
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    Point p = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (p + 1);
      seen[p] = 1;
      p = images_[p];
      first = false;
    } while (p != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree())
    throw BadPermutation("degree mismatch in composition");
  Permutation result;
  result.images_.resize(images_.size());
  for (Point i = 0; i < degree(); ++i) result.images_[i] = rhs.images_[images_[i]];
  return result;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (Point i = 0; i < degree(); ++i) result.images_[images_[i]] = i;
  return result;
}

bool Permutation::is_identity() const {
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

uint64_t Permutation::order() const {
  std::vector<char> seen(images_.size(), 0);
  uint64_t result = 1;
  for (Point start = 0; start < degree(); ++start) {
    if (seen[start]) continue;
    uint64_t len = 0;
    Point p = start;
    do {
      seen[p] = 1;
      p = images_[p];
      ++len;
    } while (p != start);
    result = std::lcm(result, len);
  }
  return result;
}

Point Permutation::fixed_point_count() const {
  Point n = 0;
  for (Point i = 0; i < degree(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

size_t PermutationHash::operator()(const Permutation& p) const {
  // FNV-1a over the image words
  uint64_t h = 14695981039346656037ull;
  for (Point img : p.images()) {
    h ^= img;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

}  // namespace basecert
