#pragma once

#include <compare>
#include <string>
#include <vector>

namespace polylink {

/// Permutation of {0, ..., n-1}. Composition is left to right: `a.then(b)`
/// applies a first, then b.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// images[i] is the image of i. Throws std::invalid_argument if not a bijection.
  explicit Permutation(std::vector<int> images);
  /// Builds from 0-based cycles; points not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int size() const { return static_cast<int>(images_.size()); }
  int operator[](int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  /// p^-1 * this * p in left-to-right order, i.e. relabelling points by p.
  Permutation conjugate_by(const Permutation& p) const;

  /// Cycles (fixed points included), each starting at its least element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle lengths, ascending.
  std::vector<int> cycle_type() const;
  int cycle_count() const;
  int order() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  /// Cycle notation with 1-based points, e.g. "(1 2)(3)".
  std::string str() const;

 private:
  std::vector<int> images_;
};

}  // namespace polylink
