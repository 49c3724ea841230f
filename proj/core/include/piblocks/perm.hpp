#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace piblocks {

/// A permutation of {0, ..., n-1}, stored as its image sequence.
/// Products compose left to right: (a * b)[x] == b[a[x]].
class Perm {
 public:
  explicit Perm(int degree);                // identity
  explicit Perm(std::vector<int> images);   // validated bijection

  /// Builds from disjoint-or-not cycles of 1-based points, e.g. {{1,2},{3,4}}.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  int order() const;                        // lcm of cycle lengths
  int smallest_moved_point() const;         // -1 if identity

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

  /// Cycle notation on 1-based points, "()" for the identity.
  std::string cycle_string() const;

 private:
  std::vector<int> img_;
};

/// g^-1 * x * g.
Perm conjugate(const Perm& x, const Perm& g);

struct PermHash {
  std::size_t operator()(const Perm& p) const;
};

}  // namespace piblocks
