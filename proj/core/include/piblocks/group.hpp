#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "piblocks/perm.hpp"

namespace piblocks {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

struct ConjClass {
  Perm rep;                  // lexicographically least member
  long long size = 0;
  int element_order = 0;
  std::vector<int> members;  // indices into Group::elements(), ascending
};

/// A finite permutation group with a base and strong generating set.
/// Immutable after construction; class data is computed once on first use.
/// Conjugacy classes are found by full element enumeration and are ordered
/// by (element order, class size, lex-least member); class 0 is {identity}.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static constexpr long long kMaxEnumerationOrder = 100000;

  static GroupPtr make(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  long long order() const { return order_; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& p) const;
  bool is_trivial() const { return order_ == 1; }
  bool is_abelian() const { return abelian_; }

  /// All elements; requires order() <= kMaxEnumerationOrder.
  const std::vector<Perm>& elements() const;
  const std::vector<ConjClass>& classes() const;
  int class_of(const Perm& p) const;  // InputError if p is not a member
  int element_index(const Perm& p) const;
  int exponent() const;

  /// Multiset of element orders as (order, count) pairs.
  std::map<int, long long> element_order_counts() const;

  Group(int degree, std::vector<Perm> generators);  // prefer make()

 private:
  struct ClassData {
    std::vector<Perm> elements;
    std::unordered_map<Perm, int, PermHash> index;
    std::vector<ConjClass> classes;
    std::vector<int> class_of;  // by element index
    int exponent = 1;
  };

  struct Level {
    int base_point = 0;
    std::vector<Perm> gens;
    std::vector<int> orbit;                      // BFS order
    std::vector<std::optional<Perm>> transversal; // by point
  };

  void build_bsgs();
  void rebuild_levels(const std::vector<Perm>& strong);
  std::pair<Perm, std::size_t> strip(Perm g) const;
  void enumerate_rec(std::size_t level, const Perm& suffix,
                     std::vector<Perm>& out) const;
  const ClassData& class_data() const;

  int degree_;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
  long long order_ = 1;
  bool abelian_ = true;

  mutable std::once_flag class_once_;
  mutable std::unique_ptr<ClassData> class_data_;
};

/// Builds a group with order and membership structure computed exactly.
GroupPtr make_group(int degree, const std::vector<Perm>& generators);

/// A subgroup remembered together with its ambient group. Generators are
/// membership-checked against the parent on construction.
class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Perm> generators);

  const Group& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  const Group& parent() const { return *parent_; }
  GroupPtr parent_ptr() const { return parent_; }
  long long order() const { return group_->order(); }
  long long index() const { return parent_->order() / group_->order(); }

  bool is_normal() const;
  bool contains(const Perm& p) const { return group_->contains(p); }

 private:
  GroupPtr parent_;
  GroupPtr group_;
  // -1 unknown, else 0/1; idempotent to recompute, so no lock is needed
  std::shared_ptr<std::atomic<int>> normal_;
};

std::vector<ConjClass> conjugacy_classes(const Group& g);

/// Smallest normal subgroup of g containing the seeds.
Subgroup normal_closure(GroupPtr g, const std::vector<Perm>& seeds);

/// H-class index -> G-class index, for H a subgroup of G.
std::vector<int> class_fusion(const Group& parent, const Group& sub);

/// The induced permutation of coset indices; kernel is exactly the subgroup
/// the quotient was formed by.
class QuotientMap {
 public:
  Perm operator()(const Perm& g) const;
  int coset_of(const Perm& g) const;
  int coset_count() const { return static_cast<int>(reps_.size()); }

 private:
  friend std::pair<GroupPtr, QuotientMap> quotient_group(GroupPtr, const Subgroup&);
  GroupPtr parent_;
  std::vector<Perm> normal_elements_;
  std::vector<Perm> reps_;  // canonical (lex-least) coset representatives
  std::unordered_map<Perm, int, PermHash> index_;
};

/// Faithful action of g on the right cosets of a normal subgroup n.
std::pair<GroupPtr, QuotientMap> quotient_group(GroupPtr g, const Subgroup& n);

}  // namespace piblocks
