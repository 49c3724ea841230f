#pragma once

#include <optional>
#include <vector>

#include "piblocks/cyclo.hpp"
#include "piblocks/group.hpp"

namespace piblocks {

/// Exact irreducible character table. Rows are indexed by character, columns
/// by conjugacy class in the group's canonical class order. Row 0 is the
/// trivial character; the remaining rows are sorted by degree and then
/// lexicographically by value coefficient sequences.
struct CharacterTable {
  GroupPtr group;
  int conductor = 1;  // group exponent
  std::vector<std::vector<Cyclo>> rows;
  std::vector<long long> degrees;

  int character_count() const { return static_cast<int>(rows.size()); }
  int class_count() const { return static_cast<int>(rows.empty() ? 0 : rows[0].size()); }
};

/// Dixon-Schneider: eigenvectors of class-sum matrices over F_q for the
/// smallest prime q = 1 (mod exponent) with q > 2*sqrt(|G|), lifted to exact
/// cyclotomic values through discrete logarithms of a fixed primitive root.
/// Fully deterministic: class matrices are consumed in canonical class order
/// and eigenvalues scanned ascending.
CharacterTable character_table(GroupPtr g);

struct ClassFunction {
  GroupPtr group;
  std::vector<Cyclo> values;  // one per conjugacy class
};

ClassFunction table_row(const CharacterTable& table, int chi);
ClassFunction trivial_character(GroupPtr g);

/// (1/|G|) sum over classes of size * a * conj(b). Exact; throws
/// ConsistencyError when the sum is not divisible by |G| (never the case for
/// differences of characters).
Cyclo inner_product(const ClassFunction& a, const ClassFunction& b);

/// Value at an H-class is the value at the fused G-class.
ClassFunction restrict_character(const ClassFunction& f, GroupPtr sub,
                                 const std::vector<int>& fusion);

/// Induced class function; satisfies Frobenius reciprocity exactly.
ClassFunction induce_character(const ClassFunction& f, GroupPtr g,
                               const std::vector<int>& fusion);

/// Subgroup generated by the classes where the character attains its degree.
Subgroup character_kernel(const CharacterTable& table, int chi);

/// Irr(G | lambda): rows whose restriction to n has lambda as a constituent.
/// n must be normal in the table's group.
std::vector<int> irr_over(const CharacterTable& g_table, const Subgroup& n,
                          const CharacterTable& n_table, int lambda);

/// Multiplicity of n_table row psi in the restriction of g_table row chi.
Cyclo restriction_multiplicity(const CharacterTable& g_table, int chi,
                               const CharacterTable& n_table,
                               const std::vector<int>& fusion, int psi);

/// Index of the row equal to the given class function, if any.
std::optional<int> find_row(const CharacterTable& table, const ClassFunction& f);

}  // namespace piblocks
