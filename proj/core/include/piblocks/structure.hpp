#pragma once

#include <map>
#include <string>
#include <vector>

#include "piblocks/group.hpp"

namespace piblocks {

/// A finite set of primes. Stored sorted and duplicate-free; every entry is
/// checked for primality on construction.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<long long> primes);

  static PrimeSet primes_of(long long n);  // primes dividing n

  const std::vector<long long>& primes() const { return primes_; }
  bool contains(long long p) const;
  bool empty() const { return primes_.empty(); }
  std::size_t size() const { return primes_.size(); }

  bool operator==(const PrimeSet&) const = default;

  /// "{2,3}" or "{}"; used verbatim in report lines.
  std::string to_string() const;

 private:
  std::vector<long long> primes_;
};

/// Largest divisor of n composed of primes in pi.
long long pi_part(long long n, const PrimeSet& pi);

/// Largest divisor of n coprime to every prime in pi (the pi'-part).
long long pi_prime_part(long long n, const PrimeSet& pi);

bool is_pi_number(long long n, const PrimeSet& pi);

/// O_pi(G): the largest normal pi-subgroup.
Subgroup pi_core(GroupPtr g, const PrimeSet& pi);

/// O_pi'(G): the largest normal subgroup of pi'-order.
Subgroup pi_prime_core(GroupPtr g, const PrimeSet& pi);

/// True iff the ascending series alternating O_pi' and O_pi quotients
/// reaches the trivial group.
bool is_pi_separable(GroupPtr g, const PrimeSet& pi);

/// A Hall pi-subgroup (order = |G|_pi), deterministic first hit of a
/// backtracking search over subgroups generated by pi-elements.
/// Throws SeparabilityError when g is not pi-separable.
Subgroup hall_pi_subgroup(GroupPtr g, const PrimeSet& pi);

/// Isomorphism-type label. Exact for order <= 15 via (order, abelian,
/// element-order multiset); larger orders degrade to "order<N>-unidentified".
struct GroupLabel {
  long long order = 1;
  std::string name;
  bool abelian = true;
  std::map<int, long long> fingerprint;  // element order -> count

  bool operator==(const GroupLabel&) const = default;
};

GroupLabel identify_group(const Group& g);

}  // namespace piblocks
