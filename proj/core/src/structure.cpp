#include "piblocks/structure.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

PrimeSet::PrimeSet(std::vector<long long> primes) : primes_(std::move(primes)) {
  for (long long p : primes_)
    if (!is_prime(p))
      throw InputError("prime set entry " + std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::primes_of(long long n) { return PrimeSet(prime_divisors(n)); }

bool PrimeSet::contains(long long p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::string PrimeSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i) os << ',';
    os << primes_[i];
  }
  os << '}';
  return os.str();
}

long long pi_part(long long n, const PrimeSet& pi) {
  if (n < 1) throw InputError("pi_part: argument must be positive");
  long long part = 1;
  for (long long p : pi.primes())
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

long long pi_prime_part(long long n, const PrimeSet& pi) {
  return n / pi_part(n, pi);
}

bool is_pi_number(long long n, const PrimeSet& pi) { return pi_part(n, pi) == n; }

namespace {

// O_pi(G) is generated by the classes whose normal closure is a pi-group:
// each such closure is a normal pi-subgroup and so lies inside O_pi(G), and
// every element of O_pi(G) has its normal closure inside it.
Subgroup core_by_predicate(GroupPtr g, const std::function<bool(long long)>& keep) {
  std::vector<Perm> gens;
  for (const ConjClass& c : g->classes()) {
    if (c.rep.is_identity()) continue;
    Subgroup closure = normal_closure(g, {c.rep});
    if (keep(closure.order()))
      for (const Perm& x : closure.group().generators()) gens.push_back(x);
  }
  return Subgroup(std::move(g), gens);
}

}  // namespace

Subgroup pi_core(GroupPtr g, const PrimeSet& pi) {
  return core_by_predicate(std::move(g), [&](long long n) { return is_pi_number(n, pi); });
}

Subgroup pi_prime_core(GroupPtr g, const PrimeSet& pi) {
  return core_by_predicate(std::move(g), [&](long long n) { return pi_part(n, pi) == 1; });
}

bool is_pi_separable(GroupPtr g, const PrimeSet& pi) {
  GroupPtr current = g;
  while (current->order() > 1) {
    Subgroup n = pi_prime_core(current, pi);
    if (n.order() == 1) n = pi_core(current, pi);
    if (n.order() == 1) return false;
    current = quotient_group(current, n).first;
  }
  return true;
}

namespace {

bool hall_search(int degree, const std::vector<Perm>& candidates, long long target,
                 std::vector<Perm>& gens, GroupPtr current, std::size_t start,
                 GroupPtr& found) {
  if (current->order() == target) {
    found = current;
    return true;
  }
  for (std::size_t i = start; i < candidates.size(); ++i) {
    if (current->contains(candidates[i])) continue;
    gens.push_back(candidates[i]);
    GroupPtr next = Group::make(degree, gens);
    // a subgroup is a pi-group iff its order divides the pi-part of |G|
    if (target % next->order() == 0 &&
        hall_search(degree, candidates, target, gens, next, i + 1, found))
      return true;
    gens.pop_back();
  }
  return false;
}

}  // namespace

Subgroup hall_pi_subgroup(GroupPtr g, const PrimeSet& pi) {
  if (!is_pi_separable(g, pi))
    throw SeparabilityError("hall_pi_subgroup requires a pi-separable group");
  long long target = pi_part(g->order(), pi);
  if (target == 1) return Subgroup(g, {});
  if (target == g->order()) return Subgroup(g, g->generators());

  std::vector<Perm> candidates;
  for (const Perm& e : g->elements())
    if (!e.is_identity() && is_pi_number(e.order(), pi)) candidates.push_back(e);
  std::sort(candidates.begin(), candidates.end());

  std::vector<Perm> gens;
  GroupPtr found;
  if (!hall_search(g->degree(), candidates, target, gens,
                   Group::make(g->degree(), {}), 0, found))
    throw ConsistencyError("Hall subgroup search failed on a separable group");
  return Subgroup(std::move(g), found->generators());
}

namespace {

std::string abelian_label(long long order, const std::map<int, long long>& orders) {
  auto has = [&](int k) { return orders.count(k) != 0; };
  switch (order) {
    case 1: return "C1";
    case 2: return "C2";
    case 3: return "C3";
    case 4: return has(4) ? "C4" : "C2xC2";
    case 5: return "C5";
    case 6: return "C6";
    case 7: return "C7";
    case 8:
      if (has(8)) return "C8";
      return has(4) ? "C4xC2" : "C2xC2xC2";
    case 9: return has(9) ? "C9" : "C3xC3";
    case 10: return "C10";
    case 11: return "C11";
    case 12: return has(12) ? "C12" : "C6xC2";
    case 13: return "C13";
    case 14: return "C14";
    case 15: return "C15";
    default: return "";
  }
}

std::string nonabelian_label(long long order, const std::map<int, long long>& orders) {
  auto count = [&](int k) {
    auto it = orders.find(k);
    return it == orders.end() ? 0ll : it->second;
  };
  switch (order) {
    case 6: return "S3";
    case 8: return count(2) == 5 ? "D8" : "Q8";
    case 10: return "D10";
    case 12:
      if (count(2) == 3) return "A4";
      if (count(2) == 7) return "D12";
      return "Dic3";
    case 14: return "D14";
    default: return "";
  }
}

}  // namespace

GroupLabel identify_group(const Group& g) {
  GroupLabel label;
  label.order = g.order();
  label.abelian = g.is_abelian();
  label.fingerprint = g.element_order_counts();
  std::string name = label.abelian ? abelian_label(label.order, label.fingerprint)
                                   : nonabelian_label(label.order, label.fingerprint);
  label.name =
      name.empty() ? "order" + std::to_string(label.order) + "-unidentified" : name;
  return label;
}

}  // namespace piblocks
