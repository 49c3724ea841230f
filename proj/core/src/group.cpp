#include "piblocks/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

Group::Group(int degree, std::vector<Perm> generators) : degree_(degree) {
  if (degree < 1) throw InputError("group degree must be at least 1");
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " + std::to_string(degree));
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
  }
  for (std::size_t i = 0; i < gens_.size() && abelian_; ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) {
        abelian_ = false;
        break;
      }
  build_bsgs();
}

GroupPtr Group::make(int degree, std::vector<Perm> generators) {
  return std::make_shared<const Group>(degree, std::move(generators));
}

GroupPtr make_group(int degree, const std::vector<Perm>& generators) {
  return Group::make(degree, generators);
}

void Group::rebuild_levels(const std::vector<Perm>& strong) {
  // Base points are chosen ascending: each strong generator must move some
  // base point, new points taken as the smallest moved one.
  std::vector<int> base;
  for (const Perm& s : strong) {
    bool moves_base = false;
    for (int b : base)
      if (s[b] != b) {
        moves_base = true;
        break;
      }
    if (!moves_base) base.push_back(s.smallest_moved_point());
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  levels_.clear();
  for (int b : base) levels_.push_back(Level{b, {}, {}, {}});
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    for (const Perm& s : strong) {
      bool fixes_above = true;
      for (std::size_t j = 0; j < i; ++j)
        if (s[levels_[j].base_point] != levels_[j].base_point) {
          fixes_above = false;
          break;
        }
      if (fixes_above) levels_[i].gens.push_back(s);
    }
  }

  for (Level& lv : levels_) {
    lv.orbit.clear();
    lv.transversal.assign(degree_, std::nullopt);
    lv.orbit.push_back(lv.base_point);
    lv.transversal[lv.base_point] = Perm(degree_);
    for (std::size_t q = 0; q < lv.orbit.size(); ++q) {
      int p = lv.orbit[q];
      for (const Perm& s : lv.gens) {
        int r = s[p];
        if (!lv.transversal[r]) {
          lv.transversal[r] = *lv.transversal[p] * s;
          lv.orbit.push_back(r);
        }
      }
    }
  }

  order_ = 1;
  for (const Level& lv : levels_)
    order_ = checked_mul(order_, static_cast<long long>(lv.orbit.size()));
}

std::pair<Perm, std::size_t> Group::strip(Perm g) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    int p = g[levels_[i].base_point];
    if (!levels_[i].transversal[p]) return {std::move(g), i};
    g = g * levels_[i].transversal[p]->inverse();
  }
  return {std::move(g), levels_.size()};
}

void Group::build_bsgs() {
  std::vector<Perm> strong = gens_;
  rebuild_levels(strong);
  // Deterministic Schreier-Sims: test every Schreier generator, add the first
  // residue that fails to sift, rebuild, repeat until closed.
  for (;;) {
    bool dirty = false;
    for (std::size_t i = 0; i < levels_.size() && !dirty; ++i) {
      const Level& lv = levels_[i];
      for (int p : lv.orbit) {
        for (const Perm& s : lv.gens) {
          Perm u = *lv.transversal[p] * s * lv.transversal[s[p]]->inverse();
          auto [res, lev] = strip(std::move(u));
          if (!res.is_identity()) {
            strong.push_back(std::move(res));
            rebuild_levels(strong);
            dirty = true;
            break;
          }
        }
        if (dirty) break;
      }
    }
    if (!dirty) break;
  }
}

bool Group::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [res, lev] = strip(p);
  return lev == levels_.size() && res.is_identity();
}

void Group::enumerate_rec(std::size_t level, const Perm& suffix,
                          std::vector<Perm>& out) const {
  if (level == levels_.size()) {
    out.push_back(suffix);
    return;
  }
  for (int p : levels_[level].orbit)
    enumerate_rec(level + 1, *levels_[level].transversal[p] * suffix, out);
}

const Group::ClassData& Group::class_data() const {
  std::call_once(class_once_, [this] {
    if (order_ > kMaxEnumerationOrder)
      throw InputError("conjugacy classes need full enumeration; order " +
                       std::to_string(order_) + " exceeds " +
                       std::to_string(kMaxEnumerationOrder));
    auto data = std::make_unique<ClassData>();
    data->elements.reserve(order_);
    enumerate_rec(0, Perm(degree_), data->elements);
    for (int i = 0; i < static_cast<int>(data->elements.size()); ++i)
      data->index.emplace(data->elements[i], i);

    // Partition into classes by conjugation orbits, seeds scanned in lex
    // order so repeated runs agree.
    std::vector<int> by_lex(data->elements.size());
    std::iota(by_lex.begin(), by_lex.end(), 0);
    std::sort(by_lex.begin(), by_lex.end(), [&](int a, int b) {
      return data->elements[a] < data->elements[b];
    });

    data->class_of.assign(data->elements.size(), -1);
    std::vector<ConjClass> classes;
    for (int seed : by_lex) {
      if (data->class_of[seed] != -1) continue;
      int id = static_cast<int>(classes.size());
      std::deque<int> queue{seed};
      data->class_of[seed] = id;
      std::vector<int> members{seed};
      while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const Perm& g : gens_) {
          Perm c = conjugate(data->elements[cur], g);
          int ci = data->index.at(c);
          if (data->class_of[ci] == -1) {
            data->class_of[ci] = id;
            members.push_back(ci);
            queue.push_back(ci);
          }
        }
      }
      std::sort(members.begin(), members.end());
      ConjClass cc{data->elements[seed], static_cast<long long>(members.size()),
                   data->elements[seed].order(), std::move(members)};
      // The seed scan is in lex order, so the seed is the lex-least member.
      classes.push_back(std::move(cc));
    }

    std::vector<int> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      const ConjClass &x = classes[a], &y = classes[b];
      if (x.element_order != y.element_order) return x.element_order < y.element_order;
      if (x.size != y.size) return x.size < y.size;
      return x.rep < y.rep;
    });
    std::vector<int> new_id(classes.size());
    for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = static_cast<int>(i);
    data->classes.reserve(classes.size());
    for (int old : perm) data->classes.push_back(std::move(classes[old]));
    for (int& c : data->class_of) c = new_id[c];

    data->exponent = 1;
    for (const ConjClass& c : data->classes)
      data->exponent = static_cast<int>(std::lcm<long long>(data->exponent, c.element_order));
    class_data_ = std::move(data);
  });
  return *class_data_;
}

const std::vector<Perm>& Group::elements() const { return class_data().elements; }

const std::vector<ConjClass>& Group::classes() const { return class_data().classes; }

int Group::class_of(const Perm& p) const {
  const ClassData& d = class_data();
  auto it = d.index.find(p);
  if (it == d.index.end()) throw InputError("element does not belong to the group");
  return d.class_of[it->second];
}

int Group::element_index(const Perm& p) const {
  const ClassData& d = class_data();
  auto it = d.index.find(p);
  if (it == d.index.end()) throw InputError("element does not belong to the group");
  return it->second;
}

int Group::exponent() const { return class_data().exponent; }

std::map<int, long long> Group::element_order_counts() const {
  std::map<int, long long> out;
  for (const ConjClass& c : classes()) out[c.element_order] += c.size;
  return out;
}

std::vector<ConjClass> conjugacy_classes(const Group& g) { return g.classes(); }

Subgroup::Subgroup(GroupPtr parent, std::vector<Perm> generators)
    : parent_(std::move(parent)),
      normal_(std::make_shared<std::atomic<int>>(-1)) {
  for (const Perm& g : generators)
    if (!parent_->contains(g))
      throw InputError("subgroup generator " + g.cycle_string() +
                       " is not a member of the parent group");
  group_ = Group::make(parent_->degree(), std::move(generators));
}

bool Subgroup::is_normal() const {
  int cached = normal_->load();
  if (cached != -1) return cached == 1;
  bool ok = true;
  for (const Perm& g : parent_->generators()) {
    for (const Perm& n : group_->generators())
      if (!group_->contains(conjugate(n, g))) {
        ok = false;
        break;
      }
    if (!ok) break;
  }
  normal_->store(ok ? 1 : 0);
  return ok;
}

Subgroup normal_closure(GroupPtr g, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  for (const Perm& s : seeds) {
    if (!g->contains(s)) throw InputError("normal closure seed is not a group member");
    if (!s.is_identity()) gens.push_back(s);
  }
  GroupPtr h = Group::make(g->degree(), gens);
  for (;;) {
    std::vector<Perm> added;
    for (const Perm& parent_gen : g->generators())
      for (const Perm& n : h->generators()) {
        Perm c = conjugate(n, parent_gen);
        if (!h->contains(c)) added.push_back(std::move(c));
      }
    if (added.empty()) break;
    for (Perm& c : added) gens.push_back(std::move(c));
    h = Group::make(g->degree(), gens);
  }
  return Subgroup(std::move(g), gens);
}

std::vector<int> class_fusion(const Group& parent, const Group& sub) {
  for (const Perm& g : sub.generators())
    if (!parent.contains(g))
      throw InputError("class fusion requires a subgroup of the parent");
  std::vector<int> fusion;
  fusion.reserve(sub.classes().size());
  for (const ConjClass& c : sub.classes()) fusion.push_back(parent.class_of(c.rep));
  return fusion;
}

namespace {

Perm canonical_coset_rep(const std::vector<Perm>& normal_elements, const Perm& g) {
  const Perm* best = nullptr;
  Perm candidate = g;
  for (const Perm& n : normal_elements) {
    Perm ng = n * g;
    if (!best || ng < candidate) {
      candidate = std::move(ng);
      best = &candidate;
    }
  }
  return candidate;
}

}  // namespace

Perm QuotientMap::operator()(const Perm& g) const {
  if (!parent_->contains(g)) throw InputError("projection argument is not a group member");
  std::vector<int> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i)
    img[i] = index_.at(canonical_coset_rep(normal_elements_, reps_[i] * g));
  return Perm(std::move(img));
}

int QuotientMap::coset_of(const Perm& g) const {
  return index_.at(canonical_coset_rep(normal_elements_, g));
}

std::pair<GroupPtr, QuotientMap> quotient_group(GroupPtr g, const Subgroup& n) {
  for (const Perm& x : n.group().generators())
    if (!g->contains(x))
      throw InputError("quotient subgroup is not contained in the group");
  for (const Perm& s : g->generators())
    for (const Perm& x : n.group().generators())
      if (!n.group().contains(conjugate(x, s)))
        throw InputError("quotient requires a normal subgroup");

  QuotientMap qm;
  qm.parent_ = g;
  qm.normal_elements_ = n.group().elements();

  // BFS over right cosets, generators in order, so coset numbering is
  // reproducible.
  Perm id_rep = canonical_coset_rep(qm.normal_elements_, Perm(g->degree()));
  qm.reps_.push_back(id_rep);
  qm.index_.emplace(id_rep, 0);
  for (std::size_t q = 0; q < qm.reps_.size(); ++q) {
    for (const Perm& s : g->generators()) {
      Perm rep = canonical_coset_rep(qm.normal_elements_, qm.reps_[q] * s);
      if (!qm.index_.count(rep)) {
        qm.index_.emplace(rep, static_cast<int>(qm.reps_.size()));
        qm.reps_.push_back(std::move(rep));
      }
    }
  }

  std::vector<Perm> quotient_gens;
  for (const Perm& s : g->generators()) {
    std::vector<int> img(qm.reps_.size());
    for (std::size_t i = 0; i < qm.reps_.size(); ++i)
      img[i] = qm.index_.at(canonical_coset_rep(qm.normal_elements_, qm.reps_[i] * s));
    quotient_gens.emplace_back(std::move(img));
  }
  GroupPtr q = Group::make(static_cast<int>(qm.reps_.size()), quotient_gens);
  if (checked_mul(q->order(), n.order()) != g->order())
    throw ConsistencyError("coset action order mismatch");
  return {std::move(q), std::move(qm)};
}

}  // namespace piblocks
