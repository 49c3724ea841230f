#include "piblocks/perm.hpp"

#include <numeric>
#include <sstream>

#include "piblocks/errors.hpp"

namespace piblocks {

Perm::Perm(int degree) : img_(degree) {
  if (degree < 1) throw InputError("permutation degree must be at least 1");
  std::iota(img_.begin(), img_.end(), 0);
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  if (img_.empty()) throw InputError("permutation degree must be at least 1");
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw InputError("image sequence is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  if (degree < 1) throw InputError("permutation degree must be at least 1");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw InputError("cycle point out of range 1.." + std::to_string(degree));
      if (img[from - 1] != from - 1)
        throw InputError("point " + std::to_string(from) + " appears twice in cycles");
      img[from - 1] = to - 1;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return false;
  return true;
}

int Perm::order() const {
  std::vector<char> done(img_.size(), 0);
  long long ord = 1;
  for (int x = 0; x < degree(); ++x) {
    if (done[x]) continue;
    int len = 0, y = x;
    do {
      done[y] = 1;
      y = img_[y];
      ++len;
    } while (y != x);
    ord = std::lcm(ord, static_cast<long long>(len));
  }
  return static_cast<int>(ord);
}

int Perm::smallest_moved_point() const {
  for (int x = 0; x < degree(); ++x)
    if (img_[x] != x) return x;
  return -1;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) throw InputError("permutation degree mismatch");
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[x] = rhs.img_[img_[x]];
  Perm p(1);
  p.img_ = std::move(img);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (int x = 0; x < degree(); ++x) img[img_[x]] = x;
  Perm p(1);
  p.img_ = std::move(img);
  return p;
}

std::string Perm::cycle_string() const {
  std::ostringstream os;
  std::vector<char> done(img_.size(), 0);
  bool any = false;
  for (int x = 0; x < degree(); ++x) {
    if (done[x] || img_[x] == x) continue;
    any = true;
    os << '(';
    int y = x;
    bool first = true;
    do {
      if (!first) os << ' ';
      os << y + 1;
      done[y] = 1;
      y = img_[y];
      first = false;
    } while (y != x);
    os << ')';
  }
  return any ? os.str() : "()";
}

Perm conjugate(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

std::size_t PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : p.images()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace piblocks
