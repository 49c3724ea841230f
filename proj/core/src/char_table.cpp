#include "piblocks/char_table.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "piblocks/errors.hpp"
#include "piblocks/numeric.hpp"

namespace piblocks {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

// Monic characteristic polynomial over F_q, coefficients ascending.
// Reduce to upper Hessenberg by similarity, then use the standard
// last-column expansion recurrence on the leading principal minors.
Vec char_poly(Mat h, std::uint64_t q) {
  const std::size_t m = h.size();
  for (std::size_t j = 0; j + 2 < m; ++j) {
    std::size_t pivot = 0;
    for (std::size_t r = j + 1; r < m; ++r)
      if (h[r][j] != 0) {
        pivot = r;
        break;
      }
    if (pivot == 0) continue;
    if (pivot != j + 1) {
      std::swap(h[pivot], h[j + 1]);
      for (std::size_t r = 0; r < m; ++r) std::swap(h[r][pivot], h[r][j + 1]);
    }
    std::uint64_t inv = mod_inv(h[j + 1][j], q);
    for (std::size_t r = j + 2; r < m; ++r) {
      std::uint64_t f = h[r][j] * inv % q;
      if (f == 0) continue;
      for (std::size_t c = 0; c < m; ++c)
        h[r][c] = (h[r][c] + (q - f) * h[j + 1][c]) % q;
      for (std::size_t r2 = 0; r2 < m; ++r2)
        h[r2][j + 1] = (h[r2][j + 1] + f * h[r2][r]) % q;
    }
  }

  std::vector<Vec> p(m + 1);
  p[0] = {1};
  for (std::size_t r = 1; r <= m; ++r) {
    Vec cur(r + 1, 0);
    // (x - H[r-1][r-1]) * p[r-1]
    std::uint64_t diag = h[r - 1][r - 1];
    for (std::size_t t = 0; t < p[r - 1].size(); ++t) {
      cur[t + 1] = (cur[t + 1] + p[r - 1][t]) % q;
      cur[t] = (cur[t] + (q - diag) * p[r - 1][t]) % q;
    }
    std::uint64_t prod = 1;
    for (std::size_t s = 1; s < r; ++s) {
      prod = prod * h[r - s][r - s - 1] % q;
      if (prod == 0) break;
      std::uint64_t coeff = h[r - 1 - s][r - 1] * prod % q;
      if (coeff == 0) continue;
      for (std::size_t t = 0; t < p[r - 1 - s].size(); ++t)
        cur[t] = (cur[t] + (q - coeff) * p[r - 1 - s][t]) % q;
    }
    p[r] = std::move(cur);
  }
  return p[m];
}

std::uint64_t poly_eval(const Vec& poly, std::uint64_t x, std::uint64_t q) {
  std::uint64_t acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = (acc * x + poly[i]) % q;
  return acc;
}

// Basis of the kernel, deterministic: one vector per free column, ascending.
std::vector<Vec> null_space(Mat a, std::uint64_t q) {
  const std::size_t m = a.size();
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < m; ++col) {
    std::size_t sel = row;
    while (sel < m && a[sel][col] == 0) ++sel;
    if (sel == m) continue;
    std::swap(a[sel], a[row]);
    std::uint64_t inv = mod_inv(a[row][col], q);
    for (std::size_t c = 0; c < m; ++c) a[row][c] = a[row][c] * inv % q;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || a[r][col] == 0) continue;
      std::uint64_t f = a[r][col];
      for (std::size_t c = 0; c < m; ++c)
        a[r][c] = (a[r][c] + (q - f) * a[row][c]) % q;
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  std::vector<char> is_pivot(m, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < m; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(m, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = (q - a[r][free_col]) % q;
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of target in the given basis of k-vectors.
Vec solve_in_basis(const std::vector<Vec>& basis, const Vec& target, std::uint64_t q) {
  const std::size_t k = target.size(), m = basis.size();
  Mat aug(k, Vec(m + 1, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < m; ++c) aug[r][c] = basis[c][r];
    aug[r][m] = target[r];
  }
  std::vector<int> pivot_col(m, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < k; ++col) {
    std::size_t sel = row;
    while (sel < k && aug[sel][col] == 0) ++sel;
    if (sel == k) continue;
    std::swap(aug[sel], aug[row]);
    std::uint64_t inv = mod_inv(aug[row][col], q);
    for (std::size_t c = 0; c <= m; ++c) aug[row][c] = aug[row][c] * inv % q;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || aug[r][col] == 0) continue;
      std::uint64_t f = aug[r][col];
      for (std::size_t c = 0; c <= m; ++c)
        aug[r][c] = (aug[r][c] + (q - f) * aug[row][c]) % q;
    }
    pivot_col[col] = static_cast<int>(row);
    ++row;
  }
  Vec coords(m, 0);
  for (std::size_t c = 0; c < m; ++c)
    if (pivot_col[c] >= 0) coords[c] = aug[pivot_col[c]][m];
  for (std::size_t r = row; r < k; ++r)
    if (aug[r][m] != 0)
      throw ConsistencyError("class matrix does not stabilize an eigenspace");
  return coords;
}

struct Dixon {
  GroupPtr gp;
  int k = 0;
  int e = 1;
  long long order = 1;
  std::uint64_t q = 0;
  std::uint64_t z = 0;
  std::vector<int> inverse_class;
  std::vector<std::vector<int>> power_class;
  std::vector<std::uint64_t> size_mod, size_inv;

  explicit Dixon(GroupPtr g) : gp(std::move(g)) {
    const Group& grp = *gp;
    k = static_cast<int>(grp.classes().size());
    e = grp.exponent();
    order = grp.order();

    for (long long cand = e + 1;; cand += e) {
      if (cand < 3) continue;
      if (cand * cand > 4 * order && is_prime(cand)) {
        q = static_cast<std::uint64_t>(cand);
        break;
      }
    }
    if (q >= (1ull << 20)) throw ConsistencyError("working prime unexpectedly large");

    std::uint64_t g0 = 2;
    auto qm1_primes = prime_divisors(static_cast<long long>(q - 1));
    for (;; ++g0) {
      bool ok = true;
      for (long long l : qm1_primes)
        if (mod_pow(g0, (q - 1) / static_cast<std::uint64_t>(l), q) == 1) {
          ok = false;
          break;
        }
      if (ok) break;
    }
    z = mod_pow(g0, (q - 1) / static_cast<std::uint64_t>(e), q);

    inverse_class.resize(k);
    power_class.resize(k);
    size_mod.resize(k);
    size_inv.resize(k);
    for (int i = 0; i < k; ++i) {
      const ConjClass& c = grp.classes()[i];
      inverse_class[i] = grp.class_of(c.rep.inverse());
      power_class[i].resize(c.element_order);
      Perm cur(grp.degree());
      for (int s = 0; s < c.element_order; ++s) {
        power_class[i][s] = grp.class_of(cur);
        cur = cur * c.rep;
      }
      size_mod[i] = static_cast<std::uint64_t>(c.size % static_cast<long long>(q));
      size_inv[i] = mod_inv(size_mod[i], q);
    }
  }

  // (M_i)[j][l] = #{(x, y) in C_i x C_j : x y = rep_l}, reduced mod q.
  Mat class_matrix(int i) const {
    const Group& grp = *gp;
    Mat a(k, Vec(k, 0));
    const ConjClass& ci = grp.classes()[i];
    for (int x_idx : ci.members) {
      Perm xinv = grp.elements()[x_idx].inverse();
      for (int l = 0; l < k; ++l) {
        int j = grp.class_of(xinv * grp.classes()[l].rep);
        ++a[j][l];
      }
    }
    for (auto& row : a)
      for (auto& v : row) v %= q;
    return a;
  }

  Vec apply(const Mat& a, const Vec& v) const {
    Vec r(k, 0);
    for (int i = 0; i < k; ++i) {
      std::uint64_t acc = 0;
      for (int j = 0; j < k; ++j) acc = (acc + a[i][j] * v[j]) % q;
      r[i] = acc;
    }
    return r;
  }
};

}  // namespace

CharacterTable character_table(GroupPtr g) {
  Dixon dx(g);
  const std::uint64_t q = dx.q;
  const int k = dx.k;

  // Split F_q^k into common eigenspaces of the class-sum matrices.
  std::vector<std::vector<Vec>> subspaces;
  {
    std::vector<Vec> full;
    for (int i = 0; i < k; ++i) {
      Vec e_i(k, 0);
      e_i[i] = 1;
      full.push_back(std::move(e_i));
    }
    subspaces.push_back(std::move(full));
  }
  for (int i = 1; i < k; ++i) {
    bool split_done = std::all_of(subspaces.begin(), subspaces.end(),
                                  [](const auto& w) { return w.size() == 1; });
    if (split_done) break;
    Mat a = dx.class_matrix(i);
    std::vector<std::vector<Vec>> next;
    for (auto& w : subspaces) {
      if (w.size() == 1) {
        next.push_back(std::move(w));
        continue;
      }
      const std::size_t m = w.size();
      Mat x(m, Vec(m, 0));
      for (std::size_t c = 0; c < m; ++c) {
        Vec coords = solve_in_basis(w, dx.apply(a, w[c]), q);
        for (std::size_t r = 0; r < m; ++r) x[r][c] = coords[r];
      }
      Vec cp = char_poly(x, q);
      std::size_t found = 0;
      for (std::uint64_t lambda = 0; lambda < q && found < m; ++lambda) {
        if (poly_eval(cp, lambda, q) != 0) continue;
        Mat shifted = x;
        for (std::size_t d = 0; d < m; ++d)
          shifted[d][d] = (shifted[d][d] + q - lambda) % q;
        std::vector<Vec> ns = null_space(shifted, q);
        if (ns.empty()) continue;
        std::vector<Vec> lifted;
        for (const Vec& v : ns) {
          Vec w_vec(k, 0);
          for (std::size_t j = 0; j < m; ++j) {
            if (v[j] == 0) continue;
            for (int t = 0; t < k; ++t)
              w_vec[t] = (w_vec[t] + v[j] * w[j][t]) % q;
          }
          lifted.push_back(std::move(w_vec));
        }
        found += lifted.size();
        next.push_back(std::move(lifted));
      }
      if (found != m)
        throw ConsistencyError("eigenspace split lost dimensions");
    }
    subspaces = std::move(next);
  }
  for (const auto& w : subspaces)
    if (w.size() != 1)
      throw ConsistencyError("class matrices failed to separate characters");

  // Central character rows omega, normalized at the identity class.
  std::vector<Vec> omega;
  for (const auto& w : subspaces) {
    Vec v = w[0];
    if (v[0] == 0) throw ConsistencyError("eigenvector vanishes at the identity class");
    std::uint64_t inv = mod_inv(v[0], q);
    for (auto& x : v) x = x * inv % q;
    omega.push_back(std::move(v));
  }

  const long long order = dx.order;
  const std::uint64_t order_mod = static_cast<std::uint64_t>(order % static_cast<long long>(q));
  const int e = dx.e;

  struct RawRow {
    long long degree;
    std::vector<Cyclo> values;
  };
  std::vector<RawRow> raw;
  for (const Vec& om : omega) {
    std::uint64_t s = 0;
    for (int i = 0; i < k; ++i)
      s = (s + om[i] * om[dx.inverse_class[i]] % q * dx.size_inv[i]) % q;
    std::uint64_t d_sq = order_mod * mod_inv(s, q) % q;
    long long degree = -1;
    for (std::uint64_t d = 1; 2 * d < q; ++d)
      if (d * d % q == d_sq) {
        degree = static_cast<long long>(d);
        break;
      }
    if (degree < 0) throw ConsistencyError("character degree not recoverable");

    Vec chi_mod(k);
    for (int i = 0; i < k; ++i)
      chi_mod[i] = static_cast<std::uint64_t>(degree) * om[i] % q * dx.size_inv[i] % q;

    std::vector<Cyclo> values(k);
    for (int i = 0; i < k; ++i) {
      int o = dx.gp->classes()[i].element_order;
      std::uint64_t zo = mod_pow(dx.z, static_cast<std::uint64_t>(e / o), q);
      std::uint64_t o_inv = mod_inv(static_cast<std::uint64_t>(o), q);
      std::vector<std::uint64_t> zo_pow(o);
      zo_pow[0] = 1;
      for (int t = 1; t < o; ++t) zo_pow[t] = zo_pow[t - 1] * zo % q;

      std::vector<std::int64_t> zeta_coeffs(e, 0);
      long long total = 0;
      for (int u = 0; u < o; ++u) {
        std::uint64_t acc = 0;
        for (int s_exp = 0; s_exp < o; ++s_exp) {
          int idx = (o - static_cast<int>((static_cast<long long>(s_exp) * u) % o)) % o;
          acc = (acc + chi_mod[dx.power_class[i][s_exp]] * zo_pow[idx]) % q;
        }
        std::uint64_t mult = acc * o_inv % q;
        if (mult > static_cast<std::uint64_t>(degree))
          throw ConsistencyError("eigenvalue multiplicity exceeds the degree");
        zeta_coeffs[static_cast<std::size_t>(u) * (e / o)] += static_cast<std::int64_t>(mult);
        total += static_cast<long long>(mult);
      }
      if (total != degree)
        throw ConsistencyError("eigenvalue multiplicities do not sum to the degree");
      values[i] = Cyclo::from_zeta_poly(e, std::move(zeta_coeffs));
    }
    raw.push_back(RawRow{degree, std::move(values)});
  }

  long long degree_square_sum = 0;
  for (const RawRow& r : raw) degree_square_sum += r.degree * r.degree;
  if (degree_square_sum != order)
    throw ConsistencyError("degree squares do not sum to the group order");

  // Trivial character first, the rest by (degree, lex value sequence).
  const Cyclo one(1);
  auto is_trivial = [&](const RawRow& r) {
    return std::all_of(r.values.begin(), r.values.end(),
                       [&](const Cyclo& v) { return v == one; });
  };
  std::stable_sort(raw.begin(), raw.end(), [&](const RawRow& a, const RawRow& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    return std::lexicographical_compare(a.values.begin(), a.values.end(),
                                        b.values.begin(), b.values.end());
  });
  if (raw.empty() || !is_trivial(raw[0]))
    throw ConsistencyError("trivial character missing from computed table");

  CharacterTable table;
  table.group = dx.gp;
  table.conductor = e;
  for (RawRow& r : raw) {
    table.degrees.push_back(r.degree);
    table.rows.push_back(std::move(r.values));
  }
  return table;
}

ClassFunction table_row(const CharacterTable& table, int chi) {
  return ClassFunction{table.group, table.rows.at(chi)};
}

ClassFunction trivial_character(GroupPtr g) {
  std::vector<Cyclo> values(g->classes().size(), Cyclo(1));
  return ClassFunction{std::move(g), std::move(values)};
}

namespace {

void check_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group->order() != b.group->order() ||
      a.values.size() != b.values.size())
    throw InputError("class functions live on different groups");
}

}  // namespace

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b) {
  check_same_group(a, b);
  Cyclo sum(0);
  const auto& classes = a.group->classes();
  for (std::size_t i = 0; i < a.values.size(); ++i)
    sum += Cyclo(classes[i].size) * a.values[i] * b.values[i].conj();
  return sum.divide_exact(a.group->order());
}

ClassFunction restrict_character(const ClassFunction& f, GroupPtr sub,
                                 const std::vector<int>& fusion) {
  std::vector<Cyclo> values(fusion.size());
  for (std::size_t j = 0; j < fusion.size(); ++j) values[j] = f.values.at(fusion[j]);
  return ClassFunction{std::move(sub), std::move(values)};
}

ClassFunction induce_character(const ClassFunction& f, GroupPtr g,
                               const std::vector<int>& fusion) {
  const auto& g_classes = g->classes();
  const auto& h_classes = f.group->classes();
  if (fusion.size() != h_classes.size())
    throw InputError("fusion length does not match the subgroup class count");
  std::vector<Cyclo> values(g_classes.size(), Cyclo(0));
  for (std::size_t j = 0; j < fusion.size(); ++j) {
    int gk = fusion[j];
    long long cent_g = g->order() / g_classes[gk].size;
    long long cent_h = f.group->order() / h_classes[j].size;
    if (cent_g % cent_h != 0)
      throw ConsistencyError("subgroup centralizer order does not divide");
    values[gk] += Cyclo(cent_g / cent_h) * f.values[j];
  }
  return ClassFunction{std::move(g), std::move(values)};
}

Subgroup character_kernel(const CharacterTable& table, int chi) {
  const Cyclo degree(table.degrees.at(chi));
  std::vector<Perm> seeds;
  const auto& classes = table.group->classes();
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (table.rows[chi][i] == degree) seeds.push_back(classes[i].rep);
  return normal_closure(table.group, seeds);
}

Cyclo restriction_multiplicity(const CharacterTable& g_table, int chi,
                               const CharacterTable& n_table,
                               const std::vector<int>& fusion, int psi) {
  ClassFunction restricted =
      restrict_character(table_row(g_table, chi), n_table.group, fusion);
  return inner_product(restricted, table_row(n_table, psi));
}

std::vector<int> irr_over(const CharacterTable& g_table, const Subgroup& n,
                          const CharacterTable& n_table, int lambda) {
  if (!n.is_normal()) throw InputError("irr_over requires a normal subgroup");
  std::vector<int> fusion = class_fusion(*g_table.group, *n_table.group);
  std::vector<int> out;
  for (int chi = 0; chi < g_table.character_count(); ++chi)
    if (!restriction_multiplicity(g_table, chi, n_table, fusion, lambda).is_zero())
      out.push_back(chi);
  return out;
}

std::optional<int> find_row(const CharacterTable& table, const ClassFunction& f) {
  for (int chi = 0; chi < table.character_count(); ++chi)
    if (table.rows[chi] == f.values) return chi;
  return std::nullopt;
}

}  // namespace piblocks
