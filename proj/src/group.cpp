#include "mla/group.hpp"

#include <algorithm>
#include <numeric>

namespace mla {

bool FiniteGroup::abelian() const {
  for (Elt a = 0; a < n; ++a)
    for (Elt b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(Elt a) const {
  int k = 1;
  Elt p = a;
  while (p != 0) {
    p = mul(p, a);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::order_multiset() const {
  std::vector<int> out(n);
  for (Elt a = 0; a < n; ++a) out[a] = element_order(a);
  std::sort(out.begin(), out.end());
  return out;
}

Diagnostics verify_group(int n, const std::vector<Elt>& mul_table) {
  if (n <= 0 || mul_table.size() != static_cast<std::size_t>(n) * n)
    throw FormatError("multiplication table is not " + std::to_string(n) + "x" +
                      std::to_string(n));
  for (Elt v : mul_table)
    if (v < 0 || v >= n) throw FormatError("table entry out of range: " + std::to_string(v));

  auto mul = [&](Elt a, Elt b) { return mul_table[static_cast<std::size_t>(a) * n + b]; };
  Diagnostics d;
  for (Elt x = 0; x < n; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) {
      d.add("identity", {x, -1, -1});
      break;
    }
  }
  for (Elt x = 0; x < n; ++x) {
    bool has_inv = false;
    for (Elt y = 0; y < n && !has_inv; ++y)
      has_inv = mul(x, y) == 0 && mul(y, x) == 0;
    if (!has_inv) {
      d.add("inverse", {x, -1, -1});
      break;
    }
  }
  bool assoc_done = false;
  for (Elt x = 0; x < n && !assoc_done; ++x)
    for (Elt y = 0; y < n && !assoc_done; ++y)
      for (Elt z = 0; z < n && !assoc_done; ++z)
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
          d.add("associativity", {x, y, z});
          assoc_done = true;
        }
  return d;
}

FiniteGroup make_group_unchecked(int n, std::vector<Elt> mul_table) {
  FiniteGroup g;
  g.n = n;
  g.mul_table = std::move(mul_table);
  g.inv_table.assign(n, 0);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) {
        g.inv_table[x] = y;
        break;
      }
  return g;
}

FiniteGroup make_group(int n, std::vector<Elt> mul_table) {
  Diagnostics d = verify_group(n, mul_table);
  if (!d.valid) throw SemanticError("not a group: " + d.to_string());
  return make_group_unchecked(n, std::move(mul_table));
}

FiniteGroup trivial_group() { return make_group_unchecked(1, {0}); }

FiniteGroup cyclic_group(int n) {
  std::vector<Elt> t(static_cast<std::size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return make_group_unchecked(n, std::move(t));
}

FiniteGroup dihedral_group(int n) {
  int order = 2 * n;
  std::vector<Elt> t(static_cast<std::size_t>(order) * order);
  auto code = [n](int refl, int rot) { return refl * n + rot; };
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i = 0; i < n; ++i)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j = 0; j < n; ++j) {
          int rot = ((e2 ? -i : i) + j) % n;
          if (rot < 0) rot += n;
          t[static_cast<std::size_t>(code(e1, i)) * order + code(e2, j)] =
              code((e1 + e2) % 2, rot);
        }
  return make_group_unchecked(order, std::move(t));
}

FiniteGroup klein_four() { return product_group(cyclic_group(2), cyclic_group(2)); }

FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  std::vector<Elt> t(static_cast<std::size_t>(n) * n);
  auto code = [&](Elt x, Elt y) { return x * b.n + y; };
  for (Elt x1 = 0; x1 < a.n; ++x1)
    for (Elt y1 = 0; y1 < b.n; ++y1)
      for (Elt x2 = 0; x2 < a.n; ++x2)
        for (Elt y2 = 0; y2 < b.n; ++y2)
          t[static_cast<std::size_t>(code(x1, y1)) * n + code(x2, y2)] =
              code(a.mul(x1, x2), b.mul(y1, y2));
  return make_group_unchecked(n, std::move(t));
}

std::vector<Elt> center(const FiniteGroup& g) {
  std::vector<Elt> out;
  for (Elt x = 0; x < g.n; ++x) {
    bool central = true;
    for (Elt y = 0; y < g.n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

namespace {

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, std::vector<Elt>& img,
                std::vector<bool>& used, Elt next) {
  if (next == a.n) return true;
  if (img[next] >= 0) return extend_iso(a, b, img, used, next + 1);
  for (Elt cand = 0; cand < b.n; ++cand) {
    if (used[cand]) continue;
    if (b.element_order(cand) != a.element_order(next)) continue;
    std::vector<std::pair<Elt, Elt>> assigned;
    img[next] = cand;
    used[cand] = true;
    assigned.push_back({next, cand});
    bool ok = true;
    // close under products with already-mapped elements
    for (std::size_t i = 0; ok && i < assigned.size(); ++i) {
      for (Elt x = 0; ok && x < a.n; ++x) {
        if (img[x] < 0) continue;
        Elt pairs[2][2] = {{assigned[i].first, x}, {x, assigned[i].first}};
        for (auto& p : pairs) {
          Elt prod = a.mul(p[0], p[1]);
          Elt want = b.mul(img[p[0]], img[p[1]]);
          if (img[prod] < 0) {
            if (used[want]) {
              ok = false;
              break;
            }
            img[prod] = want;
            used[want] = true;
            assigned.push_back({prod, want});
          } else if (img[prod] != want) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok && extend_iso(a, b, img, used, next + 1)) return true;
    for (auto& p : assigned) {
      img[p.first] = -1;
      used[p.second] = false;
    }
  }
  return false;
}

}  // namespace

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.n != b.n) return false;
  if (a.order_multiset() != b.order_multiset()) return false;
  std::vector<Elt> img(a.n, -1);
  std::vector<bool> used(b.n, false);
  img[0] = 0;
  used[0] = true;
  return extend_iso(a, b, img, used, 0);
}

}  // namespace mla
