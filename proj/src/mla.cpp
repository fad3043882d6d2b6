#include "mla/mla.hpp"

#include <algorithm>
#include <map>

namespace mla {

bool MultLieAlgebra::star_trivial() const {
  return std::all_of(star_table.begin(), star_table.end(), [](Elt v) { return v == 0; });
}

MultLieAlgebra with_trivial_star(FiniteGroup g) {
  MultLieAlgebra m;
  m.star_table.assign(static_cast<std::size_t>(g.n) * g.n, 0);
  m.group = std::move(g);
  return m;
}

MultLieAlgebra make_mla_unchecked(FiniteGroup g, std::vector<Elt> star_table) {
  MultLieAlgebra m;
  m.group = std::move(g);
  m.star_table = std::move(star_table);
  return m;
}

MultLieAlgebra make_mla(FiniteGroup g, std::vector<Elt> star_table) {
  MultLieAlgebra m = make_mla_unchecked(std::move(g), std::move(star_table));
  Diagnostics d = verify_mla(m);
  if (!d.valid) throw SemanticError("not a multiplicative Lie algebra: " + d.to_string());
  return m;
}

Diagnostics verify_mla(const MultLieAlgebra& m) {
  const FiniteGroup& g = m.group;
  {
    Diagnostics gd = verify_group(g.n, g.mul_table);
    if (!gd.valid) throw PreconditionError("group layer invalid: " + gd.to_string());
  }
  if (m.star_table.size() != static_cast<std::size_t>(g.n) * g.n)
    throw FormatError("star table is not square of the group order");
  for (Elt v : m.star_table)
    if (v < 0 || v >= g.n) throw FormatError("star entry out of range");

  Diagnostics d;
  int n = g.n;
  for (Elt x = 0; x < n; ++x) {
    if (m.star(x, x) != 0) d.add("M1", {x, x, -1});
    if (m.star(x, 0) != 0) d.add("M1", {x, 0, -1});
    if (m.star(0, x) != 0) d.add("M1", {0, x, -1});
  }
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      for (Elt z = 0; z < n; ++z) {
        if (m.star(x, g.mul(y, z)) != g.mul(m.star(x, y), g.conj(y, m.star(x, z))))
          d.add("M2", {x, y, z});
        if (m.star(g.mul(x, y), z) != g.mul(g.conj(x, m.star(y, z)), m.star(x, z)))
          d.add("M3", {x, y, z});
        Elt j1 = m.star(m.star(x, y), g.conj(y, z));
        Elt j2 = m.star(m.star(y, z), g.conj(z, x));
        Elt j3 = m.star(m.star(z, x), g.conj(x, y));
        if (g.mul(g.mul(j1, j2), j3) != 0) d.add("M4", {x, y, z});
        if (g.conj(z, m.star(x, y)) != m.star(g.conj(z, x), g.conj(z, y)))
          d.add("M5", {x, y, z});
      }
  return d;
}

bool mla_axioms_hold(const MultLieAlgebra& m) {
  const FiniteGroup& g = m.group;
  int n = g.n;
  for (Elt x = 0; x < n; ++x)
    if (m.star(x, x) != 0 || m.star(x, 0) != 0 || m.star(0, x) != 0) return false;
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      for (Elt z = 0; z < n; ++z) {
        if (m.star(x, g.mul(y, z)) != g.mul(m.star(x, y), g.conj(y, m.star(x, z))))
          return false;
        if (m.star(g.mul(x, y), z) != g.mul(g.conj(x, m.star(y, z)), m.star(x, z)))
          return false;
        Elt j1 = m.star(m.star(x, y), g.conj(y, z));
        Elt j2 = m.star(m.star(y, z), g.conj(z, x));
        Elt j3 = m.star(m.star(z, x), g.conj(x, y));
        if (g.mul(g.mul(j1, j2), j3) != 0) return false;
        if (g.conj(z, m.star(x, y)) != m.star(g.conj(z, x), g.conj(z, y))) return false;
      }
  return true;
}

std::vector<Elt> lie_center(const MultLieAlgebra& m) {
  std::vector<Elt> out;
  for (Elt x = 0; x < m.group.n; ++x) {
    bool in = true;
    for (Elt y = 0; y < m.group.n && in; ++y) in = m.star(x, y) == 0;
    if (in) out.push_back(x);
  }
  return out;
}

namespace {

struct StarSearch {
  const FiniteGroup& g;
  int n;
  unsigned long long nodes = 0;
  unsigned long long budget;
  std::vector<MultLieAlgebra> found;

  explicit StarSearch(const FiniteGroup& g_, unsigned long long budget_)
      : g(g_), n(g_.n), budget(budget_) {}

  Elt get(const std::vector<Elt>& t, Elt x, Elt y) const {
    return t[static_cast<std::size_t>(x) * n + y];
  }

  // Assigns (x,y)=v and closes under antisymmetry and M5 conjugation.
  bool assign(std::vector<Elt>& t, Elt x, Elt y, Elt v) {
    std::vector<std::array<Elt, 3>> work{{x, y, v}};
    while (!work.empty()) {
      auto [a, b, val] = work.back();
      work.pop_back();
      Elt cur = get(t, a, b);
      if (cur == val) continue;
      if (cur != -1) return false;
      t[static_cast<std::size_t>(a) * n + b] = val;
      work.push_back({b, a, g.inv(val)});
      for (Elt z = 1; z < n; ++z)
        work.push_back({g.conj(z, a), g.conj(z, b), g.conj(z, val)});
    }
    return true;
  }

  // Values forced by M2/M3 from already-known cells; also detects conflicts
  // on fully-known instances. Returns false on contradiction.
  bool deduce(std::vector<Elt>& t) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
          Elt xy = get(t, x, y);
          if (xy == -1) continue;
          for (Elt z = 0; z < n; ++z) {
            Elt xz = get(t, x, z);
            if (xz != -1) {
              Elt want = g.mul(xy, g.conj(y, xz));
              Elt cur = get(t, x, g.mul(y, z));
              if (cur == -1) {
                if (!assign(t, x, g.mul(y, z), want)) return false;
                changed = true;
              } else if (cur != want) {
                return false;
              }
            }
          }
        }
      for (Elt y = 0; y < n; ++y)
        for (Elt z = 0; z < n; ++z) {
          Elt yz = get(t, y, z);
          if (yz == -1) continue;
          for (Elt x = 0; x < n; ++x) {
            Elt xz = get(t, x, z);
            if (xz == -1) continue;
            Elt want = g.mul(g.conj(x, yz), xz);
            Elt cur = get(t, g.mul(x, y), z);
            if (cur == -1) {
              if (!assign(t, g.mul(x, y), z, want)) return false;
              changed = true;
            } else if (cur != want) {
              return false;
            }
          }
        }
    }
    return true;
  }

  void run(std::vector<Elt>& t) {
    if (++nodes > budget) throw BudgetError(nodes, budget);
    int cell = -1;
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] == -1) {
        cell = static_cast<int>(i);
        break;
      }
    if (cell == -1) {
      MultLieAlgebra m = make_mla_unchecked(g, t);
      if (verify_mla(m).valid) found.push_back(std::move(m));
      return;
    }
    Elt x = cell / n, y = cell % n;
    for (Elt v = 0; v < n; ++v) {
      std::vector<Elt> copy = t;
      if (assign(copy, x, y, v) && deduce(copy)) run(copy);
    }
  }
};

}  // namespace

std::vector<MultLieAlgebra> star_completion(const FiniteGroup& g,
                                            const std::vector<StarConstraint>& constraints,
                                            const RunContext& ctx) {
  {
    Diagnostics gd = verify_group(g.n, g.mul_table);
    if (!gd.valid) throw PreconditionError("group layer invalid: " + gd.to_string());
  }
  for (const auto& c : constraints)
    if (c.x < 0 || c.x >= g.n || c.y < 0 || c.y >= g.n || c.value < 0 || c.value >= g.n)
      throw FormatError("constraint references an element out of range");

  StarSearch search(g, ctx.budget);
  std::vector<Elt> t(static_cast<std::size_t>(g.n) * g.n, -1);
  bool ok = true;
  for (Elt x = 0; x < g.n && ok; ++x) {
    ok = search.assign(t, x, x, 0) && search.assign(t, x, 0, 0) && search.assign(t, 0, x, 0);
  }
  for (const auto& c : constraints)
    if (ok) ok = search.assign(t, c.x, c.y, c.value);
  if (ok) ok = search.deduce(t);
  if (ok) search.run(t);

  std::sort(search.found.begin(), search.found.end(),
            [](const MultLieAlgebra& a, const MultLieAlgebra& b) {
              return a.star_table < b.star_table;
            });
  search.found.erase(std::unique(search.found.begin(), search.found.end()),
                     search.found.end());
  return search.found;
}

MultLieAlgebra product_mla(const MultLieAlgebra& a, const MultLieAlgebra& b) {
  FiniteGroup g = product_group(a.group, b.group);
  int n = g.n;
  std::vector<Elt> star(static_cast<std::size_t>(n) * n);
  auto code = [&](Elt x, Elt y) { return x * b.group.n + y; };
  for (Elt x1 = 0; x1 < a.group.n; ++x1)
    for (Elt y1 = 0; y1 < b.group.n; ++y1)
      for (Elt x2 = 0; x2 < a.group.n; ++x2)
        for (Elt y2 = 0; y2 < b.group.n; ++y2)
          star[static_cast<std::size_t>(code(x1, y1)) * n + code(x2, y2)] =
              code(a.star(x1, x2), b.star(y1, y2));
  return make_mla_unchecked(std::move(g), std::move(star));
}

QuotientResult quotient_mla(const MultLieAlgebra& m, const std::vector<Elt>& subgroup) {
  const FiniteGroup& g = m.group;
  std::vector<bool> in_sub(g.n, false);
  for (Elt s : subgroup) {
    if (s < 0 || s >= g.n) throw FormatError("subgroup element out of range");
    in_sub[s] = true;
  }
  if (!in_sub[0]) throw SemanticError("subgroup does not contain the identity");
  for (Elt a : subgroup)
    for (Elt b : subgroup)
      if (!in_sub[g.mul(a, b)]) throw SemanticError("subset not closed under product");
  for (Elt a : subgroup)
    for (Elt x = 0; x < g.n; ++x)
      if (!in_sub[g.conj(x, a)]) throw SemanticError("subgroup is not normal");

  // left cosets keyed by sorted membership
  std::vector<int> coset_of(g.n, -1);
  std::vector<Elt> coset_min;
  for (Elt x = 0; x < g.n; ++x) {
    if (coset_of[x] != -1) continue;
    Elt least = x;
    std::vector<Elt> members;
    for (Elt s : subgroup) {
      Elt y = g.mul(x, s);
      members.push_back(y);
      least = std::min(least, y);
    }
    int id = static_cast<int>(coset_min.size());
    coset_min.push_back(least);
    for (Elt y : members) coset_of[y] = id;
  }
  // reindex: identity coset first, then ascending least member
  std::vector<int> order(coset_min.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return coset_min[a] < coset_min[b]; });
  std::vector<int> new_id(coset_min.size());
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);
  std::vector<Elt> proj(g.n);
  for (Elt x = 0; x < g.n; ++x) proj[x] = new_id[coset_of[x]];

  int q = static_cast<int>(coset_min.size());
  std::vector<Elt> qmul(static_cast<std::size_t>(q) * q, -1);
  std::vector<Elt> qstar(static_cast<std::size_t>(q) * q, -1);
  for (Elt a = 0; a < g.n; ++a)
    for (Elt b = 0; b < g.n; ++b) {
      std::size_t cell = static_cast<std::size_t>(proj[a]) * q + proj[b];
      Elt pm = proj[g.mul(a, b)];
      Elt ps = proj[m.star(a, b)];
      if (qmul[cell] == -1)
        qmul[cell] = pm;
      else if (qmul[cell] != pm)
        throw SemanticError("quotient product not well defined");
      if (qstar[cell] == -1)
        qstar[cell] = ps;
      else if (qstar[cell] != ps)
        throw SemanticError("quotient star not well defined");
    }
  QuotientResult out;
  out.quotient = make_mla_unchecked(make_group_unchecked(q, std::move(qmul)), std::move(qstar));
  out.projection = std::move(proj);
  return out;
}

}  // namespace mla
