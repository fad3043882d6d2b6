#include "mla/maps.hpp"

#include <algorithm>

namespace mla {

GroupMap identity_map(int n) {
  GroupMap m;
  m.domain_n = m.codomain_n = n;
  m.table.resize(n);
  for (Elt i = 0; i < n; ++i) m.table[i] = i;
  return m;
}

GroupMap chain(const GroupMap& f, const GroupMap& g) {
  if (f.codomain_n != g.domain_n)
    throw PreconditionError("map composition: codomain/domain mismatch");
  GroupMap out;
  out.domain_n = f.domain_n;
  out.codomain_n = g.codomain_n;
  out.table.resize(f.domain_n);
  for (Elt i = 0; i < f.domain_n; ++i) out.table[i] = g(f(i));
  return out;
}

bool is_group_hom(const GroupMap& m, const FiniteGroup& dom, const FiniteGroup& cod) {
  if (m.domain_n != dom.n || m.codomain_n != cod.n) return false;
  for (Elt x = 0; x < dom.n; ++x)
    for (Elt y = 0; y < dom.n; ++y)
      if (m(dom.mul(x, y)) != cod.mul(m(x), m(y))) return false;
  return true;
}

bool is_mla_hom(const GroupMap& m, const MultLieAlgebra& dom, const MultLieAlgebra& cod) {
  if (!is_group_hom(m, dom.group, cod.group)) return false;
  for (Elt x = 0; x < dom.group.n; ++x)
    for (Elt y = 0; y < dom.group.n; ++y)
      if (m(dom.star(x, y)) != cod.star(m(x), m(y))) return false;
  return true;
}

bool is_injective(const GroupMap& m) {
  std::vector<bool> seen(m.codomain_n, false);
  for (Elt v : m.table) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool is_surjective(const GroupMap& m) {
  std::vector<bool> seen(m.codomain_n, false);
  for (Elt v : m.table) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

GeneratorDecomposition generator_decomposition(const FiniteGroup& g) {
  GeneratorDecomposition gd;
  gd.expr.assign(g.n, {-1, -1});
  auto closure = [&]() {
    std::vector<bool> in(g.n, false);
    gd.closure_order.clear();
    gd.closure_order.push_back(0);
    in[0] = true;
    for (std::size_t head = 0; head < gd.closure_order.size(); ++head) {
      Elt e = gd.closure_order[head];
      for (std::size_t gi = 0; gi < gd.gens.size(); ++gi) {
        Elt ne = g.mul(e, gd.gens[gi]);
        if (!in[ne]) {
          in[ne] = true;
          gd.expr[ne] = {e, static_cast<int>(gi)};
          gd.closure_order.push_back(ne);
        }
      }
    }
    return in;
  };
  std::vector<bool> in = closure();
  while (gd.closure_order.size() < static_cast<std::size_t>(g.n)) {
    Elt next = 0;
    while (in[next]) ++next;
    gd.gens.push_back(next);
    in = closure();
  }
  return gd;
}

std::vector<GroupMap> enumerate_group_homs(const FiniteGroup& dom, const FiniteGroup& cod,
                                           const RunContext& ctx) {
  GeneratorDecomposition gd = generator_decomposition(dom);
  std::size_t m = gd.gens.size();
  unsigned long long cands = 1;
  for (std::size_t i = 0; i < m; ++i) {
    cands *= static_cast<unsigned long long>(cod.n);
    if (cands > ctx.budget) throw BudgetError(cands, ctx.budget);
  }
  unsigned long long cost = cands * dom.n * dom.n;
  if (cost > ctx.budget) throw BudgetError(cost, ctx.budget);

  std::vector<GroupMap> out;
  std::vector<Elt> imgs(m, 0);
  std::vector<Elt> phi(dom.n);
  for (unsigned long long id = 0; id < cands; ++id) {
    unsigned long long rest = id;
    for (std::size_t i = m; i-- > 0;) {
      imgs[i] = static_cast<Elt>(rest % cod.n);
      rest /= cod.n;
    }
    phi[0] = 0;
    for (Elt e : gd.closure_order) {
      if (e == 0) continue;
      auto [prev, gi] = gd.expr[e];
      phi[e] = cod.mul(phi[prev], imgs[gi]);
    }
    bool ok = true;
    for (Elt x = 0; x < dom.n && ok; ++x)
      for (Elt y = 0; y < dom.n && ok; ++y)
        ok = phi[dom.mul(x, y)] == cod.mul(phi[x], phi[y]);
    if (ok) {
      GroupMap gm;
      gm.domain_n = dom.n;
      gm.codomain_n = cod.n;
      gm.table = phi;
      out.push_back(std::move(gm));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mla
