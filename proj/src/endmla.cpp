#include "mla/endmla.hpp"

#include <algorithm>

namespace mla {

namespace {

// All endomorphisms of h via generator images extended multiplicatively.
std::vector<Endo> all_endos(const FiniteGroup& h, unsigned long long budget) {
  GeneratorDecomposition gd = generator_decomposition(h);
  std::size_t m = gd.gens.size();
  unsigned long long cands = 1;
  for (std::size_t i = 0; i < m; ++i) {
    cands *= static_cast<unsigned long long>(h.n);
    if (cands > budget) throw BudgetError(cands, budget);
  }
  std::vector<Endo> out;
  std::vector<Elt> imgs(m, 0);
  for (unsigned long long id = 0; id < cands; ++id) {
    unsigned long long rest = id;
    for (std::size_t i = m; i-- > 0;) {
      imgs[i] = static_cast<Elt>(rest % h.n);
      rest /= h.n;
    }
    Endo phi(h.n);
    phi[0] = 0;
    for (Elt e : gd.closure_order) {
      if (e == 0) continue;
      auto [prev, gi] = gd.expr[e];
      phi[e] = h.mul(phi[prev], imgs[gi]);
    }
    bool ok = true;
    for (Elt x = 0; x < h.n && ok; ++x)
      for (Elt y = 0; y < h.n && ok; ++y)
        ok = phi[h.mul(x, y)] == h.mul(phi[x], phi[y]);
    if (ok) out.push_back(std::move(phi));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int lookup(const std::vector<Endo>& sorted, const Endo& e) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), e);
  if (it == sorted.end() || *it != e) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

int EndMla::index_of(const Endo& e) const { return lookup(endos, e); }

EndMla end_mla(const FiniteGroup& h, int max_order) {
  if (!h.abelian()) throw PreconditionError("End(H) needs H abelian");
  if (h.n > max_order)
    throw BudgetError(static_cast<unsigned long long>(h.n),
                      static_cast<unsigned long long>(max_order));

  EndMla e;
  e.h = h;
  e.endos = all_endos(h, 1ULL << 40);
  int n = static_cast<int>(e.endos.size());

  std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
  std::vector<Elt> star(static_cast<std::size_t>(n) * n);
  Endo tmp(h.n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (Elt v = 0; v < h.n; ++v) tmp[v] = h.mul(e.endos[a][v], e.endos[b][v]);
      int pa = lookup(e.endos, tmp);
      if (pa < 0) throw StructuralError("pointwise product left End(H)");
      mul[static_cast<std::size_t>(a) * n + b] = pa;
      for (Elt v = 0; v < h.n; ++v)
        tmp[v] = h.mul(e.endos[a][e.endos[b][v]], e.endos[b][e.endos[a][h.inv(v)]]);
      int sa = lookup(e.endos, tmp);
      if (sa < 0) throw StructuralError("star product left End(H)");
      star[static_cast<std::size_t>(a) * n + b] = sa;
    }
  e.alg = make_mla_unchecked(make_group_unchecked(n, std::move(mul)), std::move(star));
  Diagnostics d = verify_mla(e.alg);
  if (!d.valid) throw StructuralError("End(H) failed the verifier: " + d.to_string());
  return e;
}

int AutGroup::index_of(const Endo& e) const {
  for (std::size_t i = 0; i < autos.size(); ++i)
    if (autos[i] == e) return static_cast<int>(i);
  return -1;
}

AutGroup aut_group(const FiniteGroup& h, int max_order) {
  if (h.n > max_order)
    throw BudgetError(static_cast<unsigned long long>(h.n),
                      static_cast<unsigned long long>(max_order));
  AutGroup a;
  a.h = h;
  std::vector<Endo> endos = all_endos(h, 1ULL << 40);
  for (auto& e : endos) {
    std::vector<bool> seen(h.n, false);
    bool bij = true;
    for (Elt v : e) {
      if (seen[v]) {
        bij = false;
        break;
      }
      seen[v] = true;
    }
    if (bij) a.autos.push_back(e);
  }
  std::sort(a.autos.begin(), a.autos.end());
  Endo id(h.n);
  for (Elt v = 0; v < h.n; ++v) id[v] = v;
  auto it = std::find(a.autos.begin(), a.autos.end(), id);
  std::rotate(a.autos.begin(), it, it + 1);

  int n = static_cast<int>(a.autos.size());
  std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
  Endo tmp(h.n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      for (Elt v = 0; v < h.n; ++v) tmp[v] = a.autos[p][a.autos[q][v]];
      int idx = a.index_of(tmp);
      if (idx < 0) throw StructuralError("composition left Aut(H)");
      mul[static_cast<std::size_t>(p) * n + q] = idx;
    }
  a.grp = make_group(n, std::move(mul));
  return a;
}

std::vector<GroupMap> enumerate_mla_homs(const MultLieAlgebra& k, const EndMla& target,
                                         const RunContext& ctx) {
  std::vector<GroupMap> homs = enumerate_group_homs(k.group, target.alg.group, ctx);
  std::vector<GroupMap> out;
  for (auto& m : homs) {
    bool ok = true;
    for (Elt x = 0; x < k.group.n && ok; ++x)
      for (Elt y = 0; y < k.group.n && ok; ++y)
        ok = m(k.star(x, y)) == target.alg.star(m(x), m(y));
    if (ok) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace mla
