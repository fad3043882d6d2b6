#include "mla/extension.hpp"

#include <algorithm>

namespace mla {

namespace {

std::vector<Elt> build_iota_inv(const RawExtension& raw) {
  std::vector<Elt> inv(raw.g_alg.group.n, -1);
  for (Elt h = 0; h < raw.h_alg.group.n; ++h) inv[raw.iota(h)] = h;
  return inv;
}

}  // namespace

ExtensionCheck verify_extension(const RawExtension& raw) {
  {
    Diagnostics hd = verify_group(raw.h_alg.group.n, raw.h_alg.group.mul_table);
    Diagnostics gd = verify_group(raw.g_alg.group.n, raw.g_alg.group.mul_table);
    Diagnostics kd = verify_group(raw.k_alg.group.n, raw.k_alg.group.mul_table);
    if (!hd.valid || !gd.valid || !kd.valid)
      throw PreconditionError("component group invalid");
    if (!verify_mla(raw.h_alg).valid || !verify_mla(raw.g_alg).valid ||
        !verify_mla(raw.k_alg).valid)
      throw PreconditionError("component multiplicative Lie algebra invalid");
  }
  if (raw.iota.domain_n != raw.h_alg.group.n || raw.iota.codomain_n != raw.g_alg.group.n ||
      raw.beta.domain_n != raw.g_alg.group.n || raw.beta.codomain_n != raw.k_alg.group.n)
    throw FormatError("iota/beta dimensions do not match the components");

  ExtensionCheck out;
  Diagnostics& d = out.diag;
  if (!raw.h_alg.group.abelian()) d.add("H-abelian");
  if (!raw.h_alg.star_trivial()) d.add("H-trivial-star");
  if (!is_mla_hom(raw.iota, raw.h_alg, raw.g_alg)) d.add("iota-hom");
  if (!is_injective(raw.iota)) d.add("iota-injective");
  if (!is_mla_hom(raw.beta, raw.g_alg, raw.k_alg)) d.add("beta-hom");
  if (!is_surjective(raw.beta)) d.add("beta-surjective");

  std::vector<bool> in_image(raw.g_alg.group.n, false);
  for (Elt h = 0; h < raw.h_alg.group.n; ++h) in_image[raw.iota(h)] = true;
  for (Elt g = 0; g < raw.g_alg.group.n; ++g)
    if (in_image[g] != (raw.beta(g) == 0)) {
      d.add("exactness", {g, -1, -1});
      break;
    }

  if (d.valid) {
    std::vector<Elt> zg = center(raw.g_alg.group);
    std::vector<Elt> lz = lie_center(raw.g_alg);
    out.central = true;
    out.lie_central = true;
    for (Elt h = 0; h < raw.h_alg.group.n; ++h) {
      Elt img = raw.iota(h);
      if (!std::binary_search(zg.begin(), zg.end(), img)) out.central = false;
      if (!std::binary_search(lz.begin(), lz.end(), img)) out.lie_central = false;
    }
  }
  return out;
}

Extension make_extension(RawExtension raw) {
  ExtensionCheck check = verify_extension(raw);
  if (!check.diag.valid)
    throw SemanticError("not an extension: " + check.diag.to_string());
  Extension e;
  e.iota_inv = build_iota_inv(raw);
  e.h_alg = std::move(raw.h_alg);
  e.g_alg = std::move(raw.g_alg);
  e.k_alg = std::move(raw.k_alg);
  e.iota = std::move(raw.iota);
  e.beta = std::move(raw.beta);
  e.central = check.central;
  e.lie_central = check.lie_central;
  return e;
}

Extension extension_from_quotient(const MultLieAlgebra& m, const std::vector<Elt>& subgroup) {
  QuotientResult q = quotient_mla(m, subgroup);
  std::vector<Elt> sorted = subgroup;
  std::sort(sorted.begin(), sorted.end());

  int hn = static_cast<int>(sorted.size());
  std::vector<Elt> hmul(static_cast<std::size_t>(hn) * hn);
  auto pos = [&](Elt g) {
    return static_cast<Elt>(std::lower_bound(sorted.begin(), sorted.end(), g) - sorted.begin());
  };
  for (int a = 0; a < hn; ++a)
    for (int b = 0; b < hn; ++b)
      hmul[static_cast<std::size_t>(a) * hn + b] = pos(m.group.mul(sorted[a], sorted[b]));

  RawExtension raw;
  raw.h_alg = with_trivial_star(make_group(hn, std::move(hmul)));
  raw.g_alg = m;
  raw.k_alg = q.quotient;
  raw.iota = {hn, m.group.n, sorted};
  raw.beta = {m.group.n, q.quotient.group.n, q.projection};
  return make_extension(std::move(raw));
}

bool is_section(const Extension& e, const Section& t) {
  if (t.domain_n != e.k_alg.group.n || t.codomain_n != e.g_alg.group.n) return false;
  if (t(0) != 0) return false;
  for (Elt x = 0; x < e.k_alg.group.n; ++x)
    if (e.beta(t(x)) != x) return false;
  return true;
}

std::vector<Section> enumerate_sections(const Extension& e) {
  int kn = e.k_alg.group.n;
  std::vector<std::vector<Elt>> preimages(kn);
  for (Elt g = 0; g < e.g_alg.group.n; ++g) preimages[e.beta(g)].push_back(g);

  std::vector<Section> out;
  std::vector<std::size_t> digit(kn, 0);
  for (;;) {
    Section t;
    t.domain_n = kn;
    t.codomain_n = e.g_alg.group.n;
    t.table.resize(kn);
    t.table[0] = 0;
    for (Elt x = 1; x < kn; ++x) t.table[x] = preimages[x][digit[x]];
    out.push_back(std::move(t));
    int pos = kn - 1;
    while (pos >= 1) {
      if (++digit[pos] < preimages[pos].size()) break;
      digit[pos] = 0;
      --pos;
    }
    if (pos < 1) break;
  }
  return out;
}

Section canonical_section(const Extension& e) {
  int kn = e.k_alg.group.n;
  Section t;
  t.domain_n = kn;
  t.codomain_n = e.g_alg.group.n;
  t.table.assign(kn, -1);
  t.table[0] = 0;
  for (Elt g = 0; g < e.g_alg.group.n; ++g) {
    Elt x = e.beta(g);
    if (t.table[x] == -1) t.table[x] = g;
  }
  return t;
}

Decomposition decompose(const Extension& e, const Section& t, Elt g) {
  Elt x = e.beta(g);
  Elt rest = e.g_alg.group.mul(g, e.g_alg.group.inv(t(x)));
  Elt h = e.iota_inv[rest];
  if (h < 0) throw StructuralError("decomposition left the kernel");
  return {h, x};
}

Diagnostics verify_ext_morphism(const Extension& e1, const Extension& e2,
                                const ExtMorphism& m) {
  Diagnostics d;
  if (!is_mla_hom(m.lambda, e1.h_alg, e2.h_alg)) d.add("lambda-hom");
  if (!is_mla_hom(m.mu, e1.g_alg, e2.g_alg)) d.add("mu-hom");
  if (!is_mla_hom(m.nu, e1.k_alg, e2.k_alg)) d.add("nu-hom");
  for (Elt h = 0; h < e1.h_alg.group.n; ++h)
    if (m.mu(e1.iota(h)) != e2.iota(m.lambda(h))) {
      d.add("left-square", {h, -1, -1});
      break;
    }
  for (Elt g = 0; g < e1.g_alg.group.n; ++g)
    if (e2.beta(m.mu(g)) != m.nu(e1.beta(g))) {
      d.add("right-square", {g, -1, -1});
      break;
    }
  return d;
}

ExtMorphism morphism_from_witness(const Extension& e1, const Extension& e2,
                                  const GroupMap& g) {
  Section t1 = canonical_section(e1);
  Section t2 = canonical_section(e2);
  const FiniteGroup& h = e1.h_alg.group;
  GroupMap mu;
  mu.domain_n = mu.codomain_n = e1.g_alg.group.n;
  mu.table.resize(mu.domain_n);
  for (Elt a = 0; a < e1.g_alg.group.n; ++a) {
    Decomposition dec = decompose(e1, t1, a);
    mu.table[a] = e2.g_alg.group.mul(e2.iota(h.mul(dec.h_part, g(dec.k_part))), t2(dec.k_part));
  }
  return {identity_map(h.n), std::move(mu), identity_map(e1.k_alg.group.n)};
}

std::optional<GroupMap> equivalent_extensions(const Extension& e1, const Extension& e2) {
  if (e1.h_alg != e2.h_alg || e1.k_alg != e2.k_alg)
    throw PreconditionError("equivalence needs identical H and K");
  int kn = e1.k_alg.group.n;
  int hn = e1.h_alg.group.n;
  if (e1.g_alg.group.n != e2.g_alg.group.n) return std::nullopt;

  unsigned long long count = 1;
  for (int i = 1; i < kn; ++i) count *= static_cast<unsigned long long>(hn);

  std::vector<Elt> g_table(kn, 0);
  for (unsigned long long id = 0; id < count; ++id) {
    unsigned long long rest = id;
    for (int x = kn - 1; x >= 1; --x) {
      g_table[x] = static_cast<Elt>(rest % hn);
      rest /= hn;
    }
    GroupMap g{kn, hn, g_table};
    ExtMorphism m = morphism_from_witness(e1, e2, g);
    if (is_mla_hom(m.mu, e1.g_alg, e2.g_alg)) return g;
  }
  return std::nullopt;
}

}  // namespace mla
