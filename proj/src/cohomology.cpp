#include "mla/cohomology.hpp"

#include <algorithm>

#include "mla/parallel.hpp"

namespace mla {

namespace {

// Free cells of a normalized pair function, row-major. The f profile leaves
// (x,y) with x,y >= 1 free; the h profile additionally pins the diagonal.
std::vector<std::pair<Elt, Elt>> free_cells(int k_n, bool h_profile) {
  std::vector<std::pair<Elt, Elt>> cells;
  for (Elt x = 1; x < k_n; ++x)
    for (Elt y = 1; y < k_n; ++y)
      if (!h_profile || x != y) cells.push_back({x, y});
  return cells;
}

unsigned long long checked_pow(unsigned long long base, std::size_t exp,
                               unsigned long long cap) {
  unsigned long long v = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (v > cap / base) return cap + 1;
    v *= base;
  }
  return v;
}

void decode_pairfn(PairFunction& p, const std::vector<std::pair<Elt, Elt>>& cells,
                   unsigned long long id, int h_n) {
  for (std::size_t i = cells.size(); i-- > 0;) {
    p.set(cells[i].first, cells[i].second, static_cast<Elt>(id % h_n));
    id /= h_n;
  }
}

int locate(const std::vector<CocyclePair>& sorted, const CocyclePair& c) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
  if (it == sorted.end() || !(*it == c)) return -1;
  return static_cast<int>(it - sorted.begin());
}

}  // namespace

CenterTwist trivial_center_twist(const MultLieAlgebra& k, const FiniteGroup& h) {
  CenterTwist t;
  t.k = k;
  t.h = h;
  t.end_h = end_mla(h);
  t.gamma.assign(k.group.n, 0);
  return t;
}

LieTwist trivial_lie_twist(const MultLieAlgebra& k, const FiniteGroup& h) {
  LieTwist t;
  t.k = k;
  t.h = h;
  t.aut_h = aut_group(h);
  t.sigma.assign(k.group.n, 0);
  return t;
}

CenterFactorSystem to_factor_system(const CenterTwist& t, PairFunction f, PairFunction h) {
  return {t.k, t.h, std::move(f), std::move(h), t.end_h, t.gamma};
}

LieCenterFactorSystem to_factor_system(const LieTwist& t, PairFunction f, PairFunction h) {
  return {t.k, t.h, std::move(f), std::move(h), t.aut_h, t.sigma};
}

std::vector<PairFunction> group_2cocycles(const FiniteGroup& k, const FiniteGroup& h,
                                          const AutGroup* aut, const std::vector<int>* sigma,
                                          const RunContext& ctx) {
  auto cells = free_cells(k.n, false);
  unsigned long long cands = checked_pow(h.n, cells.size(), ctx.budget);
  unsigned long long instances = static_cast<unsigned long long>(k.n) * k.n * k.n;
  if (cands > ctx.budget / std::max(1ULL, instances))
    throw BudgetError(cands * instances, ctx.budget);

  PairFunction proto = trivial_pairfn(k.n, h.n);
  auto pred = [&](std::size_t id) {
    PairFunction p = proto;
    decode_pairfn(p, cells, id, h.n);
    return group_cocycle_condition(k, h, p, aut, sigma);
  };
  std::vector<std::size_t> ids =
      parallel_matching_ids(static_cast<std::size_t>(cands), ctx.jobs, pred);
  std::vector<PairFunction> out;
  out.reserve(ids.size());
  for (std::size_t id : ids) {
    PairFunction p = proto;
    decode_pairfn(p, cells, id, h.n);
    out.push_back(std::move(p));
  }
  return out;
}

// --- twist-generic helpers ---------------------------------------------------

namespace {

bool check_compat(const CenterTwist& t, const PairFunction& f, const PairFunction& hp) {
  return center_compat_equations(t.k, t.h, f, hp, t.end_h, t.gamma);
}

bool check_compat(const LieTwist& t, const PairFunction& f, const PairFunction& hp) {
  return lie_compat_equations(t.k, t.h, f, hp, t.aut_h, t.sigma);
}

const AutGroup* twist_aut(const CenterTwist&) { return nullptr; }
const AutGroup* twist_aut(const LieTwist& t) { return &t.aut_h; }
const std::vector<int>* twist_sigma(const CenterTwist&) { return nullptr; }
const std::vector<int>* twist_sigma(const LieTwist& t) { return &t.sigma; }

RealizedExtension realize_fs(const CenterTwist& t, const CocyclePair& c,
                             RealizeOptions opt = {}) {
  return realize_center_fs(to_factor_system(t, c.f, c.h), opt);
}

RealizedExtension realize_fs(const LieTwist& t, const CocyclePair& c,
                             RealizeOptions opt = {}) {
  return realize_lie_center_fs(to_factor_system(t, c.f, c.h), opt);
}

template <typename Twist>
std::vector<CocyclePair> mla_2cocycles_impl(const Twist& t, const RunContext& ctx) {
  std::vector<PairFunction> fs =
      group_2cocycles(t.k.group, t.h, twist_aut(t), twist_sigma(t), ctx);
  auto cells = free_cells(t.k.group.n, true);
  unsigned long long h_cands = checked_pow(t.h.n, cells.size(), ctx.budget);
  unsigned long long instances =
      4ULL * t.k.group.n * t.k.group.n * t.k.group.n * std::max<std::size_t>(1, fs.size());
  if (h_cands > ctx.budget / std::max(1ULL, instances))
    throw BudgetError(h_cands * instances, ctx.budget);

  PairFunction proto = trivial_pairfn(t.k.group.n, t.h.n);
  std::vector<CocyclePair> out;
  for (const PairFunction& f : fs) {
    auto pred = [&](std::size_t id) {
      PairFunction hp = proto;
      decode_pairfn(hp, cells, id, t.h.n);
      return check_compat(t, f, hp);
    };
    std::vector<std::size_t> ids =
        parallel_matching_ids(static_cast<std::size_t>(h_cands), ctx.jobs, pred);
    for (std::size_t id : ids) {
      PairFunction hp = proto;
      decode_pairfn(hp, cells, id, t.h.n);
      out.push_back({f, std::move(hp)});
    }
  }
  return out;
}

template <typename Twist>
CohomologyGroup cohomology_group_impl(const Twist& t, const RunContext& ctx) {
  CohomologyGroup ch;
  ch.z2 = mla_2cocycles_impl(t, ctx);
  std::vector<GroupMap> maps = normalized_maps(t.k.group.n, t.h.n);
  ch.map_count = maps.size();
  CocyclePair triv{trivial_pairfn(t.k.group.n, t.h.n), trivial_pairfn(t.k.group.n, t.h.n)};
  std::vector<CocyclePair> cobs;
  for (const GroupMap& g : maps) {
    CocyclePair c = coboundary(t, g);
    if (c == triv) ++ch.hom_kernel_count;
    cobs.push_back(std::move(c));
  }
  if (ch.z2.empty()) {
    ch.twist_admissible = false;
    return ch;
  }
  for (const CocyclePair& c : cobs)
    if (locate(ch.z2, c) < 0)
      throw StructuralError("coboundary falls outside the cocycle group");
  std::sort(cobs.begin(), cobs.end());
  cobs.erase(std::unique(cobs.begin(), cobs.end()), cobs.end());
  ch.b2 = std::move(cobs);

  std::vector<int> rep_member(ch.z2.size());
  for (std::size_t i = 0; i < ch.z2.size(); ++i) {
    CocyclePair best = ch.z2[i];
    for (const CocyclePair& b : ch.b2) {
      CocyclePair prod{pointwise_product(t.h, ch.z2[i].f, b.f),
                       pointwise_product(t.h, ch.z2[i].h, b.h)};
      if (locate(ch.z2, prod) < 0)
        throw StructuralError("cocycle set is not closed under B2 translation");
      if (prod < best) best = prod;
    }
    rep_member[i] = locate(ch.z2, best);
  }
  ch.class_of.assign(ch.z2.size(), -1);
  for (std::size_t i = 0; i < ch.z2.size(); ++i) {
    int rep = rep_member[i];
    if (ch.class_of[rep] == -1) {
      ch.class_of[rep] = static_cast<int>(ch.rep_of_class.size());
      ch.rep_of_class.push_back(rep);
    }
    ch.class_of[i] = ch.class_of[rep];
  }
  int classes = static_cast<int>(ch.rep_of_class.size());
  ch.class_mul.assign(classes, std::vector<int>(classes, -1));
  for (int i = 0; i < classes; ++i)
    for (int j = 0; j < classes; ++j) {
      const CocyclePair& a = ch.z2[ch.rep_of_class[i]];
      const CocyclePair& b = ch.z2[ch.rep_of_class[j]];
      CocyclePair prod{pointwise_product(t.h, a.f, b.f), pointwise_product(t.h, a.h, b.h)};
      int where = locate(ch.z2, prod);
      if (where < 0) throw StructuralError("cocycle set is not closed under products");
      ch.class_mul[i][j] = ch.class_of[where];
    }
  return ch;
}

template <typename Twist>
ExactSequenceReport verify_exact_sequence_impl(const Twist& t, const RunContext& ctx) {
  ExactSequenceReport r;
  CohomologyGroup ch = cohomology_group_impl(t, ctx);
  r.map_count = ch.map_count;
  r.kernel_count = ch.hom_kernel_count;
  r.z2_count = ch.z2_count();
  r.b2_count = ch.b2_count();
  r.h2_count = ch.h2_count();
  r.twist_admissible = ch.twist_admissible;

  // Hom(K,H): group homomorphisms killing every star value (MLA homs into
  // trivial-star H).
  std::vector<GroupMap> homs = enumerate_group_homs(t.k.group, t.h, ctx);
  auto kills_star = [&](const GroupMap& g) {
    for (Elt x = 0; x < t.k.group.n; ++x)
      for (Elt y = 0; y < t.k.group.n; ++y)
        if (g(t.k.star(x, y)) != 0) return false;
    return true;
  };
  for (const GroupMap& g : homs)
    if (kills_star(g)) ++r.plain_hom_count;

  std::vector<GroupMap> maps = normalized_maps(t.k.group.n, t.h.n);
  CocyclePair triv{trivial_pairfn(t.k.group.n, t.h.n), trivial_pairfn(t.k.group.n, t.h.n)};
  r.kernel_equals_plain_homs = true;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const GroupMap& g = maps[i];
    bool in_kernel = coboundary(t, g) == triv;
    bool is_plain = is_group_hom(g, t.k.group, t.h) && kills_star(g);
    if (in_kernel != is_plain) {
      r.kernel_equals_plain_homs = false;
      r.diag.add("kernel-vs-hom", {static_cast<int>(i), -1, -1},
                 in_kernel ? "in ker(chi) but not a hom" : "hom outside ker(chi)");
    }
  }

  r.chi_is_hom = true;
  for (const GroupMap& g1 : maps) {
    for (const GroupMap& g2 : maps) {
      GroupMap g12 = g1;
      for (Elt x = 0; x < t.k.group.n; ++x) g12.table[x] = t.h.mul(g1(x), g2(x));
      CocyclePair a = coboundary(t, g1);
      CocyclePair b = coboundary(t, g2);
      CocyclePair c = coboundary(t, g12);
      CocyclePair prod{pointwise_product(t.h, a.f, b.f), pointwise_product(t.h, a.h, b.h)};
      if (!(c == prod)) {
        r.chi_is_hom = false;
        r.diag.add("chi-hom");
        break;
      }
    }
    if (!r.chi_is_hom) break;
  }

  if (ch.twist_admissible) {
    r.b2_inside_z2 = true;  // cohomology_group_impl throws otherwise
    r.quotient_sizes_consistent = r.map_count == r.b2_count * r.kernel_count &&
                                  r.z2_count == r.h2_count * r.b2_count;
    if (!r.quotient_sizes_consistent) r.diag.add("cardinalities");
  } else {
    r.b2_inside_z2 = false;
    r.quotient_sizes_consistent = false;
    r.diag.add("inadmissible-twist", {-1, -1, -1}, "twist admits no cocycle pairs");
  }
  return r;
}

template <typename Twist>
std::vector<ExtensionClass> classify_impl(const Twist& t, const RunContext& ctx) {
  CohomologyGroup ch = cohomology_group_impl(t, ctx);
  std::vector<ExtensionClass> classes;
  if (!ch.twist_admissible) return classes;
  for (std::size_t c = 0; c < ch.rep_of_class.size(); ++c) {
    const CocyclePair& rep = ch.z2[ch.rep_of_class[c]];
    ExtensionClass ec;
    ec.class_index = static_cast<int>(c);
    ec.rep = rep;
    ec.realization = realize_fs(t, rep);
    classes.push_back(std::move(ec));
  }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (equivalent_extensions(classes[i].realization.ext, classes[j].realization.ext))
        throw StructuralError("distinct cohomology classes realized equivalent extensions");
  for (std::size_t i = 0; i < ch.z2.size(); ++i) {
    RealizedExtension r = realize_fs(t, ch.z2[i]);
    int matches = 0;
    int matched_class = -1;
    for (const ExtensionClass& ec : classes)
      if (equivalent_extensions(r.ext, ec.realization.ext)) {
        ++matches;
        matched_class = ec.class_index;
      }
    if (matches != 1 || matched_class != ch.class_of[i])
      throw StructuralError("cocycle realization does not match its cohomology class");
  }
  return classes;
}

template <typename Twist, typename MulFill, typename StarFill>
AgreementReport agreement_impl(const Twist& t, const RunContext& ctx, MulFill&& fill_mul,
                               StarFill&& fill_star) {
  AgreementReport rep;
  std::vector<PairFunction> fs =
      group_2cocycles(t.k.group, t.h, twist_aut(t), twist_sigma(t), ctx);
  auto cells = free_cells(t.k.group.n, true);
  unsigned long long h_cands = checked_pow(t.h.n, cells.size(), ctx.budget);
  int kn = t.k.group.n, hn = t.h.n;
  int n = kn * hn;
  unsigned long long per_pair =
      4ULL * kn * kn * kn + static_cast<unsigned long long>(n) * n * n;
  unsigned long long total = h_cands * std::max<std::size_t>(1, fs.size());
  if (total > ctx.budget / std::max(1ULL, per_pair))
    throw BudgetError(total * per_pair, ctx.budget);

  PairFunction proto = trivial_pairfn(kn, hn);
  std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
  std::vector<Elt> star(static_cast<std::size_t>(n) * n);
  for (const PairFunction& f : fs) {
    fill_mul(f, mul);
    bool group_ok = verify_group(n, mul).valid;
    FiniteGroup g = group_ok ? make_group_unchecked(n, mul) : FiniteGroup{};
    for (unsigned long long id = 0; id < h_cands; ++id) {
      PairFunction hp = proto;
      decode_pairfn(hp, cells, id, hn);
      ++rep.universe;
      bool validator = check_compat(t, f, hp);
      bool oracle = group_ok;
      if (oracle) {
        fill_star(f, hp, star);
        MultLieAlgebra cand = make_mla_unchecked(g, star);
        oracle = mla_axioms_hold(cand);
        if (oracle) {
          // full extension-level verification as the final word
          RealizedExtension r = realize_fs(t, CocyclePair{f, hp}, {true});
          oracle = r.diag.valid;
        }
      }
      if (validator) ++rep.validator_pass;
      if (oracle) ++rep.oracle_pass;
      if (validator != oracle)
        (validator ? rep.validator_only : rep.oracle_only).push_back({f, hp});
    }
  }
  return rep;
}

}  // namespace

std::vector<CocyclePair> mla_2cocycles(const CenterTwist& t, const RunContext& ctx) {
  return mla_2cocycles_impl(t, ctx);
}

std::vector<CocyclePair> mla_2cocycles(const LieTwist& t, const RunContext& ctx) {
  return mla_2cocycles_impl(t, ctx);
}

CocyclePair coboundary(const CenterTwist& t, const GroupMap& g) {
  if (g(0) != 0) throw PreconditionError("coboundary needs g(1) = 1");
  int n = t.k.group.n;
  CocyclePair out{trivial_pairfn(n, t.h.n), trivial_pairfn(n, t.h.n)};
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      out.f.set(x, y, t.h.mul(t.h.mul(g(y), t.h.inv(g(t.k.group.mul(x, y)))), g(x)));
      Elt v = t.end_h.apply(t.gamma[x], g(y));
      v = t.h.mul(v, t.end_h.apply(t.gamma[y], t.h.inv(g(x))));
      v = t.h.mul(v, t.h.inv(g(t.k.star(x, y))));
      out.h.set(x, y, v);
    }
  return out;
}

CocyclePair coboundary(const LieTwist& t, const GroupMap& g) {
  if (g(0) != 0) throw PreconditionError("coboundary needs g(1) = 1");
  int n = t.k.group.n;
  CocyclePair out{trivial_pairfn(n, t.h.n), trivial_pairfn(n, t.h.n)};
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y) {
      Elt fv = t.h.mul(g(x), t.h.inv(g(t.k.group.mul(x, y))));
      fv = t.h.mul(fv, t.aut_h.apply(t.sigma[x], g(y)));
      out.f.set(x, y, fv);
      Elt xy = t.k.star(x, y);
      Elt hv = t.h.inv(g(xy));
      hv = t.h.mul(hv, t.h.mul(g(x), g(y)));
      hv = t.h.mul(hv, t.aut_h.apply(t.sigma[xy], t.h.inv(t.h.mul(g(x), g(y)))));
      out.h.set(x, y, hv);
    }
  return out;
}

std::vector<GroupMap> normalized_maps(int k_n, int h_n) {
  unsigned long long count = 1;
  for (int i = 1; i < k_n; ++i) count *= static_cast<unsigned long long>(h_n);
  std::vector<GroupMap> out;
  out.reserve(count);
  for (unsigned long long id = 0; id < count; ++id) {
    GroupMap g;
    g.domain_n = k_n;
    g.codomain_n = h_n;
    g.table.assign(k_n, 0);
    unsigned long long rest = id;
    for (int x = k_n - 1; x >= 1; --x) {
      g.table[x] = static_cast<Elt>(rest % h_n);
      rest /= h_n;
    }
    out.push_back(std::move(g));
  }
  return out;
}

CohomologyGroup cohomology_group(const CenterTwist& t, const RunContext& ctx) {
  return cohomology_group_impl(t, ctx);
}

CohomologyGroup cohomology_group(const LieTwist& t, const RunContext& ctx) {
  return cohomology_group_impl(t, ctx);
}

ExactSequenceReport verify_exact_sequence(const CenterTwist& t, const RunContext& ctx) {
  return verify_exact_sequence_impl(t, ctx);
}

ExactSequenceReport verify_exact_sequence(const LieTwist& t, const RunContext& ctx) {
  return verify_exact_sequence_impl(t, ctx);
}

std::vector<ExtensionClass> classify_extensions(const CenterTwist& t, const RunContext& ctx) {
  return classify_impl(t, ctx);
}

std::vector<ExtensionClass> classify_extensions(const LieTwist& t, const RunContext& ctx) {
  return classify_impl(t, ctx);
}

std::vector<EtaEntry> eta_map_center(const MultLieAlgebra& k, const FiniteGroup& h,
                                     const RunContext& ctx) {
  EndMla endh = end_mla(h);
  std::vector<GroupMap> twists = enumerate_mla_homs(k, endh, ctx);
  std::vector<EtaEntry> out;
  for (const GroupMap& tw : twists) {
    EtaEntry entry;
    entry.twist.assign(tw.table.begin(), tw.table.end());
    CenterFactorSystem fs{k, h, trivial_pairfn(k.group.n, h.n),
                          trivial_pairfn(k.group.n, h.n), endh, entry.twist};
    RealizedExtension r = realize_center_fs(fs, {true});
    entry.diag = r.diag;
    entry.realization_valid = r.diag.valid;
    if (entry.realization_valid) {
      CenterFactorSystem back = extract_center_data(r.ext, r.section, {false});
      entry.roundtrip_ok = back.gamma == entry.twist && back.f == fs.f && back.hmap == fs.hmap;
      entry.realized = std::move(r);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<EtaEntry> eta_map_lie(const MultLieAlgebra& k, const FiniteGroup& h,
                                  const RunContext& ctx) {
  AutGroup auth = aut_group(h);
  std::vector<GroupMap> twists = enumerate_group_homs(k.group, auth.grp, ctx);
  std::vector<EtaEntry> out;
  for (const GroupMap& tw : twists) {
    EtaEntry entry;
    entry.twist.assign(tw.table.begin(), tw.table.end());
    LieCenterFactorSystem fs{k, h, trivial_pairfn(k.group.n, h.n),
                             trivial_pairfn(k.group.n, h.n), auth, entry.twist};
    RealizedExtension r = realize_lie_center_fs(fs, {true});
    entry.diag = r.diag;
    entry.realization_valid = r.diag.valid;
    if (entry.realization_valid) {
      LieCenterFactorSystem back = extract_lie_center_data(r.ext, r.section, {false});
      entry.roundtrip_ok = back.sigma == entry.twist && back.f == fs.f && back.hmap == fs.hmap;
      entry.realized = std::move(r);
    }
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

template <typename Twist>
std::optional<GroupMap> cocycles_equivalent_impl(const Twist& t, const CocyclePair& c1,
                                                 const CocyclePair& c2) {
  if (c1.f.k_n != c2.f.k_n || c1.f.h_n != c2.f.h_n)
    throw PreconditionError("cocycle pairs over different K or H");
  for (const GroupMap& g : normalized_maps(t.k.group.n, t.h.n)) {
    CocyclePair chi = coboundary(t, g);
    CocyclePair shifted{pointwise_product(t.h, chi.f, c2.f),
                        pointwise_product(t.h, chi.h, c2.h)};
    if (shifted == c1) return g;
  }
  return std::nullopt;
}

}  // namespace

std::optional<GroupMap> cocycles_equivalent(const CenterTwist& t, const CocyclePair& c1,
                                            const CocyclePair& c2) {
  return cocycles_equivalent_impl(t, c1, c2);
}

std::optional<GroupMap> cocycles_equivalent(const LieTwist& t, const CocyclePair& c1,
                                            const CocyclePair& c2) {
  return cocycles_equivalent_impl(t, c1, c2);
}

AgreementReport validator_oracle_agreement(const CenterTwist& t, const RunContext& ctx) {
  int kn = t.k.group.n, hn = t.h.n;
  auto code = [kn](Elt a, Elt x) { return a * kn + x; };
  int n = kn * hn;
  return agreement_impl(
      t, ctx,
      [&, n](const PairFunction& f, std::vector<Elt>& mul) {
        for (Elt a = 0; a < hn; ++a)
          for (Elt x = 0; x < kn; ++x)
            for (Elt b = 0; b < hn; ++b)
              for (Elt y = 0; y < kn; ++y)
                mul[static_cast<std::size_t>(code(a, x)) * n + code(b, y)] =
                    code(t.h.mul(t.h.mul(a, b), f.at(x, y)), t.k.group.mul(x, y));
      },
      [&, n](const PairFunction&, const PairFunction& hp, std::vector<Elt>& star) {
        for (Elt a = 0; a < hn; ++a)
          for (Elt x = 0; x < kn; ++x)
            for (Elt b = 0; b < hn; ++b)
              for (Elt y = 0; y < kn; ++y) {
                Elt sh = t.h.mul(t.end_h.apply(t.gamma[x], b),
                                 t.end_h.apply(t.gamma[y], t.h.inv(a)));
                sh = t.h.mul(sh, hp.at(x, y));
                star[static_cast<std::size_t>(code(a, x)) * n + code(b, y)] =
                    code(sh, t.k.star(x, y));
              }
      });
}

AgreementReport validator_oracle_agreement(const LieTwist& t, const RunContext& ctx) {
  int kn = t.k.group.n, hn = t.h.n;
  auto code = [kn](Elt a, Elt x) { return a * kn + x; };
  int n = kn * hn;
  return agreement_impl(
      t, ctx,
      [&, n](const PairFunction& f, std::vector<Elt>& mul) {
        for (Elt a = 0; a < hn; ++a)
          for (Elt x = 0; x < kn; ++x)
            for (Elt b = 0; b < hn; ++b)
              for (Elt y = 0; y < kn; ++y)
                mul[static_cast<std::size_t>(code(a, x)) * n + code(b, y)] =
                    code(t.h.mul(t.h.mul(a, t.aut_h.apply(t.sigma[x], b)), f.at(x, y)),
                         t.k.group.mul(x, y));
      },
      [&, n](const PairFunction&, const PairFunction& hp, std::vector<Elt>& star) {
        for (Elt a = 0; a < hn; ++a)
          for (Elt x = 0; x < kn; ++x)
            for (Elt b = 0; b < hn; ++b)
              for (Elt y = 0; y < kn; ++y) {
                Elt xy = t.k.star(x, y);
                Elt sh = t.h.mul(a, b);
                sh = t.h.mul(sh, t.aut_h.apply(t.sigma[xy], t.h.inv(t.h.mul(a, b))));
                sh = t.h.mul(sh, hp.at(x, y));
                star[static_cast<std::size_t>(code(a, x)) * n + code(b, y)] = code(sh, xy);
              }
      });
}

}  // namespace mla
