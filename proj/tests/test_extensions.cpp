#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "mla/cohomology.hpp"

using namespace mla;

namespace {

MultLieAlgebra d4_golden() {
  auto sols = star_completion(dihedral_group(4), {{4, 4, 0}, {1, 1, 0}, {4, 1, 1}}, {});
  REQUIRE(sols.size() == 1);
  return sols.front();
}

Extension d4_extension() { return extension_from_quotient(d4_golden(), {0, 2}); }

Section d4_reference_section(const Extension& e) {
  Section t;
  t.domain_n = 4;
  t.codomain_n = 8;
  t.table.assign(4, 0);
  t.table[e.beta(0)] = 0;  // t(H)  = e
  t.table[e.beta(4)] = 4;  // t(aH) = a
  t.table[e.beta(1)] = 3;  // t(bH) = b^3
  t.table[e.beta(5)] = 5;  // t(abH)= ab
  return t;
}

Extension z4_extension() {
  // 1 -> Z2 -> Z4 -> Z2 -> 1
  RawExtension raw;
  raw.h_alg = with_trivial_star(cyclic_group(2));
  raw.g_alg = with_trivial_star(cyclic_group(4));
  raw.k_alg = with_trivial_star(cyclic_group(2));
  raw.iota = {2, 4, {0, 2}};
  raw.beta = {4, 2, {0, 1, 0, 1}};
  return make_extension(std::move(raw));
}

}  // namespace

TEST_CASE("verify extension") {
  Extension z4 = z4_extension();
  CHECK(z4.central);
  CHECK(z4.lie_central);  // trivial star everywhere
  CHECK(z4.kind() == ExtKind::center);

  Extension d4 = d4_extension();
  CHECK(d4.central);
  CHECK_FALSE(d4.lie_central);
  CHECK(d4.kind() == ExtKind::center);

  RawExtension bad;
  bad.h_alg = with_trivial_star(cyclic_group(2));
  bad.g_alg = with_trivial_star(cyclic_group(4));
  bad.k_alg = with_trivial_star(cyclic_group(2));
  bad.iota = {2, 4, {0, 2}};
  bad.beta = {4, 2, {0, 0, 0, 0}};  // not surjective onto K
  ExtensionCheck check = verify_extension(bad);
  CHECK_FALSE(check.diag.valid);
  CHECK_THROWS_AS(make_extension(bad), SemanticError);
}

TEST_CASE("sections") {
  Extension d4 = d4_extension();
  auto sections = enumerate_sections(d4);
  CHECK(sections.size() == 8);  // |H|^(|K|-1)
  for (const Section& s : sections) CHECK(is_section(d4, s));
  Section t = d4_reference_section(d4);
  CHECK(std::find(sections.begin(), sections.end(), t) != sections.end());
  // canonical order
  for (std::size_t i = 1; i < sections.size(); ++i)
    CHECK(sections[i - 1].table < sections[i].table);

  // trivial quotient: exactly one section
  Extension whole = extension_from_quotient(with_trivial_star(cyclic_group(2)), {0, 1});
  CHECK(enumerate_sections(whole).size() == 1);
}

TEST_CASE("decompose") {
  Extension d4 = d4_extension();
  Section t = d4_reference_section(d4);
  for (Elt x = 0; x < 4; ++x) {
    Decomposition dec = decompose(d4, t, t(x));
    CHECK(dec.h_part == 0);
    CHECK(dec.k_part == x);
  }
  for (Elt h = 0; h < 2; ++h) {
    Decomposition dec = decompose(d4, t, d4.iota(h));
    CHECK(dec.h_part == h);
    CHECK(dec.k_part == 0);
  }
  // b = b^2 . t(bH)
  Decomposition dec = decompose(d4, t, 1);
  CHECK(dec.h_part == 1);
  CHECK(dec.k_part == d4.beta(1));

  // decompose . compose is the identity on H x K
  const FiniteGroup& g = d4.g_alg.group;
  for (const Section& s : enumerate_sections(d4))
    for (Elt h = 0; h < 2; ++h)
      for (Elt x = 0; x < 4; ++x) {
        Decomposition back = decompose(d4, s, g.mul(d4.iota(h), s(x)));
        CHECK(back.h_part == h);
        CHECK(back.k_part == x);
      }
}

TEST_CASE("center extraction reproduces the dihedral tables") {
  Extension d4 = d4_extension();
  Section t = d4_reference_section(d4);
  CenterFactorSystem fs = extract_center_data(d4, t);

  Elt aH = d4.beta(4), bH = d4.beta(1), abH = d4.beta(5);
  PairFunction f_expect = trivial_pairfn(4, 2);
  f_expect.set(aH, bH, 1);
  f_expect.set(aH, abH, 1);
  f_expect.set(bH, abH, 1);
  // forced by the cocycle identity at (aH,bH,bH): t(bH)^2 = b^2
  f_expect.set(bH, bH, 1);
  CHECK(fs.f == f_expect);

  PairFunction h_expect = trivial_pairfn(4, 2);
  h_expect.set(bH, aH, 1);
  h_expect.set(abH, aH, 1);
  h_expect.set(bH, abH, 1);
  CHECK(fs.hmap == h_expect);

  CHECK(fs.gamma == std::vector<int>{0, 0, 1, 1});  // 0_H on H,bH; I_H on aH,abH
  CHECK(validate_center_fs(fs).valid);
}

TEST_CASE("extraction of a split trivial-star extension is trivial") {
  CenterTwist t = trivial_center_twist(with_trivial_star(cyclic_group(2)), cyclic_group(3));
  RealizedExtension split =
      realize_center_fs(to_factor_system(t, trivial_pairfn(2, 3), trivial_pairfn(2, 3)));
  CenterFactorSystem fs = extract_center_data(split.ext, split.section);
  CHECK(fs.f == trivial_pairfn(2, 3));
  CHECK(fs.hmap == trivial_pairfn(2, 3));
  CHECK(std::all_of(fs.gamma.begin(), fs.gamma.end(), [](int v) { return v == 0; }));
}

TEST_CASE("Gamma is independent of the section") {
  Extension d4 = d4_extension();
  std::vector<int> ref = extract_center_data(d4, canonical_section(d4), {false}).gamma;
  for (const Section& s : enumerate_sections(d4))
    CHECK(extract_center_data(d4, s, {false}).gamma == ref);
}

TEST_CASE("lie extraction on the symmetric group") {
  Extension s3 = extension_from_quotient(with_trivial_star(dihedral_group(3)), {0, 1, 2});
  CHECK(s3.lie_central);
  CHECK_FALSE(s3.central);
  CHECK(s3.kind() == ExtKind::lie_center);

  LieCenterFactorSystem fs = extract_lie_center_data(s3, canonical_section(s3));
  CHECK(fs.sigma == std::vector<int>{0, 1});  // identity, inversion
  CHECK(fs.hmap == trivial_pairfn(2, 3));
  CHECK(fs.f == trivial_pairfn(2, 3));
  CHECK(validate_lie_center_fs(fs).valid);
}

TEST_CASE("general extraction") {
  Extension d4 = d4_extension();
  Section t = d4_reference_section(d4);
  GeneralData gd = extract_general_data(d4, t);
  CHECK(gd.law_check.valid);
  CenterFactorSystem fs = extract_center_data(d4, t, {false});
  CHECK(gd.f == fs.f);
  CHECK(gd.hmap == fs.hmap);
  for (Elt x = 0; x < 4; ++x) {
    CHECK(gd.sigma[x] == Endo{0, 1});  // central H: conjugation is trivial
    CHECK(gd.gamma[x] == fs.end_h.endos[fs.gamma[x]]);
  }

  Extension s3 = extension_from_quotient(with_trivial_star(dihedral_group(3)), {0, 1, 2});
  GeneralData gs = extract_general_data(s3, canonical_section(s3));
  CHECK(gs.law_check.valid);
  for (const Endo& gx : gs.gamma) CHECK(gx == Endo{0, 0, 0});  // Lie-central H: star is trivial
}

TEST_CASE("equivalence search") {
  Extension d4 = d4_extension();
  auto self = equivalent_extensions(d4, d4);
  REQUIRE(self.has_value());
  CHECK(std::all_of(self->table.begin(), self->table.end(), [](Elt v) { return v == 0; }));

  // Z4 and Z2xZ2 as center extensions of Z2 by Z2 are not equivalent
  CenterTwist t = trivial_center_twist(with_trivial_star(cyclic_group(2)), cyclic_group(2));
  PairFunction f_nontrivial = trivial_pairfn(2, 2);
  f_nontrivial.set(1, 1, 1);
  RealizedExtension e_z4 =
      realize_center_fs(to_factor_system(t, f_nontrivial, trivial_pairfn(2, 2)));
  RealizedExtension e_klein =
      realize_center_fs(to_factor_system(t, trivial_pairfn(2, 2), trivial_pairfn(2, 2)));
  CHECK(groups_isomorphic(e_z4.ext.g_alg.group, cyclic_group(4)));
  CHECK(groups_isomorphic(e_klein.ext.g_alg.group, klein_four()));
  CHECK_FALSE(equivalent_extensions(e_z4.ext, e_klein.ext).has_value());

  CHECK_THROWS_AS(equivalent_extensions(d4, e_z4.ext), PreconditionError);
}

TEST_CASE("coboundary shifts give equivalent realizations with a verifying witness") {
  MultLieAlgebra k = with_trivial_star(klein_four());
  CenterTwist t = trivial_center_twist(k, cyclic_group(2));
  auto z2 = mla_2cocycles(t, {});
  REQUIRE(!z2.empty());
  GroupMap g{4, 2, {0, 1, 0, 1}};
  CocyclePair shifted_pair = coboundary(t, g);
  CocyclePair base = z2[z2.size() / 2];
  CocyclePair shifted{pointwise_product(t.h, base.f, shifted_pair.f),
                      pointwise_product(t.h, base.h, shifted_pair.h)};
  RealizedExtension e1 = realize_center_fs(to_factor_system(t, base.f, base.h));
  RealizedExtension e2 = realize_center_fs(to_factor_system(t, shifted.f, shifted.h));
  auto witness = equivalent_extensions(e1.ext, e2.ext);
  REQUIRE(witness.has_value());
  ExtMorphism m = morphism_from_witness(e1.ext, e2.ext, *witness);
  CHECK(verify_ext_morphism(e1.ext, e2.ext, m).valid);
}

TEST_CASE("Baer sum") {
  CenterTwist t = trivial_center_twist(with_trivial_star(cyclic_group(2)), cyclic_group(2));
  PairFunction f_nontrivial = trivial_pairfn(2, 2);
  f_nontrivial.set(1, 1, 1);
  RealizedExtension e =
      realize_center_fs(to_factor_system(t, f_nontrivial, trivial_pairfn(2, 2)));
  RealizedExtension split =
      realize_center_fs(to_factor_system(t, trivial_pairfn(2, 2), trivial_pairfn(2, 2)));

  RealizedExtension sum = baer_sum(e.ext, split.ext);
  CHECK(sum.ext.g_alg.group.n == 4);  // |H| |K|
  CHECK(equivalent_extensions(sum.ext, e.ext).has_value());

  // over Z2 coefficients E + E is split
  RealizedExtension doubled = baer_sum(e.ext, e.ext);
  CHECK(equivalent_extensions(doubled.ext, split.ext).has_value());

  // Gamma mismatch is rejected: same H and K, different twist
  EndMla e2 = end_mla(cyclic_group(2));
  CenterFactorSystem fs_twisted{t.k, t.h, trivial_pairfn(2, 2), trivial_pairfn(2, 2), e2,
                                {0, 1}};
  RealizedExtension tw = realize_center_fs(fs_twisted);
  CHECK_THROWS_AS(baer_sum(e.ext, tw.ext), PreconditionError);
}

TEST_CASE("Baer sum on the dihedral extension") {
  Extension d4 = d4_extension();
  RealizedExtension sum = baer_sum(d4, d4);
  CHECK(sum.ext.g_alg.group.n == 8);
  CenterFactorSystem fs = extract_center_data(d4, canonical_section(d4), {false});
  CenterFactorSystem got = extract_center_data(sum.ext, sum.section, {false});
  CHECK(got.f == pointwise_product(cyclic_group(2), fs.f, fs.f));
  CHECK(got.hmap == pointwise_product(cyclic_group(2), fs.hmap, fs.hmap));
  CHECK(got.gamma == fs.gamma);
}
