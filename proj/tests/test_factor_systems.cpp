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

CenterFactorSystem d4_system() {
  Extension e = d4_extension();
  Section t;
  t.domain_n = 4;
  t.codomain_n = 8;
  t.table.assign(4, 0);
  t.table[e.beta(0)] = 0;
  t.table[e.beta(4)] = 4;
  t.table[e.beta(1)] = 3;
  t.table[e.beta(5)] = 5;
  return extract_center_data(e, t);
}

MultLieAlgebra klein_det_star() {
  // the Klein algebra induced on the dihedral quotient
  return quotient_mla(d4_golden(), {0, 2}).quotient;
}

}  // namespace

TEST_CASE("center validator") {
  // trivial f and h validate for every twist
  MultLieAlgebra k = klein_det_star();
  FiniteGroup h2 = cyclic_group(2);
  EndMla e2 = end_mla(h2);
  for (const GroupMap& tw : enumerate_mla_homs(k, e2)) {
    CenterFactorSystem fs{k, h2, trivial_pairfn(4, 2), trivial_pairfn(4, 2), e2,
                          std::vector<int>(tw.table.begin(), tw.table.end())};
    CHECK(validate_center_fs(fs).valid);
  }

  CenterFactorSystem d4 = d4_system();
  CHECK(validate_center_fs(d4).valid);

  // flipping one h cell breaks a compatibility equation
  Extension e = d4_extension();
  Elt aH = e.beta(4), bH = e.beta(1);
  CenterFactorSystem broken = d4;
  broken.hmap.set(bH, aH, 0);
  Diagnostics d = validate_center_fs(broken);
  CHECK_FALSE(d.valid);
  bool compat = false;
  for (const auto& v : d.violations)
    compat = compat || v.law == "C3" || v.law == "C4" || v.law == "C5" || v.law == "C6";
  CHECK(compat);

  CenterFactorSystem misshaped = d4;
  misshaped.f = trivial_pairfn(3, 2);
  CHECK_THROWS_AS(validate_center_fs(misshaped), FormatError);
}

TEST_CASE("violation reporting is capped and orderly") {
  CenterFactorSystem d4 = d4_system();
  CenterFactorSystem broken = d4;
  broken.hmap.set(d4_extension().beta(1), d4_extension().beta(4), 0);
  Diagnostics all = validate_center_fs(broken);
  Diagnostics one = validate_center_fs(broken, {1, true});
  CHECK(all.violations.size() >= one.violations.size());
  CHECK(one.violations.size() == 1);
}

TEST_CASE("center realization") {
  CenterTwist t = trivial_center_twist(with_trivial_star(cyclic_group(2)), cyclic_group(2));
  RealizedExtension split =
      realize_center_fs(to_factor_system(t, trivial_pairfn(2, 2), trivial_pairfn(2, 2)));
  CHECK(groups_isomorphic(split.ext.g_alg.group, klein_four()));
  CHECK(split.ext.g_alg.star_trivial());
  CHECK(split.ext.central);

  PairFunction f = trivial_pairfn(2, 2);
  f.set(1, 1, 1);
  RealizedExtension z4 = realize_center_fs(to_factor_system(t, f, trivial_pairfn(2, 2)));
  CHECK(groups_isomorphic(z4.ext.g_alg.group, cyclic_group(4)));

  // the dihedral system realizes to an extension equivalent to the original
  CenterFactorSystem d4 = d4_system();
  RealizedExtension r = realize_center_fs(d4);
  CHECK(r.ext.g_alg.group.n == 8);
  CHECK(equivalent_extensions(r.ext, d4_extension()).has_value());

  // invalid input is refused up front
  CenterFactorSystem bad = d4;
  bad.hmap.set(d4_extension().beta(1), d4_extension().beta(4), 0);
  CHECK_THROWS_AS(realize_center_fs(bad), PreconditionError);
}

TEST_CASE("lie realization") {
  LieTwist triv = trivial_lie_twist(with_trivial_star(cyclic_group(2)), cyclic_group(3));
  RealizedExtension split =
      realize_lie_center_fs(to_factor_system(triv, trivial_pairfn(2, 3), trivial_pairfn(2, 3)));
  CHECK(groups_isomorphic(split.ext.g_alg.group, cyclic_group(6)));
  CHECK(split.ext.lie_central);

  AutGroup a3 = aut_group(cyclic_group(3));
  LieCenterFactorSystem s3{with_trivial_star(cyclic_group(2)), cyclic_group(3),
                           trivial_pairfn(2, 3), trivial_pairfn(2, 3), a3, {0, 1}};
  CHECK(validate_lie_center_fs(s3).valid);
  RealizedExtension r = realize_lie_center_fs(s3);
  CHECK(groups_isomorphic(r.ext.g_alg.group, dihedral_group(3)));
  CHECK(r.ext.kind() == ExtKind::lie_center);
  CHECK(r.ext.g_alg.star_trivial());
}

TEST_CASE("round trips are exact") {
  CenterTwist tc = trivial_center_twist(klein_det_star(), cyclic_group(2));
  for (const CocyclePair& pair : mla_2cocycles(tc, {})) {
    RealizedExtension r = realize_center_fs(to_factor_system(tc, pair.f, pair.h));
    CenterFactorSystem back = extract_center_data(r.ext, r.section, {false});
    CHECK(back.f == pair.f);
    CHECK(back.hmap == pair.h);
    CHECK(back.gamma == tc.gamma);
  }

  LieTwist tl = trivial_lie_twist(klein_det_star(), cyclic_group(3));
  auto z2 = mla_2cocycles(tl, {});
  REQUIRE(!z2.empty());
  for (const CocyclePair& pair : z2) {
    RealizedExtension r = realize_lie_center_fs(to_factor_system(tl, pair.f, pair.h));
    LieCenterFactorSystem back = extract_lie_center_data(r.ext, r.section, {false});
    CHECK(back.f == pair.f);
    CHECK(back.hmap == pair.h);
    CHECK(back.sigma == tl.sigma);
  }
}

TEST_CASE("group-homomorphic actions can clash with the star table") {
  // sigma inverting the star image of a nontrivial-star K breaks the
  // trivial-cocycle construction; the validator and the realization agree.
  MultLieAlgebra k = klein_det_star();
  AutGroup a3 = aut_group(cyclic_group(3));
  Elt star_value = k.star(2, 1);  // nonidentity star value
  REQUIRE(star_value != 0);
  std::vector<int> sigma;
  for (const GroupMap& tw : enumerate_group_homs(k.group, a3.grp))
    if (tw.table[star_value] != 0) sigma.assign(tw.table.begin(), tw.table.end());
  REQUIRE(!sigma.empty());

  LieCenterFactorSystem fs{k, cyclic_group(3), trivial_pairfn(4, 3), trivial_pairfn(4, 3),
                           a3, sigma};
  CHECK_FALSE(validate_lie_center_fs(fs, {1, true}).valid);
  RealizedExtension r = realize_lie_center_fs(fs, {true});
  CHECK_FALSE(r.diag.valid);

  // actions killing the star image realize fine
  LieCenterFactorSystem ok{k, cyclic_group(3), trivial_pairfn(4, 3), trivial_pairfn(4, 3),
                           a3, {0, 0, 0, 0}};
  CHECK(validate_lie_center_fs(ok).valid);
  CHECK(realize_lie_center_fs(ok).diag.valid);
}

TEST_CASE("printed Jacobi variant rejects genuine systems") {
  // inner-block mirror slip: nontrivial f over Z3 coefficients
  LieTwist t = trivial_lie_twist(with_trivial_star(cyclic_group(2)), cyclic_group(3));
  PairFunction f = trivial_pairfn(2, 3);
  f.set(1, 1, 1);
  LieCenterFactorSystem fs = to_factor_system(t, f, trivial_pairfn(2, 3));
  CHECK(validate_lie_center_fs(fs).valid);
  CHECK(realize_lie_center_fs(fs).diag.valid);
  bool verbatim_holds = true;
  for (Elt x = 0; x < 2 && verbatim_holds; ++x)
    for (Elt y = 0; y < 2 && verbatim_holds; ++y)
      for (Elt z = 0; z < 2 && verbatim_holds; ++z)
        for (Elt ah = 0; ah < 3 && verbatim_holds; ++ah)
          for (Elt ak = 0; ak < 3 && verbatim_holds; ++ak)
            for (Elt al = 0; al < 3 && verbatim_holds; ++al)
              verbatim_holds =
                  lie_jacobi_instance(fs, x, y, z, ah, ak, al, LieJacobiForm::verbatim);
  CHECK_FALSE(verbatim_holds);

  // star-for-product slip: needs a K with nontrivial star
  LieTwist tk = trivial_lie_twist(klein_det_star(), cyclic_group(3));
  bool verbatim_rejects_some = false;
  for (const CocyclePair& pair : mla_2cocycles(tk, {})) {
    LieCenterFactorSystem cand = to_factor_system(tk, pair.f, pair.h);
    for (Elt x = 0; x < 4; ++x)
      for (Elt y = 0; y < 4; ++y)
        for (Elt z = 0; z < 4; ++z)
          for (Elt ah = 0; ah < 3; ++ah)
            for (Elt ak = 0; ak < 3; ++ak)
              for (Elt al = 0; al < 3; ++al) {
                CHECK(lie_jacobi_instance(cand, x, y, z, ah, ak, al,
                                          LieJacobiForm::corrected));
                if (!lie_jacobi_instance(cand, x, y, z, ah, ak, al, LieJacobiForm::verbatim))
                  verbatim_rejects_some = true;
              }
  }
  CHECK(verbatim_rejects_some);
}

TEST_CASE("factor-system morphisms") {
  CenterFactorSystem d4 = d4_system();
  FsMorphism id{identity_map(4), GroupMap{4, 2, {0, 0, 0, 0}}, identity_map(2)};
  CHECK(verify_fs_morphism(id, d4, d4).valid);

  // induced by an extension equivalence
  Extension e1 = d4_extension();
  RealizedExtension e2 = realize_center_fs(d4);
  auto witness = equivalent_extensions(e1, e2.ext);
  REQUIRE(witness.has_value());
  ExtMorphism m = morphism_from_witness(e1, e2.ext, *witness);
  Section t1 = canonical_section(e1);
  FsMorphism induced = induced_fs_morphism(e1, t1, e2.ext, e2.section, m);
  CenterFactorSystem fs1 = extract_center_data(e1, t1, {false});
  CenterFactorSystem fs2 = extract_center_data(e2.ext, e2.section, {false});
  CHECK(verify_fs_morphism(induced, fs1, fs2).valid);

  // a mutated g is caught, with the offending cell named
  FsMorphism broken = induced;
  broken.g.table[1] = broken.g.table[1] == 0 ? 1 : 0;
  Diagnostics d = verify_fs_morphism(broken, fs1, fs2);
  CHECK_FALSE(d.valid);
  CHECK(!d.violations.empty());

  // composition with the identity is the identity action
  FsMorphism composed = compose_fs_morphisms(induced, FsMorphism{identity_map(4),
                                             GroupMap{4, 2, {0, 0, 0, 0}}, identity_map(2)},
                                             fs1, fs2);
  CHECK(composed.g == induced.g);
  CHECK(composed.nu == induced.nu);
  CHECK(composed.lambda == induced.lambda);
}

TEST_CASE("morphism composition matches the composed extension morphisms") {
  CenterTwist t = trivial_center_twist(with_trivial_star(cyclic_group(2)), cyclic_group(2));
  PairFunction f = trivial_pairfn(2, 2);
  f.set(1, 1, 1);
  CenterFactorSystem base = to_factor_system(t, f, trivial_pairfn(2, 2));
  RealizedExtension e1 = realize_center_fs(base);

  GroupMap g{2, 2, {0, 1}};
  CocyclePair shift = coboundary(t, g);
  CenterFactorSystem moved =
      to_factor_system(t, pointwise_product(t.h, f, shift.f),
                       pointwise_product(t.h, trivial_pairfn(2, 2), shift.h));
  RealizedExtension e2 = realize_center_fs(moved);
  RealizedExtension e3 = realize_center_fs(base);

  auto w12 = equivalent_extensions(e1.ext, e2.ext);
  auto w23 = equivalent_extensions(e2.ext, e3.ext);
  REQUIRE(w12.has_value());
  REQUIRE(w23.has_value());
  ExtMorphism m12 = morphism_from_witness(e1.ext, e2.ext, *w12);
  ExtMorphism m23 = morphism_from_witness(e2.ext, e3.ext, *w23);
  ExtMorphism m13{chain(m12.lambda, m23.lambda), chain(m12.mu, m23.mu),
                  chain(m12.nu, m23.nu)};
  CHECK(verify_ext_morphism(e1.ext, e3.ext, m13).valid);

  CenterFactorSystem fs1 = extract_center_data(e1.ext, e1.section, {false});
  CenterFactorSystem fs2 = extract_center_data(e2.ext, e2.section, {false});
  CenterFactorSystem fs3 = extract_center_data(e3.ext, e3.section, {false});
  FsMorphism i12 = induced_fs_morphism(e1.ext, e1.section, e2.ext, e2.section, m12);
  FsMorphism i23 = induced_fs_morphism(e2.ext, e2.section, e3.ext, e3.section, m23);
  FsMorphism i13 = induced_fs_morphism(e1.ext, e1.section, e3.ext, e3.section, m13);
  FsMorphism composed = compose_fs_morphisms(i12, i23, fs1, fs3);
  CHECK(composed.g == i13.g);
  CHECK(composed.nu == i13.nu);
  CHECK(composed.lambda == i13.lambda);

  // associativity, padding the chain with an identity morphism
  FsMorphism id3{identity_map(2), GroupMap{2, 2, {0, 0}}, identity_map(2)};
  FsMorphism left = compose_fs_morphisms(compose_fs_morphisms(i12, i23, fs1, fs3), id3,
                                         fs1, fs3);
  FsMorphism right = compose_fs_morphisms(i12, compose_fs_morphisms(i23, id3, fs2, fs3),
                                          fs1, fs3);
  CHECK(left.g == right.g);
  CHECK(left.nu == right.nu);
  CHECK(left.lambda == right.lambda);
}
