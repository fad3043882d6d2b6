#pragma once

#include "mla/extension.hpp"

namespace mla {

// K x K -> H table. The f-profile fixes f(1,x) = f(x,1) = 1; the h-profile
// additionally h(x,x) = 1.
struct PairFunction {
  int k_n = 1;
  int h_n = 1;
  std::vector<Elt> table{0};

  Elt at(Elt x, Elt y) const {
    return table[static_cast<std::size_t>(x) * k_n + y];
  }
  void set(Elt x, Elt y, Elt v) {
    table[static_cast<std::size_t>(x) * k_n + y] = v;
  }
  bool f_normalized() const;
  bool h_normalized() const;

  bool operator==(const PairFunction&) const = default;
  bool operator<(const PairFunction& o) const { return table < o.table; }
};

PairFunction trivial_pairfn(int k_n, int h_n);
PairFunction pointwise_product(const FiniteGroup& h, const PairFunction& a, const PairFunction& b);
PairFunction pointwise_inverse(const FiniteGroup& h, const PairFunction& a);

// Quintuple (K, H, f, h, Gamma) with Gamma: K -> End(H) an MLA hom, stored
// as endo indices into end_h.
struct CenterFactorSystem {
  MultLieAlgebra k;
  FiniteGroup h;
  PairFunction f;
  PairFunction hmap;
  EndMla end_h;
  std::vector<int> gamma;

  Elt gamma_apply(Elt x, Elt v) const { return end_h.apply(gamma[x], v); }
  bool operator==(const CenterFactorSystem&) const = default;
};

// Quintuple (K, H, f, h, sigma) with sigma: K -> Aut(H) a group hom.
struct LieCenterFactorSystem {
  MultLieAlgebra k;
  FiniteGroup h;
  PairFunction f;
  PairFunction hmap;
  AutGroup aut_h;
  std::vector<int> sigma;

  Elt sigma_apply(Elt x, Elt v) const { return aut_h.apply(sigma[x], v); }
  bool operator==(const LieCenterFactorSystem&) const = default;
};

struct ValidateOptions {
  int max_violations = 100;
  bool stop_on_first = false;
};

// Compatibility equations, evaluated exactly as displayed in the source
// derivation. C0/C1: f normalization + cocycle law. C2: h normalization.
// C3-C6: the four center compatibility equations over all of K^3.
Diagnostics validate_center_fs(const CenterFactorSystem& fs, ValidateOptions opt = {});

// Lie-center analogue. L0/L1: twisted cocycle law, L2: h normalization,
// L3-L6: quantified over all (x,y,z) in K^3 and (h,k,l) in H^3.
Diagnostics validate_lie_center_fs(const LieCenterFactorSystem& fs, ValidateOptions opt = {});

// L6's printed form is provably wrong on two counts: an inner block fails
// to mirror its outer block (a lost inverse), and its last two factors join
// the first two Jacobi terms with * where the group law yields their
// product. Either slip rejects data extracted from genuine extensions. The
// validator uses the corrected form; the verbatim form stays available for
// the regression test documenting the discrepancy.
enum class LieJacobiForm { corrected, verbatim };
bool lie_jacobi_instance(const LieCenterFactorSystem& fs, Elt x, Elt y, Elt z,
                         Elt ah, Elt ak, Elt al, LieJacobiForm form);

// Early-exit forms for enumeration inner loops: the (possibly twisted) group
// cocycle law alone, and the compatibility block C3-C6 resp. L3-L6.
bool group_cocycle_condition(const FiniteGroup& k, const FiniteGroup& h,
                             const PairFunction& f, const AutGroup* aut,
                             const std::vector<int>* sigma);
bool center_compat_equations(const MultLieAlgebra& k, const FiniteGroup& h,
                             const PairFunction& f, const PairFunction& hmap,
                             const EndMla& end_h, const std::vector<int>& gamma);
bool lie_compat_equations(const MultLieAlgebra& k, const FiniteGroup& h,
                          const PairFunction& f, const PairFunction& hmap,
                          const AutGroup& aut_h, const std::vector<int>& sigma);

struct RealizeOptions {
  bool force = false;  // diagnostic mode: return issues instead of throwing
};

struct RealizedExtension {
  Extension ext;
  Section section;  // canonical section t(x) = (1, x)
  Diagnostics diag;
};

// G on carrier H x K with (a,x)(b,y) = (a b f(x,y), xy) and
// (a,x)*(b,y) = (Gamma_x(b) Gamma_y(a^-1) h(x,y), x*y). Asserts the result
// verifies, is a center extension, and extracts back to fs exactly.
RealizedExtension realize_center_fs(const CenterFactorSystem& fs, RealizeOptions opt = {});

// G with (a,x)(b,y) = (a sigma_x(b) f(x,y), xy) and
// (a,x)*(b,y) = (a b sigma_{x*y}(a^-1 b^-1) h(x,y), x*y).
RealizedExtension realize_lie_center_fs(const LieCenterFactorSystem& fs, RealizeOptions opt = {});

struct ExtractOptions {
  bool validate = true;  // run the equation validators on the result
};

// f(x,y), h(x,y) from decomposing t(x)t(y) and t(x)*t(y); Gamma_x = t(x)*( ).
// Requires a center extension. Checks Gamma is an MLA hom into End(H) and,
// unless disabled, that the system passes validate_center_fs; violations of
// either raise StructuralError carrying the evidence.
CenterFactorSystem extract_center_data(const Extension& e, const Section& t,
                                       ExtractOptions opt = {});

// sigma_x = t(x) ( ) t(x)^-1; requires a Lie-center extension. Checks sigma
// is a section-independent group hom into Aut(H).
LieCenterFactorSystem extract_lie_center_data(const Extension& e, const Section& t,
                                              ExtractOptions opt = {});

// Any extension of abelian trivial-star H: all four maps, plus a check that
//   (h t(x))(k t(y)) = h sigma_x(k) f(x,y) t(xy)
//   (h t(x))*(k t(y)) = h k Gamma_x(k) sigma_{x*y}(h^-1 k^-1 Gamma_y(h^-1)) h(x,y) t(x*y)
// reproduce G's tables. Mismatches land in law_check, never thrown.
struct GeneralData {
  PairFunction f;
  PairFunction hmap;
  std::vector<Endo> sigma;  // raw tables, one per K element
  std::vector<Endo> gamma;
  Diagnostics law_check;
};

GeneralData extract_general_data(const Extension& e, const Section& t);

// Pullback-then-quotient sum of two center extensions with equal Gamma.
// Asserts the extracted cocycles multiply pointwise and Gamma is preserved.
RealizedExtension baer_sum(const Extension& e1, const Extension& e2);

// Factor-system morphism (nu, g, lambda).
struct FsMorphism {
  GroupMap nu;      // K1 -> K2
  GroupMap g;       // K1 -> H2, g(1) = 1
  GroupMap lambda;  // H1 -> H2
};

enum class FsMode { center, lie };

Diagnostics verify_fs_morphism(const FsMorphism& m, const CenterFactorSystem& fs1,
                               const CenterFactorSystem& fs2);
Diagnostics verify_fs_morphism(const FsMorphism& m, const LieCenterFactorSystem& fs1,
                               const LieCenterFactorSystem& fs2);

// g(x) from mu(t1(x)) = g(x) t2(nu(x)).
FsMorphism induced_fs_morphism(const Extension& e1, const Section& t1,
                               const Extension& e2, const Section& t2,
                               const ExtMorphism& m);

// (nu2 o nu1, g3, lambda2 o lambda1) with g3(x) = g2(nu1(x)) lambda2(g1(x)).
// Asserts the composite verifies against fs1 -> fs3.
FsMorphism compose_fs_morphisms(const FsMorphism& m1, const FsMorphism& m2,
                                const CenterFactorSystem& fs1,
                                const CenterFactorSystem& fs3);
FsMorphism compose_fs_morphisms(const FsMorphism& m1, const FsMorphism& m2,
                                const LieCenterFactorSystem& fs1,
                                const LieCenterFactorSystem& fs3);

}  // namespace mla
