#pragma once

#include <optional>

#include "mla/factor_system.hpp"

namespace mla {

// Fixed action data for a cocycle computation.
struct CenterTwist {
  MultLieAlgebra k;
  FiniteGroup h;
  EndMla end_h;
  std::vector<int> gamma;
};

struct LieTwist {
  MultLieAlgebra k;
  FiniteGroup h;
  AutGroup aut_h;
  std::vector<int> sigma;
};

CenterTwist trivial_center_twist(const MultLieAlgebra& k, const FiniteGroup& h);
LieTwist trivial_lie_twist(const MultLieAlgebra& k, const FiniteGroup& h);

CenterFactorSystem to_factor_system(const CenterTwist& t, PairFunction f, PairFunction h);
LieCenterFactorSystem to_factor_system(const LieTwist& t, PairFunction f, PairFunction h);

struct CocyclePair {
  PairFunction f;
  PairFunction h;

  bool operator==(const CocyclePair&) const = default;
  bool operator<(const CocyclePair& o) const {
    return f.table != o.f.table ? f.table < o.f.table : h.table < o.h.table;
  }
};

// All normalized f: K x K -> H with f(x,y) f(xy,z) = act_x(f(y,z)) f(x,yz);
// `aut`/`sigma` null means the trivial action. Lexicographic order.
std::vector<PairFunction> group_2cocycles(const FiniteGroup& k, const FiniteGroup& h,
                                          const AutGroup* aut, const std::vector<int>* sigma,
                                          const RunContext& ctx = {});

// f-first enumeration: group cocycles, then normalized h per f, kept when
// the compatibility equations hold. Canonical (f, h) order.
std::vector<CocyclePair> mla_2cocycles(const CenterTwist& t, const RunContext& ctx = {});
std::vector<CocyclePair> mla_2cocycles(const LieTwist& t, const RunContext& ctx = {});

// chi(g) = (delta g, g*); g must be normalized (g(1) = 1).
CocyclePair coboundary(const CenterTwist& t, const GroupMap& g);
CocyclePair coboundary(const LieTwist& t, const GroupMap& g);

std::vector<GroupMap> normalized_maps(int k_n, int h_n);  // MAP(K,H), ordered

struct CohomologyGroup {
  std::vector<CocyclePair> z2;   // canonical order
  std::vector<CocyclePair> b2;   // sorted distinct coboundaries
  std::vector<int> class_of;     // per z2 member
  std::vector<int> rep_of_class; // class -> index into z2 (lex-least member)
  std::vector<std::vector<int>> class_mul;
  std::size_t map_count = 0;
  std::size_t hom_kernel_count = 0;  // |ker chi|
  // False when the twist admits no cocycles at all; the quotient machinery
  // is skipped and |H2| reads 0.
  bool twist_admissible = true;

  std::size_t z2_count() const { return z2.size(); }
  std::size_t b2_count() const { return b2.size(); }
  std::size_t h2_count() const { return rep_of_class.size(); }
};

CohomologyGroup cohomology_group(const CenterTwist& t, const RunContext& ctx = {});
CohomologyGroup cohomology_group(const LieTwist& t, const RunContext& ctx = {});

struct ExactSequenceReport {
  std::size_t map_count = 0;
  std::size_t plain_hom_count = 0;  // MLA homs K -> H inside MAP
  std::size_t kernel_count = 0;     // |ker chi|
  std::size_t z2_count = 0;
  std::size_t b2_count = 0;
  std::size_t h2_count = 0;
  bool kernel_equals_plain_homs = false;
  bool b2_inside_z2 = false;
  bool chi_is_hom = false;
  bool quotient_sizes_consistent = false;  // |MAP| = |B2| |ker|, |Z2| = |H2| |B2|
  bool twist_admissible = true;
  Diagnostics diag;
};

// 1 -> Hom(K,H) -> MAP(K,H) -> Z2 -> H2 -> 1, checked computationally.
ExactSequenceReport verify_exact_sequence(const CenterTwist& t, const RunContext& ctx = {});
ExactSequenceReport verify_exact_sequence(const LieTwist& t, const RunContext& ctx = {});

struct ExtensionClass {
  int class_index = 0;
  CocyclePair rep;
  RealizedExtension realization;
};

// One realized extension per cohomology class. Asserts the representatives
// are pairwise inequivalent and that every cocycle's realization lands in
// exactly the class the quotient predicts.
std::vector<ExtensionClass> classify_extensions(const CenterTwist& t, const RunContext& ctx = {});
std::vector<ExtensionClass> classify_extensions(const LieTwist& t, const RunContext& ctx = {});

struct EtaEntry {
  std::vector<int> twist;  // endo/auto indices per K element
  bool realization_valid = false;
  bool roundtrip_ok = false;
  Diagnostics diag;
  RealizedExtension realized;  // meaningful when realization_valid
};

// For every hom in Hom(K, End(H)) resp. Hom(K, Aut(H)), builds the
// trivial-cocycle extension and compares the extracted twist with the input.
std::vector<EtaEntry> eta_map_center(const MultLieAlgebra& k, const FiniteGroup& h,
                                     const RunContext& ctx = {});
std::vector<EtaEntry> eta_map_lie(const MultLieAlgebra& k, const FiniteGroup& h,
                                  const RunContext& ctx = {});

// First normalized g with c1 = chi(g) . c2, if any.
std::optional<GroupMap> cocycles_equivalent(const CenterTwist& t, const CocyclePair& c1,
                                            const CocyclePair& c2);
std::optional<GroupMap> cocycles_equivalent(const LieTwist& t, const CocyclePair& c1,
                                            const CocyclePair& c2);

// Full-universe comparison of the equation validators against the
// realize-then-verify oracle: for every (f, h) with f a (twisted) group
// cocycle and h normalized, both verdicts are computed and mismatches kept.
struct AgreementReport {
  std::size_t universe = 0;
  std::size_t validator_pass = 0;
  std::size_t oracle_pass = 0;
  std::vector<CocyclePair> validator_only;
  std::vector<CocyclePair> oracle_only;
  bool agree() const { return validator_only.empty() && oracle_only.empty(); }
};

AgreementReport validator_oracle_agreement(const CenterTwist& t, const RunContext& ctx = {});
AgreementReport validator_oracle_agreement(const LieTwist& t, const RunContext& ctx = {});

}  // namespace mla
