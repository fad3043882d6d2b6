#pragma once

#include <optional>
#include <vector>

#include "mla/endmla.hpp"

namespace mla {

enum class ExtKind { general, center, lie_center };

// Short exact sequence 1 -> H -> G -> K -> 1 of multiplicative Lie algebras.
// H is abelian with trivial star. `central` / `lie_central` record whether
// iota(H) lies in the center resp. Lie center of G; both can hold.
struct Extension {
  MultLieAlgebra h_alg;
  MultLieAlgebra g_alg;
  MultLieAlgebra k_alg;
  GroupMap iota;  // H -> G
  GroupMap beta;  // G -> K
  std::vector<Elt> iota_inv;  // G index -> H index, -1 off the image
  bool central = false;
  bool lie_central = false;

  ExtKind kind() const {
    return central ? ExtKind::center
                   : (lie_central ? ExtKind::lie_center : ExtKind::general);
  }
  bool operator==(const Extension&) const = default;
};

struct RawExtension {
  MultLieAlgebra h_alg, g_alg, k_alg;
  GroupMap iota, beta;
};

struct ExtensionCheck {
  Diagnostics diag;
  bool central = false;
  bool lie_central = false;
};

// Exactness, injectivity/surjectivity, hom laws, H abelian + trivial star.
// Component structures must already verify (PreconditionError otherwise).
ExtensionCheck verify_extension(const RawExtension& raw);

Extension make_extension(RawExtension raw);  // SemanticError on violations

// Convenience: extension 1 -> S -> M -> M/S -> 1 from a subset S of M.
Extension extension_from_quotient(const MultLieAlgebra& m, const std::vector<Elt>& subgroup);

// Sections are normalized set maps t: K -> G with beta(t(x)) = x, t(1) = 1.
using Section = GroupMap;

bool is_section(const Extension& e, const Section& t);
std::vector<Section> enumerate_sections(const Extension& e);  // lexicographic
Section canonical_section(const Extension& e);

struct Decomposition {
  Elt h_part = 0;
  Elt k_part = 0;
};

// Unique (h, x) with g = iota(h) t(x).
Decomposition decompose(const Extension& e, const Section& t, Elt g);

// Morphism of extensions: commuting squares of MLA homs.
struct ExtMorphism {
  GroupMap lambda;  // H1 -> H2
  GroupMap mu;      // G1 -> G2
  GroupMap nu;      // K1 -> K2
};

Diagnostics verify_ext_morphism(const Extension& e1, const Extension& e2,
                                const ExtMorphism& m);

// Searches normalized maps g: K -> H (canonical order) for an equivalence
// mu(iota1(h) t1(x)) = iota2(h g(x)) t2(x); returns the first witness. Both
// extensions must share H and K tables.
std::optional<GroupMap> equivalent_extensions(const Extension& e1, const Extension& e2);

// The isomorphism G1 -> G2 induced by an equivalence witness g.
ExtMorphism morphism_from_witness(const Extension& e1, const Extension& e2,
                                  const GroupMap& g);

}  // namespace mla
