#pragma once

#include <vector>

#include "mla/maps.hpp"

namespace mla {

using Endo = std::vector<Elt>;  // endomorphism of H as an image table

// End(H) for abelian H: all group endomorphisms, carrying the multiplicative
// Lie algebra structure with pointwise product and
//   (F*G)(h) = F(G(h)) G(F(h^-1)).
// Carrier is ordered lexicographically; index 0 is the constant-identity
// endomorphism (the product identity).
struct EndMla {
  FiniteGroup h;
  std::vector<Endo> endos;
  MultLieAlgebra alg;

  Elt apply(int endo_index, Elt v) const { return endos[endo_index][v]; }
  int index_of(const Endo& e) const;  // -1 when absent
  int size() const { return static_cast<int>(endos.size()); }

  bool operator==(const EndMla&) const = default;
};

// PreconditionError when h is not abelian; BudgetError past the order cap.
EndMla end_mla(const FiniteGroup& h, int max_order = 16);

// Aut(H) under composition. Index 0 is the identity automorphism, the rest
// ordered lexicographically.
struct AutGroup {
  FiniteGroup h;
  std::vector<Endo> autos;
  FiniteGroup grp;  // composition table

  Elt apply(int aut_index, Elt v) const { return autos[aut_index][v]; }
  int index_of(const Endo& e) const;
  int size() const { return static_cast<int>(autos.size()); }

  bool operator==(const AutGroup&) const = default;
};

AutGroup aut_group(const FiniteGroup& h, int max_order = 16);

// All maps K -> End(H) preserving both operations, ordered by table.
std::vector<GroupMap> enumerate_mla_homs(const MultLieAlgebra& k,
                                         const EndMla& target,
                                         const RunContext& ctx = {});

}  // namespace mla
