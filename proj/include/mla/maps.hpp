#pragma once

#include <vector>

#include "mla/mla.hpp"

namespace mla {

// Plain set map between element index ranges. Hom laws are checked by the
// predicates below, not by the type.
struct GroupMap {
  int domain_n = 1;
  int codomain_n = 1;
  std::vector<Elt> table{0};

  Elt operator()(Elt x) const { return table[x]; }
  bool operator==(const GroupMap&) const = default;
  bool operator<(const GroupMap& o) const { return table < o.table; }
};

GroupMap identity_map(int n);
// g after f
GroupMap chain(const GroupMap& f, const GroupMap& g);

bool is_group_hom(const GroupMap& m, const FiniteGroup& dom, const FiniteGroup& cod);
bool is_mla_hom(const GroupMap& m, const MultLieAlgebra& dom, const MultLieAlgebra& cod);
bool is_injective(const GroupMap& m);
bool is_surjective(const GroupMap& m);

// All group homomorphisms dom -> cod, ordered lexicographically by table.
// Candidates are generated from generator images and filtered.
std::vector<GroupMap> enumerate_group_homs(const FiniteGroup& dom,
                                           const FiniteGroup& cod,
                                           const RunContext& ctx = {});

// Minimal generating sequence plus a factorization of every element as
// expr[e] = {prev, gen_index} with e = prev * gens[gen_index].
struct GeneratorDecomposition {
  std::vector<Elt> gens;
  std::vector<Elt> closure_order;          // BFS order, starts at identity
  std::vector<std::pair<Elt, int>> expr;   // indexed by element
};
GeneratorDecomposition generator_decomposition(const FiniteGroup& g);

}  // namespace mla
