#pragma once

#include <vector>

#include "mla/group.hpp"

namespace mla {

// A group together with a second binary operation "*" subject to, writing
// ^y(w) for the conjugate y w y^-1:
//   M1  x*x = x*1 = 1*x = 1
//   M2  x*(yz) = (x*y) ^y(x*z)
//   M3  (xy)*z = ^x(y*z) (x*z)
//   M4  ((x*y) * ^y(z)) ((y*z) * ^z(x)) ((z*x) * ^x(y)) = 1
//   M5  ^z(x*y) = ^z(x) * ^z(y)
struct MultLieAlgebra {
  FiniteGroup group;
  std::vector<Elt> star_table{0};

  Elt star(Elt a, Elt b) const {
    return star_table[static_cast<std::size_t>(a) * group.n + b];
  }
  bool star_trivial() const;

  bool operator==(const MultLieAlgebra&) const = default;
};

MultLieAlgebra with_trivial_star(FiniteGroup g);

// Checks M1-M5 over all tuples, listing every violated (axiom, tuple).
// The group layer must already be valid (PreconditionError otherwise).
Diagnostics verify_mla(const MultLieAlgebra& m);

// Early-exit boolean form of the same axioms, for enumeration inner loops.
// Assumes the group layer and star table shape are already known good.
bool mla_axioms_hold(const MultLieAlgebra& m);

MultLieAlgebra make_mla(FiniteGroup g, std::vector<Elt> star_table);
MultLieAlgebra make_mla_unchecked(FiniteGroup g, std::vector<Elt> star_table);

std::vector<Elt> lie_center(const MultLieAlgebra& m);

struct StarConstraint {
  Elt x = 0;
  Elt y = 0;
  Elt value = 0;
};

// Finds every star table on g satisfying M1-M5 and the given constraints, in
// lexicographic (row-major) order. Backtracking with M1/M5 and antisymmetry
// propagation plus forced M2/M3 deductions; full recheck at the leaves.
// Contradictory constraints yield an empty list.
std::vector<MultLieAlgebra> star_completion(const FiniteGroup& g,
                                            const std::vector<StarConstraint>& constraints,
                                            const RunContext& ctx = {});

MultLieAlgebra product_mla(const MultLieAlgebra& a, const MultLieAlgebra& b);

struct QuotientResult {
  MultLieAlgebra quotient;
  std::vector<Elt> projection;  // element of m -> coset index
};

// Quotient by a normal star-ideal given as an element subset. Cosets are
// indexed with the identity coset first, the rest ordered by least member.
// Ill-defined induced tables raise SemanticError.
QuotientResult quotient_mla(const MultLieAlgebra& m, const std::vector<Elt>& subgroup);

}  // namespace mla
