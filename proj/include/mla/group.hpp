#pragma once

#include <vector>

#include "mla/diagnostics.hpp"

namespace mla {

// Dense element index. 0 is always the identity.
using Elt = int;

struct FiniteGroup {
  int n = 1;
  std::vector<Elt> mul_table{0};  // n*n, row-major
  std::vector<Elt> inv_table{0};

  Elt mul(Elt a, Elt b) const {
    return mul_table[static_cast<std::size_t>(a) * n + b];
  }
  Elt inv(Elt a) const { return inv_table[a]; }
  // conjugation a b a^-1
  Elt conj(Elt a, Elt b) const { return mul(mul(a, b), inv(a)); }

  bool abelian() const;
  int element_order(Elt a) const;
  std::vector<int> order_multiset() const;

  bool operator==(const FiniteGroup&) const = default;
};

// Axiom check over a raw table: identity at 0, inverses, associativity.
// Reports the first failing tuple per axiom. Malformed input (non-square,
// out-of-range entry) throws FormatError.
Diagnostics verify_group(int n, const std::vector<Elt>& mul_table);

// Builds a group from a table, throwing SemanticError when verify_group
// reports violations.
FiniteGroup make_group(int n, std::vector<Elt> mul_table);

// As make_group but skips axiom checks; the inverse table is best-effort.
// Used by parsers so verification can report instead of throw.
FiniteGroup make_group_unchecked(int n, std::vector<Elt> mul_table);

FiniteGroup trivial_group();
FiniteGroup cyclic_group(int n);
// Order 2n: indices 0..n-1 are rotations b^i, n..2n-1 are reflections a*b^i.
FiniteGroup dihedral_group(int n);
FiniteGroup klein_four();
FiniteGroup product_group(const FiniteGroup& a, const FiniteGroup& b);

std::vector<Elt> center(const FiniteGroup& g);

// Brute-force isomorphism test for small groups (test and report helper).
bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

}  // namespace mla
