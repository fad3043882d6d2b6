#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mla/cohomology.hpp"

namespace mla {

// Desk-scale configuration grid: every multiplicative Lie algebra on the
// Z2, Z4 and Z2xZ2 carriers as K, H in {Z2, Z3}, and every twist.
struct DeskGrid {
  std::vector<MultLieAlgebra> k_algebras;
  std::vector<FiniteGroup> h_groups;
  std::vector<CenterTwist> center_configs;
  std::vector<LieTwist> lie_configs;
};

DeskGrid build_desk_grid(const RunContext& ctx = {});

// Independent brute-force second group cohomology |H^2(K; H)| with trivial
// action: normalized 2-cocycles modulo coboundaries, enumerated directly.
std::size_t classical_h2(const FiniteGroup& k, const FiniteGroup& h);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

struct AcceptanceReport {
  std::vector<CriterionResult> results;
  bool all_passed() const;
};

// Runs the full acceptance suite, streaming one pass/fail line per criterion
// (plus indented notes) to `out`.
AcceptanceReport run_acceptance(std::ostream& out, const RunContext& ctx = {});

}  // namespace mla
