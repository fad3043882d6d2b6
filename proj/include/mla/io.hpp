#pragma once

#include <string>
#include <variant>

#include "mla/cohomology.hpp"

namespace mla {

struct ParseError : FormatError {
  int line = 0;
  int column = 0;
  ParseError(int line_, int column_, const std::string& msg);
};

// Raw document payloads. Parsing performs shape and range checks only;
// mathematical verification happens when the payloads are promoted to the
// checked types (make_group, make_extension, ...).
struct RawCenterFs {
  MultLieAlgebra k;
  FiniteGroup h;
  PairFunction f, hmap;
  std::vector<Endo> gamma;  // endo tables, one row per K element
};

struct RawLieFs {
  MultLieAlgebra k;
  FiniteGroup h;
  PairFunction f, hmap;
  std::vector<Endo> sigma;
};

struct RawGeneralFs {
  MultLieAlgebra k;
  FiniteGroup h;
  PairFunction f, hmap;
  std::vector<Endo> gamma;
  std::vector<Endo> sigma;
};

struct CohomologyReport {
  std::string mode;  // "center" or "lie"
  MultLieAlgebra k;
  FiniteGroup h;
  std::vector<Endo> twist;  // gamma or sigma tables
  std::size_t map_count = 0, hom_count = 0, z2_count = 0, b2_count = 0, h2_count = 0;
  std::vector<CocyclePair> class_reps;

  bool operator==(const CohomologyReport&) const = default;
};

using DocumentPayload =
    std::variant<FiniteGroup, MultLieAlgebra, GroupMap, PairFunction,
                 RawCenterFs, RawLieFs, RawGeneralFs, RawExtension, CohomologyReport>;

struct Document {
  DocumentPayload payload;

  const char* kind_name() const;
};

// Canonical serialization: "mla-kit v1" header, LF endings, no trailing
// whitespace, sorted fixed section order per kind. parse(serialize(x)) == x.
std::string serialize(const Document& doc);
Document parse_document(const std::string& text);

Document doc(FiniteGroup g);
Document doc(MultLieAlgebra m);
Document doc(GroupMap m);
Document doc(PairFunction p);
Document doc(const CenterFactorSystem& fs);
Document doc(const LieCenterFactorSystem& fs);
Document doc(RawGeneralFs fs);
Document doc(const Extension& e);
Document doc(CohomologyReport r);

// Checked promotions (SemanticError on violation).
CenterFactorSystem make_center_fs(const RawCenterFs& raw);
LieCenterFactorSystem make_lie_fs(const RawLieFs& raw);

}  // namespace mla
