#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mla/catalog.hpp"
#include "mla/io.hpp"

using namespace mla;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string roundtrip(const std::string& text) { return serialize(parse_document(text)); }

MultLieAlgebra d4_golden() {
  auto sols = star_completion(dihedral_group(4), {{4, 4, 0}, {1, 1, 0}, {4, 1, 1}}, {});
  REQUIRE(sols.size() == 1);
  return sols.front();
}

}  // namespace

TEST_CASE("canonical group serialization is byte exact") {
  std::string text = serialize(doc(cyclic_group(2)));
  CHECK(text == "mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0\n");
  CHECK(roundtrip(text) == text);
}

TEST_CASE("round trips for every kind") {
  std::vector<std::string> texts;
  texts.push_back(serialize(doc(dihedral_group(4))));
  texts.push_back(serialize(doc(d4_golden())));
  texts.push_back(serialize(doc(GroupMap{4, 8, {0, 3, 4, 5}})));
  PairFunction p = trivial_pairfn(3, 2);
  p.set(1, 2, 1);
  texts.push_back(serialize(doc(p)));

  Extension ext = extension_from_quotient(d4_golden(), {0, 2});
  texts.push_back(serialize(doc(ext)));

  Section t;
  t.domain_n = 4;
  t.codomain_n = 8;
  t.table.assign(4, 0);
  t.table[ext.beta(0)] = 0;
  t.table[ext.beta(4)] = 4;
  t.table[ext.beta(1)] = 3;
  t.table[ext.beta(5)] = 5;
  CenterFactorSystem fs = extract_center_data(ext, t);
  texts.push_back(serialize(doc(fs)));

  Extension s3 = extension_from_quotient(with_trivial_star(dihedral_group(3)), {0, 1, 2});
  LieCenterFactorSystem lfs = extract_lie_center_data(s3, canonical_section(s3));
  texts.push_back(serialize(doc(lfs)));

  GeneralData gd = extract_general_data(ext, t);
  RawGeneralFs gfs{ext.k_alg, ext.h_alg.group, gd.f, gd.hmap, gd.gamma, gd.sigma};
  texts.push_back(serialize(doc(gfs)));

  CohomologyReport rep;
  rep.mode = "center";
  rep.k = with_trivial_star(cyclic_group(2));
  rep.h = cyclic_group(2);
  rep.twist = {Endo{0, 0}, Endo{0, 0}};
  rep.map_count = 2;
  rep.hom_count = 2;
  rep.z2_count = 2;
  rep.b2_count = 1;
  rep.h2_count = 2;
  PairFunction f2 = trivial_pairfn(2, 2);
  rep.class_reps.push_back({f2, f2});
  f2.set(1, 1, 1);
  rep.class_reps.push_back({f2, trivial_pairfn(2, 2)});
  texts.push_back(serialize(doc(rep)));

  for (const std::string& text : texts) {
    CAPTURE(text.substr(0, 40));
    CHECK(roundtrip(text) == text);
    CHECK(text.back() == '\n');
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      CHECK((line.empty() || line.back() != ' '));
    }
  }
}

TEST_CASE("distinct structures serialize to distinct bytes") {
  CHECK(serialize(doc(cyclic_group(2))) != serialize(doc(cyclic_group(3))));
  auto stars = star_completion(klein_four(), {}, {});
  for (std::size_t i = 0; i < stars.size(); ++i)
    for (std::size_t j = i + 1; j < stars.size(); ++j)
      CHECK(serialize(doc(stars[i])) != serialize(doc(stars[j])));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_document("mla-kit v2\nkind group\n"), ParseError);
  CHECK_THROWS_AS(parse_document("nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_document("mla-kit v1\nkind group\norder 2\nmul\n0 1 1\n1 0\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_document("mla-kit v1\nkind nosuch\n"), ParseError);
  // structurally fine but semantically out of range
  CHECK_THROWS_AS(parse_document("mla-kit v1\nkind group\norder 2\nmul\n0 5\n1 0\n"),
                  SemanticError);
  try {
    parse_document("mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0 0\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 6);
  }
  // trailing content is rejected unless it is a labels block
  CHECK_THROWS_AS(parse_document("mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0\nx\n"),
                  ParseError);
  Document d = parse_document(
      "mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0\nlabels\ne is the identity\n");
  CHECK(serialize(d) == "mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 0\n");
}

TEST_CASE("factor-system promotion checks rows") {
  Document d = parse_document(serialize(doc(with_trivial_star(cyclic_group(2)))));
  (void)d;
  RawCenterFs raw;
  raw.k = with_trivial_star(cyclic_group(2));
  raw.h = cyclic_group(2);
  raw.f = trivial_pairfn(2, 2);
  raw.hmap = trivial_pairfn(2, 2);
  raw.gamma = {Endo{0, 0}, Endo{1, 1}};  // second row is not an endomorphism
  CHECK_THROWS_AS(make_center_fs(raw), SemanticError);
  raw.gamma = {Endo{0, 0}, Endo{0, 1}};
  CHECK(make_center_fs(raw).gamma == std::vector<int>{0, 1});
}

TEST_CASE("catalog") {
  std::string dir =
      (std::filesystem::temp_directory_path() / "mla-catalog-test").string();
  std::filesystem::remove_all(dir);

  CHECK_FALSE(catalog_get(dir, "missing").has_value());

  CatalogEntry entry;
  entry.params = "cohomology|mode=center|k=z2|h=z2|twist=trivial";
  entry.result = serialize(doc(cyclic_group(2)));
  entry.version = kToolVersion;
  entry.timestamp = 1700000000;
  entry.content_hash = fnv1a64(entry.result);
  catalog_put(dir, entry);

  auto got = catalog_get(dir, entry.params);
  REQUIRE(got.has_value());
  CHECK(got->result == entry.result);
  CHECK(got->params == entry.params);
  CHECK(got->version == entry.version);

  // same params again: single file survives, content unchanged
  catalog_put(dir, entry);
  std::size_t files = 0;
  for (auto& p : std::filesystem::directory_iterator(dir)) {
    (void)p;
    ++files;
  }
  CHECK(files == 1);

  // tampering is detected on read
  std::string path = catalog_entry_path(dir, entry.params);
  std::string text = read_file(path);
  text[text.size() - 2] = text[text.size() - 2] == '0' ? '1' : '0';
  {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
  }
  CHECK_THROWS_AS(catalog_get(dir, entry.params), IoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("fixtures match regeneration") {
  const char* env = std::getenv("MLA_FIXTURES");
  REQUIRE(env != nullptr);
  std::string dir = env;

  CHECK(read_file(dir + "/z2.grp") == serialize(doc(cyclic_group(2))));
  CHECK(read_file(dir + "/z3.grp") == serialize(doc(cyclic_group(3))));
  CHECK(read_file(dir + "/z4.grp") == serialize(doc(cyclic_group(4))));
  CHECK(read_file(dir + "/klein.grp") == serialize(doc(klein_four())));
  CHECK(read_file(dir + "/z2.mla") == serialize(doc(with_trivial_star(cyclic_group(2)))));

  MultLieAlgebra golden = d4_golden();
  CHECK(read_file(dir + "/d4.mla") == serialize(doc(golden)));

  Extension ext = extension_from_quotient(golden, {0, 2});
  CHECK(read_file(dir + "/d4-ext.doc") == serialize(doc(ext)));

  Section t;
  t.domain_n = 4;
  t.codomain_n = 8;
  t.table.assign(4, 0);
  t.table[ext.beta(0)] = 0;
  t.table[ext.beta(4)] = 4;
  t.table[ext.beta(1)] = 3;
  t.table[ext.beta(5)] = 5;
  CHECK(read_file(dir + "/d4-section.doc") == serialize(doc(t)));
  CHECK(read_file(dir + "/d4-fs.doc") == serialize(doc(extract_center_data(ext, t))));
}
