// mla: verify, convert and classify finite multiplicative Lie algebra
// extensions from the command line.

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mla/acceptance.hpp"
#include "mla/catalog.hpp"
#include "mla/io.hpp"

namespace {

using namespace mla;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    spill(out_path, text);
}

MultLieAlgebra as_mla(const Document& d, const char* what) {
  if (const auto* m = std::get_if<MultLieAlgebra>(&d.payload)) return *m;
  if (const auto* g = std::get_if<FiniteGroup>(&d.payload)) return with_trivial_star(*g);
  throw PreconditionError(std::string(what) + " must be a group or mla document");
}

FiniteGroup as_group(const Document& d, const char* what) {
  if (const auto* g = std::get_if<FiniteGroup>(&d.payload)) return *g;
  if (const auto* m = std::get_if<MultLieAlgebra>(&d.payload)) {
    if (!m->star_trivial())
      throw PreconditionError(std::string(what) + " must carry a trivial star");
    return m->group;
  }
  throw PreconditionError(std::string(what) + " must be a group document");
}

Extension load_extension(const std::string& path) {
  Document d = parse_document(slurp(path));
  const auto* raw = std::get_if<RawExtension>(&d.payload);
  if (!raw) throw PreconditionError(path + " is not an extension document");
  return make_extension(*raw);
}

GroupMap load_map(const std::string& path) {
  Document d = parse_document(slurp(path));
  const auto* m = std::get_if<GroupMap>(&d.payload);
  if (!m) throw PreconditionError(path + " is not a map document");
  return *m;
}

std::vector<int> resolve_twist_indices(const std::string& spec, int k_n, int carrier_n,
                                       const std::vector<GroupMap>& homs, const char* kind) {
  if (spec == "trivial") return std::vector<int>(k_n, 0);
  if (spec.rfind("index:", 0) == 0) {
    std::size_t idx = std::stoul(spec.substr(6));
    if (idx >= homs.size())
      throw PreconditionError("twist index " + std::to_string(idx) + " out of range; " +
                              std::to_string(homs.size()) + " " + kind + " homs exist");
    return std::vector<int>(homs[idx].table.begin(), homs[idx].table.end());
  }
  GroupMap m = load_map(spec);
  if (m.domain_n != k_n || m.codomain_n != carrier_n)
    throw PreconditionError("twist map has wrong dimensions for K and " + std::string(kind));
  return std::vector<int>(m.table.begin(), m.table.end());
}

CohomologyReport make_report(const std::string& mode, const MultLieAlgebra& k,
                             const FiniteGroup& h, const std::vector<Endo>& twist_tables,
                             const CohomologyGroup& ch) {
  CohomologyReport rep;
  rep.mode = mode;
  rep.k = k;
  rep.h = h;
  rep.twist = twist_tables;
  rep.map_count = ch.map_count;
  rep.hom_count = ch.hom_kernel_count;
  rep.z2_count = ch.z2_count();
  rep.b2_count = ch.b2_count();
  rep.h2_count = ch.h2_count();
  for (int r : ch.rep_of_class) rep.class_reps.push_back(ch.z2[r]);
  return rep;
}

struct TwistSetup {
  std::string mode;
  CenterTwist center;
  LieTwist lie;
  std::vector<Endo> tables;
};

TwistSetup setup_twist(const std::string& mode, const MultLieAlgebra& k, const FiniteGroup& h,
                       const std::string& twist_spec, const RunContext& ctx) {
  TwistSetup s;
  s.mode = mode;
  if (mode == "center") {
    EndMla endh = end_mla(h);
    std::vector<GroupMap> homs = enumerate_mla_homs(k, endh, ctx);
    std::vector<int> idx = resolve_twist_indices(twist_spec, k.group.n, endh.size(), homs, "End(H)");
    for (int i : idx) s.tables.push_back(endh.endos[i]);
    s.center = CenterTwist{k, h, std::move(endh), std::move(idx)};
  } else if (mode == "lie") {
    AutGroup auth = aut_group(h);
    std::vector<GroupMap> homs = enumerate_group_homs(k.group, auth.grp, ctx);
    std::vector<int> idx = resolve_twist_indices(twist_spec, k.group.n, auth.size(), homs, "Aut(H)");
    for (int i : idx) s.tables.push_back(auth.autos[i]);
    s.lie = LieTwist{k, h, std::move(auth), std::move(idx)};
  } else {
    throw PreconditionError("--mode must be center or lie");
  }
  return s;
}

int cmd_verify(const std::string& path) {
  Document d = parse_document(slurp(path));
  std::string canonical = serialize(d);
  Diagnostics diag;
  std::string verdict;
  if (const auto* g = std::get_if<FiniteGroup>(&d.payload)) {
    diag = verify_group(g->n, g->mul_table);
    verdict = "group";
  } else if (const auto* m = std::get_if<MultLieAlgebra>(&d.payload)) {
    diag = verify_group(m->group.n, m->group.mul_table);
    if (diag.valid) diag = verify_mla(*m);
    verdict = "multiplicative Lie algebra";
  } else if (const auto* raw = std::get_if<RawExtension>(&d.payload)) {
    ExtensionCheck check = verify_extension(*raw);
    diag = check.diag;
    verdict = check.central ? "center extension"
                            : (check.lie_central ? "Lie-center extension" : "extension");
  } else if (const auto* fs = std::get_if<RawCenterFs>(&d.payload)) {
    diag = validate_center_fs(make_center_fs(*fs));
    verdict = "center factor system";
  } else if (const auto* fs = std::get_if<RawLieFs>(&d.payload)) {
    diag = validate_lie_center_fs(make_lie_fs(*fs));
    verdict = "Lie-center factor system";
  } else {
    verdict = d.kind_name();
  }
  std::cout << canonical;
  if (diag.valid) {
    std::cerr << "valid " << verdict << "\n";
    return 0;
  }
  std::cerr << "invalid " << verdict << ": " << diag.to_string() << "\n";
  return 1;
}

int cmd_extract(const std::string& ext_path, const std::string& section_path,
                const std::string& mode, const std::string& out_path) {
  Extension e = load_extension(ext_path);
  Section t = load_map(section_path);
  if (!is_section(e, t)) throw PreconditionError("the map is not a normalized section");
  if (mode == "center") {
    CenterFactorSystem fs = extract_center_data(e, t);
    emit(serialize(doc(fs)), out_path);
    std::cerr << "extracted center factor system\n";
  } else if (mode == "lie") {
    LieCenterFactorSystem fs = extract_lie_center_data(e, t);
    emit(serialize(doc(fs)), out_path);
    std::cerr << "extracted Lie-center factor system\n";
  } else if (mode == "general") {
    GeneralData g = extract_general_data(e, t);
    RawGeneralFs raw{e.k_alg, e.h_alg.group, g.f, g.hmap, g.gamma, g.sigma};
    emit(serialize(doc(std::move(raw))), out_path);
    if (!g.law_check.valid) {
      std::cerr << "general laws do not reproduce the tables: " << g.law_check.to_string()
                << "\n";
      return 1;
    }
    std::cerr << "extracted general factor data\n";
  } else {
    throw PreconditionError("--mode must be center, lie or general");
  }
  return 0;
}

int cmd_realize(const std::string& fs_path, const std::string& out_path,
                const std::string& section_out) {
  Document d = parse_document(slurp(fs_path));
  RealizedExtension r;
  if (const auto* raw = std::get_if<RawCenterFs>(&d.payload)) {
    r = realize_center_fs(make_center_fs(*raw));
  } else if (const auto* raw = std::get_if<RawLieFs>(&d.payload)) {
    r = realize_lie_center_fs(make_lie_fs(*raw));
  } else {
    throw PreconditionError(fs_path + " is not a factor-system document");
  }
  emit(serialize(doc(r.ext)), out_path);
  if (!section_out.empty()) spill(section_out, serialize(doc(r.section)));
  std::cerr << "realized extension of order " << r.ext.g_alg.group.n << "\n";
  return 0;
}

int cmd_equiv(const std::string& e1_path, const std::string& e2_path,
              const std::string& out_path) {
  Extension e1 = load_extension(e1_path);
  Extension e2 = load_extension(e2_path);
  std::optional<GroupMap> witness = equivalent_extensions(e1, e2);
  if (!witness) {
    std::cerr << "not equivalent\n";
    return 1;
  }
  emit(serialize(doc(*witness)), out_path);
  std::cerr << "equivalent\n";
  return 0;
}

int cmd_baer(const std::string& e1_path, const std::string& e2_path,
             const std::string& out_path) {
  Extension e1 = load_extension(e1_path);
  Extension e2 = load_extension(e2_path);
  RealizedExtension sum = baer_sum(e1, e2);
  emit(serialize(doc(sum.ext)), out_path);
  std::cerr << "Baer sum has order " << sum.ext.g_alg.group.n << "\n";
  return 0;
}

int cmd_cohomology(const std::string& k_path, const std::string& h_path,
                   const std::string& twist_spec, const std::string& mode,
                   const std::string& out_path, const RunContext& ctx) {
  MultLieAlgebra k = as_mla(parse_document(slurp(k_path)), "--k");
  FiniteGroup h = as_group(parse_document(slurp(h_path)), "--h");
  TwistSetup s = setup_twist(mode, k, h, twist_spec, ctx);
  CohomologyGroup ch = s.mode == "center" ? cohomology_group(s.center, ctx)
                                          : cohomology_group(s.lie, ctx);
  emit(serialize(doc(make_report(s.mode, k, h, s.tables, ch))), out_path);
  std::cerr << "|Z2| = " << ch.z2_count() << ", |B2| = " << ch.b2_count()
            << ", |H2| = " << ch.h2_count() << "\n";
  if (!ch.twist_admissible) {
    std::cerr << "twist admits no cocycle pairs\n";
    return 1;
  }
  return 0;
}

int cmd_classify(const std::string& k_path, const std::string& h_path,
                 const std::string& twist_spec, const std::string& mode,
                 const std::string& out_path, const std::string& reps_dir,
                 const RunContext& ctx) {
  MultLieAlgebra k = as_mla(parse_document(slurp(k_path)), "--k");
  FiniteGroup h = as_group(parse_document(slurp(h_path)), "--h");
  TwistSetup s = setup_twist(mode, k, h, twist_spec, ctx);
  std::vector<ExtensionClass> classes;
  CohomologyGroup ch;
  if (s.mode == "center") {
    ch = cohomology_group(s.center, ctx);
    classes = classify_extensions(s.center, ctx);
  } else {
    ch = cohomology_group(s.lie, ctx);
    classes = classify_extensions(s.lie, ctx);
  }
  emit(serialize(doc(make_report(s.mode, k, h, s.tables, ch))), out_path);
  if (!reps_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(reps_dir, ec);
    if (ec) throw IoError("cannot create " + reps_dir);
    for (const ExtensionClass& c : classes)
      spill(reps_dir + "/class" + std::to_string(c.class_index) + ".doc",
            serialize(doc(c.realization.ext)));
  }
  std::cerr << classes.size() << " equivalence classes\n";
  return 0;
}

int cmd_atlas(const std::string& mode, const std::string& catalog_dir, const RunContext& ctx) {
  DeskGrid grid = build_desk_grid(ctx);
  auto run_entry = [&](const std::string& m, const MultLieAlgebra& k, const FiniteGroup& h,
                       const std::vector<int>& twist, const CohomologyGroup& ch,
                       const std::vector<Endo>& tables) {
    std::ostringstream params;
    params << "cohomology|mode=" << m << "|k=" << hex64(fnv1a64(serialize(doc(k))))
           << "|h=" << hex64(fnv1a64(serialize(doc(h))));
    params << "|twist=";
    for (std::size_t i = 0; i < twist.size(); ++i) params << (i ? "," : "") << twist[i];
    CatalogEntry entry;
    entry.params = params.str();
    entry.result = serialize(doc(make_report(m, k, h, tables, ch)));
    entry.version = kToolVersion;
    entry.timestamp = static_cast<long long>(std::time(nullptr));
    entry.content_hash = fnv1a64(entry.result);
    catalog_put(catalog_dir, entry);
    std::cout << entry.params << " h2=" << ch.h2_count() << " hash=" << hex64(entry.content_hash)
              << "\n";
  };
  if (mode == "center" || mode == "both") {
    for (const CenterTwist& t : grid.center_configs) {
      CohomologyGroup ch = cohomology_group(t, ctx);
      std::vector<Endo> tables;
      for (int i : t.gamma) tables.push_back(t.end_h.endos[i]);
      run_entry("center", t.k, t.h, t.gamma, ch, tables);
    }
  }
  if (mode == "lie" || mode == "both") {
    for (const LieTwist& t : grid.lie_configs) {
      CohomologyGroup ch = cohomology_group(t, ctx);
      std::vector<Endo> tables;
      for (int i : t.sigma) tables.push_back(t.aut_h.autos[i]);
      run_entry("lie", t.k, t.h, t.sigma, ch, tables);
    }
  }
  std::cerr << "atlas written to " << catalog_dir << "\n";
  return 0;
}

void write_fixtures(const std::string& dir, const RunContext& ctx) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir);

  spill(dir + "/z2.grp", serialize(doc(cyclic_group(2))));
  spill(dir + "/z3.grp", serialize(doc(cyclic_group(3))));
  spill(dir + "/z4.grp", serialize(doc(cyclic_group(4))));
  spill(dir + "/klein.grp", serialize(doc(klein_four())));
  spill(dir + "/z2.mla", serialize(doc(with_trivial_star(cyclic_group(2)))));

  FiniteGroup d4 = dihedral_group(4);
  std::vector<MultLieAlgebra> sols = star_completion(d4, {{4, 4, 0}, {1, 1, 0}, {4, 1, 1}}, ctx);
  if (sols.empty()) throw StructuralError("dihedral star completion came back empty");
  const MultLieAlgebra& golden = sols.front();
  spill(dir + "/d4.mla", serialize(doc(golden)));

  Extension ext = extension_from_quotient(golden, {0, 2});
  spill(dir + "/d4-ext.doc", serialize(doc(ext)));

  Section t;
  t.domain_n = 4;
  t.codomain_n = 8;
  t.table.assign(4, 0);
  t.table[ext.beta(0)] = 0;
  t.table[ext.beta(4)] = 4;
  t.table[ext.beta(1)] = 3;
  t.table[ext.beta(5)] = 5;
  spill(dir + "/d4-section.doc", serialize(doc(t)));

  CenterFactorSystem fs = extract_center_data(ext, t);
  spill(dir + "/d4-fs.doc", serialize(doc(fs)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite multiplicative Lie algebras: extensions, factor systems, cohomology"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");
  // keep -h free so --h can name the kernel group input
  app.option_defaults()->ignore_case(false);
  app.fallthrough();

  RunContext ctx;
  app.add_option("--budget", ctx.budget, "cap on estimated candidate-equation evaluations");
  app.add_option("--jobs", ctx.jobs, "parallel workers for enumerations (0 = all cores)");

  std::string in_path, ext_path, section_path, mode = "center", out_path, section_out;
  std::string e1_path, e2_path, k_path, h_path, twist_spec = "trivial", reps_dir;
  const char* env_catalog = std::getenv("MLA_CATALOG_DIR");
  std::string catalog_dir = env_catalog ? env_catalog : "./catalog";
  std::string atlas_mode = "both";
  std::string fixtures_dir = "fixtures";

  auto add_sub = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->set_help_flag("--help", "print help");
    return sub;
  };

  CLI::App* verify = add_sub("verify", "verify a document's mathematical laws");
  verify->add_option("file", in_path)->required();

  CLI::App* extract = add_sub("extract", "factor data from an extension + section");
  extract->add_option("--ext", ext_path)->required();
  extract->add_option("--section", section_path)->required();
  extract->add_option("--mode", mode, "center | lie | general");
  extract->add_option("--out", out_path);

  CLI::App* realize = add_sub("realize", "build the extension of a factor system");
  realize->add_option("--fs", in_path)->required();
  realize->add_option("--out", out_path);
  realize->add_option("--section-out", section_out);

  CLI::App* equiv = add_sub("equiv", "search for an equivalence witness");
  equiv->add_option("--e1", e1_path)->required();
  equiv->add_option("--e2", e2_path)->required();
  equiv->add_option("--out", out_path);

  CLI::App* baer = add_sub("baer", "Baer sum of two center extensions");
  baer->add_option("--e1", e1_path)->required();
  baer->add_option("--e2", e2_path)->required();
  baer->add_option("--out", out_path);

  CLI::App* cohomology = add_sub("cohomology", "second cohomology of (K, H, twist)");
  cohomology->add_option("--k", k_path)->required();
  cohomology->add_option("--h", h_path)->required();
  cohomology->add_option("--twist", twist_spec, "trivial | index:<n> | <map document>");
  cohomology->add_option("--mode", mode, "center | lie");
  cohomology->add_option("--out", out_path);

  CLI::App* classify = add_sub("classify", "extension classes for (K, H, twist)");
  classify->add_option("--k", k_path)->required();
  classify->add_option("--h", h_path)->required();
  classify->add_option("--twist", twist_spec, "trivial | index:<n> | <map document>");
  classify->add_option("--mode", mode, "center | lie");
  classify->add_option("--out", out_path);
  classify->add_option("--reps-dir", reps_dir, "write one extension document per class");

  CLI::App* atlas = add_sub("atlas", "classify the whole desk grid into the catalog");
  atlas->add_option("--mode", atlas_mode, "center | lie | both");
  atlas->add_option("--catalog", catalog_dir, "catalog directory (MLA_CATALOG_DIR)");

  CLI::App* selftest = add_sub("selftest", "run the full acceptance suite");

  CLI::App* fixtures = add_sub("fixtures", "regenerate the golden fixture files");
  fixtures->add_option("--dir", fixtures_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(in_path);
    if (extract->parsed()) return cmd_extract(ext_path, section_path, mode, out_path);
    if (realize->parsed()) return cmd_realize(in_path, out_path, section_out);
    if (equiv->parsed()) return cmd_equiv(e1_path, e2_path, out_path);
    if (baer->parsed()) return cmd_baer(e1_path, e2_path, out_path);
    if (cohomology->parsed())
      return cmd_cohomology(k_path, h_path, twist_spec, mode, out_path, ctx);
    if (classify->parsed())
      return cmd_classify(k_path, h_path, twist_spec, mode, out_path, reps_dir, ctx);
    if (atlas->parsed()) return cmd_atlas(atlas_mode, catalog_dir, ctx);
    if (selftest->parsed()) {
      AcceptanceReport rep = run_acceptance(std::cout, ctx);
      return rep.all_passed() ? 0 : 1;
    }
    if (fixtures->parsed()) {
      write_fixtures(fixtures_dir, ctx);
      std::cerr << "fixtures written to " << fixtures_dir << "\n";
      return 0;
    }
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
