#include "mla/io.hpp"

#include <charconv>
#include <sstream>

namespace mla {

ParseError::ParseError(int line_, int column_, const std::string& msg)
    : FormatError("line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                  ": " + msg),
      line(line_),
      column(column_) {}

namespace {

constexpr const char* kHeader = "mla-kit v1";

// --- writing ---------------------------------------------------------------

void write_row(std::ostringstream& os, const std::vector<Elt>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) os << ' ';
    os << row[i];
  }
  os << '\n';
}

void write_table(std::ostringstream& os, const std::vector<Elt>& flat, int rows, int cols) {
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c) os << ' ';
      os << flat[static_cast<std::size_t>(r) * cols + c];
    }
    os << '\n';
  }
}

void write_group_body(std::ostringstream& os, const FiniteGroup& g) {
  os << "order " << g.n << '\n';
  os << "mul\n";
  write_table(os, g.mul_table, g.n, g.n);
}

void write_endo_rows(std::ostringstream& os, const char* name, const std::vector<Endo>& rows) {
  os << name << '\n';
  for (const Endo& e : rows) write_row(os, e);
}

void write_fs_core(std::ostringstream& os, const MultLieAlgebra& k, const FiniteGroup& h,
                   const PairFunction& f, const PairFunction& hmap) {
  os << "korder " << k.group.n << '\n';
  os << "horder " << h.n << '\n';
  os << "kmul\n";
  write_table(os, k.group.mul_table, k.group.n, k.group.n);
  os << "kstar\n";
  write_table(os, k.star_table, k.group.n, k.group.n);
  os << "hmul\n";
  write_table(os, h.mul_table, h.n, h.n);
  os << "f\n";
  write_table(os, f.table, f.k_n, f.k_n);
  os << "h\n";
  write_table(os, hmap.table, hmap.k_n, hmap.k_n);
}

struct SerializeVisitor {
  std::ostringstream& os;

  void operator()(const FiniteGroup& g) {
    os << "kind group\n";
    write_group_body(os, g);
  }
  void operator()(const MultLieAlgebra& m) {
    os << "kind mla\n";
    os << "order " << m.group.n << '\n';
    os << "mul\n";
    write_table(os, m.group.mul_table, m.group.n, m.group.n);
    os << "star\n";
    write_table(os, m.star_table, m.group.n, m.group.n);
  }
  void operator()(const GroupMap& m) {
    os << "kind map\n";
    os << "domain " << m.domain_n << '\n';
    os << "codomain " << m.codomain_n << '\n';
    os << "map\n";
    write_row(os, m.table);
  }
  void operator()(const PairFunction& p) {
    os << "kind pairfn\n";
    os << "korder " << p.k_n << '\n';
    os << "horder " << p.h_n << '\n';
    os << "table\n";
    write_table(os, p.table, p.k_n, p.k_n);
  }
  void operator()(const RawCenterFs& fs) {
    os << "kind fs-center\n";
    write_fs_core(os, fs.k, fs.h, fs.f, fs.hmap);
    write_endo_rows(os, "gamma", fs.gamma);
  }
  void operator()(const RawLieFs& fs) {
    os << "kind fs-lie\n";
    write_fs_core(os, fs.k, fs.h, fs.f, fs.hmap);
    write_endo_rows(os, "sigma", fs.sigma);
  }
  void operator()(const RawGeneralFs& fs) {
    os << "kind fs-general\n";
    write_fs_core(os, fs.k, fs.h, fs.f, fs.hmap);
    write_endo_rows(os, "gamma", fs.gamma);
    write_endo_rows(os, "sigma", fs.sigma);
  }
  void operator()(const RawExtension& e) {
    os << "kind extension\n";
    os << "horder " << e.h_alg.group.n << '\n';
    os << "gorder " << e.g_alg.group.n << '\n';
    os << "korder " << e.k_alg.group.n << '\n';
    os << "hmul\n";
    write_table(os, e.h_alg.group.mul_table, e.h_alg.group.n, e.h_alg.group.n);
    os << "gmul\n";
    write_table(os, e.g_alg.group.mul_table, e.g_alg.group.n, e.g_alg.group.n);
    os << "gstar\n";
    write_table(os, e.g_alg.star_table, e.g_alg.group.n, e.g_alg.group.n);
    os << "kmul\n";
    write_table(os, e.k_alg.group.mul_table, e.k_alg.group.n, e.k_alg.group.n);
    os << "kstar\n";
    write_table(os, e.k_alg.star_table, e.k_alg.group.n, e.k_alg.group.n);
    os << "iota\n";
    write_row(os, e.iota.table);
    os << "beta\n";
    write_row(os, e.beta.table);
  }
  void operator()(const CohomologyReport& r) {
    os << "kind cohomology-report\n";
    os << "mode " << r.mode << '\n';
    os << "korder " << r.k.group.n << '\n';
    os << "horder " << r.h.n << '\n';
    os << "kmul\n";
    write_table(os, r.k.group.mul_table, r.k.group.n, r.k.group.n);
    os << "kstar\n";
    write_table(os, r.k.star_table, r.k.group.n, r.k.group.n);
    os << "hmul\n";
    write_table(os, r.h.mul_table, r.h.n, r.h.n);
    write_endo_rows(os, "twist", r.twist);
    os << "map " << r.map_count << '\n';
    os << "hom " << r.hom_count << '\n';
    os << "z2 " << r.z2_count << '\n';
    os << "b2 " << r.b2_count << '\n';
    os << "h2 " << r.h2_count << '\n';
    for (std::size_t i = 0; i < r.class_reps.size(); ++i) {
      os << "class " << i << '\n';
      os << "f\n";
      write_table(os, r.class_reps[i].f.table, r.class_reps[i].f.k_n, r.class_reps[i].f.k_n);
      os << "h\n";
      write_table(os, r.class_reps[i].h.table, r.class_reps[i].h.k_n, r.class_reps[i].h.k_n);
    }
  }
};

// --- reading ----------------------------------------------------------------

struct Reader {
  std::vector<std::string> lines;
  std::size_t pos = 0;

  int lineno() const { return static_cast<int>(pos) + 1; }

  bool done() const { return pos >= lines.size(); }

  const std::string& peek() const {
    if (done()) throw ParseError(static_cast<int>(lines.size()) + 1, 1, "unexpected end of document");
    return lines[pos];
  }

  std::string next() {
    std::string s = peek();
    ++pos;
    return s;
  }

  void expect_line(const std::string& want) {
    int at = lineno();
    std::string got = next();
    if (got != want)
      throw ParseError(at, 1, "expected \"" + want + "\", found \"" + got + "\"");
  }

  long long expect_kv(const std::string& key) {
    int at = lineno();
    std::string line = next();
    if (line.rfind(key + " ", 0) != 0)
      throw ParseError(at, 1, "expected \"" + key + " <n>\", found \"" + line + "\"");
    const char* begin = line.data() + key.size() + 1;
    const char* end = line.data() + line.size();
    long long v = 0;
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || p != end)
      throw ParseError(at, static_cast<int>(key.size() + 2), "malformed integer");
    if (v < 0) throw ParseError(at, static_cast<int>(key.size() + 2), "negative value");
    return v;
  }

  std::string expect_kv_string(const std::string& key) {
    int at = lineno();
    std::string line = next();
    if (line.rfind(key + " ", 0) != 0)
      throw ParseError(at, 1, "expected \"" + key + " <value>\"");
    return line.substr(key.size() + 1);
  }

  // one line of exactly `count` integers, each in [0, bound)
  std::vector<Elt> row(int count, int bound) {
    int at = lineno();
    std::string line = next();
    std::vector<Elt> out;
    out.reserve(count);
    const char* p = line.data();
    const char* end = line.data() + line.size();
    while (p != end) {
      if (*p == ' ') {
        ++p;
        continue;
      }
      int v = 0;
      auto [np, ec] = std::from_chars(p, end, v);
      if (ec != std::errc())
        throw ParseError(at, static_cast<int>(p - line.data()) + 1, "malformed integer");
      if (v < 0 || v >= bound)
        throw SemanticError("line " + std::to_string(at) + ": index " + std::to_string(v) +
                            " out of range [0," + std::to_string(bound) + ")");
      out.push_back(v);
      p = np;
    }
    if (static_cast<int>(out.size()) != count)
      throw ParseError(at, 1,
                       "expected " + std::to_string(count) + " entries, found " +
                           std::to_string(out.size()));
    return out;
  }

  std::vector<Elt> table(const std::string& section, int rows, int cols, int bound) {
    expect_line(section);
    std::vector<Elt> flat;
    flat.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      std::vector<Elt> rr = row(cols, bound);
      flat.insert(flat.end(), rr.begin(), rr.end());
    }
    return flat;
  }

  std::vector<Endo> endo_rows(const std::string& section, int rows, int cols, int bound) {
    expect_line(section);
    std::vector<Endo> out;
    out.reserve(rows);
    for (int r = 0; r < rows; ++r) out.push_back(row(cols, bound));
    return out;
  }

  void finish() {
    if (done()) return;
    // optional trailing labels block, ignored
    if (peek() == "labels") return;
    throw ParseError(lineno(), 1, "trailing content after document body");
  }
};

int checked_order(long long v, int at) {
  if (v <= 0 || v > 4096) throw ParseError(at, 1, "order out of supported range");
  return static_cast<int>(v);
}

PairFunction read_pairfn(Reader& r, const std::string& section, int kn, int hn) {
  PairFunction p;
  p.k_n = kn;
  p.h_n = hn;
  p.table = r.table(section, kn, kn, hn);
  return p;
}

struct FsCore {
  MultLieAlgebra k;
  FiniteGroup h;
  PairFunction f, hmap;
};

FsCore read_fs_core(Reader& r) {
  int at = r.lineno();
  int kn = checked_order(r.expect_kv("korder"), at);
  at = r.lineno();
  int hn = checked_order(r.expect_kv("horder"), at);
  FsCore core;
  std::vector<Elt> kmul = r.table("kmul", kn, kn, kn);
  std::vector<Elt> kstar = r.table("kstar", kn, kn, kn);
  core.k = make_mla_unchecked(make_group_unchecked(kn, std::move(kmul)), std::move(kstar));
  core.h = make_group_unchecked(hn, r.table("hmul", hn, hn, hn));
  core.f = read_pairfn(r, "f", kn, hn);
  core.hmap = read_pairfn(r, "h", kn, hn);
  return core;
}

}  // namespace

const char* Document::kind_name() const {
  struct V {
    const char* operator()(const FiniteGroup&) { return "group"; }
    const char* operator()(const MultLieAlgebra&) { return "mla"; }
    const char* operator()(const GroupMap&) { return "map"; }
    const char* operator()(const PairFunction&) { return "pairfn"; }
    const char* operator()(const RawCenterFs&) { return "fs-center"; }
    const char* operator()(const RawLieFs&) { return "fs-lie"; }
    const char* operator()(const RawGeneralFs&) { return "fs-general"; }
    const char* operator()(const RawExtension&) { return "extension"; }
    const char* operator()(const CohomologyReport&) { return "cohomology-report"; }
  };
  return std::visit(V{}, payload);
}

std::string serialize(const Document& d) {
  std::ostringstream os;
  os << kHeader << '\n';
  std::visit(SerializeVisitor{os}, d.payload);
  return os.str();
}

Document parse_document(const std::string& text) {
  Reader r;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      r.lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) r.lines.push_back(cur);
  while (!r.lines.empty() && r.lines.back().empty()) r.lines.pop_back();

  {
    int at = r.lineno();
    std::string header = r.next();
    if (header != kHeader) {
      if (header.rfind("mla-kit ", 0) == 0)
        throw ParseError(at, 9, "unsupported format version \"" + header.substr(8) + "\"");
      throw ParseError(at, 1, "missing \"mla-kit v1\" header");
    }
  }
  std::string kind = r.expect_kv_string("kind");

  Document doc;
  if (kind == "group") {
    int at = r.lineno();
    int n = checked_order(r.expect_kv("order"), at);
    doc.payload = make_group_unchecked(n, r.table("mul", n, n, n));
  } else if (kind == "mla") {
    int at = r.lineno();
    int n = checked_order(r.expect_kv("order"), at);
    std::vector<Elt> mul = r.table("mul", n, n, n);
    std::vector<Elt> star = r.table("star", n, n, n);
    doc.payload = make_mla_unchecked(make_group_unchecked(n, std::move(mul)), std::move(star));
  } else if (kind == "map") {
    int at = r.lineno();
    int dn = checked_order(r.expect_kv("domain"), at);
    at = r.lineno();
    int cn = checked_order(r.expect_kv("codomain"), at);
    r.expect_line("map");
    GroupMap m;
    m.domain_n = dn;
    m.codomain_n = cn;
    m.table = r.row(dn, cn);
    doc.payload = std::move(m);
  } else if (kind == "pairfn") {
    int at = r.lineno();
    int kn = checked_order(r.expect_kv("korder"), at);
    at = r.lineno();
    int hn = checked_order(r.expect_kv("horder"), at);
    doc.payload = read_pairfn(r, "table", kn, hn);
  } else if (kind == "fs-center") {
    FsCore core = read_fs_core(r);
    RawCenterFs fs{std::move(core.k), std::move(core.h), std::move(core.f),
                   std::move(core.hmap), {}};
    fs.gamma = r.endo_rows("gamma", fs.k.group.n, fs.h.n, fs.h.n);
    doc.payload = std::move(fs);
  } else if (kind == "fs-lie") {
    FsCore core = read_fs_core(r);
    RawLieFs fs{std::move(core.k), std::move(core.h), std::move(core.f),
                std::move(core.hmap), {}};
    fs.sigma = r.endo_rows("sigma", fs.k.group.n, fs.h.n, fs.h.n);
    doc.payload = std::move(fs);
  } else if (kind == "fs-general") {
    FsCore core = read_fs_core(r);
    RawGeneralFs fs{std::move(core.k), std::move(core.h), std::move(core.f),
                    std::move(core.hmap), {}, {}};
    fs.gamma = r.endo_rows("gamma", fs.k.group.n, fs.h.n, fs.h.n);
    fs.sigma = r.endo_rows("sigma", fs.k.group.n, fs.h.n, fs.h.n);
    doc.payload = std::move(fs);
  } else if (kind == "extension") {
    int at = r.lineno();
    int hn = checked_order(r.expect_kv("horder"), at);
    at = r.lineno();
    int gn = checked_order(r.expect_kv("gorder"), at);
    at = r.lineno();
    int kn = checked_order(r.expect_kv("korder"), at);
    RawExtension e;
    e.h_alg = with_trivial_star(make_group_unchecked(hn, r.table("hmul", hn, hn, hn)));
    std::vector<Elt> gmul = r.table("gmul", gn, gn, gn);
    std::vector<Elt> gstar = r.table("gstar", gn, gn, gn);
    e.g_alg = make_mla_unchecked(make_group_unchecked(gn, std::move(gmul)), std::move(gstar));
    std::vector<Elt> kmul = r.table("kmul", kn, kn, kn);
    std::vector<Elt> kstar = r.table("kstar", kn, kn, kn);
    e.k_alg = make_mla_unchecked(make_group_unchecked(kn, std::move(kmul)), std::move(kstar));
    r.expect_line("iota");
    e.iota = {hn, gn, r.row(hn, gn)};
    r.expect_line("beta");
    e.beta = {gn, kn, r.row(gn, kn)};
    doc.payload = std::move(e);
  } else if (kind == "cohomology-report") {
    CohomologyReport rep;
    rep.mode = r.expect_kv_string("mode");
    if (rep.mode != "center" && rep.mode != "lie")
      throw ParseError(r.lineno() - 1, 6, "mode must be center or lie");
    int at = r.lineno();
    int kn = checked_order(r.expect_kv("korder"), at);
    at = r.lineno();
    int hn = checked_order(r.expect_kv("horder"), at);
    std::vector<Elt> kmul = r.table("kmul", kn, kn, kn);
    std::vector<Elt> kstar = r.table("kstar", kn, kn, kn);
    rep.k = make_mla_unchecked(make_group_unchecked(kn, std::move(kmul)), std::move(kstar));
    rep.h = make_group_unchecked(hn, r.table("hmul", hn, hn, hn));
    rep.twist = r.endo_rows("twist", kn, hn, hn);
    rep.map_count = static_cast<std::size_t>(r.expect_kv("map"));
    rep.hom_count = static_cast<std::size_t>(r.expect_kv("hom"));
    rep.z2_count = static_cast<std::size_t>(r.expect_kv("z2"));
    rep.b2_count = static_cast<std::size_t>(r.expect_kv("b2"));
    rep.h2_count = static_cast<std::size_t>(r.expect_kv("h2"));
    std::size_t idx = 0;
    while (!r.done() && r.peek().rfind("class ", 0) == 0) {
      long long got = r.expect_kv("class");
      if (static_cast<std::size_t>(got) != idx)
        throw ParseError(r.lineno() - 1, 7, "class indices must be consecutive");
      CocyclePair c;
      c.f = read_pairfn(r, "f", kn, hn);
      c.h = read_pairfn(r, "h", kn, hn);
      rep.class_reps.push_back(std::move(c));
      ++idx;
    }
    doc.payload = std::move(rep);
  } else {
    throw ParseError(2, 6, "unknown document kind \"" + kind + "\"");
  }
  r.finish();
  return doc;
}

Document doc(FiniteGroup g) { return {std::move(g)}; }
Document doc(MultLieAlgebra m) { return {std::move(m)}; }
Document doc(GroupMap m) { return {std::move(m)}; }
Document doc(PairFunction p) { return {std::move(p)}; }

Document doc(const CenterFactorSystem& fs) {
  RawCenterFs raw;
  raw.k = fs.k;
  raw.h = fs.h;
  raw.f = fs.f;
  raw.hmap = fs.hmap;
  for (int idx : fs.gamma) raw.gamma.push_back(fs.end_h.endos[idx]);
  return {std::move(raw)};
}

Document doc(const LieCenterFactorSystem& fs) {
  RawLieFs raw;
  raw.k = fs.k;
  raw.h = fs.h;
  raw.f = fs.f;
  raw.hmap = fs.hmap;
  for (int idx : fs.sigma) raw.sigma.push_back(fs.aut_h.autos[idx]);
  return {std::move(raw)};
}

Document doc(RawGeneralFs fs) { return {std::move(fs)}; }

Document doc(const Extension& e) {
  RawExtension raw{e.h_alg, e.g_alg, e.k_alg, e.iota, e.beta};
  return {std::move(raw)};
}

Document doc(CohomologyReport r) { return {std::move(r)}; }

CenterFactorSystem make_center_fs(const RawCenterFs& raw) {
  CenterFactorSystem fs;
  fs.k = raw.k;
  fs.h = raw.h;
  fs.f = raw.f;
  fs.hmap = raw.hmap;
  fs.end_h = end_mla(raw.h);
  if (raw.gamma.size() != static_cast<std::size_t>(raw.k.group.n))
    throw SemanticError("gamma must have one row per K element");
  for (const Endo& row : raw.gamma) {
    int idx = fs.end_h.index_of(row);
    if (idx < 0) throw SemanticError("gamma row is not an endomorphism of H");
    fs.gamma.push_back(idx);
  }
  return fs;
}

LieCenterFactorSystem make_lie_fs(const RawLieFs& raw) {
  LieCenterFactorSystem fs;
  fs.k = raw.k;
  fs.h = raw.h;
  fs.f = raw.f;
  fs.hmap = raw.hmap;
  fs.aut_h = aut_group(raw.h);
  if (raw.sigma.size() != static_cast<std::size_t>(raw.k.group.n))
    throw SemanticError("sigma must have one row per K element");
  for (const Endo& row : raw.sigma) {
    int idx = fs.aut_h.index_of(row);
    if (idx < 0) throw SemanticError("sigma row is not an automorphism of H");
    fs.sigma.push_back(idx);
  }
  return fs;
}

}  // namespace mla
