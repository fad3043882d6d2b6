#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

using std::string;

namespace {

struct RunResult {
  int status = -1;
  string out;
};

string bin() {
  const char* env = std::getenv("MLA_BIN");
  REQUIRE(env != nullptr);
  return env;
}

string fixtures() {
  const char* env = std::getenv("MLA_FIXTURES");
  REQUIRE(env != nullptr);
  return env;
}

RunResult run(const string& args) {
  RunResult r;
  string cmd = bin() + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

string tmpfile_with(const string& name, const string& content) {
  string path = (std::filesystem::temp_directory_path() / name).string();
  FILE* f = fopen(path.c_str(), "wb");
  REQUIRE(f != nullptr);
  fwrite(content.data(), 1, content.size(), f);
  fclose(f);
  return path;
}

}  // namespace

TEST_CASE("verify accepts the dihedral algebra") {
  RunResult r = run("verify " + fixtures() + "/d4.mla 2>&1 >/dev/null");
  CHECK(r.status == 0);
  CHECK(r.out.find("valid multiplicative Lie algebra") != string::npos);
}

TEST_CASE("verify rejects a broken table with exit 1") {
  string path = tmpfile_with("bad-group.doc", "mla-kit v1\nkind group\norder 2\nmul\n0 1\n1 1\n");
  RunResult r = run("verify " + path + " >/dev/null 2>&1");
  CHECK(r.status == 1);
}

TEST_CASE("usage and format errors exit 2") {
  CHECK(run("verify /nonexistent.doc >/dev/null 2>&1").status == 2);
  string path = tmpfile_with("bad-syntax.doc", "mla-kit v9\nkind group\n");
  CHECK(run("verify " + path + " >/dev/null 2>&1").status == 2);
  CHECK(run("nosuchcommand >/dev/null 2>&1").status != 0);
}

TEST_CASE("budget errors exit 3") {
  RunResult r = run("cohomology --k " + fixtures() + "/klein.grp --h " + fixtures() +
                    "/z3.grp --mode center --budget 10 >/dev/null 2>&1");
  CHECK(r.status == 3);
}

TEST_CASE("cohomology report and determinism") {
  string cmd = "cohomology --k " + fixtures() + "/z2.mla --h " + fixtures() +
               "/z2.grp --twist trivial --mode center 2>/dev/null";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("h2 2") != string::npos);
  CHECK(a.out.find("z2 2") != string::npos);
  CHECK(a.out.rfind("mla-kit v1\n", 0) == 0);
}

TEST_CASE("extract reproduces the golden factor system document") {
  RunResult r = run("extract --ext " + fixtures() + "/d4-ext.doc --section " + fixtures() +
                    "/d4-section.doc --mode center 2>/dev/null");
  CHECK(r.status == 0);
  std::FILE* f = fopen((fixtures() + "/d4-fs.doc").c_str(), "rb");
  REQUIRE(f != nullptr);
  string golden;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) golden.append(buf.data(), n);
  fclose(f);
  CHECK(r.out == golden);
}

TEST_CASE("realize, equiv and baer pipelines") {
  string tmp = (std::filesystem::temp_directory_path() / "mla-cli-test").string();
  std::filesystem::create_directories(tmp);
  RunResult realize = run("realize --fs " + fixtures() + "/d4-fs.doc --out " + tmp +
                          "/realized.doc 2>/dev/null");
  CHECK(realize.status == 0);

  RunResult equiv = run("equiv --e1 " + tmp + "/realized.doc --e2 " + fixtures() +
                        "/d4-ext.doc 2>/dev/null");
  CHECK(equiv.status == 0);
  CHECK(equiv.out.find("kind map") != string::npos);

  RunResult baer = run("baer --e1 " + fixtures() + "/d4-ext.doc --e2 " + fixtures() +
                       "/d4-ext.doc 2>/dev/null");
  CHECK(baer.status == 0);
  CHECK(baer.out.find("kind extension") != string::npos);
  CHECK(baer.out.find("gorder 8") != string::npos);
  std::filesystem::remove_all(tmp);
}

TEST_CASE("general extraction mode") {
  RunResult r = run("extract --ext " + fixtures() + "/d4-ext.doc --section " + fixtures() +
                    "/d4-section.doc --mode general 2>/dev/null");
  CHECK(r.status == 0);
  CHECK(r.out.find("kind fs-general") != string::npos);
  CHECK(r.out.find("gamma") != string::npos);
  CHECK(r.out.find("sigma") != string::npos);
}

TEST_CASE("atlas writes catalog entries") {
  string tmp = (std::filesystem::temp_directory_path() / "mla-atlas-test").string();
  std::filesystem::remove_all(tmp);
  RunResult r = run("atlas --mode center --catalog " + tmp + " 2>/dev/null");
  CHECK(r.status == 0);
  CHECK(r.out.find("h2=") != string::npos);
  std::size_t entries = 0;
  for (auto& p : std::filesystem::directory_iterator(tmp)) {
    (void)p;
    ++entries;
  }
  CHECK(entries >= 20);
  std::filesystem::remove_all(tmp);
}
