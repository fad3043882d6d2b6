// Acceptance runner: one pass/fail line per criterion, nonzero exit when any
// criterion fails. `mla selftest` runs the same suite.

#include <cstdlib>
#include <iostream>

#include "mla/acceptance.hpp"

int main(int argc, char** argv) {
  mla::RunContext ctx;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--jobs" && i + 1 < argc) ctx.jobs = std::atoi(argv[++i]);
    if (arg == "--budget" && i + 1 < argc) ctx.budget = std::strtoull(argv[++i], nullptr, 10);
  }
  mla::AcceptanceReport report = mla::run_acceptance(std::cout, ctx);
  return report.all_passed() ? 0 : 1;
}
