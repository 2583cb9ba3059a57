// Acceptance suite: runs every named criterion suite and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include "valmat/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strncmp(argv[i], "--seed=", 7) == 0) seed = std::strtoull(argv[i] + 7, nullptr, 10);

  const char* descriptions[] = {
      "worked transversal example reproduction",
      "family soundness (valuated matroids and h-natural)",
      "solver-oracle equivalence on 500 random instances",
      "duality: certificates verify on 200 instances",
      "operation identities (B.1-B.4, union rank, Rado equivalence)",
      "closure under operations",
      "Snowflake reconstructions",
      "representation trimming",
      "Rado structure, robust recognition, irreducibility",
      "tropical commutation and degree laws",
      "R-natural closure re-representations",
      "vgm-to-valuated-matroid round trip",
  };

  const auto& names = valmat::suite_names();
  bool all_pass = true;
  for (std::size_t i = 0; i < names.size(); ++i) {
    valmat::SuiteResult res = valmat::run_suite(names[i], seed);
    std::printf("criterion %2zu [%s]: %s (%s, %lld ms)\n", i + 1, names[i].c_str(),
                res.pass ? "PASS" : "FAIL", descriptions[i], res.elapsed_ms);
    if (!res.pass) {
      for (const valmat::SuiteCheck& c : res.checks)
        if (!c.pass) std::printf("    failed: %s%s%s\n", c.name.c_str(), c.detail.empty() ? "" : " - ",
                                 c.detail.c_str());
      all_pass = false;
    }
  }
  return all_pass ? 0 : 1;
}
