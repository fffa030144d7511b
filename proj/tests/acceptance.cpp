// Acceptance runner: executes every verification criterion and prints one
// pass/fail line per criterion. Exits nonzero when anything fails, and on
// failure also lists the failing claims so the log is self-contained.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>

#include "psc/checks.hpp"

int main() {
  psc::checks::CheckOptions opt;
  auto results = psc::checks::run_criteria(opt);

  bool all_pass = true;
  for (const auto& cr : results) {
    const bool p = cr.pass();
    all_pass = all_pass && p;
    std::printf("criterion %2d: %-52s [%s]\n", cr.number, cr.title.c_str(),
                p ? "PASS" : "FAIL");
    if (!p)
      for (const auto& it : cr.items)
        if (!it.pass)
          std::printf("    FAIL %s: got %s, expected %s\n", it.claim.c_str(),
                      it.computed.c_str(), it.expected.c_str());
  }

  // The command-line surface is a criterion of its own: the combined checker
  // must run end to end and exit cleanly.
  const int number = static_cast<int>(results.size()) + 1;
  int rc = std::system(PSCVER_BIN " paper-check > /dev/null 2>&1");
  const bool cli_ok = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
  all_pass = all_pass && cli_ok;
  std::printf("criterion %2d: %-52s [%s]\n", number,
              "combined claim checker runs clean", cli_ok ? "PASS" : "FAIL");

  std::printf("%s\n", all_pass ? "all criteria passed" : "FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
