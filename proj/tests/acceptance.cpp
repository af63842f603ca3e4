// Runs every verification check at full size and prints one line per check.

#include <cstdio>
#include <cstdlib>

#include "wordlab/verify.hpp"

int main(int argc, char** argv) {
  wordlab::VerifyOptions opt;
  if (argc > 1) opt.mc_samples = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  for (std::size_t id = 1; id <= wordlab::verify_check_count(); ++id) {
    auto r = wordlab::run_check(static_cast<int>(id), opt);
    all = all && r.passed;
    std::printf("%s %2d %-34s %8.2f s (limit %.0f s)  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                r.time_limit, r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s\n", all ? "ALL PASS" : "SOME CHECKS FAILED");
  return all ? 0 : 1;
}
