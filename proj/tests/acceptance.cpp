// Prints one PASS/FAIL line per acceptance criterion. All compared quantities
// are integers, so every comparison is exact (tolerance 0).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "mpat/verify.hpp"

int main(int argc, char** argv) {
  mpat::VerifyOptions opts;
  opts.max_cells = 32;
  opts.seed = 20240601;
  opts.corpus_size = 100;
  bool verbose = false;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "-v") verbose = true;

  std::vector<mpat::CriterionResult> results;
  bool all = true;
  for (int id = 1; id <= 10; ++id) {
    const auto start = std::chrono::steady_clock::now();
    mpat::CriterionResult r = mpat::run_criterion(id, opts, results);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %d: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(), secs);
    for (const std::string& f : r.failures) std::printf("    failed: %s\n", f.c_str());
    if (verbose) std::printf("%s\n", mpat::to_json(r).dump(2).c_str());
    std::fflush(stdout);
    all = all && r.pass;
    results.push_back(std::move(r));
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
