// One PASS/FAIL line per acceptance criterion over the bundled corpus.
// Usage: acceptance [corpus-dir] [--verbose]
#include <chrono>
#include <cstring>
#include <iostream>

#include "gorwb/suite.hpp"

int main(int argc, char** argv) {
  std::string dir = GORWB_CORPUS_DIR;
  bool verbose = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--verbose") == 0)
      verbose = true;
    else
      dir = argv[i];
  }
  gorwb::Corpus corpus;
  try {
    corpus = gorwb::loadCorpus(dir);
  } catch (const std::exception& e) {
    std::cerr << "cannot load corpus: " << e.what() << "\n";
    return 2;
  }
  bool all = true;
  for (int id = 1; id <= gorwb::kCriterionCount; ++id) {
    const auto start = std::chrono::steady_clock::now();
    gorwb::CriterionResult r = gorwb::runCriterion(id, corpus, {});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << id << ": " << r.title << " (" << secs << " s)\n";
    if (verbose || !r.passed)
      for (const auto& line : r.details) std::cout << "    " << line << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
