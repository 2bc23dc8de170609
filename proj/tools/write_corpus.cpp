// Regenerates the bundled data files: write_corpus <dir>
#include <iostream>

#include "gorwb/corpus.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: write_corpus <dir>\n";
    return 2;
  }
  try {
    gorwb::writeCorpus(gorwb::buildCorpus(), argv[1]);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
