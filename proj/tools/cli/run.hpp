#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "report.hpp"

namespace gorwb::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputPaths;
  std::size_t bound = 20;
  std::uint64_t seed = 0;
  Format format = Format::Text;
  bool injective = false;  // resolve: injective coresolution
  std::string corpusDir;   // suite: defaults to the bundled corpus
};

const std::vector<std::string>& commandNames();

/// Exit code 0 when every asserted property passed, 1 on a property
/// failure, 2 on input errors (diagnostic on `err`, naming file and field).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gorwb::cli
