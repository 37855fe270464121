#pragma once
#include <string>

#include "qlb/config.hpp"

namespace qlb {

struct RunResult {
  std::string csv_path;
  std::string meta_path;
};

// Execute the experiment described by `config`, writing
//   <out_dir>/<name>.csv   data ('#'-prefixed header block, then columns)
//   <out_dir>/<name>.json  metadata sidecar (config echo, seed, fits, runtime)
// The CSV bytes depend only on (config, seed), never on n_threads.
RunResult run_experiment(const ExperimentConfig& config, const std::string& out_dir,
                         int n_threads = 1);

}  // namespace qlb
