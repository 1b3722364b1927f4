// Copyright 2026 The mqsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace mqs::cli {

/// One experiment invocation: a name plus flat key=value parameters. The seed
/// fully determines every random choice.
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 1;
  std::map<std::string, std::string> params;

  bool has(const std::string& key) const;
  std::string get(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key, double fallback) const;
  void set(const std::string& key, const std::string& value);

  /// key=value lines; '#' starts a comment.
  static ExperimentConfig from_text(const std::string& text);
  std::string to_text() const;
};

struct RunResult {
  int checks_passed = 0;
  int checks_failed = 0;
  std::string report;                         // structured text report
  std::map<std::string, std::string> tables;  // artifact name -> csv content

  bool ok() const { return checks_failed == 0; }
};

const std::vector<std::string>& experiment_names();

/// Executes one experiment. Unknown names and invalid parameter combinations
/// throw std::invalid_argument with the violated precondition.
RunResult run(const ExperimentConfig& config);

/// Worker-pool size: MQS_WORKERS, else hardware concurrency.
int worker_count();

/// Index-parallel loop over [0, count); results must be written to
/// preallocated per-index slots so assembly stays deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace mqs::cli
