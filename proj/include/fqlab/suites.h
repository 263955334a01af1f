// Copyright 2026 The fqlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FQLAB_SUITES_H_
#define FQLAB_SUITES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqlab/caps.h"
#include "fqlab/characters.h"
#include "fqlab/report.h"

namespace fqlab {

struct ExperimentConfig {
  std::string suite = "all";
  std::vector<uint64_t> qs;  // empty: the suite's default matrix
  std::vector<uint32_t> ds;  // empty: the suite's default matrix
  std::string set;           // empty: the suite's default set family
  std::optional<Mode> mode;  // empty: exact for q <= 31
  uint64_t seed = 1;
  std::vector<uint32_t> ks;  // empty: suite default
  std::optional<uint32_t> z;
  Caps caps;
  double moment_constant = 8.0;
  double proportion_constant = 0.25;
  uint32_t trials = 0;       // random sets per (q, d); 0: suite default
  uint64_t samples = 100000; // sampled tuples once enumeration exceeds the cap

  nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();

// Runs the named suite ("all" runs every suite) over the configured matrix.
// Throws InvalidArgument for an unknown suite name.
Report run_suite(const ExperimentConfig& config);

}  // namespace fqlab

#endif  // FQLAB_SUITES_H_
