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

#ifndef FQLAB_REPORT_H_
#define FQLAB_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqlab/verdict.h"
#include "json.hpp"

namespace fqlab {

struct CheckRecord {
  std::string name;    // e.g. "pinned/distance/q=5,d=2"
  std::string anchor;  // statement the check is tied to
  Verdict verdict;
};

// Collects check records and renders them as JSON lines or CSV.  Output is
// sorted by name, then anchor, so it does not depend on insertion order.
class Report {
 public:
  explicit Report(nlohmann::json config = nlohmann::json::object())
      : config_(std::move(config)) {}

  void add(std::string name, std::string anchor, Verdict v);
  void set_elapsed_seconds(double s) { elapsed_ = s; }

  const nlohmann::json& config() const { return config_; }
  std::vector<CheckRecord> sorted_records() const;
  uint64_t count(Status s) const;
  bool ok() const { return count(Status::kFail) == 0; }

  // One config line, one line per check, one summary line.
  std::string to_jsonl() const;
  // Header row plus one row per check.
  std::string to_csv() const;

  static nlohmann::json quantity_json(const Quantity& q);
  static nlohmann::json record_json(const CheckRecord& r);

 private:
  nlohmann::json config_;
  std::vector<CheckRecord> records_;
  std::optional<double> elapsed_;
};

}  // namespace fqlab

#endif  // FQLAB_REPORT_H_
