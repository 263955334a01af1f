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

#include "fqlab/report.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

namespace fqlab {

namespace {

nlohmann::json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void Report::add(std::string name, std::string anchor, Verdict v) {
  if (v.margin == 0.0) v.margin = 0.0;  // drop the sign of -0
  records_.push_back({std::move(name), std::move(anchor), std::move(v)});
}

std::vector<CheckRecord> Report::sorted_records() const {
  std::vector<CheckRecord> out = records_;
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.name, a.anchor) < std::tie(b.name, b.anchor);
  });
  return out;
}

uint64_t Report::count(Status s) const {
  return std::count_if(records_.begin(), records_.end(),
                       [s](const auto& r) { return r.verdict.status == s; });
}

nlohmann::json Report::quantity_json(const Quantity& q) {
  if (q.exact) return q.exact->get_str();
  return finite_or_null(q.approx);
}

nlohmann::json Report::record_json(const CheckRecord& r) {
  nlohmann::json j;
  j["type"] = "check";
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["status"] = std::string(status_name(r.verdict.status));
  j["lhs"] = quantity_json(r.verdict.lhs);
  j["rhs"] = quantity_json(r.verdict.rhs);
  j["margin"] = finite_or_null(r.verdict.margin);
  j["note"] = r.verdict.note;
  return j;
}

std::string Report::to_jsonl() const {
  std::ostringstream os;
  nlohmann::json head = {{"type", "config"}, {"config", config_}};
  os << head.dump() << '\n';
  for (const auto& r : sorted_records()) os << record_json(r).dump() << '\n';
  nlohmann::json tail = {{"type", "summary"},
                         {"checks", records_.size()},
                         {"pass", count(Status::kPass)},
                         {"fail", count(Status::kFail)},
                         {"skipped", count(Status::kSkipped)},
                         {"finding", count(Status::kFinding)}};
  if (elapsed_) tail["seconds"] = *elapsed_;
  os << tail.dump() << '\n';
  return os.str();
}

std::string Report::to_csv() const {
  std::ostringstream os;
  os << "name,anchor,status,lhs,rhs,margin,note\n";
  for (const auto& r : sorted_records()) {
    const auto& v = r.verdict;
    std::ostringstream margin;
    margin.precision(17);
    margin << v.margin;
    os << csv_field(r.name) << ',' << csv_field(r.anchor) << ','
       << status_name(v.status) << ',' << csv_field(v.lhs.to_string()) << ','
       << csv_field(v.rhs.to_string()) << ',' << margin.str() << ','
       << csv_field(v.note) << '\n';
  }
  return os.str();
}

}  // namespace fqlab
