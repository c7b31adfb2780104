// Copyright 2026 The nilrad Authors
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

#ifndef NILRAD_REPORT_HPP_
#define NILRAD_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace nilrad
{

using Json = nlohmann::json;

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status status);

/// One verification record.
struct Check
{
  std::string name;
  Json expected;
  Json actual;
  Status status = Status::Pass;

  /// Pass iff expected == actual.
  static Check compare(std::string name, Json expected, Json actual);
  static Check skipped(std::string name, std::string reason);
  /// An informational value with nothing to compare against.
  static Check info(std::string name, Json actual);
  static Check failed(std::string name, Json expected, std::string error);
};

using CheckList = std::vector<Check>;

bool all_passed(const CheckList & checks);

struct Report
{
  std::string version;
  std::string command;
  Json inputs = Json::object();
  CheckList checks;
  double elapsed_ms = 0.0;

  Json to_json() const;
  /// Throws Parse if the document does not follow the report layout.
  static Report from_json(const Json & doc);
  /// Human-readable table.
  std::string to_text() const;
};

Json to_json(const Check & check);

}  // namespace nilrad

#endif  // NILRAD_REPORT_HPP_
