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

#include "nilrad/report.hpp"

#include <algorithm>
#include <sstream>

#include "nilrad/error.hpp"

namespace nilrad
{

std::string_view to_string(Status status)
{
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "fail";
}

Check Check::compare(std::string name, Json expected, Json actual)
{
  const Status status = expected == actual ? Status::Pass : Status::Fail;
  return Check{std::move(name), std::move(expected), std::move(actual), status};
}

Check Check::skipped(std::string name, std::string reason)
{
  return Check{std::move(name), nullptr, std::move(reason), Status::Skipped};
}

Check Check::info(std::string name, Json actual)
{
  return Check{std::move(name), nullptr, std::move(actual), Status::Pass};
}

Check Check::failed(std::string name, Json expected, std::string error)
{
  return Check{std::move(name), std::move(expected), Json{{"error", std::move(error)}}, Status::Fail};
}

bool all_passed(const CheckList & checks)
{
  return std::none_of(
    checks.begin(), checks.end(), [](const Check & c) { return c.status == Status::Fail; });
}

Json to_json(const Check & check)
{
  return Json{
    {"name", check.name},
    {"expected", check.expected},
    {"actual", check.actual},
    {"status", std::string(to_string(check.status))}};
}

Json Report::to_json() const
{
  Json checks_json = Json::array();
  for (const Check & c : checks) {
    checks_json.push_back(nilrad::to_json(c));
  }
  return Json{
    {"version", version},
    {"command", command},
    {"inputs", inputs},
    {"checks", std::move(checks_json)},
    {"elapsed_ms", elapsed_ms}};
}

Report Report::from_json(const Json & doc)
{
  auto fail = [](const std::string & what) {
      return Error(ErrorCode::Parse, "report: " + what);
    };
  if (!doc.is_object()) {
    throw fail("document is not an object");
  }
  for (const char * key : {"version", "command", "inputs", "checks", "elapsed_ms"}) {
    if (!doc.contains(key)) {
      throw fail(std::string("missing key '") + key + "'");
    }
  }
  if (doc.size() != 5) {
    throw fail("unexpected top-level keys");
  }
  if (!doc["version"].is_string() || !doc["command"].is_string() || !doc["inputs"].is_object() ||
    !doc["checks"].is_array() || !doc["elapsed_ms"].is_number())
  {
    throw fail("top-level value has the wrong type");
  }
  Report r;
  r.version = doc["version"].get<std::string>();
  r.command = doc["command"].get<std::string>();
  r.inputs = doc["inputs"];
  r.elapsed_ms = doc["elapsed_ms"].get<double>();
  for (const Json & c : doc["checks"]) {
    if (!c.is_object() || c.size() != 4 || !c.contains("name") || !c.contains("expected") ||
      !c.contains("actual") || !c.contains("status") || !c["name"].is_string() ||
      !c["status"].is_string())
    {
      throw fail("malformed check record");
    }
    const std::string status = c["status"].get<std::string>();
    Status s = Status::Pass;
    if (status == "fail") {
      s = Status::Fail;
    } else if (status == "skipped") {
      s = Status::Skipped;
    } else if (status != "pass") {
      throw fail("unknown status '" + status + "'");
    }
    r.checks.push_back(Check{c["name"].get<std::string>(), c["expected"], c["actual"], s});
  }
  return r;
}

std::string Report::to_text() const
{
  std::ostringstream out;
  std::size_t width = 4;
  for (const Check & c : checks) {
    width = std::max(width, c.name.size());
  }
  for (const Check & c : checks) {
    out << c.name << std::string(width - c.name.size() + 2, ' ');
    out << to_string(c.status);
    const std::string actual = c.actual.is_string() ? c.actual.get<std::string>() : c.actual.dump();
    out << "  " << actual;
    if (!c.expected.is_null() && c.status == Status::Fail) {
      out << "  (expected " << c.expected.dump() << ")";
    }
    out << '\n';
  }
  const auto count = [this](Status s) {
      return std::count_if(checks.begin(), checks.end(), [s](const Check & c) { return c.status == s; });
    };
  out << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed, "
      << count(Status::Skipped) << " skipped\n";
  return out.str();
}

}  // namespace nilrad
