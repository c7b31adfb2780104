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

#include <doctest.h>

#include <string>

#include "nilrad/error.hpp"
#include "nilrad/report.hpp"

using namespace nilrad;

namespace
{

Report sample()
{
  Report r;
  r.version = "0.1.0";
  r.command = "centralizer";
  r.inputs = {{"d", "1,2,1"}, {"p", 5}};
  r.checks = {
    Check::compare("dim", 4, 4),
    Check::compare("center", Json::array({1, 2}), Json::array({1, 3})),
    Check::skipped("row", "no instance"),
    Check::info("basis", Json::array({"e_{1,3}"})),
    Check::failed("esub", 1, "CapExceeded: too large")};
  r.elapsed_ms = 1.5;
  return r;
}

}  // namespace

TEST_CASE("check constructors")
{
  const Report r = sample();
  CHECK(r.checks[0].status == Status::Pass);
  CHECK(r.checks[1].status == Status::Fail);
  CHECK(r.checks[2].status == Status::Skipped);
  CHECK(r.checks[3].status == Status::Pass);
  CHECK(r.checks[3].expected.is_null());
  CHECK(r.checks[4].status == Status::Fail);
  CHECK(r.checks[4].actual == Json{{"error", "CapExceeded: too large"}});
  CHECK_FALSE(all_passed(r.checks));
  CHECK(all_passed({r.checks[0], r.checks[2], r.checks[3]}));
  CHECK(to_string(Status::Skipped) == "skipped");
}

TEST_CASE("JSON round trip is lossless")
{
  const Report r = sample();
  const Json doc = r.to_json();
  CHECK(doc.size() == 5);
  CHECK(doc["checks"][1]["status"] == "fail");
  const Report back = Report::from_json(Json::parse(doc.dump()));
  CHECK(back.to_json() == doc);
  CHECK(back.to_json().dump() == doc.dump());
}

TEST_CASE("serialization sorts keys")
{
  const std::string text = sample().to_json().dump();
  CHECK(text.find("\"checks\"") < text.find("\"command\""));
  CHECK(text.find("\"actual\"") < text.find("\"expected\""));
  CHECK(text.find("\"expected\"") < text.find("\"name\""));
}

TEST_CASE("malformed documents are rejected")
{
  const Json good = sample().to_json();
  auto rejects = [](const Json & doc) {
      try {
        Report::from_json(doc);
      } catch (const Error & e) {
        return e.code() == ErrorCode::Parse;
      }
      return false;
    };
  CHECK(rejects(Json::array()));
  Json missing = good;
  missing.erase("elapsed_ms");
  CHECK(rejects(missing));
  Json extra = good;
  extra["timestamp"] = 0;
  CHECK(rejects(extra));
  Json wrong_type = good;
  wrong_type["inputs"] = "d=1";
  CHECK(rejects(wrong_type));
  Json bad_status = good;
  bad_status["checks"][0]["status"] = "ok";
  CHECK(rejects(bad_status));
  Json extra_field = good;
  extra_field["checks"][0]["note"] = "x";
  CHECK(rejects(extra_field));
}

TEST_CASE("text rendering")
{
  const std::string text = sample().to_text();
  CHECK(text.find("center") != std::string::npos);
  CHECK(text.find("(expected [1,2])") != std::string::npos);
  CHECK(text.find("2 passed, 2 failed, 1 skipped\n") != std::string::npos);
}
