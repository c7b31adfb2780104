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

#include "nilrad/nilrad.h"

namespace
{

std::string take(nilrad_text * text)
{
  std::string out(nilrad_text_data(text), nilrad_text_size(text));
  nilrad_text_destroy(text);
  return out;
}

}  // namespace

TEST_CASE("version and status names")
{
  CHECK(std::string(nilrad_version()) == "0.1.0");
  CHECK(std::string(nilrad_status_name(NILRAD_CAP_EXCEEDED)) == "CapExceeded");
  CHECK(std::string(nilrad_status_name(NILRAD_OK)) == "Ok");
}

TEST_CASE("parabolic handle")
{
  nilrad_parabolic * p = nullptr;
  REQUIRE(nilrad_parabolic_create("3,2,3,1", 11, &p) == NILRAD_OK);
  CHECK(nilrad_parabolic_rank(p) == 8);
  CHECK(nilrad_parabolic_prime(p) == 11);
  size_t u = 0;
  size_t c = 0;
  size_t z = 0;
  CHECK(nilrad_parabolic_dimensions(p, &u, &c, &z) == NILRAD_OK);
  CHECK(u == 29);
  CHECK(c == 16);
  CHECK(z == 5);
  CHECK(nilrad_parabolic_dimensions(p, nullptr, &c, nullptr) == NILRAD_OK);

  nilrad_text * text = nullptr;
  REQUIRE(nilrad_parabolic_partition(p, &text) == NILRAD_OK);
  CHECK(take(text) == "[4,3,2]");
  REQUIRE(nilrad_parabolic_richardson(p, &text) == NILRAD_OK);
  CHECK(take(text) == "e_{1,4}+e_{2,5}+e_{3,8}+e_{4,6}+e_{5,7}+e_{6,9}");
  REQUIRE(nilrad_parabolic_quiver_dot(p, &text) == NILRAD_OK);
  CHECK(take(text).rfind("digraph quiver {", 0) == 0);

  size_t count = 0;
  size_t rank = 0;
  CHECK(nilrad_parabolic_elementary(p, 5, &count, &rank) == NILRAD_CAP_EXCEEDED);
  CHECK(std::string(nilrad_last_error()).find("cap") != std::string::npos);
  nilrad_parabolic_destroy(p);

  REQUIRE(nilrad_parabolic_create("2,2,1,1", 7, &p) == NILRAD_OK);
  CHECK(nilrad_parabolic_elementary(p, 5, &count, &rank) == NILRAD_OK);
  CHECK(count == 50);
  CHECK(rank == 6);
  CHECK(std::string(nilrad_last_error()).empty());
  nilrad_parabolic_destroy(p);
}

TEST_CASE("invalid arguments")
{
  nilrad_parabolic * p = nullptr;
  CHECK(nilrad_parabolic_create("0,2", 7, &p) == NILRAD_PARSE_ERROR);
  CHECK(p == nullptr);
  CHECK(nilrad_parabolic_create("1,2,1", 8, &p) == NILRAD_NOT_PRIME);
  CHECK(nilrad_parabolic_create(nullptr, 7, &p) == NILRAD_INVALID_ARGUMENT);
  CHECK(nilrad_parabolic_create("1,2,1", 7, nullptr) == NILRAD_INVALID_ARGUMENT);
  CHECK(nilrad_parabolic_dimensions(nullptr, nullptr, nullptr, nullptr) == NILRAD_INVALID_ARGUMENT);
  CHECK(nilrad_parabolic_rank(nullptr) == 0);
  nilrad_parabolic_destroy(nullptr);
  nilrad_text_destroy(nullptr);
}

TEST_CASE("command handle")
{
  nilrad_command * cmd = nullptr;
  CHECK(nilrad_command_create("plot", &cmd) == NILRAD_INVALID_ARGUMENT);
  REQUIRE(nilrad_command_create("partition", &cmd) == NILRAD_OK);
  CHECK(nilrad_command_set(cmd, "--d", "0,2") == NILRAD_USAGE_ERROR);
  CHECK(std::string(nilrad_last_error()).rfind("--d:", 0) == 0);
  CHECK(nilrad_command_set(cmd, "--d", "1,2,1") == NILRAD_OK);
  nilrad_text * out = nullptr;
  int code = -1;
  REQUIRE(nilrad_command_run(cmd, &out, &code) == NILRAD_OK);
  CHECK(code == 0);
  CHECK(take(out) == "[3,1]\n");
  nilrad_command_destroy(cmd);

  REQUIRE(nilrad_command_create("centralizer", &cmd) == NILRAD_OK);
  CHECK(nilrad_command_run(cmd, &out, &code) == NILRAD_USAGE_ERROR);
  CHECK(std::string(nilrad_last_error()).rfind("--d:", 0) == 0);
  nilrad_command_destroy(cmd);
}
