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

#ifndef NILRAD_APP_HPP_
#define NILRAD_APP_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilrad/report.hpp"
#include "nilrad/typea.hpp"

namespace nilrad
{

inline constexpr std::string_view kVersion = "0.1.0";

enum class Verb { Quiver, Richardson, Partition, Centralizer, Esub, Srk, Verify };
enum class Format { Text, Json, Dot };

std::string_view to_string(Verb verb);
/// Throws InvalidArgument for an unknown verb.
Verb parse_verb(std::string_view text);

/// Bad flag or flag value; the message starts with the flag name.
class UsageError : public Error
{
public:
  UsageError(std::string flag, const std::string & message);
  const std::string & flag() const noexcept { return flag_; }

private:
  std::string flag_;
};

struct RunResult
{
  std::string output;
  int exit_code = 0;
  Report report;
};

/// One tool invocation: a verb plus its flags.
class Command
{
public:
  explicit Command(Verb verb);

  /// Sets a flag ("d", "p", "n", "tables", "format", "cap", "jobs", "out",
  /// "batch"), with or without leading dashes. Throws UsageError.
  void set(std::string_view flag, std::string_view value);

  Verb verb() const noexcept { return verb_; }

  /// Runs the command. Exit code 0 when every check passes, 1 otherwise.
  /// The artifact goes to the --out file when given, else into output.
  /// Throws UsageError for missing required flags.
  RunResult run() const;

  /// Runs the verb once per dimension vector line of `input`.
  RunResult run_batch(std::istream & input) const;

private:
  CheckList checks_for(const DimensionVector & d, std::string & text, std::string & dot) const;
  CheckList verify_checks() const;
  RunResult finish(Report report, std::string text, std::string dot) const;
  Json inputs() const;
  PrimeField field_for(unsigned n) const;

  Verb verb_;
  std::optional<DimensionVector> d_;
  std::optional<std::uint32_t> p_;
  std::optional<std::pair<unsigned, unsigned>> n_;
  std::vector<unsigned> tables_{1, 2};
  Format format_ = Format::Text;
  std::size_t cap_ = 5;
  unsigned jobs_;
  std::string out_;
  std::string batch_;
  Json raw_ = Json::object();
};

}  // namespace nilrad

#endif  // NILRAD_APP_HPP_
