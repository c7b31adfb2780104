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

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "nilrad/nilrad.h"

namespace
{

constexpr int kUsageExit = 2;

struct VerbSpec
{
  const char * name;
  const char * help;
  std::vector<const char *> flags;
};

const std::vector<VerbSpec> & verbs()
{
  static const std::vector<VerbSpec> table = {
    {"quiver", "Quiver of the nilradical and its path-algebra checks",
      {"d", "p", "format", "out", "jobs", "batch"}},
    {"richardson", "Richardson element and its line decomposition",
      {"d", "p", "format", "out", "jobs", "batch"}},
    {"partition", "Jordan type of the Richardson element",
      {"d", "p", "format", "out", "jobs", "batch"}},
    {"centralizer", "Centralizer of the Richardson element in u and its center",
      {"d", "p", "format", "out", "jobs", "batch"}},
    {"esub", "Maximal elementary subalgebras containing the Richardson element",
      {"d", "p", "cap", "format", "out", "jobs", "batch"}},
    {"srk", "Saturation rank and its bounds",
      {"d", "p", "cap", "format", "out", "jobs", "batch"}},
    {"verify", "Regenerate the centralizer and elementary tables",
      {"n", "p", "tables", "cap", "format", "out", "jobs"}},
  };
  return table;
}

const std::map<std::string, const char *> & flag_help()
{
  static const std::map<std::string, const char *> help = {
    {"d", "dimension vector, comma separated (e.g. 3,2,3,1)"},
    {"p", "prime characteristic (default: smallest prime at least n+1)"},
    {"n", "rank n or inclusive range lo..hi"},
    {"tables", "tables to verify: 1, 2 or 1,2"},
    {"format", "text, json or dot"},
    {"cap", "largest centralizer/center quotient to enumerate (default 5)"},
    {"jobs", "worker threads (default: hardware concurrency)"},
    {"out", "write the artifact to this path instead of stdout"},
    {"batch", "file with one dimension vector per line"},
  };
  return help;
}

int fail(nilrad_status status)
{
  std::cerr << "nilrad: " << nilrad_last_error() << '\n';
  return status == NILRAD_USAGE_ERROR || status == NILRAD_PARSE_ERROR ||
         status == NILRAD_NOT_PRIME || status == NILRAD_INVALID_ARGUMENT ? kUsageExit : 1;
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Exact computations on nilradicals of type A parabolics"};
  app.set_version_flag("--version", std::string(nilrad_version()));
  app.require_subcommand(1);

  std::map<std::string, std::map<std::string, std::string>> values;
  for (const auto & verb : verbs()) {
    CLI::App * sub = app.add_subcommand(verb.name, verb.help);
    auto & slots = values[verb.name];
    for (const char * flag : verb.flags) {
      sub->add_option(std::string("--") + flag, slots[flag], flag_help().at(flag));
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kUsageExit;
  }

  const CLI::App * chosen = app.get_subcommands().front();
  const std::string verb = chosen->get_name();

  nilrad_command * command = nullptr;
  if (nilrad_status status = nilrad_command_create(verb.c_str(), &command); status != NILRAD_OK) {
    return fail(status);
  }

  int code = 0;
  for (const auto & [flag, value] : values[verb]) {
    if (chosen->count("--" + flag) == 0) {
      continue;
    }
    if (nilrad_status status = nilrad_command_set(command, flag.c_str(), value.c_str());
      status != NILRAD_OK)
    {
      nilrad_command_destroy(command);
      return fail(status);
    }
  }

  nilrad_text * output = nullptr;
  nilrad_status status = nilrad_command_run(command, &output, &code);
  nilrad_command_destroy(command);
  if (status != NILRAD_OK) {
    return fail(status);
  }
  std::fwrite(nilrad_text_data(output), 1, nilrad_text_size(output), stdout);
  nilrad_text_destroy(output);
  return code;
}
