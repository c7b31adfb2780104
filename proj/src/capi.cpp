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

#include "nilrad/nilrad.h"

#include <memory>
#include <new>
#include <string>

#include "nilrad/app.hpp"
#include "nilrad/centralizer.hpp"
#include "nilrad/elementary.hpp"
#include "nilrad/jordan.hpp"
#include "nilrad/quiver.hpp"

struct nilrad_text
{
  std::string value;
};

struct nilrad_parabolic
{
  nilrad::DimensionVector d;
  nilrad::PrimeField field;
};

struct nilrad_command
{
  nilrad::Command command;
};

namespace
{

thread_local std::string g_last_error;

nilrad_status status_of(nilrad::ErrorCode code)
{
  using nilrad::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return NILRAD_INVALID_ARGUMENT;
    case ErrorCode::Parse: return NILRAD_PARSE_ERROR;
    case ErrorCode::NotPrime: return NILRAD_NOT_PRIME;
    case ErrorCode::NonNilpotent: return NILRAD_NON_NILPOTENT;
    case ErrorCode::NotRichardson: return NILRAD_NOT_RICHARDSON;
    case ErrorCode::Unsupported: return NILRAD_UNSUPPORTED;
    case ErrorCode::CaseVacuous: return NILRAD_CASE_VACUOUS;
    case ErrorCode::WrongArity: return NILRAD_WRONG_ARITY;
    case ErrorCode::PreconditionViolated: return NILRAD_PRECONDITION_VIOLATED;
    case ErrorCode::CapExceeded: return NILRAD_CAP_EXCEEDED;
    case ErrorCode::Io: return NILRAD_IO_ERROR;
    case ErrorCode::Internal: return NILRAD_INTERNAL_ERROR;
  }
  return NILRAD_INTERNAL_ERROR;
}

template<class Fn>
nilrad_status guarded(Fn && fn)
{
  try {
    fn();
    g_last_error.clear();
    return NILRAD_OK;
  } catch (const nilrad::UsageError & e) {
    g_last_error = e.what();
    return NILRAD_USAGE_ERROR;
  } catch (const nilrad::Error & e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc &) {
    g_last_error = "out of memory";
    return NILRAD_INTERNAL_ERROR;
  } catch (const std::exception & e) {
    g_last_error = e.what();
    return NILRAD_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown failure";
    return NILRAD_INTERNAL_ERROR;
  }
}

nilrad_status null_argument(const char * what)
{
  g_last_error = std::string(what) + " must not be NULL";
  return NILRAD_INVALID_ARGUMENT;
}

nilrad_status emit_text(std::string value, nilrad_text ** out)
{
  auto text = std::make_unique<nilrad_text>();
  text->value = std::move(value);
  *out = text.release();
  return NILRAD_OK;
}

}  // namespace

extern "C" {

const char * nilrad_version(void)
{
  static const std::string version(nilrad::kVersion);
  return version.c_str();
}

const char * nilrad_last_error(void)
{
  return g_last_error.c_str();
}

const char * nilrad_status_name(nilrad_status status)
{
  switch (status) {
    case NILRAD_OK: return "Ok";
    case NILRAD_INVALID_ARGUMENT: return "InvalidArgument";
    case NILRAD_PARSE_ERROR: return "ParseError";
    case NILRAD_NOT_PRIME: return "NotPrime";
    case NILRAD_NON_NILPOTENT: return "NonNilpotent";
    case NILRAD_NOT_RICHARDSON: return "NotRichardson";
    case NILRAD_UNSUPPORTED: return "Unsupported";
    case NILRAD_CASE_VACUOUS: return "CaseVacuous";
    case NILRAD_WRONG_ARITY: return "WrongArity";
    case NILRAD_PRECONDITION_VIOLATED: return "PreconditionViolated";
    case NILRAD_CAP_EXCEEDED: return "CapExceeded";
    case NILRAD_IO_ERROR: return "IoError";
    case NILRAD_INTERNAL_ERROR: return "InternalError";
    case NILRAD_USAGE_ERROR: return "UsageError";
  }
  return "Unknown";
}

const char * nilrad_text_data(const nilrad_text * text)
{
  return text ? text->value.c_str() : "";
}

size_t nilrad_text_size(const nilrad_text * text)
{
  return text ? text->value.size() : 0;
}

void nilrad_text_destroy(nilrad_text * text)
{
  delete text;
}

nilrad_status nilrad_parabolic_create(const char * dims, uint32_t prime, nilrad_parabolic ** out)
{
  if (!dims) {
    return null_argument("dims");
  }
  if (!out) {
    return null_argument("out");
  }
  return guarded([&] {
      *out = new nilrad_parabolic{nilrad::DimensionVector::parse(dims), nilrad::PrimeField(prime)};
    });
}

void nilrad_parabolic_destroy(nilrad_parabolic * parabolic)
{
  delete parabolic;
}

size_t nilrad_parabolic_rank(const nilrad_parabolic * parabolic)
{
  return parabolic ? parabolic->d.n() : 0;
}

uint32_t nilrad_parabolic_prime(const nilrad_parabolic * parabolic)
{
  return parabolic ? parabolic->field.modulus() : 0;
}

nilrad_status nilrad_parabolic_dimensions(
  const nilrad_parabolic * parabolic, size_t * nilradical, size_t * centralizer, size_t * center)
{
  if (!parabolic) {
    return null_argument("parabolic");
  }
  return guarded([&] {
      const auto c = nilrad::centralizer_in_u(parabolic->d, parabolic->field);
      const auto z = nilrad::center_of(c, parabolic->field);
      if (nilradical) {
        *nilradical = nilrad::Nilradical(parabolic->d).dim();
      }
      if (centralizer) {
        *centralizer = c.dim();
      }
      if (center) {
        *center = z.dim();
      }
    });
}

nilrad_status nilrad_parabolic_elementary(
  const nilrad_parabolic * parabolic, size_t cap, size_t * count, size_t * saturation_rank)
{
  if (!parabolic) {
    return null_argument("parabolic");
  }
  return guarded([&] {
      nilrad::EnumerationOptions options;
      options.cap = cap;
      const auto land = nilrad::maximal_elementary_containing(parabolic->d, parabolic->field, options);
      std::size_t best = 0;
      for (const auto & w : land.maximal) {
        best = std::max(best, w.dim());
      }
      if (count) {
        *count = land.maximal.size();
      }
      if (saturation_rank) {
        *saturation_rank = best;
      }
    });
}

nilrad_status nilrad_parabolic_partition(const nilrad_parabolic * parabolic, nilrad_text ** out)
{
  if (!parabolic) {
    return null_argument("parabolic");
  }
  if (!out) {
    return null_argument("out");
  }
  return guarded([&] { emit_text(nilrad::partition_of(parabolic->d).to_string(), out); });
}

nilrad_status nilrad_parabolic_richardson(const nilrad_parabolic * parabolic, nilrad_text ** out)
{
  if (!parabolic) {
    return null_argument("parabolic");
  }
  if (!out) {
    return null_argument("out");
  }
  return guarded([&] {
      emit_text(nilrad::richardson(parabolic->d, parabolic->field).to_string(), out);
    });
}

nilrad_status nilrad_parabolic_quiver_dot(const nilrad_parabolic * parabolic, nilrad_text ** out)
{
  if (!parabolic) {
    return null_argument("parabolic");
  }
  if (!out) {
    return null_argument("out");
  }
  return guarded([&] { emit_text(nilrad::dot_export(nilrad::build_quiver(parabolic->d)), out); });
}

nilrad_status nilrad_command_create(const char * verb, nilrad_command ** out)
{
  if (!verb) {
    return null_argument("verb");
  }
  if (!out) {
    return null_argument("out");
  }
  return guarded([&] { *out = new nilrad_command{nilrad::Command(nilrad::parse_verb(verb))}; });
}

void nilrad_command_destroy(nilrad_command * command)
{
  delete command;
}

nilrad_status nilrad_command_set(nilrad_command * command, const char * flag, const char * value)
{
  if (!command) {
    return null_argument("command");
  }
  if (!flag || !value) {
    return null_argument("flag and value");
  }
  return guarded([&] { command->command.set(flag, value); });
}

nilrad_status nilrad_command_run(const nilrad_command * command, nilrad_text ** output, int * exit_code)
{
  if (!command) {
    return null_argument("command");
  }
  if (!output || !exit_code) {
    return null_argument("output and exit_code");
  }
  return guarded([&] {
      nilrad::RunResult result = command->command.run();
      emit_text(std::move(result.output), output);
      *exit_code = result.exit_code;
    });
}

}  // extern "C"
