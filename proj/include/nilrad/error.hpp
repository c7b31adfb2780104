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

#ifndef NILRAD_ERROR_HPP_
#define NILRAD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace nilrad
{

enum class ErrorCode {
  InvalidArgument,
  Parse,
  NotPrime,
  NonNilpotent,
  NotRichardson,
  Unsupported,
  CaseVacuous,
  WrongArity,
  PreconditionViolated,
  CapExceeded,
  Io,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a code that the C interface maps one-to-one onto its status values.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & message)
  : std::runtime_error(message), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// Internal consistency checks stay active in release builds.
#define NILRAD_ENSURE(cond, msg)                                         \
  do {                                                                   \
    if (!(cond)) {                                                       \
      throw ::nilrad::Error(::nilrad::ErrorCode::Internal, (msg));       \
    }                                                                    \
  } while (false)

}  // namespace nilrad

#endif  // NILRAD_ERROR_HPP_
