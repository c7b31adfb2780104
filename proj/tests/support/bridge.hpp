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

// Conversions between library values and the oracle's plain vectors.

#ifndef NILRAD_TESTS_BRIDGE_HPP_
#define NILRAD_TESTS_BRIDGE_HPP_

#include <set>
#include <vector>

#include "nilrad/exact.hpp"
#include "nilrad/typea.hpp"
#include "oracle.hpp"

namespace bridge
{

inline oracle::Rows rows_of(const nilrad::Subspace & s)
{
  oracle::Rows out;
  for (const nilrad::Vec & v : s.basis()) {
    out.emplace_back(v.begin(), v.end());
  }
  return out;
}

inline oracle::Rows canonical(const nilrad::Subspace & s)
{
  return oracle::echelon(rows_of(s), s.field().modulus());
}

inline std::set<oracle::Rows> canonical_set(const std::vector<nilrad::Subspace> & spaces)
{
  std::set<oracle::Rows> out;
  for (const auto & s : spaces) {
    out.insert(canonical(s));
  }
  return out;
}

inline oracle::Square square_of(const nilrad::FpMatrix & m)
{
  oracle::Square out(m.rows(), oracle::Row(m.cols(), 0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[i][j] = m(i, j);
    }
  }
  return out;
}

inline nilrad::FpMatrix matrix_of(const oracle::Square & s)
{
  nilrad::FpMatrix out(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      out(i, j) = static_cast<nilrad::Scalar>(s[i][j]);
    }
  }
  return out;
}

inline std::vector<nilrad::DimensionVector> all_up_to(unsigned max_n, unsigned min_n = 1)
{
  std::vector<nilrad::DimensionVector> out;
  for (unsigned n = min_n; n <= max_n; ++n) {
    for (auto & d : nilrad::DimensionVector::all_with_rank(n)) {
      out.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace bridge

#endif  // NILRAD_TESTS_BRIDGE_HPP_
