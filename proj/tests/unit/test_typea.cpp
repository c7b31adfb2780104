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
#include <vector>

#include "bridge.hpp"
#include "nilrad/typea.hpp"
#include "oracle.hpp"

using namespace nilrad;

namespace
{

ErrorCode code_of(const std::string & text)
{
  try {
    DimensionVector::parse(text);
  } catch (const Error & e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("dimension vectors parse strictly")
{
  const DimensionVector d = DimensionVector::parse("3,2,3,1");
  CHECK(d.parts() == std::vector<unsigned>{3, 2, 3, 1});
  CHECK(d.n() == 8);
  CHECK(d.size() == 9);
  CHECK(d.to_string() == "3,2,3,1");
  CHECK(DimensionVector::parse(" 1, 2 ,1 ") == DimensionVector({1, 2, 1}));
  for (const char * bad : {"", "0,2", "a,b", "1,,2", "1,2,", "-1,3", "1;2"}) {
    CAPTURE(bad);
    CHECK(code_of(bad) == ErrorCode::Parse);
  }
  CHECK_THROWS_AS(DimensionVector({}), Error);
  CHECK_THROWS_AS(DimensionVector({2, 0}), Error);
}

TEST_CASE("Levi roots round trip")
{
  CHECK(DimensionVector::from_levi_roots(5, {3}) == DimensionVector({1, 1, 2, 1, 1}));
  CHECK(DimensionVector::from_levi_roots(5, {2, 3}) == DimensionVector({1, 3, 1, 1}));
  CHECK(DimensionVector::from_levi_roots(5, {1, 3}) == DimensionVector({2, 2, 1, 1}));
  CHECK(levi_roots(DimensionVector({3, 2, 3, 1})) == std::vector<unsigned>{1, 2, 4, 6, 7});
  for (const auto & d : bridge::all_up_to(7)) {
    CHECK(DimensionVector::from_levi_roots(d.n(), levi_roots(d)) == d);
  }
  CHECK_THROWS_AS(DimensionVector::from_levi_roots(3, {4}), Error);
}

TEST_CASE("all vectors of a rank are the compositions of n+1")
{
  for (unsigned n = 1; n <= 9; ++n) {
    const auto all = DimensionVector::all_with_rank(n);
    CHECK(all.size() == (1U << n));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("nilradical positions are the strictly block-upper entries")
{
  for (const auto & d : bridge::all_up_to(6)) {
    const Nilradical nil(d);
    const auto expected = oracle::positions(d.parts());
    CHECK(nil.positions() == expected);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < d.parts().size(); ++i) {
      for (std::size_t j = i + 1; j < d.parts().size(); ++j) {
        dim += d.parts()[i] * d.parts()[j];
      }
    }
    CHECK(nil.dim() == dim);
  }
  const Nilradical nil(DimensionVector({1, 2, 1}));
  CHECK(nil.contains(1, 2));
  CHECK_FALSE(nil.contains(2, 3));
  CHECK(nil.index_of(3, 4) == 4);
  CHECK_THROWS_AS(nil.unit(2, 3), Error);
}

TEST_CASE("line diagrams of the sl_6 examples")
{
  CHECK(LineDiagram(DimensionVector({1, 1, 2, 1, 1})).coords_string() == "(1,2,3,5,6 | 4)");
  CHECK(LineDiagram(DimensionVector({1, 3, 1, 1})).coords_string() == "(1,2,5,6 | 3,4)");
  CHECK(LineDiagram(DimensionVector({2, 2, 1, 1})).coords_string() == "(1,3,5,6 | 2,4)");
}

TEST_CASE("line diagram navigation for (3,2,3,1)")
{
  const LineDiagram l(DimensionVector({3, 2, 3, 1}));
  CHECK(l.columns() == std::vector<std::vector<unsigned>>{{1, 2, 3}, {4, 5}, {6, 7, 8}, {9}});
  CHECK(l.rows() == std::vector<std::vector<unsigned>>{{1, 4, 6, 9}, {2, 5, 7}, {3, 8}});
  CHECK(l.tops() == std::vector<unsigned>{1, 4, 6, 9});
  CHECK(l.rest() == std::vector<unsigned>{2, 3, 5, 7, 8});
  CHECK(l.column_of(8) == 2);
  CHECK(l.line_of(8) == 3);
  CHECK(l.successor(3) == 8U);
  CHECK(l.predecessor(8) == 3U);
  CHECK_FALSE(l.successor(9).has_value());
  CHECK_FALSE(l.predecessor(2).has_value());
  CHECK_THROWS_AS(l.column_of(10), Error);
}

TEST_CASE("Richardson element of (3,2,3,1)")
{
  const PrimeField f(11);
  const DimensionVector d({3, 2, 3, 1});
  const NilElement x = richardson(d, f);
  CHECK(x.to_string() == "e_{1,4}+e_{2,5}+e_{3,8}+e_{4,6}+e_{5,7}+e_{6,9}");
  const auto parts = row_decomposition(x, d);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].to_string() == "e_{1,4}+e_{4,6}+e_{6,9}");
  CHECK(parts[1].to_string() == "e_{2,5}+e_{5,7}");
  CHECK(parts[2].to_string() == "e_{3,8}");
  CHECK(parts[0] + parts[1] + parts[2] == x);
  CHECK_THROWS_AS(row_decomposition(x * 2, d), Error);
}

TEST_CASE("Richardson elements agree with the oracle construction")
{
  const PrimeField f(13);
  for (const auto & d : bridge::all_up_to(7)) {
    CHECK(bridge::square_of(richardson(d, f).to_matrix()) == oracle::richardson(d.parts(), 13));
  }
}

TEST_CASE("nilradical elements")
{
  const PrimeField f(5);
  const DimensionVector d({1, 2, 1});
  const Nilradical nil(d);
  NilElement e(d, f);
  CHECK(e.to_string() == "0");
  e.add(1, 3, 2).add(3, 4, 4);
  CHECK(e.coefficient(1, 3) == 2);
  CHECK(e.to_string() == "2e_{1,3}-e_{3,4}");
  CHECK_THROWS_AS(e.add(2, 3, 1), Error);
  CHECK_THROWS_AS(e.add(3, 1, 1), Error);
  e.add(1, 3, 3);
  CHECK(e.coefficient(1, 3) == 0);
  const Vec coords = e.to_coords(nil);
  CHECK(NilElement::from_coords(nil, coords, f) == e);
  CHECK(NilElement::from_matrix(d, e.to_matrix(), f) == e);
  FpMatrix outside(4, 4);
  outside(1, 2) = 1;
  CHECK_THROWS_AS(NilElement::from_matrix(d, outside, f), Error);
  CHECK_THROWS_AS(nil.to_coords(outside), Error);
}
