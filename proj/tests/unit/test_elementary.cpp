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

#include <algorithm>
#include <random>
#include <vector>

#include "bridge.hpp"
#include "nilrad/centralizer.hpp"
#include "nilrad/elementary.hpp"
#include "nilrad/jordan.hpp"
#include "oracle.hpp"

using namespace nilrad;

namespace
{

ErrorCode code_of(auto && fn)
{
  try {
    fn();
  } catch (const Error & e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// g x g^{-1} for a random unipotent upper triangular g, which lies in every
// standard parabolic.
oracle::Square conjugate_in_parabolic(
  const oracle::Square & x, std::int64_t p, std::mt19937 & rng)
{
  const std::size_t n = x.size();
  std::uniform_int_distribution<std::int64_t> value(0, p - 1);
  oracle::Square nil = oracle::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      nil[i][j] = value(rng);
    }
  }
  oracle::Square g = oracle::zero(n);
  oracle::Square g_inv = oracle::zero(n);
  oracle::Square power = oracle::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = 1;
    power[i][i] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g[i][j] = oracle::mod(g[i][j] + nil[i][j], p);
    }
  }
  // (1 + N)^{-1} = sum (-N)^k.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        g_inv[i][j] = oracle::mod(g_inv[i][j] + (k % 2 == 0 ? 1 : -1) * power[i][j], p);
      }
    }
    power = oracle::product(power, nil, p);
  }
  return oracle::product(oracle::product(g, x, p), g_inv, p);
}

Subspace span_of(const DimensionVector & d, const PrimeField & f, const std::vector<NilElement> & elements)
{
  const Nilradical nil(d);
  Subspace s(nil.dim(), f);
  for (const NilElement & e : elements) {
    s.insert(e.to_coords(nil));
  }
  return s;
}

}  // namespace

TEST_CASE("projective line")
{
  const PrimeField f(5);
  const auto line = projective_line(f);
  CHECK(line.size() == 6);
  CHECK(ProjectivePoint::make(2, 4, f) == ProjectivePoint::make(1, 2, f));
  CHECK(ProjectivePoint::make(0, 3, f) == ProjectivePoint{0, 1});
  CHECK_THROWS_AS(ProjectivePoint::make(0, 0, f), Error);
}

TEST_CASE("nilpotency class and the nullcone")
{
  const PrimeField f(11);
  CHECK(p_nilpotency_class(richardson(DimensionVector({3, 2, 3, 1}), f)) == 4);
  CHECK(p_nilpotency_class(richardson(DimensionVector({1, 1, 2, 1, 1}), f)) == 5);
  CHECK(nullcone_equals_u(DimensionVector({1, 2, 1}), PrimeField(3)));
  CHECK_FALSE(nullcone_equals_u(DimensionVector({1, 1, 1, 1}), PrimeField(3)));
  CHECK(nullcone_equals_u(DimensionVector({1, 1}), PrimeField(2)));
  CHECK(is_restricted_parabolic(DimensionVector({1, 1, 1, 1, 2}), PrimeField(5)));
  for (const auto & d : bridge::all_up_to(6)) {
    CHECK(nullcone_equals_u(d, PrimeField(next_prime(d.n() + 1))));
  }
}

TEST_CASE("maximal elementary subalgebras agree with breadth-first search")
{
  const std::int64_t p = 5;
  const PrimeField f(p);
  for (const char * text : {"1,1,2,1", "2,1,1,1", "1,3,1,1", "1,2,1,2", "2,2,1,1", "1,2,2,1", "2,1,1,2", "2,2,2"}) {
    CAPTURE(text);
    const DimensionVector d = DimensionVector::parse(text);
    const ElementaryLandscape land = maximal_elementary_containing(d, f);
    const oracle::Rows c = oracle::centralizer(d.parts(), p);
    const oracle::Rows z = oracle::center(d.parts(), c, p);
    CHECK(land.quotient_dim == c.size() - z.size());
    CHECK(bridge::canonical_set(land.maximal) == oracle::maximal_abelian_over(d.parts(), c, z, p));
  }
}

TEST_CASE("enumerated subalgebras are abelian, contain x and its powers, and are maximal")
{
  const PrimeField f(7);
  for (const char * text : {"1,2,1,1,1", "1,3,1,1", "1,2,2,1", "2,1,1,2", "3,1,1,1"}) {
    CAPTURE(text);
    const DimensionVector d = DimensionVector::parse(text);
    const Nilradical nil(d);
    const ElementaryLandscape land = maximal_elementary_containing(d, f);
    REQUIRE_FALSE(land.maximal.empty());
    CHECK(std::is_sorted(land.maximal.begin(), land.maximal.end()));
    const auto powers = richardson_powers(d, partition_of(d).largest() - 1, f);
    for (const Subspace & w : land.maximal) {
      CHECK(is_abelian(w, nil, f));
      CHECK(is_maximal_elementary(w, d, f));
      CHECK(w.contains(land.center));
      CHECK(land.centralizer.contains(w));
      for (const NilElement & power : powers) {
        CHECK(w.contains(power.to_coords(nil)));
      }
    }
  }
}

TEST_CASE("abelian centralizer is the only maximal subalgebra")
{
  const PrimeField f(7);
  for (const char * text : {"2,1,1,1", "1,1,1,2", "3,1,1", "1,1,3"}) {
    const DimensionVector d = DimensionVector::parse(text);
    const ElementaryLandscape land = maximal_elementary_containing(d, f);
    REQUIRE(land.maximal.size() == 1);
    CHECK(land.maximal.front() == land.centralizer);
    CHECK(land.quotient_dim == 0);
  }
}

TEST_CASE("listed families lie among the enumerated subalgebras")
{
  const PrimeField f(7);
  for (const char * text : {"1,2,1,1", "1,1,2,1,1", "1,3,1,1", "1,1,3,1,1"}) {
    CAPTURE(text);
    const DimensionVector d = DimensionVector::parse(text);
    const ElementaryLandscape land = maximal_elementary_containing(d, f);
    const auto members = family_members(d, f);
    CHECK_FALSE(members.empty());
    for (const Subspace & m : members) {
      CHECK(std::binary_search(land.maximal.begin(), land.maximal.end(), m));
    }
  }
}

TEST_CASE("family arities")
{
  const PrimeField f(7);
  CHECK(family_arity(LeviPattern::First) == 0);
  CHECK(family_arity(LeviPattern::Middle) == 1);
  CHECK(family_arity(LeviPattern::InnerAdjacent) == 2);
  CHECK(family_branches(LeviPattern::InnerSeparated) == 2);
  const DimensionVector middle({1, 2, 1, 1});
  const std::vector<ProjectivePoint> two = {{1, 0}, {0, 1}};
  CHECK(code_of([&] { parametrized_family(middle, two, f); }) == ErrorCode::WrongArity);
  const std::vector<ProjectivePoint> none;
  CHECK(code_of([&] { parametrized_family(DimensionVector({3, 2, 3, 1}), none, f); }) == ErrorCode::Unsupported);
  // Abelian rows return the centralizer itself.
  const DimensionVector first({2, 1, 1, 1});
  CHECK(parametrized_family(first, none, f) == centralizer_in_u(first, f).basis);
}

TEST_CASE("saturation rank")
{
  CHECK(saturation_rank(DimensionVector({2, 2, 1, 1}), PrimeField(7)) == 6);
  CHECK(saturation_rank(DimensionVector({1, 2, 1, 1, 1}), PrimeField(7)) == 5);
  CHECK(saturation_rank(DimensionVector({1, 1}), PrimeField(2)) == 1);
  for (unsigned n = 3; n <= 6; ++n) {
    const PrimeField f(7);
    for (LeviPattern pattern : kLeviPatterns) {
      for (const auto & d : pattern_instances(pattern, n)) {
        CAPTURE(d.to_string());
        const BoundsReport bounds = rank_bounds(d, f);
        CHECK(bounds.passed);
        CHECK(bounds.center_dim <= bounds.saturation_rank);
        CHECK(bounds.saturation_rank <= bounds.centralizer_dim);
      }
    }
  }
}

TEST_CASE("local rank is invariant under conjugation in the parabolic")
{
  std::mt19937 rng(4242);
  const std::int64_t p = 7;
  const PrimeField f(p);
  for (const char * text : {"1,2,1,1", "2,2,1,1", "1,3,1,1", "2,1,1,2"}) {
    CAPTURE(text);
    const DimensionVector d = DimensionVector::parse(text);
    const FpMatrix x = richardson(d, f).to_matrix();
    const std::size_t base = local_saturation_rank(d, x, f);
    for (int trial = 0; trial < 3; ++trial) {
      const oracle::Square y = conjugate_in_parabolic(bridge::square_of(x), p, rng);
      CHECK(local_saturation_rank(d, bridge::matrix_of(y), f) == base);
    }
  }
}

TEST_CASE("(3,2,3,1): the ten-dimensional subspace")
{
  const DimensionVector d({3, 2, 3, 1});
  const PrimeField f(11);
  const Nilradical nil(d);
  std::vector<NilElement> elements = richardson_powers(d, 3, f);
  NilElement e(d, f);
  e.add(1, 5, 1).add(4, 7, 1);
  elements.push_back(e);
  for (const Position & pos : std::vector<Position>{{1, 7}, {1, 8}, {2, 8}, {2, 9}, {3, 7}, {3, 9}}) {
    NilElement u(d, f);
    u.add(pos.first, pos.second, 1);
    elements.push_back(u);
  }
  const Subspace w = span_of(d, f, elements);
  CHECK(w.dim() == 10);
  CHECK(is_abelian(w, nil, f));
  CHECK(nullcone_equals_u(d, f));
  CHECK(w.contains(richardson(d, f).to_coords(nil)));

  std::vector<FpMatrix> mats;
  for (const Vec & v : w.basis()) {
    mats.push_back(nil.to_matrix(v));
  }
  const Subspace common = commutant(mats, nil, f);
  CHECK(common.dim() == 12);
  CHECK_FALSE(is_maximal_elementary(w, d, f));

  // Above the default cap the enumeration refuses.
  CHECK(code_of([&] { maximal_elementary_containing(d, f); }) == ErrorCode::CapExceeded);
}

TEST_CASE("preconditions")
{
  const DimensionVector regular({1, 1, 1, 1});
  const PrimeField f(3);
  const Subspace empty(Nilradical(regular).dim(), f);
  CHECK(code_of([&] { is_maximal_elementary(empty, regular, f); }) == ErrorCode::PreconditionViolated);
  CHECK(code_of([&] { maximal_elementary_containing(regular, f); }) == ErrorCode::PreconditionViolated);
}
