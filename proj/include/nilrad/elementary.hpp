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

#ifndef NILRAD_ELEMENTARY_HPP_
#define NILRAD_ELEMENTARY_HPP_

#include <vector>

#include "nilrad/centralizer.hpp"
#include "nilrad/report.hpp"
#include "nilrad/typea.hpp"

namespace nilrad
{

/// A point (a:b) of the projective line over F_p in canonical form:
/// (1:b) or (0:1).
struct ProjectivePoint
{
  Scalar a = 1;
  Scalar b = 0;

  /// Throws InvalidArgument for (0:0).
  static ProjectivePoint make(Scalar a, Scalar b, const PrimeField & field);
  bool operator==(const ProjectivePoint & other) const = default;
};

/// All p + 1 points, (1:0), (1:1), ..., (1:p-1), (0:1).
std::vector<ProjectivePoint> projective_line(const PrimeField & field);

/// Smallest m with x^m = 0 (1 for the zero element).
unsigned p_nilpotency_class(const NilElement & x);

/// Whether every element of u is p-nilpotent: the largest Jordan block of
/// the Richardson element is at most p.
bool nullcone_equals_u(const DimensionVector & d, const PrimeField & field);

/// u lies in the restricted nullcone of sl(n+1); same criterion as above.
bool is_restricted_parabolic(const DimensionVector & d, const PrimeField & field);

/// Number of projective points a family for this pattern takes.
unsigned family_arity(LeviPattern pattern);
/// Number of distinct families for this pattern (2 for {ar,as}, else 1).
unsigned family_branches(LeviPattern pattern);

/// The n-dimensional abelian subalgebra of the listed family for d's Levi
/// pattern at the given points. Abelian patterns take no points and give the
/// listed centralizer. Throws Unsupported outside one or two Levi roots and
/// WrongArity when the point count or branch does not fit the pattern.
Subspace parametrized_family(
  const DimensionVector & d, std::span<const ProjectivePoint> points, const PrimeField & field,
  unsigned branch = 0);

/// Every family member over F_p, all branches, deduplicated and sorted.
std::vector<Subspace> family_members(const DimensionVector & d, const PrimeField & field);

/// Abelian and equal to its own centralizer in u. Requires every element of
/// u to be p-nilpotent (PreconditionViolated otherwise).
bool is_maximal_elementary(const Subspace & e, const DimensionVector & d, const PrimeField & field);

struct EnumerationOptions
{
  /// Largest supported dimension of centralizer / center.
  std::size_t cap = 5;
  unsigned jobs = 1;
};

struct ElementaryLandscape
{
  Subspace centralizer;
  Subspace center;
  std::size_t quotient_dim = 0;
  /// Maximal elementary subalgebras containing the element, sorted.
  std::vector<Subspace> maximal;
};

/// All maximal elementary subalgebras of u containing x. Throws CapExceeded
/// when dim(centralizer / center) exceeds the cap and PreconditionViolated
/// unless every element of u is p-nilpotent.
ElementaryLandscape maximal_elementary_containing(
  const DimensionVector & d, const FpMatrix & x, const PrimeField & field,
  const EnumerationOptions & options = {});

/// Same, for richardson(d).
ElementaryLandscape maximal_elementary_containing(
  const DimensionVector & d, const PrimeField & field, const EnumerationOptions & options = {});

/// Largest dimension among maximal elementary subalgebras containing x.
std::size_t local_saturation_rank(
  const DimensionVector & d, const FpMatrix & x, const PrimeField & field,
  const EnumerationOptions & options = {});

/// Saturation rank of u, read off at the Richardson element.
std::size_t saturation_rank(
  const DimensionVector & d, const PrimeField & field, const EnumerationOptions & options = {});

struct BoundsReport
{
  bool abelian = false;
  std::size_t centralizer_dim = 0;
  std::size_t center_dim = 0;
  std::size_t saturation_rank = 0;
  /// abelian: rank == dim c; otherwise dim z <= rank < dim c.
  bool passed = false;
};

BoundsReport rank_bounds(
  const DimensionVector & d, const PrimeField & field, const EnumerationOptions & options = {});

/// Per pattern instance at this n: count of maximal elementary subalgebras
/// containing x(d) against the point count of the listed parametrization,
/// their dimensions, the saturation rank, and inclusion of every family
/// member. Each row requires V(u) = u, which p >= n + 1 guarantees.
CheckList verify_elementary_table(unsigned n, const PrimeField & field, const EnumerationOptions & options = {});

}  // namespace nilrad

#endif  // NILRAD_ELEMENTARY_HPP_
