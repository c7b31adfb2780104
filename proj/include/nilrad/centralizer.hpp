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

#ifndef NILRAD_CENTRALIZER_HPP_
#define NILRAD_CENTRALIZER_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilrad/report.hpp"
#include "nilrad/typea.hpp"

namespace nilrad
{

/// Placement patterns of one or two Levi simple roots among alpha_1..alpha_n.
enum class LeviPattern {
  First,           // {a1}
  Middle,          // {as}, 1 < s < n
  Last,            // {an}
  FirstTwo,        // {a1, a2}
  LastTwo,         // {an-1, an}
  InnerAdjacent,   // {ar, ar+1}, 1 < r < n-1
  Ends,            // {a1, an}
  InnerAndLast,    // {ar, an}, 1 < r < n-1
  FirstAndInner,   // {a1, as}, 2 < s < n
  InnerSeparated,  // {ar, as}, 1 < r < s-1 < n-1
};

inline constexpr std::array<LeviPattern, 10> kLeviPatterns{
  LeviPattern::First, LeviPattern::Middle, LeviPattern::Last, LeviPattern::FirstTwo,
  LeviPattern::LastTwo, LeviPattern::InnerAdjacent, LeviPattern::Ends, LeviPattern::InnerAndLast,
  LeviPattern::FirstAndInner, LeviPattern::InnerSeparated};

/// "{a1}", "{ar,ar+1}", ...
std::string_view to_string(LeviPattern pattern);

/// The first pattern (in kLeviPatterns order) matching d's Levi roots;
/// nullopt unless one or two roots lie in the Levi.
std::optional<LeviPattern> classify(const DimensionVector & d);

/// Every d with this n whose Levi roots classify as `pattern`.
std::vector<DimensionVector> pattern_instances(LeviPattern pattern, unsigned n);

/// The two roots (r, s) of d, or (s, s) for a single root.
std::pair<unsigned, unsigned> pattern_roots(const DimensionVector & d);

struct CentralizerBasis
{
  DimensionVector d;
  Subspace basis;
  bool abelian = false;

  std::size_t dim() const noexcept { return basis.dim(); }
};

struct CenterBasis
{
  Subspace basis;

  std::size_t dim() const noexcept { return basis.dim(); }
};

/// { y in u : [e, y] = 0 for every e in elements }.
Subspace commutant(std::span<const FpMatrix> elements, const Nilradical & nil, const PrimeField & field);

/// Centralizer in u of an arbitrary element x (an n+1 square matrix).
CentralizerBasis centralizer_of(const DimensionVector & d, const FpMatrix & x, const PrimeField & field);

/// Centralizer in u of richardson(d).
CentralizerBasis centralizer_in_u(const DimensionVector & d, const PrimeField & field);

CenterBasis center_of(const CentralizerBasis & c, const PrimeField & field);

/// True iff all pairwise brackets of the basis vanish.
bool is_abelian(const Subspace & s, const Nilradical & nil, const PrimeField & field);

/// x(d)^k for k = 1 .. last as nilradical elements.
std::vector<NilElement> richardson_powers(const DimensionVector & d, unsigned last, const PrimeField & field);

/// The explicit centralizer generators listed for d's Levi pattern, in the
/// listed order. Throws Unsupported unless one or two roots lie in the
/// Levi; CaseVacuous when a listed generator falls outside u at this n.
std::vector<NilElement> closed_form_elements(const DimensionVector & d, const PrimeField & field);

/// Span of closed_form_elements, with its abelian flag.
CentralizerBasis closed_form_basis(const DimensionVector & d, const PrimeField & field);

/// The center listed for d's Levi pattern: the whole centralizer for the
/// abelian patterns, otherwise powers of x(d) plus e_{2,n+1} or e_{1,n+1}.
Subspace expected_center(const DimensionVector & d, const PrimeField & field);

/// Centralizer dimension and abelian flag listed for each pattern.
std::size_t expected_centralizer_dim(LeviPattern pattern, unsigned n);
bool expected_abelian(LeviPattern pattern);

struct PropagationReport
{
  std::size_t entries_checked = 0;
  std::vector<std::string> violations;

  bool passed() const noexcept { return violations.empty(); }
};

/// For each support entry (a, b) of x on different lines: a predecessor of
/// a forces a predecessor of b with the same coefficient at (a-, b-), and a
/// successor of b forces a successor of a with the same coefficient at (a+, b+).
PropagationReport check_propagation(const NilElement & x, const DimensionVector & d);

/// Checks every pattern instance at this n: centralizer dimension, abelian
/// flag, agreement with the closed form, and the center. Requires p > n.
CheckList verify_centralizer_table(unsigned n, const PrimeField & field, unsigned jobs = 1);

}  // namespace nilrad

#endif  // NILRAD_CENTRALIZER_HPP_
