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

#ifndef NILRAD_QUIVER_HPP_
#define NILRAD_QUIVER_HPP_

#include <string>
#include <vector>

#include "nilrad/typea.hpp"

namespace nilrad
{

/// Vertices 1..vertex_count, arrows sorted by (source, target).
struct Quiver
{
  unsigned vertex_count = 0;
  std::vector<Position> arrows;

  bool has_arrow(unsigned a, unsigned b) const;
};

/// A path as its vertex sequence; at least two vertices.
using Path = std::vector<unsigned>;

inline unsigned source(const Path & path) { return path.front(); }
inline unsigned target(const Path & path) { return path.back(); }
/// "1->2->4".
std::string path_to_string(const Path & path);

/// Line arrows together with every arrow between adjacent columns.
Quiver build_quiver(const DimensionVector & d);

/// Every directed path of length >= 1, sorted lexicographically.
std::vector<Path> all_paths(const Quiver & q);

/// A commutativity relation: two distinct parallel paths.
struct Relation
{
  Path first;
  Path second;
};

/// All pairs of distinct parallel paths (first < second). Can be large.
std::vector<Relation> commutativity_relations(const Quiver & q);

struct IsoReport
{
  std::size_t path_count = 0;
  std::size_t position_count = 0;
  /// Every (source, target) of a path is a nilradical position and every
  /// position is reached.
  bool surjective = false;
  /// Dimension of the kernel of path -> e_{s,t} over F_p.
  std::size_t kernel_dim = 0;
  /// Rank of the span of all parallel-path differences.
  std::size_t relation_rank = 0;
  bool relations_span_kernel = false;
  std::size_t bracket_pairs = 0;
  bool brackets_compatible = false;

  bool passed() const noexcept
  {
    return surjective && relations_span_kernel && brackets_compatible &&
           path_count - kernel_dim == position_count;
  }
};

IsoReport verify_phi_isomorphism(const DimensionVector & d, const PrimeField & field);

/// Graphviz digraph, one node line per vertex and one "a -> b;" line per arrow.
std::string dot_export(const Quiver & q);

}  // namespace nilrad

#endif  // NILRAD_QUIVER_HPP_
