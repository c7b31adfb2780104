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

#ifndef NILRAD_JORDAN_HPP_
#define NILRAD_JORDAN_HPP_

#include <string>
#include <vector>

#include "nilrad/typea.hpp"

namespace nilrad
{

/// Weakly decreasing positive parts.
class Partition
{
public:
  Partition() = default;
  /// Sorts the parts; throws InvalidArgument on a zero part.
  explicit Partition(std::vector<unsigned> parts);

  const std::vector<unsigned> & parts() const noexcept { return parts_; }
  unsigned total() const noexcept;
  unsigned largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  /// "[4,3,2]".
  std::string to_string() const;

  bool operator==(const Partition & other) const = default;

private:
  std::vector<unsigned> parts_;
};

/// Partition of a nilpotent integer matrix from the ranks of its powers.
/// Throws NonNilpotent.
Partition partition_of_matrix(const IntMatrix & m);

/// Jordan partition of richardson(d).
Partition partition_of(const DimensionVector & d);

Partition conjugate(const Partition & p);

/// sum over i, j of min(lambda_i, lambda_j).
unsigned gl_centralizer_dim(const Partition & p);

/// Chain basis of V adapted to richardson(d), built from the coordinate tuple.
struct JordanBasis
{
  /// Labels of the generators v_i (each v_i is a standard basis vector).
  std::vector<unsigned> generators;
  /// One-line notation: sigma[i - 1] = sigma(i).
  std::vector<unsigned> sigma;
  /// chains[i][j] is the label of x(d)^j v_i.
  std::vector<std::vector<unsigned>> chains;
  Partition partition;
  /// Chains cover every label exactly once, their lengths give the Jordan
  /// partition, and x(d) maps the last chain the way the construction expects.
  bool consistent = false;

  /// Disjoint cycles, each starting at its smallest element, fixed points
  /// omitted; "()" for the identity.
  std::string cycle_notation() const;
};

/// Throws Unsupported when more than two simple roots lie in the Levi.
JordanBasis jordan_basis(const DimensionVector & d);

}  // namespace nilrad

#endif  // NILRAD_JORDAN_HPP_
