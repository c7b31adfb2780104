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

#ifndef NILRAD_TYPEA_HPP_
#define NILRAD_TYPEA_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilrad/exact.hpp"

namespace nilrad
{

/// Block sizes (d_1, ..., d_r) of a standard parabolic in sl(n+1).
class DimensionVector
{
public:
  /// Throws InvalidArgument on an empty vector or a zero part.
  explicit DimensionVector(std::vector<unsigned> parts);

  /// Parses "3,2,3,1". Throws Parse on malformed text or non-positive parts.
  static DimensionVector parse(std::string_view text);

  /// The dimension vector whose Levi has simple roots exactly `roots` (1-based, each in 1..n).
  static DimensionVector from_levi_roots(unsigned n, const std::vector<unsigned> & roots);

  /// Every dimension vector with the given n (all compositions of n+1).
  static std::vector<DimensionVector> all_with_rank(unsigned n);

  const std::vector<unsigned> & parts() const noexcept { return parts_; }
  unsigned n() const noexcept { return size_ - 1; }
  /// n + 1, the size of the matrices.
  unsigned size() const noexcept { return size_; }
  std::string to_string() const;

  bool operator==(const DimensionVector & other) const = default;
  auto operator<=>(const DimensionVector & other) const = default;

private:
  std::vector<unsigned> parts_;
  unsigned size_ = 0;
};

/// Indices i of the simple roots alpha_i lying in the Levi, ascending.
std::vector<unsigned> levi_roots(const DimensionVector & d);

/// Matrix position (row, column), both 1-based labels.
using Position = std::pair<unsigned, unsigned>;

/// All (i, j) with the column of i strictly left of the column of j, in
/// lexicographic order.
std::vector<Position> nilradical_positions(const DimensionVector & d);

/// Coordinates on the nilradical: vectors are indexed by nilradical_positions.
class Nilradical
{
public:
  explicit Nilradical(const DimensionVector & d);

  const DimensionVector & dims() const noexcept { return d_; }
  std::size_t dim() const noexcept { return positions_.size(); }
  unsigned size() const noexcept { return d_.size(); }
  const std::vector<Position> & positions() const noexcept { return positions_; }
  std::optional<std::size_t> index_of(unsigned i, unsigned j) const;
  bool contains(unsigned i, unsigned j) const { return index_of(i, j).has_value(); }

  FpMatrix to_matrix(std::span<const Scalar> coords) const;
  /// Throws InvalidArgument if m has a nonzero entry outside the nilradical.
  Vec to_coords(const FpMatrix & m) const;
  Vec unit(unsigned i, unsigned j) const;

private:
  DimensionVector d_;
  std::vector<Position> positions_;
  std::vector<std::vector<int>> index_;  // index_[i][j], -1 when outside
};

/// The horizontal line diagram: r top-adjusted columns labelled column by
/// column from the top, with lines joining dots at equal height.
class LineDiagram
{
public:
  explicit LineDiagram(const DimensionVector & d);

  const std::vector<std::vector<unsigned>> & columns() const noexcept { return columns_; }
  const std::vector<std::vector<unsigned>> & rows() const noexcept { return rows_; }
  /// Column tops D_1, ..., D_r.
  const std::vector<unsigned> & tops() const noexcept { return tops_; }
  /// The remaining labels, ascending.
  const std::vector<unsigned> & rest() const noexcept { return rest_; }

  /// 0-based column index of a label.
  unsigned column_of(unsigned label) const;
  /// 1-based height (row) of a label.
  unsigned line_of(unsigned label) const;
  std::optional<unsigned> successor(unsigned label) const;
  std::optional<unsigned> predecessor(unsigned label) const;

  /// "(1,2,3,5,6 | 4)".
  std::string coords_string() const;

private:
  void check_label(unsigned label) const;

  std::vector<std::vector<unsigned>> columns_;
  std::vector<std::vector<unsigned>> rows_;
  std::vector<unsigned> tops_;
  std::vector<unsigned> rest_;
  std::vector<unsigned> column_;  // by label
  std::vector<unsigned> line_;
  std::vector<unsigned> next_;    // 0 = none
  std::vector<unsigned> prev_;
};

LineDiagram line_diagram(const DimensionVector & d);

/// An element of the nilradical of p(d) with coefficients in F_p.
class NilElement
{
public:
  NilElement(const DimensionVector & d, const PrimeField & field);

  static NilElement from_matrix(const DimensionVector & d, const FpMatrix & m, const PrimeField & field);
  static NilElement from_coords(const Nilradical & nil, std::span<const Scalar> coords, const PrimeField & field);

  const DimensionVector & dims() const noexcept { return d_; }
  const PrimeField & field() const noexcept { return field_; }
  const std::map<Position, Scalar> & support() const noexcept { return support_; }

  /// Adds value at (i, j). Throws InvalidArgument if (i, j) is not in the nilradical.
  NilElement & add(unsigned i, unsigned j, Scalar value);
  Scalar coefficient(unsigned i, unsigned j) const;
  bool is_zero() const noexcept { return support_.empty(); }

  FpMatrix to_matrix() const;
  Vec to_coords(const Nilradical & nil) const;
  /// "e_{1,4}+2e_{2,5}", "0" for the zero element. Coefficients print in symmetric range.
  std::string to_string() const;

  NilElement operator+(const NilElement & other) const;
  bool operator==(const NilElement & other) const;
  NilElement operator*(Scalar c) const;

private:
  DimensionVector d_;
  PrimeField field_;
  std::vector<unsigned> column_;  // by label
  std::map<Position, Scalar> support_;
};

/// Sum of e_{a,b} over consecutive dots (a, b) on every horizontal line.
NilElement richardson(const DimensionVector & d, const PrimeField & field);

/// Per-line summands x_1, ..., x_h of richardson(d). Throws NotRichardson
/// if x is not richardson(d).
std::vector<NilElement> row_decomposition(const NilElement & x, const DimensionVector & d);

}  // namespace nilrad

#endif  // NILRAD_TYPEA_HPP_
