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

#include "nilrad/typea.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace nilrad
{

DimensionVector::DimensionVector(std::vector<unsigned> parts)
: parts_(std::move(parts))
{
  if (parts_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "dimension vector is empty");
  }
  for (unsigned part : parts_) {
    if (part == 0) {
      throw Error(ErrorCode::InvalidArgument, "dimension vector parts must be positive");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0U);
}

DimensionVector DimensionVector::parse(std::string_view text)
{
  std::vector<unsigned> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    std::string_view token = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
      token.remove_prefix(1);
    }
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) {
      token.remove_suffix(1);
    }
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::Parse, "cannot parse dimension vector '" + std::string(text) + "'");
    }
    if (value == 0) {
      throw Error(ErrorCode::Parse, "dimension vector parts must be positive in '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (end == std::string_view::npos) {
      break;
    }
    start = end + 1;
  }
  return DimensionVector(std::move(parts));
}

DimensionVector DimensionVector::from_levi_roots(unsigned n, const std::vector<unsigned> & roots)
{
  std::vector<bool> in_levi(n + 1, false);
  for (unsigned i : roots) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::InvalidArgument, "simple root index out of range");
    }
    in_levi[i] = true;
  }
  std::vector<unsigned> parts;
  unsigned current = 1;
  for (unsigned i = 1; i <= n; ++i) {
    if (in_levi[i]) {
      ++current;
    } else {
      parts.push_back(current);
      current = 1;
    }
  }
  parts.push_back(current);
  return DimensionVector(std::move(parts));
}

std::vector<DimensionVector> DimensionVector::all_with_rank(unsigned n)
{
  // Compositions of n+1 correspond to subsets of the n simple roots.
  std::vector<DimensionVector> out;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<unsigned> roots;
    for (unsigned i = 1; i <= n; ++i) {
      if (mask & (1U << (i - 1))) {
        roots.push_back(i);
      }
    }
    out.push_back(from_levi_roots(n, roots));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DimensionVector::to_string() const
{
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::vector<unsigned> levi_roots(const DimensionVector & d)
{
  std::vector<bool> boundary(d.size() + 1, false);
  unsigned sum = 0;
  for (unsigned part : d.parts()) {
    sum += part;
    boundary[sum] = true;
  }
  std::vector<unsigned> roots;
  for (unsigned i = 1; i <= d.n(); ++i) {
    if (!boundary[i]) {
      roots.push_back(i);
    }
  }
  return roots;
}

namespace
{

std::vector<unsigned> column_index(const DimensionVector & d)
{
  std::vector<unsigned> col(d.size() + 1, 0);
  unsigned label = 1;
  for (unsigned c = 0; c < d.parts().size(); ++c) {
    for (unsigned k = 0; k < d.parts()[c]; ++k) {
      col[label++] = c;
    }
  }
  return col;
}

}  // namespace

std::vector<Position> nilradical_positions(const DimensionVector & d)
{
  const std::vector<unsigned> col = column_index(d);
  std::vector<Position> out;
  for (unsigned i = 1; i <= d.size(); ++i) {
    for (unsigned j = i + 1; j <= d.size(); ++j) {
      if (col[i] < col[j]) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

Nilradical::Nilradical(const DimensionVector & d)
: d_(d), positions_(nilradical_positions(d)),
  index_(d.size() + 1, std::vector<int>(d.size() + 1, -1))
{
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    index_[positions_[k].first][positions_[k].second] = static_cast<int>(k);
  }
}

std::optional<std::size_t> Nilradical::index_of(unsigned i, unsigned j) const
{
  if (i < 1 || j < 1 || i > size() || j > size() || index_[i][j] < 0) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(index_[i][j]);
}

FpMatrix Nilradical::to_matrix(std::span<const Scalar> coords) const
{
  if (coords.size() != dim()) {
    throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  }
  FpMatrix m(size(), size());
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    m(positions_[k].first - 1, positions_[k].second - 1) = coords[k];
  }
  return m;
}

Vec Nilradical::to_coords(const FpMatrix & m) const
{
  if (m.rows() != size() || m.cols() != size()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has wrong size for this nilradical");
  }
  Vec out(dim(), 0);
  for (unsigned i = 0; i < size(); ++i) {
    for (unsigned j = 0; j < size(); ++j) {
      if (m(i, j) == 0) {
        continue;
      }
      const int k = index_[i + 1][j + 1];
      if (k < 0) {
        throw Error(ErrorCode::InvalidArgument, "matrix has an entry outside the nilradical");
      }
      out[static_cast<std::size_t>(k)] = m(i, j);
    }
  }
  return out;
}

Vec Nilradical::unit(unsigned i, unsigned j) const
{
  const auto k = index_of(i, j);
  if (!k) {
    throw Error(
      ErrorCode::InvalidArgument,
      "e_{" + std::to_string(i) + "," + std::to_string(j) + "} is not in the nilradical");
  }
  Vec v(dim(), 0);
  v[*k] = 1;
  return v;
}

// ---------------------------------------------------------------------------

LineDiagram::LineDiagram(const DimensionVector & d)
: column_(d.size() + 1, 0), line_(d.size() + 1, 0), next_(d.size() + 1, 0), prev_(d.size() + 1, 0)
{
  unsigned label = 1;
  unsigned height = 0;
  for (unsigned c = 0; c < d.parts().size(); ++c) {
    std::vector<unsigned> column;
    for (unsigned k = 0; k < d.parts()[c]; ++k) {
      column_[label] = c;
      line_[label] = k + 1;
      column.push_back(label++);
    }
    height = std::max(height, d.parts()[c]);
    tops_.push_back(column.front());
    columns_.push_back(std::move(column));
  }
  for (unsigned h = 0; h < height; ++h) {
    std::vector<unsigned> row;
    for (const auto & column : columns_) {
      if (column.size() > h) {
        row.push_back(column[h]);
      }
    }
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      next_[row[k]] = row[k + 1];
      prev_[row[k + 1]] = row[k];
    }
    rows_.push_back(std::move(row));
  }
  for (unsigned l = 1; l <= d.size(); ++l) {
    if (line_[l] > 1) {
      rest_.push_back(l);
    }
  }
}

void LineDiagram::check_label(unsigned label) const
{
  if (label < 1 || label >= column_.size()) {
    throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(label) + " out of range");
  }
}

unsigned LineDiagram::column_of(unsigned label) const
{
  check_label(label);
  return column_[label];
}

unsigned LineDiagram::line_of(unsigned label) const
{
  check_label(label);
  return line_[label];
}

std::optional<unsigned> LineDiagram::successor(unsigned label) const
{
  check_label(label);
  return next_[label] == 0 ? std::nullopt : std::optional<unsigned>(next_[label]);
}

std::optional<unsigned> LineDiagram::predecessor(unsigned label) const
{
  check_label(label);
  return prev_[label] == 0 ? std::nullopt : std::optional<unsigned>(prev_[label]);
}

std::string LineDiagram::coords_string() const
{
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < tops_.size(); ++i) {
    out << (i ? "," : "") << tops_[i];
  }
  if (!rest_.empty()) {
    out << " | ";
    for (std::size_t i = 0; i < rest_.size(); ++i) {
      out << (i ? "," : "") << rest_[i];
    }
  }
  out << ')';
  return out.str();
}

LineDiagram line_diagram(const DimensionVector & d)
{
  return LineDiagram(d);
}

// ---------------------------------------------------------------------------

NilElement::NilElement(const DimensionVector & d, const PrimeField & field)
: d_(d), field_(field), column_(column_index(d))
{
}

NilElement NilElement::from_matrix(
  const DimensionVector & d, const FpMatrix & m, const PrimeField & field)
{
  if (m.rows() != d.size() || m.cols() != d.size()) {
    throw Error(ErrorCode::InvalidArgument, "matrix has wrong size for this dimension vector");
  }
  NilElement x(d, field);
  for (unsigned i = 0; i < d.size(); ++i) {
    for (unsigned j = 0; j < d.size(); ++j) {
      if (m(i, j) != 0) {
        x.add(i + 1, j + 1, m(i, j));
      }
    }
  }
  return x;
}

NilElement NilElement::from_coords(
  const Nilradical & nil, std::span<const Scalar> coords, const PrimeField & field)
{
  if (coords.size() != nil.dim()) {
    throw Error(ErrorCode::InvalidArgument, "coordinate vector has wrong length");
  }
  NilElement x(nil.dims(), field);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] != 0) {
      x.support_[nil.positions()[k]] = coords[k] % field.modulus();
    }
  }
  return x;
}

NilElement & NilElement::add(unsigned i, unsigned j, Scalar value)
{
  if (i < 1 || j < 1 || i > d_.size() || j > d_.size() || column_[i] >= column_[j]) {
    throw Error(
      ErrorCode::InvalidArgument,
      "e_{" + std::to_string(i) + "," + std::to_string(j) + "} is not in the nilradical of (" +
      d_.to_string() + ")");
  }
  const Scalar sum = field_.add(coefficient(i, j), value % field_.modulus());
  if (sum == 0) {
    support_.erase({i, j});
  } else {
    support_[{i, j}] = sum;
  }
  return *this;
}

Scalar NilElement::coefficient(unsigned i, unsigned j) const
{
  const auto it = support_.find({i, j});
  return it == support_.end() ? 0 : it->second;
}

FpMatrix NilElement::to_matrix() const
{
  FpMatrix m(d_.size(), d_.size());
  for (const auto & [pos, value] : support_) {
    m(pos.first - 1, pos.second - 1) = value;
  }
  return m;
}

Vec NilElement::to_coords(const Nilradical & nil) const
{
  Vec v(nil.dim(), 0);
  for (const auto & [pos, value] : support_) {
    v[*nil.index_of(pos.first, pos.second)] = value;
  }
  return v;
}

std::string NilElement::to_string() const
{
  if (support_.empty()) {
    return "0";
  }
  std::string out;
  bool first = true;
  for (const auto & [pos, value] : support_) {
    const std::int64_t c = field_.to_signed(value);
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) {
      out += std::to_string(mag);
    }
    out += "e_{" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "}";
    first = false;
  }
  return out;
}

NilElement NilElement::operator+(const NilElement & other) const
{
  if (!(d_ == other.d_) || !(field_ == other.field_)) {
    throw Error(ErrorCode::InvalidArgument, "adding elements of different nilradicals");
  }
  NilElement out = *this;
  for (const auto & [pos, value] : other.support_) {
    out.add(pos.first, pos.second, value);
  }
  return out;
}

bool NilElement::operator==(const NilElement & other) const
{
  return d_ == other.d_ && field_ == other.field_ && support_ == other.support_;
}

NilElement NilElement::operator*(Scalar c) const
{
  NilElement out(d_, field_);
  for (const auto & [pos, value] : support_) {
    out.add(pos.first, pos.second, field_.mul(value, c % field_.modulus()));
  }
  return out;
}

NilElement richardson(const DimensionVector & d, const PrimeField & field)
{
  NilElement x(d, field);
  const LineDiagram diagram(d);
  for (const auto & row : diagram.rows()) {
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      x.add(row[k], row[k + 1], 1);
    }
  }
  return x;
}

std::vector<NilElement> row_decomposition(const NilElement & x, const DimensionVector & d)
{
  if (!(x == richardson(d, x.field()))) {
    throw Error(ErrorCode::NotRichardson, "element is not the Richardson element of (" + d.to_string() + ")");
  }
  std::vector<NilElement> out;
  const LineDiagram diagram(d);
  for (const auto & row : diagram.rows()) {
    NilElement part(d, x.field());
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      part.add(row[k], row[k + 1], 1);
    }
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace nilrad
