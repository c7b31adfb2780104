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

#include "nilrad/elementary.hpp"

#include <algorithm>
#include <set>

#include "nilrad/jordan.hpp"
#include "nilrad/parallel.hpp"

namespace nilrad
{

ProjectivePoint ProjectivePoint::make(Scalar a, Scalar b, const PrimeField & field)
{
  a %= field.modulus();
  b %= field.modulus();
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::InvalidArgument, "(0:0) is not a projective point");
  }
  if (a == 0) {
    return {0, 1};
  }
  return {1, field.mul(b, field.inv(a))};
}

std::vector<ProjectivePoint> projective_line(const PrimeField & field)
{
  std::vector<ProjectivePoint> out;
  for (Scalar b = 0; b < field.modulus(); ++b) {
    out.push_back({1, b});
  }
  out.push_back({0, 1});
  return out;
}

unsigned p_nilpotency_class(const NilElement & x)
{
  const FpMatrix m = x.to_matrix();
  FpMatrix power = m;
  unsigned k = 1;
  while (!power.is_zero()) {
    power = multiply(power, m, x.field());
    ++k;
    NILRAD_ENSURE(k <= m.rows() + 1, "strictly upper triangular element is not nilpotent");
  }
  return k;
}

bool nullcone_equals_u(const DimensionVector & d, const PrimeField & field)
{
  return partition_of(d).largest() <= field.modulus();
}

bool is_restricted_parabolic(const DimensionVector & d, const PrimeField & field)
{
  return nullcone_equals_u(d, field);
}

unsigned family_arity(LeviPattern pattern)
{
  switch (pattern) {
    case LeviPattern::Middle:
    case LeviPattern::InnerAndLast:
    case LeviPattern::FirstAndInner:
    case LeviPattern::InnerSeparated:
      return 1;
    case LeviPattern::InnerAdjacent:
      return 2;
    default:
      return 0;
  }
}

unsigned family_branches(LeviPattern pattern)
{
  return pattern == LeviPattern::InnerSeparated ? 2 : 1;
}

namespace
{

void require_nullcone(const DimensionVector & d, const PrimeField & field)
{
  if (!nullcone_equals_u(d, field)) {
    throw Error(
      ErrorCode::PreconditionViolated,
      "u contains elements that are not p-nilpotent for (" + d.to_string() + ") at p=" +
      std::to_string(field.modulus()));
  }
}

/// a * first + b * second, both given as unit-position lists.
NilElement combination(
  const DimensionVector & d, const PrimeField & field, const ProjectivePoint & pt,
  std::initializer_list<Position> first, std::initializer_list<Position> second)
{
  NilElement x(d, field);
  for (const auto & [i, j] : first) {
    x.add(i, j, pt.a);
  }
  for (const auto & [i, j] : second) {
    x.add(i, j, pt.b);
  }
  return x;
}

}  // namespace

Subspace parametrized_family(
  const DimensionVector & d, std::span<const ProjectivePoint> points, const PrimeField & field,
  unsigned branch)
{
  const auto pattern = classify(d);
  if (!pattern) {
    throw Error(ErrorCode::Unsupported, "families exist only for one or two Levi simple roots");
  }
  if (points.size() != family_arity(*pattern) || branch >= family_branches(*pattern)) {
    throw Error(
      ErrorCode::WrongArity,
      std::string(to_string(*pattern)) + " takes " + std::to_string(family_arity(*pattern)) +
      " point(s) and " + std::to_string(family_branches(*pattern)) + " branch(es)");
  }
  const unsigned n = d.n();
  const auto [r, s] = pattern_roots(d);
  const Nilradical nil(d);
  Subspace out(nil.dim(), field);
  auto unit = [&](unsigned i, unsigned j) { out.insert(nil.unit(i, j)); };
  auto add = [&](const NilElement & x) { out.insert(x.to_coords(nil)); };
  std::vector<ProjectivePoint> pts;
  for (const auto & pt : points) {
    pts.push_back(ProjectivePoint::make(pt.a, pt.b, field));
  }

  unsigned last_power = n - 2;
  switch (*pattern) {
    case LeviPattern::Middle:
      last_power = n - 1;
      add(combination(d, field, pts[0], {{1, s + 1}}, {{s + 1, n + 1}}));
      break;
    case LeviPattern::InnerAdjacent:
      add(combination(d, field, pts[0], {{1, r + 1}}, {{r + 1, n + 1}}));
      add(combination(d, field, pts[1], {{1, r + 2}}, {{r + 2, n + 1}}));
      break;
    case LeviPattern::InnerAndLast:
      add(combination(d, field, pts[0], {{1, r + 1}, {2, n + 1}}, {{r + 1, n}}));
      unit(1, n + 1);
      break;
    case LeviPattern::FirstAndInner:
      add(combination(d, field, pts[0], {{2, n}, {s + 1, n + 1}}, {{1, s + 1}}));
      unit(2, n + 1);
      break;
    case LeviPattern::InnerSeparated:
      if (branch == 0) {
        add(combination(d, field, pts[0], {{1, r + 1}, {2, s + 1}}, {{r + 1, n + 1}}));
        unit(1, s + 1);
      } else {
        add(combination(d, field, pts[0], {{r + 1, n}, {s + 1, n + 1}}, {{1, s + 1}}));
        unit(r + 1, n + 1);
      }
      break;
    default:
      return closed_form_basis(d, field).basis;
  }
  for (const NilElement & p : richardson_powers(d, last_power, field)) {
    add(p);
  }
  return out;
}

std::vector<Subspace> family_members(const DimensionVector & d, const PrimeField & field)
{
  const auto pattern = classify(d);
  if (!pattern) {
    throw Error(ErrorCode::Unsupported, "families exist only for one or two Levi simple roots");
  }
  const std::vector<ProjectivePoint> line = projective_line(field);
  std::vector<Subspace> out;
  for (unsigned branch = 0; branch < family_branches(*pattern); ++branch) {
    switch (family_arity(*pattern)) {
      case 0:
        out.push_back(parametrized_family(d, {}, field, branch));
        break;
      case 1:
        for (const auto & pt : line) {
          out.push_back(parametrized_family(d, std::span(&pt, 1), field, branch));
        }
        break;
      default:
        for (const auto & p1 : line) {
          for (const auto & p2 : line) {
            const ProjectivePoint pts[2] = {p1, p2};
            out.push_back(parametrized_family(d, pts, field, branch));
          }
        }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_maximal_elementary(const Subspace & e, const DimensionVector & d, const PrimeField & field)
{
  require_nullcone(d, field);
  const Nilradical nil(d);
  if (e.ambient() != nil.dim()) {
    throw Error(ErrorCode::InvalidArgument, "subspace is not given in nilradical coordinates");
  }
  if (!is_abelian(e, nil, field)) {
    return false;
  }
  std::vector<FpMatrix> mats;
  for (const Vec & v : e.basis()) {
    mats.push_back(nil.to_matrix(v));
  }
  return commutant(mats, nil, field) == e;
}

// ---------------------------------------------------------------------------
// Enumeration in the quotient c / z.
//
// Every abelian subalgebra containing x lies in c = c_u(x), and a maximal one
// contains the center z of c. So maximal ones correspond to maximal
// self-commuting subspaces W of c / z under the induced alternating bracket,
// which we enumerate through their reduced row-echelon matrices.

namespace
{

class QuotientBracket
{
public:
  QuotientBracket(
    const Nilradical & nil, const std::vector<Vec> & lifts, const PrimeField & field)
  : field_(field), k_(lifts.size())
  {
    std::vector<FpMatrix> mats;
    for (const Vec & v : lifts) {
      mats.push_back(nil.to_matrix(v));
    }
    std::vector<Vec> brackets(k_ * k_);
    Subspace image(nil.dim(), field);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        brackets[i * k_ + j] = nil.to_coords(commutator(mats[i], mats[j], field));
        image.insert(brackets[i * k_ + j]);
      }
    }
    // Coordinates on the reduced basis of the image are read at its pivots.
    m_ = image.dim();
    tensor_.assign(k_ * k_ * m_, 0);
    for (std::size_t ij = 0; ij < k_ * k_; ++ij) {
      for (std::size_t t = 0; t < m_; ++t) {
        tensor_[ij * m_ + t] = brackets[ij][image.pivots()[t]];
      }
    }
  }

  std::size_t k() const { return k_; }
  std::size_t m() const { return m_; }

  /// The m x k matrix of v -> [w, v].
  FpMatrix left(const Vec & w) const
  {
    FpMatrix out(m_, k_);
    for (std::size_t i = 0; i < k_; ++i) {
      if (w[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < k_; ++j) {
        for (std::size_t t = 0; t < m_; ++t) {
          const Scalar c = tensor_[(i * k_ + j) * m_ + t];
          if (c != 0) {
            out(t, j) = field_.add(out(t, j), field_.mul(w[i], c));
          }
        }
      }
    }
    return out;
  }

private:
  PrimeField field_;
  std::size_t k_;
  std::size_t m_ = 0;
  std::vector<Scalar> tensor_;
};

class PatternSearch
{
public:
  PatternSearch(const QuotientBracket & bracket, std::vector<std::size_t> pivots, const PrimeField & field)
  : bracket_(bracket), pivots_(std::move(pivots)), field_(field)
  {
    std::vector<bool> is_pivot(bracket.k(), false);
    for (std::size_t c : pivots_) {
      is_pivot[c] = true;
    }
    for (std::size_t c : pivots_) {
      std::vector<std::size_t> free;
      for (std::size_t f = c + 1; f < bracket.k(); ++f) {
        if (!is_pivot[f]) {
          free.push_back(f);
        }
      }
      free_.push_back(std::move(free));
    }
  }

  std::vector<std::vector<Vec>> run()
  {
    rows_.clear();
    maps_.clear();
    extend();
    return std::move(found_);
  }

private:
  void extend()
  {
    const std::size_t i = rows_.size();
    if (i == pivots_.size()) {
      record_if_maximal();
      return;
    }
    const std::size_t k = bracket_.k();
    const std::vector<std::size_t> & free = free_[i];
    Vec v(k, 0);
    v[pivots_[i]] = 1;
    std::vector<Scalar> digits(free.size(), 0);
    const Scalar p = field_.modulus();
    while (true) {
      for (std::size_t f = 0; f < free.size(); ++f) {
        v[free[f]] = digits[f];
      }
      if (commutes_with_rows(v)) {
        rows_.push_back(v);
        maps_.push_back(bracket_.left(v));
        extend();
        rows_.pop_back();
        maps_.pop_back();
      }
      std::size_t f = 0;
      while (f < digits.size() && ++digits[f] == p) {
        digits[f++] = 0;
      }
      if (f == digits.size()) {
        break;
      }
    }
  }

  bool commutes_with_rows(const Vec & v) const
  {
    for (const FpMatrix & map : maps_) {
      for (std::size_t t = 0; t < map.rows(); ++t) {
        Scalar acc = 0;
        for (std::size_t j = 0; j < map.cols(); ++j) {
          if (v[j] != 0 && map(t, j) != 0) {
            acc = field_.add(acc, field_.mul(map(t, j), v[j]));
          }
        }
        if (acc != 0) {
          return false;
        }
      }
    }
    return true;
  }

  void record_if_maximal()
  {
    const std::size_t k = bracket_.k();
    const std::size_t m = bracket_.m();
    FpMatrix stacked(maps_.size() * m, k);
    for (std::size_t w = 0; w < maps_.size(); ++w) {
      for (std::size_t t = 0; t < m; ++t) {
        for (std::size_t j = 0; j < k; ++j) {
          stacked(w * m + t, j) = maps_[w](t, j);
        }
      }
    }
    // W is contained in its own commutant; equality of dimensions is maximality.
    const std::size_t nullity = maps_.empty() ? k : k - rank(stacked, field_);
    if (nullity == rows_.size()) {
      found_.push_back(rows_);
    }
  }

  const QuotientBracket & bracket_;
  std::vector<std::size_t> pivots_;
  PrimeField field_;
  std::vector<std::vector<std::size_t>> free_;
  std::vector<Vec> rows_;
  std::vector<FpMatrix> maps_;
  std::vector<std::vector<Vec>> found_;
};

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t k)
{
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < k; ++c) {
      if (mask & (std::size_t{1} << c)) {
        pivots.push_back(c);
      }
    }
    out.push_back(std::move(pivots));
  }
  std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
  return out;
}

}  // namespace

ElementaryLandscape maximal_elementary_containing(
  const DimensionVector & d, const FpMatrix & x, const PrimeField & field,
  const EnumerationOptions & options)
{
  require_nullcone(d, field);
  const Nilradical nil(d);
  const CentralizerBasis c = centralizer_of(d, x, field);
  const CenterBasis z = center_of(c, field);

  ElementaryLandscape out{c.basis, z.basis, 0, {}};
  Subspace extended = z.basis;
  std::vector<Vec> lifts;
  for (const Vec & v : c.basis.basis()) {
    if (extended.insert(v)) {
      lifts.push_back(v);
    }
  }
  out.quotient_dim = lifts.size();
  if (lifts.size() > options.cap) {
    throw Error(
      ErrorCode::CapExceeded,
      "centralizer modulo center has dimension " + std::to_string(lifts.size()) +
      ", above the enumeration cap " + std::to_string(options.cap));
  }

  const QuotientBracket bracket(nil, lifts, field);
  const auto patterns = pivot_patterns(lifts.size());
  std::vector<std::vector<std::vector<Vec>>> per_pattern(patterns.size());
  parallel_for(patterns.size(), options.jobs, [&](std::size_t i) {
      per_pattern[i] = PatternSearch(bracket, patterns[i], field).run();
    });

  for (const auto & found : per_pattern) {
    for (const auto & rows : found) {
      Subspace w = z.basis;
      for (const Vec & row : rows) {
        Vec lifted(nil.dim(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (row[i] == 0) {
            continue;
          }
          for (std::size_t q = 0; q < nil.dim(); ++q) {
            lifted[q] = field.add(lifted[q], field.mul(row[i], lifts[i][q]));
          }
        }
        w.insert(lifted);
      }
      out.maximal.push_back(std::move(w));
    }
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

ElementaryLandscape maximal_elementary_containing(
  const DimensionVector & d, const PrimeField & field, const EnumerationOptions & options)
{
  return maximal_elementary_containing(d, richardson(d, field).to_matrix(), field, options);
}

std::size_t local_saturation_rank(
  const DimensionVector & d, const FpMatrix & x, const PrimeField & field,
  const EnumerationOptions & options)
{
  const ElementaryLandscape landscape = maximal_elementary_containing(d, x, field, options);
  std::size_t best = 0;
  for (const Subspace & w : landscape.maximal) {
    best = std::max(best, w.dim());
  }
  return best;
}

std::size_t saturation_rank(
  const DimensionVector & d, const PrimeField & field, const EnumerationOptions & options)
{
  return local_saturation_rank(d, richardson(d, field).to_matrix(), field, options);
}

BoundsReport rank_bounds(
  const DimensionVector & d, const PrimeField & field, const EnumerationOptions & options)
{
  const ElementaryLandscape landscape = maximal_elementary_containing(d, field, options);
  BoundsReport report;
  report.centralizer_dim = landscape.centralizer.dim();
  report.center_dim = landscape.center.dim();
  report.abelian = report.centralizer_dim == report.center_dim;
  for (const Subspace & w : landscape.maximal) {
    report.saturation_rank = std::max(report.saturation_rank, w.dim());
  }
  report.passed = report.abelian ?
    report.saturation_rank == report.centralizer_dim :
    report.center_dim <= report.saturation_rank && report.saturation_rank < report.centralizer_dim;
  return report;
}

CheckList verify_elementary_table(unsigned n, const PrimeField & field, const EnumerationOptions & options)
{
  // Rows whose nullcone is not all of u fail individually with
  // PreconditionViolated from the enumeration.
  const std::size_t p = field.modulus();
  CheckList out;
  for (LeviPattern pattern : kLeviPatterns) {
    const std::string prefix = "elementary/n=" + std::to_string(n) + "/" + std::string(to_string(pattern));
    const auto instances = pattern_instances(pattern, n);
    if (instances.empty()) {
      out.push_back(Check::skipped(prefix, "no instance at this n"));
    }
    for (const DimensionVector & d : instances) {
      const std::string name = prefix + "/d=" + d.to_string();
      std::vector<Subspace> family;
      std::size_t expected_count = 1;
      try {
        family = family_members(d, field);
      } catch (const Error & e) {
        out.push_back(Check::failed(name + "/families", true, e.what()));
      }
      switch (family_arity(pattern) * family_branches(pattern)) {
        case 0: expected_count = 1; break;
        case 1: expected_count = p + 1; break;
        case 2:
          // Two points give P1 x P1; two branches give the union of two lines.
          expected_count = family_arity(pattern) == 2 ? (p + 1) * (p + 1) : family.size();
          break;
      }
      ElementaryLandscape landscape;
      try {
        landscape = maximal_elementary_containing(d, field, options);
      } catch (const Error & e) {
        out.push_back(Check::failed(name + "/count", expected_count, e.what()));
        continue;
      }
      const Nilradical nil(d);
      const Vec x = richardson(d, field).to_coords(nil);
      std::set<std::size_t> dims;
      bool contain_x = true;
      std::size_t rank = 0;
      for (const Subspace & w : landscape.maximal) {
        dims.insert(w.dim());
        contain_x = contain_x && w.contains(x);
        rank = std::max(rank, w.dim());
      }
      bool families_found = !family.empty();
      for (const Subspace & f : family) {
        families_found = families_found &&
          std::binary_search(landscape.maximal.begin(), landscape.maximal.end(), f);
      }
      out.push_back(Check::compare(name + "/count", expected_count, landscape.maximal.size()));
      out.push_back(Check::compare(name + "/dims", std::vector<std::size_t>{n}, std::vector<std::size_t>(dims.begin(), dims.end())));
      out.push_back(Check::compare(name + "/contains_x", true, contain_x));
      out.push_back(Check::compare(name + "/saturation_rank", n, rank));
      out.push_back(Check::compare(name + "/families", true, families_found));
    }
  }
  return out;
}

}  // namespace nilrad
