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

#include "nilrad/centralizer.hpp"

#include <algorithm>

#include "nilrad/jordan.hpp"
#include "nilrad/parallel.hpp"

namespace nilrad
{

std::string_view to_string(LeviPattern pattern)
{
  switch (pattern) {
    case LeviPattern::First: return "{a1}";
    case LeviPattern::Middle: return "{as}";
    case LeviPattern::Last: return "{an}";
    case LeviPattern::FirstTwo: return "{a1,a2}";
    case LeviPattern::LastTwo: return "{an-1,an}";
    case LeviPattern::InnerAdjacent: return "{ar,ar+1}";
    case LeviPattern::Ends: return "{a1,an}";
    case LeviPattern::InnerAndLast: return "{ar,an}";
    case LeviPattern::FirstAndInner: return "{a1,as}";
    case LeviPattern::InnerSeparated: return "{ar,as}";
  }
  return "?";
}

std::optional<LeviPattern> classify(const DimensionVector & d)
{
  const std::vector<unsigned> roots = levi_roots(d);
  const unsigned n = d.n();
  if (roots.size() == 1) {
    const unsigned s = roots[0];
    if (s == 1) {
      return LeviPattern::First;
    }
    return s == n ? LeviPattern::Last : LeviPattern::Middle;
  }
  if (roots.size() != 2) {
    return std::nullopt;
  }
  const unsigned r = roots[0];
  const unsigned s = roots[1];
  if (s == r + 1) {
    if (r == 1) {
      return LeviPattern::FirstTwo;
    }
    return r + 1 == n ? LeviPattern::LastTwo : LeviPattern::InnerAdjacent;
  }
  if (r == 1) {
    return s == n ? LeviPattern::Ends : LeviPattern::FirstAndInner;
  }
  return s == n ? LeviPattern::InnerAndLast : LeviPattern::InnerSeparated;
}

std::vector<DimensionVector> pattern_instances(LeviPattern pattern, unsigned n)
{
  std::vector<DimensionVector> out;
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = a; b <= n; ++b) {
      std::vector<unsigned> roots{a};
      if (b != a) {
        roots.push_back(b);
      }
      DimensionVector d = DimensionVector::from_levi_roots(n, roots);
      if (classify(d) == pattern) {
        out.push_back(std::move(d));
      }
    }
  }
  return out;
}

std::pair<unsigned, unsigned> pattern_roots(const DimensionVector & d)
{
  const std::vector<unsigned> roots = levi_roots(d);
  if (roots.empty() || roots.size() > 2) {
    throw Error(ErrorCode::Unsupported, "expected one or two Levi simple roots");
  }
  return {roots.front(), roots.back()};
}

// ---------------------------------------------------------------------------

Subspace commutant(std::span<const FpMatrix> elements, const Nilradical & nil, const PrimeField & field)
{
  const unsigned size = nil.size();
  // Column k holds [e, e_{i,j}] = e * e_{i,j} - e_{i,j} * e for position k = (i, j).
  FpMatrix ad(elements.size() * size * size, nil.dim());
  for (std::size_t t = 0; t < elements.size(); ++t) {
    const FpMatrix & e = elements[t];
    if (e.rows() != size || e.cols() != size) {
      throw Error(ErrorCode::InvalidArgument, "element has the wrong size for this nilradical");
    }
    const std::size_t base = t * size * size;
    for (std::size_t k = 0; k < nil.dim(); ++k) {
      const unsigned i = nil.positions()[k].first - 1;
      const unsigned j = nil.positions()[k].second - 1;
      for (unsigned a = 0; a < size; ++a) {
        if (e(a, i) != 0) {
          ad(base + a * size + j, k) = field.add(ad(base + a * size + j, k), e(a, i));
        }
      }
      for (unsigned b = 0; b < size; ++b) {
        if (e(j, b) != 0) {
          ad(base + i * size + b, k) = field.sub(ad(base + i * size + b, k), e(j, b));
        }
      }
    }
  }
  return kernel_basis(ad, field);
}

CentralizerBasis centralizer_of(const DimensionVector & d, const FpMatrix & x, const PrimeField & field)
{
  const Nilradical nil(d);
  Subspace basis = commutant(std::span<const FpMatrix>(&x, 1), nil, field);
  const bool abelian = is_abelian(basis, nil, field);
  return CentralizerBasis{d, std::move(basis), abelian};
}

CentralizerBasis centralizer_in_u(const DimensionVector & d, const PrimeField & field)
{
  return centralizer_of(d, richardson(d, field).to_matrix(), field);
}

namespace
{

std::vector<FpMatrix> basis_matrices(const Subspace & s, const Nilradical & nil)
{
  std::vector<FpMatrix> out;
  out.reserve(s.dim());
  for (const Vec & v : s.basis()) {
    out.push_back(nil.to_matrix(v));
  }
  return out;
}

}  // namespace

CenterBasis center_of(const CentralizerBasis & c, const PrimeField & field)
{
  const Nilradical nil(c.d);
  const std::vector<FpMatrix> mats = basis_matrices(c.basis, nil);
  const std::size_t k = mats.size();
  const unsigned size = nil.size();
  // Solve for t with [b_i, sum_j t_j b_j] = 0 for every i.
  FpMatrix system(k * size * size, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const FpMatrix br = commutator(mats[i], mats[j], field);
      for (unsigned a = 0; a < size; ++a) {
        for (unsigned b = 0; b < size; ++b) {
          system(i * size * size + a * size + b, j) = br(a, b);
        }
      }
    }
  }
  const Subspace solution = kernel_basis(system, field);
  Subspace center(nil.dim(), field);
  for (const Vec & t : solution.basis()) {
    Vec y(nil.dim(), 0);
    for (std::size_t j = 0; j < k; ++j) {
      if (t[j] == 0) {
        continue;
      }
      for (std::size_t q = 0; q < nil.dim(); ++q) {
        y[q] = field.add(y[q], field.mul(t[j], c.basis.basis()[j][q]));
      }
    }
    center.insert(y);
  }
  return CenterBasis{std::move(center)};
}

bool is_abelian(const Subspace & s, const Nilradical & nil, const PrimeField & field)
{
  const std::vector<FpMatrix> mats = basis_matrices(s, nil);
  for (std::size_t i = 0; i < mats.size(); ++i) {
    for (std::size_t j = i + 1; j < mats.size(); ++j) {
      if (!commutator(mats[i], mats[j], field).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

std::vector<NilElement> richardson_powers(const DimensionVector & d, unsigned last, const PrimeField & field)
{
  const FpMatrix x = richardson(d, field).to_matrix();
  std::vector<NilElement> out;
  FpMatrix power = x;
  for (unsigned k = 1; k <= last; ++k) {
    out.push_back(NilElement::from_matrix(d, power, field));
    power = multiply(power, x, field);
  }
  return out;
}

namespace
{

/// Builds sums of unit elements, turning an out-of-range position into CaseVacuous.
class ElementBuilder
{
public:
  ElementBuilder(const DimensionVector & d, const PrimeField & field)
  : d_(d), field_(field) {}

  NilElement operator()(std::initializer_list<Position> terms) const
  {
    NilElement x(d_, field_);
    for (const auto & [i, j] : terms) {
      try {
        x.add(i, j, 1);
      } catch (const Error &) {
        throw Error(
          ErrorCode::CaseVacuous,
          "generator e_{" + std::to_string(i) + "," + std::to_string(j) + "} is outside u for (" +
          d_.to_string() + ")");
      }
    }
    return x;
  }

private:
  DimensionVector d_;
  PrimeField field_;
};

}  // namespace

std::vector<NilElement> closed_form_elements(const DimensionVector & d, const PrimeField & field)
{
  const auto pattern = classify(d);
  if (!pattern) {
    throw Error(ErrorCode::Unsupported, "closed forms exist only for one or two Levi simple roots");
  }
  const unsigned n = d.n();
  const auto [r, s] = pattern_roots(d);
  const ElementBuilder e(d, field);
  std::vector<NilElement> out;
  switch (*pattern) {
    case LeviPattern::First:
      out = {e({{2, n + 1}})};
      break;
    case LeviPattern::Middle:
      out = {e({{1, s + 1}}), e({{s + 1, n + 1}})};
      break;
    case LeviPattern::Last:
      out = {e({{1, n + 1}})};
      break;
    case LeviPattern::FirstTwo:
      out = {e({{2, n + 1}}), e({{3, n + 1}})};
      break;
    case LeviPattern::LastTwo:
      out = {e({{1, n}}), e({{1, n + 1}})};
      break;
    case LeviPattern::InnerAdjacent:
      out = {e({{1, r + 1}}), e({{1, r + 2}}), e({{r + 1, n + 1}}), e({{r + 2, n + 1}})};
      break;
    case LeviPattern::Ends:
      out = {e({{1, n + 1}}), e({{2, n}})};
      break;
    case LeviPattern::InnerAndLast:
      out = {e({{1, n + 1}}), e({{r + 1, n}}), e({{1, r + 1}, {2, n + 1}})};
      break;
    case LeviPattern::FirstAndInner:
      out = {e({{1, s + 1}}), e({{2, n + 1}}), e({{2, n}, {s + 1, n + 1}})};
      break;
    case LeviPattern::InnerSeparated:
      out = {e({{1, s + 1}}), e({{r + 1, n + 1}}), e({{1, r + 1}, {2, s + 1}}),
        e({{r + 1, n}, {s + 1, n + 1}})};
      break;
  }
  const unsigned last_power = levi_roots(d).size() == 1 ? n - 1 : n - 2;
  for (NilElement & p : richardson_powers(d, last_power, field)) {
    out.push_back(std::move(p));
  }
  return out;
}

CentralizerBasis closed_form_basis(const DimensionVector & d, const PrimeField & field)
{
  const Nilradical nil(d);
  Subspace basis(nil.dim(), field);
  for (const NilElement & x : closed_form_elements(d, field)) {
    basis.insert(x.to_coords(nil));
  }
  const bool abelian = is_abelian(basis, nil, field);
  return CentralizerBasis{d, std::move(basis), abelian};
}

Subspace expected_center(const DimensionVector & d, const PrimeField & field)
{
  const auto pattern = classify(d);
  if (!pattern) {
    throw Error(ErrorCode::Unsupported, "center patterns exist only for one or two Levi simple roots");
  }
  const Nilradical nil(d);
  const unsigned n = d.n();
  Subspace out(nil.dim(), field);
  auto add_powers = [&](unsigned last) {
      for (const NilElement & p : richardson_powers(d, last, field)) {
        out.insert(p.to_coords(nil));
      }
    };
  switch (*pattern) {
    case LeviPattern::First:
    case LeviPattern::Last:
    case LeviPattern::FirstTwo:
    case LeviPattern::LastTwo:
    case LeviPattern::Ends:
      return centralizer_in_u(d, field).basis;
    case LeviPattern::Middle:
    case LeviPattern::InnerAdjacent:
    case LeviPattern::InnerSeparated:
      add_powers(partition_of(d).largest() - 1);
      return out;
    case LeviPattern::FirstAndInner:
      out.insert(nil.unit(2, n + 1));
      add_powers(n - 2);
      return out;
    case LeviPattern::InnerAndLast:
      out.insert(nil.unit(1, n + 1));
      add_powers(n - 2);
      return out;
  }
  return out;
}

std::size_t expected_centralizer_dim(LeviPattern pattern, unsigned n)
{
  switch (pattern) {
    case LeviPattern::Middle:
    case LeviPattern::InnerAndLast:
    case LeviPattern::FirstAndInner:
      return n + 1;
    case LeviPattern::InnerAdjacent:
    case LeviPattern::InnerSeparated:
      return n + 2;
    default:
      return n;
  }
}

bool expected_abelian(LeviPattern pattern)
{
  switch (pattern) {
    case LeviPattern::First:
    case LeviPattern::Last:
    case LeviPattern::FirstTwo:
    case LeviPattern::LastTwo:
    case LeviPattern::Ends:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------

PropagationReport check_propagation(const NilElement & x, const DimensionVector & d)
{
  const LineDiagram diagram(d);
  PropagationReport report;
  auto entry = [](unsigned a, unsigned b) {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    };
  for (const auto & [pos, k] : x.support()) {
    const auto [a, b] = pos;
    if (diagram.line_of(a) == diagram.line_of(b)) {
      continue;
    }
    ++report.entries_checked;
    if (const auto a_prev = diagram.predecessor(a)) {
      const auto b_prev = diagram.predecessor(b);
      if (!b_prev) {
        report.violations.push_back(entry(a, b) + ": " + std::to_string(b) + " has no predecessor");
      } else if (x.coefficient(*a_prev, *b_prev) != k) {
        report.violations.push_back(entry(a, b) + ": coefficient at " + entry(*a_prev, *b_prev) + " differs");
      }
    }
    if (const auto b_next = diagram.successor(b)) {
      const auto a_next = diagram.successor(a);
      if (!a_next) {
        report.violations.push_back(entry(a, b) + ": " + std::to_string(a) + " has no successor");
      } else if (x.coefficient(*a_next, *b_next) != k) {
        report.violations.push_back(entry(a, b) + ": coefficient at " + entry(*a_next, *b_next) + " differs");
      }
    }
  }
  return report;
}

CheckList verify_centralizer_table(unsigned n, const PrimeField & field, unsigned jobs)
{
  if (field.modulus() <= n) {
    throw Error(ErrorCode::PreconditionViolated, "centralizer table checks need p > n");
  }
  struct Job
  {
    LeviPattern pattern;
    std::optional<DimensionVector> d;
  };
  std::vector<Job> work;
  for (LeviPattern pattern : kLeviPatterns) {
    const auto instances = pattern_instances(pattern, n);
    if (instances.empty()) {
      work.push_back({pattern, std::nullopt});
    }
    for (const auto & d : instances) {
      work.push_back({pattern, d});
    }
  }
  std::vector<CheckList> results(work.size());
  parallel_for(work.size(), jobs, [&](std::size_t i) {
      const Job & job = work[i];
      const std::string prefix =
        "centralizer/n=" + std::to_string(n) + "/" + std::string(to_string(job.pattern));
      CheckList & out = results[i];
      if (!job.d) {
        out.push_back(Check::skipped(prefix, "no instance at this n"));
        return;
      }
      const DimensionVector & d = *job.d;
      const std::string name = prefix + "/d=" + d.to_string();
      const CentralizerBasis c = centralizer_in_u(d, field);
      out.push_back(Check::compare(name + "/dim", expected_centralizer_dim(job.pattern, n), c.dim()));
      out.push_back(Check::compare(name + "/abelian", expected_abelian(job.pattern), c.abelian));
      try {
        const CentralizerBasis closed = closed_form_basis(d, field);
        out.push_back(Check::compare(name + "/closed_form", true, closed.basis == c.basis));
      } catch (const Error & e) {
        out.push_back(Check::failed(name + "/closed_form", true, e.what()));
      }
      const CenterBasis z = center_of(c, field);
      const Subspace expected = expected_center(d, field);
      out.push_back(Check::compare(name + "/center_dim", expected.dim(), z.dim()));
      out.push_back(Check::compare(name + "/center", true, z.basis == expected));
    });
  CheckList out;
  for (auto & r : results) {
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace nilrad
