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

#include "nilrad/quiver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace nilrad
{

bool Quiver::has_arrow(unsigned a, unsigned b) const
{
  return std::binary_search(arrows.begin(), arrows.end(), Position{a, b});
}

std::string path_to_string(const Path & path)
{
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) {
      out += "->";
    }
    out += std::to_string(path[i]);
  }
  return out;
}

Quiver build_quiver(const DimensionVector & d)
{
  const LineDiagram diagram(d);
  std::set<Position> arrows;
  for (const auto & row : diagram.rows()) {
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      arrows.emplace(row[k], row[k + 1]);
    }
  }
  const auto & columns = diagram.columns();
  for (std::size_t c = 0; c + 1 < columns.size(); ++c) {
    for (unsigned a : columns[c]) {
      for (unsigned b : columns[c + 1]) {
        arrows.emplace(a, b);
      }
    }
  }
  return Quiver{d.size(), std::vector<Position>(arrows.begin(), arrows.end())};
}

namespace
{

void extend_paths(
  const std::vector<std::vector<unsigned>> & out_edges, Path & current, std::vector<Path> & result)
{
  for (unsigned next : out_edges[current.back()]) {
    current.push_back(next);
    result.push_back(current);
    extend_paths(out_edges, current, result);
    current.pop_back();
  }
}

std::vector<std::vector<unsigned>> adjacency(const Quiver & q)
{
  std::vector<std::vector<unsigned>> out(q.vertex_count + 1);
  for (const auto & [a, b] : q.arrows) {
    out[a].push_back(b);
  }
  return out;
}

}  // namespace

std::vector<Path> all_paths(const Quiver & q)
{
  const auto out_edges = adjacency(q);
  std::vector<Path> result;
  for (unsigned v = 1; v <= q.vertex_count; ++v) {
    Path current{v};
    extend_paths(out_edges, current, result);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Relation> commutativity_relations(const Quiver & q)
{
  std::map<Position, std::vector<Path>> parallel;
  for (Path & path : all_paths(q)) {
    parallel[{source(path), target(path)}].push_back(std::move(path));
  }
  std::vector<Relation> out;
  for (const auto & [ends, paths] : parallel) {
    for (std::size_t i = 0; i < paths.size(); ++i) {
      for (std::size_t j = i + 1; j < paths.size(); ++j) {
        out.push_back({paths[i], paths[j]});
      }
    }
  }
  return out;
}

IsoReport verify_phi_isomorphism(const DimensionVector & d, const PrimeField & field)
{
  const Nilradical nil(d);
  const Quiver q = build_quiver(d);
  const std::vector<Path> paths = all_paths(q);

  IsoReport report;
  report.path_count = paths.size();
  report.position_count = nil.dim();

  // Surjectivity onto the basis {e_{i,j}} of u.
  std::set<Position> reached;
  bool inside = true;
  for (const Path & path : paths) {
    reached.emplace(source(path), target(path));
    inside = inside && nil.contains(source(path), target(path));
  }
  report.surjective =
    inside && reached == std::set<Position>(nil.positions().begin(), nil.positions().end());

  // The linear map path -> e_{s,t} as a positions x paths matrix.
  FpMatrix phi(nil.dim(), paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) {
    if (const auto idx = nil.index_of(source(paths[k]), target(paths[k]))) {
      phi(*idx, k) = 1;
    }
  }
  report.kernel_dim = paths.size() - rank(phi, field);

  // Parallel-path differences, ranked group by group (the groups use
  // disjoint path coordinates, so the ranks add).
  std::map<Position, std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    groups[{source(paths[k]), target(paths[k])}].push_back(k);
  }
  bool relations_in_kernel = true;
  for (const auto & [ends, members] : groups) {
    const std::size_t g = members.size();
    if (g < 2) {
      continue;
    }
    FpMatrix differences(g * (g - 1) / 2, g);
    std::size_t row = 0;
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = i + 1; j < g; ++j) {
        differences(row, i) = 1;
        differences(row, j) = field.neg(1);
        // phi(first) - phi(second) must vanish.
        Vec full(paths.size(), 0);
        full[members[i]] = 1;
        full[members[j]] = field.neg(1);
        const Vec image = apply(phi, full, field);
        relations_in_kernel = relations_in_kernel &&
          std::all_of(image.begin(), image.end(), [](Scalar s) { return s == 0; });
        ++row;
      }
    }
    report.relation_rank += rank(differences, field);
  }
  report.relations_span_kernel = relations_in_kernel && report.relation_rank == report.kernel_dim;

  // phi[x, y]_Q = [phi x, phi y], where a product of paths is their
  // concatenation when the ends meet and zero otherwise.
  const unsigned size = d.size();
  auto phi_matrix = [size](unsigned s, unsigned t) {
      FpMatrix m(size, size);
      m(s - 1, t - 1) = 1;
      return m;
    };
  bool compatible = true;
  for (const Path & x : paths) {
    const FpMatrix px = phi_matrix(source(x), target(x));
    for (const Path & y : paths) {
      FpMatrix lhs(size, size);
      if (target(x) == source(y)) {
        Path xy = x;
        xy.insert(xy.end(), y.begin() + 1, y.end());
        lhs(source(xy) - 1, target(xy) - 1) = field.add(lhs(source(xy) - 1, target(xy) - 1), 1);
      }
      if (target(y) == source(x)) {
        Path yx = y;
        yx.insert(yx.end(), x.begin() + 1, x.end());
        lhs(source(yx) - 1, target(yx) - 1) = field.sub(lhs(source(yx) - 1, target(yx) - 1), 1);
      }
      const FpMatrix rhs = commutator(px, phi_matrix(source(y), target(y)), field);
      compatible = compatible && lhs == rhs;
      ++report.bracket_pairs;
    }
  }
  report.brackets_compatible = compatible;
  return report;
}

std::string dot_export(const Quiver & q)
{
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (unsigned v = 1; v <= q.vertex_count; ++v) {
    out << "  " << v << ";\n";
  }
  for (const auto & [a, b] : q.arrows) {
    out << "  " << a << " -> " << b << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nilrad
