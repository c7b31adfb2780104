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

#include "nilrad/jordan.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace nilrad
{

Partition::Partition(std::vector<unsigned> parts)
: parts_(std::move(parts))
{
  for (unsigned part : parts_) {
    if (part == 0) {
      throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
    }
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

unsigned Partition::total() const noexcept
{
  return std::accumulate(parts_.begin(), parts_.end(), 0U);
}

std::string Partition::to_string() const
{
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(parts_[i]);
  }
  return out + "]";
}

Partition partition_of_matrix(const IntMatrix & m)
{
  const std::vector<std::size_t> ranks = power_ranks(m);
  auto r = [&ranks](std::size_t k) -> std::int64_t {
      return k < ranks.size() ? static_cast<std::int64_t>(ranks[k]) : 0;
    };
  // Blocks of size exactly s: r(s-1) - 2 r(s) + r(s+1).
  std::vector<unsigned> parts;
  for (std::size_t s = 1; s < ranks.size(); ++s) {
    const std::int64_t count = r(s - 1) - 2 * r(s) + r(s + 1);
    NILRAD_ENSURE(count >= 0, "negative Jordan block count");
    parts.insert(parts.end(), static_cast<std::size_t>(count), static_cast<unsigned>(s));
  }
  return Partition(std::move(parts));
}

Partition partition_of(const DimensionVector & d)
{
  IntMatrix x(d.size(), d.size());
  const LineDiagram diagram(d);
  for (const auto & row : diagram.rows()) {
    for (std::size_t k = 0; k + 1 < row.size(); ++k) {
      x(row[k] - 1, row[k + 1] - 1) = 1;
    }
  }
  return partition_of_matrix(x);
}

Partition conjugate(const Partition & p)
{
  std::vector<unsigned> parts;
  for (unsigned j = 1; j <= p.largest(); ++j) {
    parts.push_back(static_cast<unsigned>(
      std::count_if(p.parts().begin(), p.parts().end(), [j](unsigned l) { return l >= j; })));
  }
  return Partition(std::move(parts));
}

unsigned gl_centralizer_dim(const Partition & p)
{
  unsigned sum = 0;
  for (unsigned a : p.parts()) {
    for (unsigned b : p.parts()) {
      sum += std::min(a, b);
    }
  }
  return sum;
}

std::string JordanBasis::cycle_notation() const
{
  const std::size_t n = sigma.size();
  std::vector<bool> seen(n + 1, false);
  std::string out;
  for (unsigned start = 1; start <= n; ++start) {
    if (seen[start] || sigma[start - 1] == start) {
      continue;
    }
    out += '(';
    unsigned cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      out += std::to_string(cur);
      cur = sigma[cur - 1];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

JordanBasis jordan_basis(const DimensionVector & d)
{
  const std::vector<unsigned> roots = levi_roots(d);
  if (roots.size() > 2) {
    throw Error(
      ErrorCode::Unsupported,
      "chain bases are constructed only when at most two simple roots lie in the Levi");
  }
  const LineDiagram diagram(d);
  const unsigned n = d.n();
  const auto & top = diagram.tops();
  const auto & rest = diagram.rest();
  auto D = [&top](unsigned i) { return top[i - 1]; };
  auto Dt = [&rest](unsigned i) { return rest[i - 1]; };

  JordanBasis basis;
  basis.sigma.resize(n + 1);
  bool last_chain_ok = true;
  if (roots.empty()) {
    std::iota(basis.sigma.begin(), basis.sigma.end(), 1U);
    basis.generators = {n + 1};
  } else if (roots.size() == 1) {
    for (unsigned i = 1; i <= n; ++i) {
      basis.sigma[i - 1] = D(i);
    }
    basis.sigma[n] = Dt(1);
    basis.generators = {D(n), Dt(1)};
  } else if (roots[1] == roots[0] + 1) {
    for (unsigned i = 1; i + 1 <= n; ++i) {
      basis.sigma[i - 1] = D(i);
    }
    basis.sigma[n - 1] = Dt(1);
    basis.sigma[n] = Dt(2);
    basis.generators = {D(n - 1), Dt(1), Dt(2)};
  } else {
    for (unsigned i = 1; i + 2 <= n; ++i) {
      basis.sigma[i - 1] = D(i);
    }
    basis.sigma[n - 2] = Dt(1);
    basis.sigma[n - 1] = D(n - 1);
    basis.sigma[n] = Dt(2);
    basis.generators = {D(n - 1), Dt(2)};
    last_chain_ok = diagram.predecessor(Dt(2)) == Dt(1);
  }

  // x(d) e_b = e_{b^-}: chains follow predecessors on a line.
  std::vector<unsigned> lengths;
  std::vector<unsigned> hits(n + 2, 0);
  for (unsigned v : basis.generators) {
    std::vector<unsigned> chain{v};
    while (auto prev = diagram.predecessor(chain.back())) {
      chain.push_back(*prev);
    }
    for (unsigned label : chain) {
      ++hits[label];
    }
    lengths.push_back(static_cast<unsigned>(chain.size()));
    basis.chains.push_back(std::move(chain));
  }
  basis.partition = partition_of(d);
  const bool covers = std::all_of(hits.begin() + 1, hits.end(), [](unsigned h) { return h == 1; });
  basis.consistent = covers && last_chain_ok && Partition(lengths) == basis.partition;
  return basis;
}

}  // namespace nilrad
