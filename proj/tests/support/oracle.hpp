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

// Independent reference computations for the tests. Nothing here calls into
// the library: plain vectors, schoolbook elimination and brute force.

#ifndef NILRAD_TESTS_ORACLE_HPP_
#define NILRAD_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle
{

using Row = std::vector<std::int64_t>;
using Rows = std::vector<Row>;
using Square = std::vector<Row>;

inline std::int64_t mod(std::int64_t a, std::int64_t p)
{
  a %= p;
  return a < 0 ? a + p : a;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t p)
{
  std::int64_t result = 1;
  std::int64_t base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) {
      result = result * base % p;
    }
    base = base * base % p;
  }
  return result;
}

// Reduced row echelon form with zero rows dropped.
inline Rows echelon(Rows rows, std::int64_t p)
{
  if (rows.empty()) {
    return rows;
  }
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && mod(rows[pivot][c], p) == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[r], rows[pivot]);
    const std::int64_t inv = inverse(rows[r][c], p);
    for (auto & v : rows[r]) {
      v = mod(v * inv, p);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && mod(rows[i][c], p) != 0) {
        const std::int64_t f = mod(rows[i][c], p);
        for (std::size_t j = 0; j < cols; ++j) {
          rows[i][j] = mod(rows[i][j] - f * rows[r][j], p);
        }
      }
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

inline std::size_t rank(const Rows & rows, std::int64_t p)
{
  return echelon(rows, p).size();
}

// Basis of { v : A v = 0 } for A with `cols` columns.
inline Rows null_space(const Rows & a, std::size_t cols, std::int64_t p)
{
  const Rows e = echelon(a, p);
  std::vector<int> pivot_of(cols, -1);
  for (std::size_t r = 0; r < e.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (e[r][c] != 0) {
        pivot_of[c] = static_cast<int>(r);
        break;
      }
    }
  }
  Rows out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot_of[f] >= 0) {
      continue;
    }
    Row v(cols, 0);
    v[f] = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      if (pivot_of[c] >= 0) {
        v[c] = mod(-e[pivot_of[c]][f], p);
      }
    }
    out.push_back(v);
  }
  return out;
}

inline Square zero(std::size_t n)
{
  return Square(n, Row(n, 0));
}

inline Square product(const Square & a, const Square & b, std::int64_t p)
{
  const std::size_t n = a.size();
  Square c = zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        c[i][j] = mod(c[i][j] + a[i][k] * b[k][j], p);
      }
    }
  }
  return c;
}

inline bool commute(const Square & a, const Square & b, std::int64_t p)
{
  return product(a, b, p) == product(b, a, p);
}

// Block index (0-based) of each 1-based label.
inline std::vector<unsigned> blocks(const std::vector<unsigned> & d)
{
  std::vector<unsigned> out{0};
  for (unsigned b = 0; b < d.size(); ++b) {
    for (unsigned k = 0; k < d[b]; ++k) {
      out.push_back(b);
    }
  }
  return out;
}

// Strictly block-upper positions (i, j), 1-based, lexicographic.
inline std::vector<std::pair<unsigned, unsigned>> positions(const std::vector<unsigned> & d)
{
  const auto block = blocks(d);
  const unsigned size = static_cast<unsigned>(block.size() - 1);
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 1; i <= size; ++i) {
    for (unsigned j = i + 1; j <= size; ++j) {
      if (block[i] < block[j]) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

inline unsigned size_of(const std::vector<unsigned> & d)
{
  return std::accumulate(d.begin(), d.end(), 0U);
}

// x(d): link the h-th dot of each column to the h-th dot of the next column
// that is tall enough.
inline Square richardson(const std::vector<unsigned> & d, std::int64_t p)
{
  const unsigned size = size_of(d);
  Square x = zero(size);
  const unsigned tallest = *std::max_element(d.begin(), d.end());
  std::vector<unsigned> start(d.size(), 1);
  for (std::size_t b = 1; b < d.size(); ++b) {
    start[b] = start[b - 1] + d[b - 1];
  }
  for (unsigned h = 0; h < tallest; ++h) {
    int last = -1;
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (d[b] > h) {
        const int label = static_cast<int>(start[b] + h);
        if (last > 0) {
          x[last - 1][label - 1] = mod(x[last - 1][label - 1] + 1, p);
        }
        last = label;
      }
    }
  }
  return x;
}

inline Square from_coords(const std::vector<unsigned> & d, const Row & coords)
{
  const auto pos = positions(d);
  Square m = zero(size_of(d));
  for (std::size_t k = 0; k < pos.size(); ++k) {
    m[pos[k].first - 1][pos[k].second - 1] = coords[k];
  }
  return m;
}

inline Row to_coords(const std::vector<unsigned> & d, const Square & m)
{
  const auto pos = positions(d);
  Row out;
  for (const auto & [i, j] : pos) {
    out.push_back(m[i - 1][j - 1]);
  }
  return out;
}

// Elements of u commuting with every matrix in `with`, as u-coordinates.
inline Rows commutant(const std::vector<unsigned> & d, const std::vector<Square> & with, std::int64_t p)
{
  const auto pos = positions(d);
  const std::size_t n = size_of(d);
  Rows equations;
  for (const Square & a : with) {
    // One equation per matrix entry of [a, e].
    std::vector<Row> entries(n * n, Row(pos.size(), 0));
    for (std::size_t k = 0; k < pos.size(); ++k) {
      Row unit(pos.size(), 0);
      unit[k] = 1;
      const Square e = from_coords(d, unit);
      const Square ae = product(a, e, p);
      const Square ea = product(e, a, p);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          entries[i * n + j][k] = mod(ae[i][j] - ea[i][j], p);
        }
      }
    }
    for (auto & row : entries) {
      if (std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) {
        equations.push_back(std::move(row));
      }
    }
  }
  if (equations.empty()) {
    Rows all;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      Row unit(pos.size(), 0);
      unit[k] = 1;
      all.push_back(unit);
    }
    return all;
  }
  return null_space(equations, pos.size(), p);
}

inline Rows centralizer(const std::vector<unsigned> & d, std::int64_t p)
{
  return echelon(commutant(d, {richardson(d, p)}, p), p);
}

// Elements of span(c) commuting with all of c.
inline Rows center(const std::vector<unsigned> & d, const Rows & c, std::int64_t p)
{
  std::vector<Square> mats;
  for (const Row & v : c) {
    mats.push_back(from_coords(d, v));
  }
  Rows out;
  // Solve sum_k a_k [c_k, c_l] = 0 for all l.
  const std::size_t n = size_of(d);
  Rows equations;
  for (std::size_t l = 0; l < c.size(); ++l) {
    std::vector<Row> entries(n * n, Row(c.size(), 0));
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Square ab = product(mats[k], mats[l], p);
      const Square ba = product(mats[l], mats[k], p);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          entries[i * n + j][k] = mod(ab[i][j] - ba[i][j], p);
        }
      }
    }
    for (auto & row : entries) {
      equations.push_back(std::move(row));
    }
  }
  for (const Row & a : null_space(equations, c.size(), p)) {
    Row v(c.front().size(), 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = mod(v[j] + a[k] * c[k][j], p);
      }
    }
    out.push_back(v);
  }
  return echelon(out, p);
}

// Jordan type of the Richardson element: conjugate of the sorted block sizes.
inline std::vector<unsigned> richardson_partition(std::vector<unsigned> d)
{
  std::sort(d.rbegin(), d.rend());
  std::vector<unsigned> out;
  for (unsigned j = 1; j <= d.front(); ++j) {
    out.push_back(static_cast<unsigned>(
      std::count_if(d.begin(), d.end(), [j](unsigned v) { return v >= j; })));
  }
  return out;
}

// All maximal abelian subspaces of span(c) that contain span(z), found by
// breadth-first growth from z one vector at a time. Returned in echelon form.
inline std::set<Rows> maximal_abelian_over(
  const std::vector<unsigned> & d, const Rows & c, const Rows & z, std::int64_t p)
{
  // Complement of z inside c: rows of c whose addition raises the rank.
  Rows complement;
  Rows grown = z;
  for (const Row & v : c) {
    Rows next = grown;
    next.push_back(v);
    if (rank(next, p) > grown.size()) {
      complement.push_back(v);
      grown = echelon(next, p);
    }
  }
  const std::size_t k = complement.size();
  std::vector<Row> candidates;
  std::vector<Square> candidate_mats;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= static_cast<std::size_t>(p);
  }
  for (std::size_t code = 1; code < total; ++code) {
    Row v(c.front().size(), 0);
    std::size_t rest = code;
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t a = static_cast<std::int64_t>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
      for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = mod(v[j] + a * complement[i][j], p);
      }
    }
    candidates.push_back(v);
    candidate_mats.push_back(from_coords(d, v));
  }

  std::set<Rows> seen;
  std::set<Rows> maximal;
  std::vector<std::pair<Rows, std::vector<Square>>> frontier;
  const Rows start = echelon(z, p);
  frontier.push_back({start, {}});
  seen.insert(start);
  while (!frontier.empty()) {
    std::vector<std::pair<Rows, std::vector<Square>>> next;
    for (const auto & [space, mats] : frontier) {
      bool extended = false;
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool ok = true;
        for (const Square & m : mats) {
          if (!commute(m, candidate_mats[i], p)) {
            ok = false;
            break;
          }
        }
        if (!ok) {
          continue;
        }
        Rows bigger = space;
        bigger.push_back(candidates[i]);
        bigger = echelon(bigger, p);
        if (bigger.size() == space.size()) {
          continue;
        }
        extended = true;
        if (seen.insert(bigger).second) {
          std::vector<Square> grown_mats = mats;
          grown_mats.push_back(candidate_mats[i]);
          next.push_back({bigger, std::move(grown_mats)});
        }
      }
      if (!extended) {
        maximal.insert(space);
      }
    }
    frontier = std::move(next);
  }
  return maximal;
}

}  // namespace oracle

#endif  // NILRAD_TESTS_ORACLE_HPP_
