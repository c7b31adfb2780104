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

#include "nilrad/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <utility>

namespace nilrad
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NonNilpotent: return "NonNilpotent";
    case ErrorCode::NotRichardson: return "NotRichardson";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::CaseVacuous: return "CaseVacuous";
    case ErrorCode::WrongArity: return "WrongArity";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t value)
{
  if (value < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) {
      return false;
    }
  }
  return true;
}

std::uint32_t next_prime(std::uint32_t at_least)
{
  std::uint32_t candidate = std::max<std::uint32_t>(at_least, 2);
  while (!is_prime(candidate)) {
    ++candidate;
  }
  return candidate;
}

PrimeField::PrimeField(std::uint32_t p)
: p_(p)
{
  if (!is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
}

Scalar PrimeField::pow(Scalar base, std::uint64_t exp) const noexcept
{
  Scalar result = 1 % p_;
  Scalar b = base % p_;
  while (exp > 0) {
    if (exp & 1U) {
      result = mul(result, b);
    }
    b = mul(b, b);
    exp >>= 1U;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const
{
  if (a % p_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "inverse of zero in F_" + std::to_string(p_));
  }
  return pow(a, p_ - 2);
}

Scalar PrimeField::from_int(std::int64_t value) const noexcept
{
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) {
    r += p_;
  }
  return static_cast<Scalar>(r);
}

std::int64_t PrimeField::to_signed(Scalar a) const noexcept
{
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

FpMatrix multiply(const FpMatrix & a, const FpMatrix & b, const PrimeField & field)
{
  NILRAD_ENSURE(a.cols() == b.rows(), "multiply: shape mismatch");
  FpMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (aik == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) {
          out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
        }
      }
    }
  }
  return out;
}

FpMatrix subtract(const FpMatrix & a, const FpMatrix & b, const PrimeField & field)
{
  NILRAD_ENSURE(a.rows() == b.rows() && a.cols() == b.cols(), "subtract: shape mismatch");
  FpMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = field.sub(a(i, j), b(i, j));
    }
  }
  return out;
}

FpMatrix commutator(const FpMatrix & a, const FpMatrix & b, const PrimeField & field)
{
  return subtract(multiply(a, b, field), multiply(b, a, field), field);
}

FpMatrix matrix_power(const FpMatrix & m, unsigned k, const PrimeField & field)
{
  NILRAD_ENSURE(m.rows() == m.cols(), "matrix_power: non-square matrix");
  FpMatrix result = FpMatrix::identity(m.rows());
  for (unsigned i = 0; i < k; ++i) {
    result = multiply(result, m, field);
  }
  return result;
}

FpMatrix reduce(const IntMatrix & m, const PrimeField & field)
{
  FpMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out(i, j) = field.from_int(m(i, j));
    }
  }
  return out;
}

Vec apply(const FpMatrix & m, std::span<const Scalar> v, const PrimeField & field)
{
  NILRAD_ENSURE(m.cols() == v.size(), "apply: shape mismatch");
  Vec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Scalar acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0 && v[j] != 0) {
        acc = field.add(acc, field.mul(m(i, j), v[j]));
      }
    }
    out[i] = acc;
  }
  return out;
}

RowEchelon row_reduce(FpMatrix m, const PrimeField & field)
{
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && m(pivot, c) == 0) {
      ++pivot;
    }
    if (pivot == m.rows()) {
      continue;
    }
    if (pivot != lead) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        std::swap(m(pivot, j), m(lead, j));
      }
    }
    const Scalar scale = field.inv(m(lead, c));
    for (std::size_t j = c; j < m.cols(); ++j) {
      m(lead, j) = field.mul(m(lead, j), scale);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, c) == 0) {
        continue;
      }
      const Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (m(lead, j) != 0) {
          m(i, j) = field.sub(m(i, j), field.mul(f, m(lead, j)));
        }
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.reduced = std::move(m);
  return out;
}

FpMatrix rref(const FpMatrix & m, const PrimeField & field)
{
  return row_reduce(m, field).reduced;
}

std::size_t rank(const FpMatrix & m, const PrimeField & field)
{
  return row_reduce(m, field).rank();
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient, const PrimeField & field)
: ambient_(ambient), field_(field)
{
}

Subspace Subspace::span(
  std::size_t ambient, std::span<const Vec> vectors, const PrimeField & field)
{
  Subspace s(ambient, field);
  for (const Vec & v : vectors) {
    s.insert(v);
  }
  return s;
}

Subspace Subspace::whole(std::size_t ambient, const PrimeField & field)
{
  Subspace s(ambient, field);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::residue(std::span<const Scalar> v) const
{
  if (v.size() != ambient_) {
    throw Error(ErrorCode::InvalidArgument, "vector length does not match subspace ambient");
  }
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = r[pivots_[i]];
    if (f == 0) {
      continue;
    }
    const Vec & b = basis_[i];
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
      if (b[j] != 0) {
        r[j] = field_.sub(r[j], field_.mul(f, b[j]));
      }
    }
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const
{
  const Vec r = residue(v);
  return std::all_of(r.begin(), r.end(), [](Scalar s) { return s == 0; });
}

bool Subspace::contains(const Subspace & other) const
{
  return std::all_of(
    other.basis_.begin(), other.basis_.end(), [this](const Vec & v) { return contains(v); });
}

Subspace Subspace::join(const Subspace & other) const
{
  Subspace out = *this;
  for (const Vec & v : other.basis_) {
    out.insert(v);
  }
  return out;
}

bool Subspace::insert(std::span<const Scalar> v)
{
  Vec r = residue(v);
  std::size_t lead = 0;
  while (lead < ambient_ && r[lead] == 0) {
    ++lead;
  }
  if (lead == ambient_) {
    return false;
  }
  const Scalar scale = field_.inv(r[lead]);
  for (std::size_t j = lead; j < ambient_; ++j) {
    r[j] = field_.mul(r[j], scale);
  }
  // Clear the new pivot column from the existing rows to stay reduced.
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar f = basis_[i][lead];
    if (f == 0) {
      continue;
    }
    for (std::size_t j = lead; j < ambient_; ++j) {
      if (r[j] != 0) {
        basis_[i][j] = field_.sub(basis_[i][j], field_.mul(f, r[j]));
      }
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const auto idx = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, lead);
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(r));
  return true;
}

std::strong_ordering Subspace::operator<=>(const Subspace & other) const
{
  if (auto c = ambient_ <=> other.ambient_; c != 0) {
    return c;
  }
  if (auto c = basis_.size() <=> other.basis_.size(); c != 0) {
    return c;
  }
  return basis_ <=> other.basis_;
}

// ---------------------------------------------------------------------------
// Kernels

namespace
{
std::atomic<std::uint64_t> g_kernel_checks{0};
}  // namespace

Subspace kernel_basis(const FpMatrix & m, const PrimeField & field)
{
  const RowEchelon ech = row_reduce(m, field);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivots) {
    is_pivot[c] = true;
  }
  std::vector<Vec> vectors;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) {
      continue;
    }
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
      v[ech.pivots[i]] = field.neg(ech.reduced(i, f));
    }
    vectors.push_back(std::move(v));
  }
  Subspace kernel = Subspace::span(cols, vectors, field);

  NILRAD_ENSURE(kernel.dim() + ech.rank() == cols, "rank-nullity violated in kernel_basis");
  for (const Vec & v : kernel.basis()) {
    const Vec image = apply(m, v, field);
    NILRAD_ENSURE(
      std::all_of(image.begin(), image.end(), [](Scalar s) { return s == 0; }),
      "kernel vector not annihilated");
  }
  g_kernel_checks.fetch_add(1, std::memory_order_relaxed);
  return kernel;
}

std::uint64_t kernel_checks_performed() noexcept
{
  return g_kernel_checks.load(std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// Integer linear algebra

namespace
{

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::Internal, "64-bit overflow in integer elimination");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorCode::Internal, "64-bit overflow in integer elimination");
  }
  return r;
}

IntMatrix int_multiply(const IntMatrix & a, const IntMatrix & b)
{
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(out(i, j), checked_mul(a(i, k), b(k, j)), &sum)) {
          throw Error(ErrorCode::Internal, "64-bit overflow in integer product");
        }
        out(i, j) = sum;
      }
    }
  }
  return out;
}

}  // namespace

std::size_t integer_rank(const IntMatrix & input)
{
  // Bareiss fraction-free elimination: every intermediate entry is a minor.
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t rank = 0;
  std::int64_t prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c) == 0) {
      ++pivot;
    }
    if (pivot == rows) {
      continue;
    }
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) {
        std::swap(m(pivot, j), m(rank, j));
      }
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        const std::int64_t num =
          checked_sub(checked_mul(m(rank, c), m(i, j)), checked_mul(m(i, c), m(rank, j)));
        m(i, j) = num / prev;
      }
      m(i, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> power_ranks(const IntMatrix & m)
{
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::InvalidArgument, "power_ranks needs a square matrix");
  }
  const std::size_t n = m.rows();
  std::vector<std::size_t> ranks{n};
  if (n == 0) {
    return ranks;
  }
  IntMatrix power = m;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t r = integer_rank(power);
    ranks.push_back(r);
    if (r == 0) {
      return ranks;
    }
    power = int_multiply(power, m);
  }
  throw Error(ErrorCode::NonNilpotent, "matrix is not nilpotent");
}

}  // namespace nilrad
