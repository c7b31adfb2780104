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

#ifndef NILRAD_EXACT_HPP_
#define NILRAD_EXACT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nilrad/error.hpp"

namespace nilrad
{

using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

bool is_prime(std::uint64_t value);

/// Smallest prime >= at_least.
std::uint32_t next_prime(std::uint32_t at_least);

/// The prime field F_p. Elements are canonical residues in [0, p).
class PrimeField
{
public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept
  {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= p_ ? s - p_ : s);
  }
  Scalar sub(Scalar a, Scalar b) const noexcept
  {
    return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + p_ - b);
  }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept
  {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
  }
  Scalar pow(Scalar base, std::uint64_t exp) const noexcept;
  /// Throws InvalidArgument on zero.
  Scalar inv(Scalar a) const;
  Scalar from_int(std::int64_t value) const noexcept;
  /// Symmetric representative in (-p/2, p/2], used for display.
  std::int64_t to_signed(Scalar a) const noexcept;

  bool operator==(const PrimeField & other) const noexcept = default;

private:
  std::uint32_t p_;
};

/// Dense row-major matrix. Used over F_p (Scalar) and over the integers
/// (std::int64_t).
template<class T>
class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), data_(rows * cols, T{})
  {
  }
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
  : rows_(rows), cols_(cols), data_(std::move(data))
  {
    NILRAD_ENSURE(data_.size() == rows_ * cols_, "matrix data size mismatch");
  }

  static Matrix identity(std::size_t n)
  {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = T{1};
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T & operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T & operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  T & at(std::size_t r, std::size_t c)
  {
    check(r, c);
    return (*this)(r, c);
  }
  const T & at(std::size_t r, std::size_t c) const
  {
    check(r, c);
    return (*this)(r, c);
  }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<T> & data() const noexcept { return data_; }

  bool is_zero() const
  {
    for (const T & v : data_) {
      if (v != T{}) {
        return false;
      }
    }
    return true;
  }

  bool operator==(const Matrix & other) const = default;

private:
  void check(std::size_t r, std::size_t c) const
  {
    if (r >= rows_ || c >= cols_) {
      throw Error(ErrorCode::InvalidArgument, "matrix index out of bounds");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using FpMatrix = Matrix<Scalar>;
using IntMatrix = Matrix<std::int64_t>;

FpMatrix multiply(const FpMatrix & a, const FpMatrix & b, const PrimeField & field);
FpMatrix subtract(const FpMatrix & a, const FpMatrix & b, const PrimeField & field);
/// [a, b] = ab - ba.
FpMatrix commutator(const FpMatrix & a, const FpMatrix & b, const PrimeField & field);
FpMatrix matrix_power(const FpMatrix & m, unsigned k, const PrimeField & field);
FpMatrix reduce(const IntMatrix & m, const PrimeField & field);
Vec apply(const FpMatrix & m, std::span<const Scalar> v, const PrimeField & field);

struct RowEchelon
{
  FpMatrix reduced;                  ///< same shape as the input
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

RowEchelon row_reduce(FpMatrix m, const PrimeField & field);
/// Reduced row-echelon form, same shape as the input (zero rows at the bottom).
FpMatrix rref(const FpMatrix & m, const PrimeField & field);
std::size_t rank(const FpMatrix & m, const PrimeField & field);

/// A linear subspace of F_p^ambient stored by its canonical basis: the nonzero
/// rows of the reduced row-echelon form. Two subspaces are equal iff their
/// canonical bases are equal, which is what makes them usable as set keys.
class Subspace
{
public:
  /// The zero subspace of F_2^0; a placeholder until assigned.
  Subspace() : Subspace(0, PrimeField(2)) {}
  Subspace(std::size_t ambient, const PrimeField & field);

  static Subspace span(std::size_t ambient, std::span<const Vec> vectors, const PrimeField & field);
  static Subspace whole(std::size_t ambient, const PrimeField & field);

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<Vec> & basis() const noexcept { return basis_; }
  const std::vector<std::size_t> & pivots() const noexcept { return pivots_; }
  const PrimeField & field() const noexcept { return field_; }

  /// Residue of v after elimination against the basis; zero iff v is contained.
  Vec residue(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace & other) const;
  Subspace join(const Subspace & other) const;
  /// Extends this subspace by v; returns false if v was already contained.
  bool insert(std::span<const Scalar> v);

  bool operator==(const Subspace & other) const
  {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }
  std::strong_ordering operator<=>(const Subspace & other) const;

private:
  std::size_t ambient_;
  PrimeField field_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of the right null space of m. Every call checks
/// rank-nullity and that m annihilates each returned vector.
Subspace kernel_basis(const FpMatrix & m, const PrimeField & field);

/// Number of kernel_basis calls whose consistency checks ran (and passed).
std::uint64_t kernel_checks_performed() noexcept;

/// Exact integer rank (fraction-free elimination). Throws Internal on
/// intermediate overflow of 64-bit arithmetic.
std::size_t integer_rank(const IntMatrix & m);

/// rank(m^0), rank(m^1), ... ending with the first zero rank, over the integers.
std::vector<std::size_t> power_ranks(const IntMatrix & m);

}  // namespace nilrad

#endif  // NILRAD_EXACT_HPP_
