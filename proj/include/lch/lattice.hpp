// Copyright 2026 The lch Authors
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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lch/rational.hpp"

namespace lch {

/// Integer vector with a fixed ambient dimension.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : entries_(dim, Integer(0)) {}
  explicit LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}
  LatticeVector(std::initializer_list<long> entries);

  std::size_t dim() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_.at(i); }
  Integer& operator[](std::size_t i) { return entries_.at(i); }
  const std::vector<Integer>& entries() const { return entries_; }

  /// gcd of the absolute values of the entries; 0 for the zero vector.
  Integer content() const;
  bool is_primitive() const { return content() == 1; }
  bool is_zero() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ < b.entries_;
  }

  std::string str() const;

 private:
  std::vector<Integer> entries_;
};

using RationalVector = std::vector<Rational>;

RationalVector to_rational(const LatticeVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(const LatticeVector& a, const RationalVector& b);

/// Scale a nonzero rational vector to the unique primitive integer vector
/// pointing in the same direction.
LatticeVector primitive_direction(const RationalVector& v);

/// Dense rows x cols matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix from_lattice_rows(const std::vector<LatticeVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_.at(r * cols_ + c); }
  const Rational& at(std::size_t r, std::size_t c) const { return data_.at(r * cols_ + c); }
  RationalVector row(std::size_t r) const;

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {x : M x = 0}.
  std::vector<RationalVector> nullspace() const;
  /// Some solution of M x = b, or nullopt when inconsistent.
  std::optional<RationalVector> solve(const RationalVector& b) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using IntegerMatrix = std::vector<std::vector<Integer>>;

struct SmithResult {
  /// Elementary divisors d1 | d2 | ..., min(rows, cols) of them, zeros last.
  std::vector<Integer> divisors;
  std::size_t rank = 0;
};

/// Thrown for mismatched dimensions and other structural input errors.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

SmithResult smith_normal_form(const IntegerMatrix& m);

/// True iff the vectors are independent and generate the full lattice of
/// integer points in their real span.
bool is_lattice_basis_of_span(const std::vector<LatticeVector>& vectors);

struct RationalSubgroup {
  enum class Kind { Discrete, Dense };
  Kind kind = Kind::Discrete;
  /// Positive generator g with subgroup gZ; empty for the trivial group.
  std::optional<Rational> generator;
};

RationalSubgroup subgroup_of_rationals(const std::vector<Rational>& generators);

}  // namespace lch
