#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irrbase/field.hpp"

namespace irrbase {

/// Point code of a vector in GF(q)^d: base-q digits, coordinate 1 most
/// significant. For q a power of two the digits are plain bit fields.
using PointCode = std::uint64_t;

/// q^d, or nullopt when it does not fit in 62 bits.
std::optional<std::uint64_t> checked_power(std::uint64_t q, unsigned d);

PointCode pack(std::span<const Elem> coords, std::uint32_t q);
std::vector<Elem> unpack(PointCode code, std::uint32_t q, unsigned d);

/// A vector of GF(q)^d carried together with its space.
struct PackedVector {
  FieldPtr field;
  unsigned dim = 0;
  PointCode code = 0;

  static PackedVector from_coords(FieldPtr field, std::span<const Elem> coords);
  std::vector<Elem> coords() const { return unpack(code, field->order(), dim); }
  std::string to_string() const;
};

/// Dense row-major matrix over a small finite field.
struct Matrix {
  FieldPtr field;
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<Elem> entries;

  Matrix() = default;
  Matrix(FieldPtr f, unsigned r, unsigned c) : field(std::move(f)), rows(r), cols(c), entries(std::size_t(r) * c, 0) {}

  static Matrix identity(FieldPtr f, unsigned n);
  static Matrix diagonal(FieldPtr f, std::span<const Elem> diag);
  /// Permutation matrix sending e_i to e_{perm[i]} under the row-vector action.
  static Matrix permutation(FieldPtr f, std::span<const unsigned> perm);
  static Matrix from_rows(FieldPtr f, const std::vector<std::vector<Elem>>& rows);

  Elem at(unsigned r, unsigned c) const { return entries[std::size_t(r) * cols + c]; }
  Elem& at(unsigned r, unsigned c) { return entries[std::size_t(r) * cols + c]; }
  bool is_square() const { return rows == cols; }
  bool is_identity() const;

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries && same_field(field, o.field);
  }

  std::string to_string() const;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, Elem s);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);

/// Row vector times matrix: the packed code of v*M.
PointCode mat_vec_apply(const Matrix& m, PointCode v);
PackedVector mat_vec_apply(const Matrix& m, const PackedVector& v);

/// Coordinates of v (x) w with the left factor most significant.
std::vector<Elem> tensor(const Field& f, std::span<const Elem> v, std::span<const Elem> w);

/// Reduced row echelon form with zero rows dropped.
Matrix row_reduce(Matrix m);
unsigned rank(const Matrix& m);

/// Basis (in reduced echelon form) of {v : v*M = 0}.
Matrix left_kernel(const Matrix& m);

/// Subspaces are stored as reduced echelon bases (rows), which makes them
/// canonical and directly comparable.
Matrix subspace_intersection(const Matrix& u, const Matrix& w);
Matrix subspace_sum(const Matrix& u, const Matrix& w);
bool subspace_contains(const Matrix& basis, std::span<const Elem> v);

}  // namespace irrbase
