#pragma once

#include "kronbrist/field.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kronbrist {

/// Dense matrix over a FieldSpec. Storage is row-major; entries are always
/// canonical (see Scalar). Values are immutable from the outside except
/// through set().
class Matrix {
 public:
  Matrix() : Matrix(FieldSpec::rationals(), 0, 0) {}
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix zeros(FieldSpec field, std::size_t rows, std::size_t cols) {
    return Matrix(field, rows, cols);
  }
  static Matrix identity(FieldSpec field, std::size_t n);
  /// Row-major integer entries, reduced into the field.
  static Matrix from_ints(FieldSpec field, std::size_t rows, std::size_t cols,
                          std::span<const long long> entries);
  static Matrix from_rows(FieldSpec field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix column(FieldSpec field, const Vector& v);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& value);
  void set(std::size_t r, std::size_t c, long long value);
  bool is_zero_at(std::size_t r, std::size_t c) const;
  bool is_zero() const;

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& src);
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;

  static Matrix hstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t rows);
  static Matrix vstack(const std::vector<Matrix>& parts, FieldSpec field, std::size_t cols);
  static Matrix block_diag(const Matrix& a, const Matrix& b);
  static Matrix kronecker(const Matrix& a, const Matrix& b);

  /// Column-major flattening to a (rows*cols) x 1 column, and its inverse.
  Matrix vec() const;
  static Matrix unvec(const Matrix& column, std::size_t rows, std::size_t cols);

  Vector apply(const Vector& v) const;
  Matrix scaled(const Scalar& s) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix operator-() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

  // Raw storage access for the dense kernels; exactly one of these is used,
  // depending on the field kind.
  std::vector<std::uint32_t>& residues() { return fp_; }
  const std::vector<std::uint32_t>& residues() const { return fp_; }
  std::vector<Rational>& rationals() { return q_; }
  const std::vector<Rational>& rationals() const { return q_; }

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> fp_;
  std::vector<Rational> q_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// Some x with A x = b, free variables set to zero; nullopt if inconsistent.
/// Throws std::invalid_argument when b.size() != A.rows().
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Square and full rank.
bool is_invertible(const Matrix& a);

}  // namespace kronbrist
