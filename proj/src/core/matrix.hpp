#pragma once

#include <cstddef>
#include <vector>

#include "core/semiring.hpp"
#include "core/value.hpp"

namespace tropica {

class Vector;

/// Dense row-major matrix over one semiring. Entries default to 0̄.
class Matrix {
 public:
  Matrix(Semiring sr, std::size_t rows, std::size_t cols);

  static Matrix identity(const Semiring& sr, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const Semiring& semiring() const { return sr_; }

  Value& at(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
  const Value& at(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Matrix transpose() const;

  /// True when any entry is a double (computation runs in float mode).
  bool has_real() const;

  /// Throws InvalidArgument when an entry is outside the carrier.
  void require_elements() const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  Semiring sr_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Value> v_;
};

class Vector {
 public:
  Vector(Semiring sr, std::size_t len);
  Vector(Semiring sr, std::vector<Value> entries);

  /// 0̄ everywhere except 1̄ at position i.
  static Vector unit(const Semiring& sr, std::size_t len, std::size_t i);

  std::size_t len() const { return v_.size(); }
  const Semiring& semiring() const { return sr_; }

  Value& at(std::size_t i) { return v_[i]; }
  const Value& at(std::size_t i) const { return v_[i]; }
  const std::vector<Value>& entries() const { return v_; }

  bool has_real() const;
  void require_elements() const;

  bool operator==(const Vector& o) const;
  bool operator!=(const Vector& o) const { return !(*this == o); }

 private:
  Semiring sr_;
  std::vector<Value> v_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, const Vector& x);
Vector vec_add(const Vector& a, const Vector& b);
Vector scalar_vec(const Value& c, const Vector& x);

}  // namespace tropica
