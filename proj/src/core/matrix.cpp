#include "core/matrix.hpp"

#include "core/error.hpp"

namespace tropica {

namespace {

void require_same_semiring(const Semiring& a, const Semiring& b) {
  if (a != b)
    fail(Errc::SemiringMismatch, "operands use different semirings (" +
                                     std::string(a.name()) + " vs " + std::string(b.name()) + ")");
}

}  // namespace

Matrix::Matrix(Semiring sr, std::size_t rows, std::size_t cols)
    : sr_(sr), rows_(rows), cols_(cols), v_(rows * cols, sr.zero()) {
  if (rows == 0 || cols == 0) fail(Errc::InvalidArgument, "matrix dimensions must be positive");
}

Matrix Matrix::identity(const Semiring& sr, std::size_t n) {
  Matrix m(sr, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = sr.one();
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector out(sr_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.at(i) = at(i, j);
  return out;
}

Vector Matrix::row(std::size_t i) const {
  Vector out(sr_, cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.at(j) = at(i, j);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(sr_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

bool Matrix::has_real() const {
  for (const Value& x : v_)
    if (x.is_real()) return true;
  return false;
}

void Matrix::require_elements() const {
  for (const Value& x : v_) sr_.require_element(x);
}

bool Matrix::operator==(const Matrix& o) const {
  if (sr_ != o.sr_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t k = 0; k < v_.size(); ++k)
    if (v_[k] != o.v_[k]) return false;
  return true;
}

Vector::Vector(Semiring sr, std::size_t len) : sr_(sr), v_(len, sr.zero()) {
  if (len == 0) fail(Errc::InvalidArgument, "vector length must be positive");
}

Vector::Vector(Semiring sr, std::vector<Value> entries) : sr_(sr), v_(std::move(entries)) {
  if (v_.empty()) fail(Errc::InvalidArgument, "vector length must be positive");
}

Vector Vector::unit(const Semiring& sr, std::size_t len, std::size_t i) {
  Vector out(sr, len);
  out.at(i) = sr.one();
  return out;
}

bool Vector::has_real() const {
  for (const Value& x : v_)
    if (x.is_real()) return true;
  return false;
}

void Vector::require_elements() const {
  for (const Value& x : v_) sr_.require_element(x);
}

bool Vector::operator==(const Vector& o) const {
  if (sr_ != o.sr_ || v_.size() != o.v_.size()) return false;
  for (std::size_t k = 0; k < v_.size(); ++k)
    if (v_[k] != o.v_[k]) return false;
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (a.cols() != b.rows())
    fail(Errc::DimensionMismatch, "matrix product needs " + std::to_string(a.cols()) +
                                      " rows on the right, got " + std::to_string(b.rows()));
  const Semiring& sr = a.semiring();
  Matrix c(sr, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Value acc = sr.zero();
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = sr.add(acc, sr.mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(Errc::DimensionMismatch, "matrix sum needs equal shapes");
  Matrix c(a.semiring(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      c.at(i, j) = a.semiring().add(a.at(i, j), b.at(i, j));
  return c;
}

Vector mat_vec(const Matrix& a, const Vector& x) {
  require_same_semiring(a.semiring(), x.semiring());
  if (a.cols() != x.len())
    fail(Errc::DimensionMismatch, "matrix-vector product dimension mismatch");
  const Semiring& sr = a.semiring();
  Vector y(sr, a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Value acc = sr.zero();
    for (std::size_t k = 0; k < a.cols(); ++k) acc = sr.add(acc, sr.mul(a.at(i, k), x.at(k)));
    y.at(i) = acc;
  }
  return y;
}

Vector vec_add(const Vector& a, const Vector& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (a.len() != b.len()) fail(Errc::DimensionMismatch, "vector sum dimension mismatch");
  Vector c(a.semiring(), a.len());
  for (std::size_t i = 0; i < a.len(); ++i) c.at(i) = a.semiring().add(a.at(i), b.at(i));
  return c;
}

Vector scalar_vec(const Value& c, const Vector& x) {
  Vector y(x.semiring(), x.len());
  for (std::size_t i = 0; i < x.len(); ++i) y.at(i) = x.semiring().mul(c, x.at(i));
  return y;
}

}  // namespace tropica
