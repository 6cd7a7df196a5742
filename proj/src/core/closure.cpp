#include "core/closure.hpp"

#include <string>

#include "core/error.hpp"

namespace tropica {

namespace {

constexpr double kIterTol = 1e-12;

void require_square(const Matrix& a) {
  if (!a.square()) fail(Errc::InvalidArgument, "closure needs a square matrix");
}

void require_conformal(const Matrix& a, const Vector& b) {
  require_square(a);
  if (a.semiring() != b.semiring())
    fail(Errc::SemiringMismatch, "matrix and right-hand side use different semirings");
  if (b.len() != a.rows())
    fail(Errc::DimensionMismatch, "right-hand side length does not match matrix");
}

bool state_equal(const Vector& a, const Vector& b, bool float_mode) {
  if (!float_mode) return a == b;
  for (std::size_t i = 0; i < a.len(); ++i)
    if (!approx_equal(a.at(i), b.at(i), kIterTol)) return false;
  return true;
}

}  // namespace

Algorithm algorithm_from_name(std::string_view name) {
  if (name == "gauss") return Algorithm::Gauss;
  if (name == "escalator") return Algorithm::Escalator;
  if (name == "jacobi") return Algorithm::Jacobi;
  if (name == "gauss-seidel") return Algorithm::GaussSeidel;
  if (name == "triangular") return Algorithm::Triangular;
  if (name == "auto") return Algorithm::Auto;
  fail(Errc::Parse, "unknown algorithm '" + std::string(name) + "'");
}

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Gauss:
      return "gauss";
    case Algorithm::Escalator:
      return "escalator";
    case Algorithm::Jacobi:
      return "jacobi";
    case Algorithm::GaussSeidel:
      return "gauss-seidel";
    case Algorithm::Triangular:
      return "triangular";
    case Algorithm::Auto:
      return "auto";
  }
  return "?";
}

Matrix closure_gauss(const Matrix& a) {
  require_square(a);
  const Semiring& sr = a.semiring();
  const std::size_t n = a.rows();
  Matrix m = a;
  std::vector<Value> rowk(n), colk(n);
  for (std::size_t k = 0; k < n; ++k) {
    Value s = sr.star(m.at(k, k));
    // row/column k are snapshotted so every update reads the pre-pivot state
    for (std::size_t j = 0; j < n; ++j) rowk[j] = sr.mul(s, m.at(k, j));
    for (std::size_t i = 0; i < n; ++i) colk[i] = m.at(i, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (colk[i] == sr.zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        m.at(i, j) = sr.add(m.at(i, j), sr.mul(colk[i], rowk[j]));
    }
  }
  return mat_add(m, Matrix::identity(sr, n));
}

Matrix closure_escalator(const Matrix& a) {
  require_square(a);
  const Semiring& sr = a.semiring();
  const std::size_t n = a.rows();
  // closure of the current (k+1)x(k+1) leading principal submatrix
  Matrix c(sr, 1, 1);
  c.at(0, 0) = sr.star(a.at(0, 0));
  for (std::size_t k = 1; k < n; ++k) {
    // borders of the submatrix being adjoined
    std::vector<Value> u(k), w(k);  // u = C⊗b, w = c⊗C
    Value d = a.at(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      Value acc = sr.zero();
      for (std::size_t j = 0; j < k; ++j) acc = sr.add(acc, sr.mul(c.at(i, j), a.at(j, k)));
      u[i] = acc;
    }
    for (std::size_t j = 0; j < k; ++j) {
      Value acc = sr.zero();
      for (std::size_t i = 0; i < k; ++i) acc = sr.add(acc, sr.mul(a.at(k, i), c.at(i, j)));
      w[j] = acc;
    }
    Value reach = d;
    for (std::size_t i = 0; i < k; ++i) reach = sr.add(reach, sr.mul(a.at(k, i), u[i]));
    Value s = sr.star(reach);
    Matrix next(sr, k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        next.at(i, j) = sr.add(c.at(i, j), sr.mul(u[i], sr.mul(s, w[j])));
    for (std::size_t i = 0; i < k; ++i) next.at(i, k) = sr.mul(u[i], s);
    for (std::size_t j = 0; j < k; ++j) next.at(k, j) = sr.mul(s, w[j]);
    next.at(k, k) = s;
    c = std::move(next);
  }
  return c;
}

bool is_upper_triangular(const Matrix& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (a.at(i, j) != a.semiring().zero()) return false;
  return true;
}

bool is_lower_triangular(const Matrix& a) {
  if (!a.square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a.at(i, j) != a.semiring().zero()) return false;
  return true;
}

namespace {

// back-substitution closure for an upper-triangular matrix
Matrix upper_closure(const Matrix& a) {
  const Semiring& sr = a.semiring();
  const std::size_t n = a.rows();
  std::vector<Value> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = sr.star(a.at(i, i));
  Matrix r(sr, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    r.at(j, j) = diag[j];
    for (std::size_t i1 = j; i1-- > 0;) {
      Value acc = sr.zero();
      for (std::size_t k = i1 + 1; k <= j; ++k)
        acc = sr.add(acc, sr.mul(a.at(i1, k), r.at(k, j)));
      r.at(i1, j) = sr.mul(diag[i1], acc);
    }
  }
  return r;
}

}  // namespace

Matrix closure_triangular(const Matrix& a) {
  require_square(a);
  if (is_upper_triangular(a)) return upper_closure(a);
  if (is_lower_triangular(a)) return upper_closure(a.transpose()).transpose();
  fail(Errc::NotTriangular, "matrix is neither upper nor lower triangular");
}

Vector solve_jacobi(const Matrix& a, const Vector& b) {
  require_conformal(a, b);
  const bool float_mode = a.has_real() || b.has_real();
  const std::size_t n = a.rows();
  Vector x = b;
  for (std::size_t sweep = 0; sweep <= n; ++sweep) {
    Vector next = vec_add(mat_vec(a, x), b);
    if (state_equal(next, x, float_mode)) return next;
    x = std::move(next);
  }
  fail(Errc::NotConverged, "no fixpoint after " + std::to_string(n + 1) + " sweeps");
}

Vector solve_gauss_seidel(const Matrix& a, const Vector& b) {
  require_conformal(a, b);
  const Semiring& sr = a.semiring();
  const bool float_mode = a.has_real() || b.has_real();
  const std::size_t n = a.rows();
  Vector x = b;
  for (std::size_t sweep = 0; sweep <= n; ++sweep) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      Value acc = b.at(i);
      for (std::size_t j = 0; j < n; ++j) acc = sr.add(acc, sr.mul(a.at(i, j), x.at(j)));
      if (!(float_mode ? approx_equal(acc, x.at(i), kIterTol) : acc == x.at(i))) {
        x.at(i) = acc;
        changed = true;
      }
    }
    if (!changed) return x;
  }
  fail(Errc::NotConverged, "no fixpoint after " + std::to_string(n + 1) + " sweeps");
}

Matrix closure(const Matrix& a, Algorithm alg) {
  switch (alg) {
    case Algorithm::Gauss:
      return closure_gauss(a);
    case Algorithm::Escalator:
      return closure_escalator(a);
    case Algorithm::Triangular:
      return closure_triangular(a);
    case Algorithm::Auto:
      if (is_upper_triangular(a) || is_lower_triangular(a)) return closure_triangular(a);
      return closure_gauss(a);
    case Algorithm::Jacobi:
    case Algorithm::GaussSeidel: {
      require_square(a);
      const std::size_t n = a.rows();
      Matrix r(a.semiring(), n, n);
      for (std::size_t j = 0; j < n; ++j) {
        Vector e = Vector::unit(a.semiring(), n, j);
        Vector col = alg == Algorithm::Jacobi ? solve_jacobi(a, e) : solve_gauss_seidel(a, e);
        for (std::size_t i = 0; i < n; ++i) r.at(i, j) = col.at(i);
      }
      return r;
    }
  }
  fail(Errc::Internal, "unreachable");
}

Vector solve_bellman(const Matrix& a, const Vector& b, Algorithm alg) {
  require_conformal(a, b);
  Vector x = b;
  switch (alg) {
    case Algorithm::Jacobi:
      x = solve_jacobi(a, b);
      break;
    case Algorithm::GaussSeidel:
      x = solve_gauss_seidel(a, b);
      break;
    default:
      x = mat_vec(closure(a, alg), b);
      break;
  }
  const bool float_mode = a.has_real() || b.has_real();
  Vector residual = vec_add(mat_vec(a, x), b);
  if (!state_equal(residual, x, float_mode))
    fail(Errc::ResidualCheck, "solution does not satisfy x = A⊗x ⊕ b");
  return x;
}

}  // namespace tropica
