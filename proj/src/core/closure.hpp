#pragma once

#include <string_view>

#include "core/matrix.hpp"

namespace tropica {

enum class Algorithm { Gauss, Escalator, Jacobi, GaussSeidel, Triangular, Auto };

Algorithm algorithm_from_name(std::string_view name);
std::string_view algorithm_name(Algorithm a);

/// A* = I ⊕ A ⊕ A² ⊕ … by Gauss-style elimination over the semiring:
/// per pivot k, a[i][j] ⊕= a[i][k] ⊗ (a[k][k])* ⊗ a[k][j], then ⊕ I.
/// Throws Divergent when a pivot star diverges (λ(A) > 1̄).
Matrix closure_gauss(const Matrix& a);

/// Same value, computed by bordering: the closure of each leading principal
/// submatrix is extended one row/column at a time via the block formula.
Matrix closure_escalator(const Matrix& a);

/// Single back-substitution sweep for (upper or lower) triangular matrices,
/// diagonal entries allowed when their stars converge. Throws NotTriangular.
Matrix closure_triangular(const Matrix& a);

bool is_upper_triangular(const Matrix& a);
bool is_lower_triangular(const Matrix& a);

/// Least solution of x = A⊗x ⊕ b by Jacobi iteration from x⁰ = b, capped at
/// n+1 sweeps. Throws NotConverged when no fixpoint appears within the cap.
Vector solve_jacobi(const Matrix& a, const Vector& b);

/// Same iteration consuming already-updated components within a sweep.
Vector solve_gauss_seidel(const Matrix& a, const Vector& b);

/// Dispatch on algorithm; Auto picks Triangular for triangular inputs and
/// Gauss otherwise. Jacobi/GaussSeidel assemble A* column-by-column from
/// solves against the unit vectors.
Matrix closure(const Matrix& a, Algorithm alg);

/// A*⊗b via the configured algorithm, with the Bellman residual
/// r = A⊗r ⊕ b re-checked on the result (ResidualCheck on failure).
Vector solve_bellman(const Matrix& a, const Vector& b, Algorithm alg = Algorithm::Auto);

}  // namespace tropica
