#pragma once

#include <cstddef>
#include <vector>

#include "core/matrix.hpp"

namespace tropica {

struct SpectralResult {
  Value lambda;
  std::vector<std::size_t> critical;  // nodes on some cycle of mean λ
  std::vector<Vector> basis;          // eigenvectors, A ⊗ v = λ ⊗ v
};

/// Maximal cycle mean λ(A) over MaxPlus/MaxTimes by the Karp dynamic program
/// on walk lengths 0..n (every node acts as a source). Exact rational in
/// exact mode; MaxTimes roots fall back to double when not perfect powers.
/// Throws NoFiniteCycle when the non-0̄ digraph of A is acyclic.
Value max_cycle_mean(const Matrix& a);

/// Normalizes Ã = λ⁻¹ ⊗ A, computes Ã*, flags critical nodes via
/// (Ã ⊗ Ã*)[i][i] = 1̄ and returns the critical columns of Ã* with
/// proportional duplicates removed.
SpectralResult eig_space(const Matrix& a);

}  // namespace tropica
