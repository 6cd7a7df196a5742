#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "core/matrix.hpp"

namespace tropica {

/// Finite family of same-dimension vectors over max-plus or max-times,
/// generating a semimodule by ⊕-combinations.
class PointSet {
 public:
  PointSet(Semiring sr, std::size_t dim, std::vector<Vector> points);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const Semiring& semiring() const { return sr_; }
  const Vector& point(std::size_t i) const { return points_[i]; }
  const std::vector<Vector>& points() const { return points_; }
  bool has_zero_point() const { return has_zero_; }

 private:
  Semiring sr_;
  std::size_t dim_;
  std::vector<Vector> points_;
  bool has_zero_;
};

/// Indices j with y[j] ≠ 0̄.
std::vector<std::size_t> support(const Vector& y);

/// u ≤ⱼ v ⇔ uⱼ ≠ 0̄, vⱼ ≠ 0̄ and u/uⱼ ≤ v/vⱼ componentwise in natural order.
bool leq_j(const Vector& u, const Vector& v, std::size_t j);

/// Scales v so its ⊕-maximal coordinate is 1̄. Throws on the all-0̄ vector.
Vector normalize_point(const Vector& v);

struct Combination {
  bool member = false;
  /// y = ⊕ terms[k].second ⊗ S[terms[k].first], valid when member.
  std::vector<std::pair<std::size_t, Value>> terms;
};

/// Membership of y in the semimodule generated by S: y is a combination iff
/// each j ∈ supp(y) has some generator with xˡ ≤ⱼ y; returns the witnessing
/// combination when it exists.
Combination is_combination(const Vector& y, const PointSet& s);

struct ExtremalsReport {
  /// Representatives (smallest input index) of the extremal classes, ascending.
  std::vector<std::size_t> extremal;
  /// Everything else: non-extremal representatives plus proportional duplicates.
  std::vector<std::size_t> redundant;
  /// Per extremal, the coordinates j at which it is ≤ⱼ-minimal.
  std::vector<std::vector<std::size_t>> witness;
};

/// Extremal detection by pairwise ≤ⱼ-minimality over normalized,
/// deduplicated points; O(k²·n) comparisons per coordinate.
ExtremalsReport extremals_naive(const PointSet& s);

/// Same report; dim-3 inputs use the sort-and-sweep 2-D partial-minima
/// reduction (O(k log k)), other dimensions delegate to extremals_naive.
ExtremalsReport extremals_partial_minima(const PointSet& s);

/// The normalized extremals; every input point is a combination of them and
/// no proper subset generates the same semimodule.
PointSet weak_basis(const PointSet& s);

/// Two-sided max-plus affine form comparison:
/// max(a₁+x₁,…,aₙ+xₙ,aₙ₊₁) = max(b₁+x₁,…,bₙ+xₙ,bₙ₊₁).
/// lhs/rhs carry the n coefficients plus the trailing constant.
/// Throws DegenerateHyperplane when the two sides are identical.
bool hyperplane_member(const Vector& x, const std::vector<Value>& lhs,
                       const std::vector<Value>& rhs);

}  // namespace tropica
