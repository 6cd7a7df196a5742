#pragma once

#include <string>
#include <string_view>

#include "core/value.hpp"

namespace tropica {

enum class SemiringTag { PlusTimes, MaxPlus, MinPlus, MaxTimes, MaxMin, Boolean };

/// One of the six supported semirings: carrier semantics, ⊕, ⊗, the two
/// identities, the scalar star and (where defined) natural order and division.
/// MaxMin carries its closed interval [lo, hi]; all other instances are
/// fully determined by the tag.
class Semiring {
 public:
  static Semiring plus_times();
  static Semiring max_plus();
  static Semiring min_plus();
  static Semiring max_times();
  static Semiring max_min(Value lo, Value hi);
  static Semiring boolean();

  /// Accepts "plus-times", "max-plus", "min-plus", "max-times", "boolean".
  /// "max-min" needs bounds; use the three-argument overload.
  static Semiring from_name(std::string_view name);
  static Semiring from_name(std::string_view name, const Value& lo, const Value& hi);

  SemiringTag tag() const { return tag_; }
  std::string_view name() const;
  bool idempotent() const { return tag_ != SemiringTag::PlusTimes; }
  const Value& lo() const { return lo_; }
  const Value& hi() const { return hi_; }

  Value zero() const;
  Value one() const;

  bool contains(const Value& v) const;
  void require_element(const Value& v) const;

  Value add(const Value& a, const Value& b) const;
  Value mul(const Value& a, const Value& b) const;

  /// a* = 1̄ ⊕ a ⊕ a⊗a ⊕ …; throws Divergent when the series does not
  /// stabilize (a > 1̄ in an ordered idempotent instance, |a| ≥ 1 in PlusTimes).
  Value star(const Value& a) const;

  /// Natural order a ≤ b ⇔ a ⊕ b = b. Throws UnsupportedSemiring for PlusTimes.
  bool nat_leq(const Value& a, const Value& b) const;

  /// Unique c with c ⊗ b = a. Throws DivisionByZero for b = 0̄ and
  /// UnsupportedSemiring for MaxMin and Boolean.
  Value divide(const Value& a, const Value& b) const;

  bool operator==(const Semiring& o) const;
  bool operator!=(const Semiring& o) const { return !(*this == o); }

 private:
  explicit Semiring(SemiringTag tag) : tag_(tag) {}

  SemiringTag tag_;
  Value lo_;  // MaxMin only
  Value hi_;
};

}  // namespace tropica
