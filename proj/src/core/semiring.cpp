#include "core/semiring.hpp"

#include <cmath>

#include "core/error.hpp"

namespace tropica {

Semiring Semiring::plus_times() { return Semiring(SemiringTag::PlusTimes); }
Semiring Semiring::max_plus() { return Semiring(SemiringTag::MaxPlus); }
Semiring Semiring::min_plus() { return Semiring(SemiringTag::MinPlus); }
Semiring Semiring::max_times() { return Semiring(SemiringTag::MaxTimes); }
Semiring Semiring::boolean() { return Semiring(SemiringTag::Boolean); }

Semiring Semiring::max_min(Value lo, Value hi) {
  if (!lo.is_finite_number() || !hi.is_finite_number())
    fail(Errc::InvalidArgument, "max-min bounds must be finite numbers");
  if (Value::compare(lo, hi) >= 0)
    fail(Errc::InvalidArgument, "max-min requires lo < hi");
  Semiring s(SemiringTag::MaxMin);
  s.lo_ = lo;
  s.hi_ = hi;
  return s;
}

Semiring Semiring::from_name(std::string_view name) {
  if (name == "plus-times") return plus_times();
  if (name == "max-plus") return max_plus();
  if (name == "min-plus") return min_plus();
  if (name == "max-times") return max_times();
  if (name == "boolean") return boolean();
  if (name == "max-min")
    fail(Errc::InvalidArgument, "max-min requires explicit lo/hi bounds");
  fail(Errc::Parse, "unknown semiring '" + std::string(name) + "'");
}

Semiring Semiring::from_name(std::string_view name, const Value& lo, const Value& hi) {
  if (name == "max-min") return max_min(lo, hi);
  return from_name(name);
}

std::string_view Semiring::name() const {
  switch (tag_) {
    case SemiringTag::PlusTimes:
      return "plus-times";
    case SemiringTag::MaxPlus:
      return "max-plus";
    case SemiringTag::MinPlus:
      return "min-plus";
    case SemiringTag::MaxTimes:
      return "max-times";
    case SemiringTag::MaxMin:
      return "max-min";
    case SemiringTag::Boolean:
      return "boolean";
  }
  return "?";
}

Value Semiring::zero() const {
  switch (tag_) {
    case SemiringTag::PlusTimes:
      return Value::integer(0);
    case SemiringTag::MaxPlus:
      return Value::neg_inf();
    case SemiringTag::MinPlus:
      return Value::pos_inf();
    case SemiringTag::MaxTimes:
      return Value::integer(0);
    case SemiringTag::MaxMin:
      return lo_;
    case SemiringTag::Boolean:
      return Value::boolean(false);
  }
  return Value();
}

Value Semiring::one() const {
  switch (tag_) {
    case SemiringTag::PlusTimes:
      return Value::integer(1);
    case SemiringTag::MaxPlus:
    case SemiringTag::MinPlus:
      return Value::integer(0);
    case SemiringTag::MaxTimes:
      return Value::integer(1);
    case SemiringTag::MaxMin:
      return hi_;
    case SemiringTag::Boolean:
      return Value::boolean(true);
  }
  return Value();
}

bool Semiring::contains(const Value& v) const {
  switch (tag_) {
    case SemiringTag::PlusTimes:
      return v.is_finite_number();
    case SemiringTag::MaxPlus:
      return v.is_neg_inf() || v.is_finite_number();
    case SemiringTag::MinPlus:
      return v.is_pos_inf() || v.is_finite_number();
    case SemiringTag::MaxTimes:
      return v.is_finite_number() && Value::compare(v, Value::integer(0)) >= 0;
    case SemiringTag::MaxMin:
      return v.is_finite_number() && Value::compare(lo_, v) <= 0 && Value::compare(v, hi_) <= 0;
    case SemiringTag::Boolean:
      return v.is_bool();
  }
  return false;
}

void Semiring::require_element(const Value& v) const {
  if (!contains(v))
    fail(Errc::InvalidArgument,
         "value " + v.str() + " is not in the " + std::string(name()) + " carrier");
}

Value Semiring::add(const Value& a, const Value& b) const {
  switch (tag_) {
    case SemiringTag::PlusTimes:
      return Value::sum(a, b);
    case SemiringTag::MaxPlus:
    case SemiringTag::MaxTimes:
    case SemiringTag::MaxMin:
      return Value::compare(a, b) >= 0 ? a : b;
    case SemiringTag::MinPlus:
      return Value::compare(a, b) <= 0 ? a : b;
    case SemiringTag::Boolean:
      return Value::boolean(a.bool_value() || b.bool_value());
  }
  return Value();
}

Value Semiring::mul(const Value& a, const Value& b) const {
  switch (tag_) {
    case SemiringTag::PlusTimes:
      return Value::product(a, b);
    case SemiringTag::MaxPlus:
      if (a.is_neg_inf() || b.is_neg_inf()) return Value::neg_inf();
      return Value::sum(a, b);
    case SemiringTag::MinPlus:
      if (a.is_pos_inf() || b.is_pos_inf()) return Value::pos_inf();
      return Value::sum(a, b);
    case SemiringTag::MaxTimes:
      return Value::product(a, b);
    case SemiringTag::MaxMin:
      return Value::compare(a, b) <= 0 ? a : b;
    case SemiringTag::Boolean:
      return Value::boolean(a.bool_value() && b.bool_value());
  }
  return Value();
}

Value Semiring::star(const Value& a) const {
  switch (tag_) {
    case SemiringTag::Boolean:
      return Value::boolean(true);
    case SemiringTag::MaxMin:
      return hi_;
    case SemiringTag::MaxPlus:
    case SemiringTag::MinPlus:
    case SemiringTag::MaxTimes: {
      // a* = 1̄ exactly when a ≤ 1̄ in the natural order; unbounded otherwise.
      Value unit = one();
      if (add(a, unit) == unit) return unit;
      fail(Errc::Divergent, "scalar star diverges for " + a.str());
    }
    case SemiringTag::PlusTimes: {
      if (!a.is_finite_number()) fail(Errc::InvalidArgument, "star of non-finite value");
      Value mag = Value::compare(a, Value::integer(0)) < 0
                      ? Value::difference(Value::integer(0), a)
                      : a;
      if (Value::compare(mag, Value::integer(1)) >= 0)
        fail(Errc::Divergent, "geometric series diverges for " + a.str());
      return Value::quotient(one(), Value::difference(one(), a));
    }
  }
  fail(Errc::Internal, "unreachable");
}

bool Semiring::nat_leq(const Value& a, const Value& b) const {
  if (tag_ == SemiringTag::PlusTimes)
    fail(Errc::UnsupportedSemiring, "natural order undefined for plus-times");
  return add(a, b) == b;
}

Value Semiring::divide(const Value& a, const Value& b) const {
  if (tag_ == SemiringTag::MaxMin || tag_ == SemiringTag::Boolean)
    fail(Errc::UnsupportedSemiring,
         "division undefined for " + std::string(name()));
  Value z = zero();
  if (b == z) fail(Errc::DivisionByZero, "division by semiring zero");
  if (a == z) return z;
  switch (tag_) {
    case SemiringTag::MaxPlus:
    case SemiringTag::MinPlus:
      return Value::difference(a, b);
    case SemiringTag::MaxTimes:
    case SemiringTag::PlusTimes:
      return Value::quotient(a, b);
    default:
      fail(Errc::Internal, "unreachable");
  }
}

bool Semiring::operator==(const Semiring& o) const {
  if (tag_ != o.tag_) return false;
  if (tag_ == SemiringTag::MaxMin) return lo_ == o.lo_ && hi_ == o.hi_;
  return true;
}

}  // namespace tropica
