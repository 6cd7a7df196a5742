#include "core/value.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "core/error.hpp"

namespace tropica {

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v, const char* ctx) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    fail(Errc::Overflow, std::string("integer overflow in ") + ctx);
  return static_cast<std::int64_t>(v);
}

i128 iabs(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Value make_exact(i128 num, i128 den, const char* ctx) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) den = 1;
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den == 1) return Value::integer(narrow(num, ctx));
  Value v = Value::ratio(narrow(num, ctx), narrow(den, ctx));
  return v;
}

int cmp_long_double(long double a, long double b) { return a < b ? -1 : (a > b ? 1 : 0); }

long double exact_ld(const Value& v) {
  return static_cast<long double>(v.num()) / static_cast<long double>(v.den());
}

}  // namespace

Value Value::neg_inf() {
  Value v;
  v.kind_ = Kind::NegInf;
  return v;
}

Value Value::pos_inf() {
  Value v;
  v.kind_ = Kind::PosInf;
  return v;
}

Value Value::integer(std::int64_t x) {
  Value v;
  v.kind_ = Kind::Int;
  v.num_ = x;
  v.den_ = 1;
  return v;
}

Value Value::ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(Errc::DivisionByZero, "zero denominator");
  if (den < 0) {
    // callers may pass un-normalized pairs; route through make_exact
    return make_exact(static_cast<i128>(num), static_cast<i128>(den), "ratio");
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (den == 1) return integer(num);
  Value v;
  v.kind_ = Kind::Rat;
  v.num_ = num;
  v.den_ = den;
  return v;
}

Value Value::real(double x) {
  Value v;
  v.kind_ = Kind::Real;
  v.real_ = x;
  return v;
}

Value Value::boolean(bool b) {
  Value v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}

double Value::to_double() const {
  switch (kind_) {
    case Kind::NegInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::PosInf:
      return std::numeric_limits<double>::infinity();
    case Kind::Int:
    case Kind::Rat:
      return static_cast<double>(num_) / static_cast<double>(den_);
    case Kind::Real:
      return real_;
    case Kind::Bool:
      return bool_ ? 1.0 : 0.0;
  }
  return 0.0;
}

bool Value::operator==(const Value& o) const {
  if ((kind_ == Kind::Bool) != (o.kind_ == Kind::Bool)) return false;
  if (kind_ == Kind::Bool) return bool_ == o.bool_;
  if ((kind_ == Kind::NegInf) != (o.kind_ == Kind::NegInf)) return false;
  if ((kind_ == Kind::PosInf) != (o.kind_ == Kind::PosInf)) return false;
  if (kind_ == Kind::NegInf || kind_ == Kind::PosInf) return true;
  return compare(*this, o) == 0;
}

int Value::compare(const Value& a, const Value& b) {
  if (a.kind_ == Kind::Bool || b.kind_ == Kind::Bool) {
    if (a.kind_ != Kind::Bool || b.kind_ != Kind::Bool)
      fail(Errc::InvalidArgument, "cannot compare boolean with number");
    return (a.bool_ ? 1 : 0) - (b.bool_ ? 1 : 0);
  }
  if (a.kind_ == Kind::NegInf) return b.kind_ == Kind::NegInf ? 0 : -1;
  if (b.kind_ == Kind::NegInf) return 1;
  if (a.kind_ == Kind::PosInf) return b.kind_ == Kind::PosInf ? 0 : 1;
  if (b.kind_ == Kind::PosInf) return -1;
  if (a.kind_ != Kind::Real && b.kind_ != Kind::Real) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
  }
  long double lhs = a.kind_ == Kind::Real ? a.real_ : exact_ld(a);
  long double rhs = b.kind_ == Kind::Real ? b.real_ : exact_ld(b);
  return cmp_long_double(lhs, rhs);
}

Value Value::sum(const Value& a, const Value& b) {
  if (!a.is_finite_number() || !b.is_finite_number())
    fail(Errc::InvalidArgument, "sum of non-finite values");
  if (a.kind_ == Kind::Real || b.kind_ == Kind::Real)
    return real(a.to_double() + b.to_double());
  i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  i128 den = static_cast<i128>(a.den_) * b.den_;
  return make_exact(num, den, "sum");
}

Value Value::difference(const Value& a, const Value& b) {
  if (!a.is_finite_number() || !b.is_finite_number())
    fail(Errc::InvalidArgument, "difference of non-finite values");
  if (a.kind_ == Kind::Real || b.kind_ == Kind::Real)
    return real(a.to_double() - b.to_double());
  i128 num = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
  i128 den = static_cast<i128>(a.den_) * b.den_;
  return make_exact(num, den, "difference");
}

Value Value::product(const Value& a, const Value& b) {
  if (!a.is_finite_number() || !b.is_finite_number())
    fail(Errc::InvalidArgument, "product of non-finite values");
  if (a.kind_ == Kind::Real || b.kind_ == Kind::Real)
    return real(a.to_double() * b.to_double());
  i128 num = static_cast<i128>(a.num_) * b.num_;
  i128 den = static_cast<i128>(a.den_) * b.den_;
  return make_exact(num, den, "product");
}

Value Value::quotient(const Value& a, const Value& b) {
  if (!a.is_finite_number() || !b.is_finite_number())
    fail(Errc::InvalidArgument, "quotient of non-finite values");
  if (a.kind_ == Kind::Real || b.kind_ == Kind::Real) {
    double d = b.to_double();
    if (d == 0.0) fail(Errc::DivisionByZero, "division by zero");
    return real(a.to_double() / d);
  }
  if (b.num_ == 0) fail(Errc::DivisionByZero, "division by zero");
  i128 num = static_cast<i128>(a.num_) * b.den_;
  i128 den = static_cast<i128>(a.den_) * b.num_;
  return make_exact(num, den, "quotient");
}

std::string Value::str() const {
  switch (kind_) {
    case Kind::NegInf:
      return "-inf";
    case Kind::PosInf:
      return "inf";
    case Kind::Int:
      return std::to_string(num_);
    case Kind::Rat:
      return std::to_string(num_) + "/" + std::to_string(den_);
    case Kind::Real: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.15g", real_);
      return buf;
    }
    case Kind::Bool:
      return bool_ ? "true" : "false";
  }
  return {};
}

bool approx_equal(const Value& a, const Value& b, double tol) {
  if (a == b) return true;
  if (a.is_real() || b.is_real()) {
    if (!a.is_finite_number() || !b.is_finite_number()) return false;
    return std::fabs(a.to_double() - b.to_double()) <= tol;
  }
  return false;
}

}  // namespace tropica
