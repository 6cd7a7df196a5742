#pragma once

#include <cstdint>
#include <string>

namespace tropica {

/// A scalar carrier element. The two infinities are distinct sentinels (not
/// float infinities) so that exact arithmetic stays exact; finite numbers are
/// either exact (int64, or a normalized int64 rational) or double.
class Value {
 public:
  enum class Kind : std::uint8_t { NegInf, PosInf, Int, Rat, Real, Bool };

  constexpr Value() = default;

  static Value neg_inf();
  static Value pos_inf();
  static Value integer(std::int64_t v);
  /// Normalized rational; collapses to Int when the reduced denominator is 1.
  static Value ratio(std::int64_t num, std::int64_t den);
  static Value real(double v);
  static Value boolean(bool v);

  Kind kind() const { return kind_; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_rat() const { return kind_ == Kind::Rat; }
  bool is_real() const { return kind_ == Kind::Real; }
  bool is_bool() const { return kind_ == Kind::Bool; }
  bool is_finite_number() const {
    return kind_ == Kind::Int || kind_ == Kind::Rat || kind_ == Kind::Real;
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double real_value() const { return real_; }
  bool bool_value() const { return bool_; }

  /// Lossy view: sentinels map to float infinities, bool to 0/1.
  double to_double() const;

  /// Semantic equality: Int(3) == Real(3.0) == Rat(6/2); Bool only equals Bool.
  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }

  /// Three-way numeric order with NegInf < finite < PosInf; Bool comparable
  /// only with Bool (false < true). Throws InvalidArgument on a Bool/number mix.
  static int compare(const Value& a, const Value& b);

  // Exact field arithmetic on finite numbers; a Real operand contaminates the
  // result to Real. Callers handle sentinels.
  static Value sum(const Value& a, const Value& b);
  static Value difference(const Value& a, const Value& b);
  static Value product(const Value& a, const Value& b);
  static Value quotient(const Value& a, const Value& b);

  std::string str() const;

 private:
  Kind kind_ = Kind::Int;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  double real_ = 0.0;
  bool bool_ = false;
};

/// Exact equality, or |a-b| <= tol when either side is Real.
bool approx_equal(const Value& a, const Value& b, double tol);

}  // namespace tropica
