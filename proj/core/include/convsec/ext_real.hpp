#pragma once

#include <string>

namespace convsec {

/// A real number or one of the two infinities. Infinity is carried as a tag,
/// never as a floating-point sentinel.
class ExtReal {
 public:
  enum class Kind { finite, pos_inf, neg_inf };

  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : value_(v) {}  // NOLINT: implicit by intent

  static constexpr ExtReal pos_inf() { return ExtReal(Kind::pos_inf); }
  static constexpr ExtReal neg_inf() { return ExtReal(Kind::neg_inf); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::finite; }
  constexpr bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  constexpr bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  /// Finite value; throws std::logic_error when infinite.
  double value() const;

  /// Maps +inf/-inf to the IEEE infinities. Only for output and plotting.
  double to_double() const;

  constexpr ExtReal operator-() const {
    switch (kind_) {
      case Kind::pos_inf: return neg_inf();
      case Kind::neg_inf: return pos_inf();
      default: return ExtReal(-value_);
    }
  }
  constexpr ExtReal operator+(double d) const {
    return is_finite() ? ExtReal(value_ + d) : *this;
  }
  constexpr ExtReal operator-(double d) const { return *this + (-d); }

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::finite || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.kind_ == Kind::neg_inf) return b.kind_ != Kind::neg_inf;
    if (a.kind_ == Kind::pos_inf) return false;
    if (b.kind_ == Kind::pos_inf) return true;
    if (b.kind_ == Kind::neg_inf) return false;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(const ExtReal& a, const ExtReal& b) { return b < a; }
  friend constexpr bool operator<=(const ExtReal& a, const ExtReal& b) { return !(b < a); }
  friend constexpr bool operator>=(const ExtReal& a, const ExtReal& b) { return !(a < b); }

  std::string to_string() const;

 private:
  constexpr explicit ExtReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::finite;
  double value_ = 0.0;
};

/// Open interval with extended-real endpoints.
struct Interval {
  ExtReal lo;
  ExtReal hi;

  bool contains(double t) const { return ExtReal(t) > lo && ExtReal(t) < hi; }
  bool bounded() const { return lo.is_finite() && hi.is_finite(); }
  bool empty() const { return !(lo < hi); }
};

}  // namespace convsec
