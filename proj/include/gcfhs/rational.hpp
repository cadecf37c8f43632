#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gcfhs {

/// Arbitrary-precision reduced fraction. Every bound comparison goes through
/// this type, so no floating point enters a verdict.
class ExactRational {
 public:
  using Integer = boost::multiprecision::cpp_int;

  ExactRational() = default;
  ExactRational(std::int64_t value) : value_(value) {}  // NOLINT: implicit by design of arithmetic use
  ExactRational(const Integer& num, const Integer& den);
  static ExactRational of(std::int64_t num, std::int64_t den) {
    return ExactRational(Integer(num), Integer(den));
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;
  /// Always "num/den", used by serialized reports.
  std::string to_fraction_string() const;

  /// Smallest integer not less than the value.
  Integer ceil() const;

  friend ExactRational operator+(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.value_ + b.value_);
  }
  friend ExactRational operator-(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.value_ - b.value_);
  }
  friend ExactRational operator*(const ExactRational& a, const ExactRational& b) {
    return ExactRational(a.value_ * b.value_);
  }
  friend ExactRational operator/(const ExactRational& a, const ExactRational& b);

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a,
                                          const ExactRational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit ExactRational(Value v) : value_(std::move(v)) {}

  Value value_{0};
};

/// p^e for a possibly negative exponent, exactly.
ExactRational rational_pow(std::int64_t p, std::int64_t e);

}  // namespace gcfhs
