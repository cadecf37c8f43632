#include "gcfhs/rational.hpp"

#include <stdexcept>

namespace gcfhs {

ExactRational::ExactRational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("ExactRational: zero denominator");
  value_ = Value(num, den);
}

ExactRational operator/(const ExactRational& a, const ExactRational& b) {
  if (b.value_ == 0) throw std::domain_error("ExactRational: division by zero");
  return ExactRational(a.value_ / b.value_);
}

std::string ExactRational::to_string() const {
  if (is_integer()) return numerator().str();
  return to_fraction_string();
}

std::string ExactRational::to_fraction_string() const {
  return numerator().str() + "/" + denominator().str();
}

ExactRational::Integer ExactRational::ceil() const {
  const Integer num = numerator();
  const Integer den = denominator();
  Integer q = num / den;  // truncates toward zero
  if (num % den != 0 && num > 0) ++q;
  return q;
}

ExactRational rational_pow(std::int64_t p, std::int64_t e) {
  ExactRational::Integer v = boost::multiprecision::pow(
      ExactRational::Integer(p), static_cast<unsigned>(e < 0 ? -e : e));
  if (e >= 0) return ExactRational(v, 1);
  return ExactRational(1, v);
}

}  // namespace gcfhs
