#include "asmtree/natural.hpp"

#include <stdexcept>

namespace asmtree {

Natural::Natural(const Backend& v) : value_(v) {
  if (v < 0) throw std::domain_error("Natural: negative value");
}

Natural Natural::parse(std::string_view decimal) {
  if (decimal.empty()) throw std::invalid_argument("Natural: empty string");
  for (char c : decimal) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("Natural: not a decimal integer: " + std::string(decimal));
    }
  }
  return Natural(Backend(std::string(decimal)));
}

Natural& Natural::operator-=(const Natural& o) {
  if (o.value_ > value_) throw std::domain_error("Natural: subtraction underflow");
  value_ -= o.value_;
  return *this;
}

bool Natural::divisible_by(const Natural& divisor) const {
  if (divisor.is_zero()) return false;
  return Backend(value_ % divisor.value_).is_zero();
}

Natural Natural::divide_exact(const Natural& divisor) const {
  if (!divisible_by(divisor)) {
    throw std::domain_error("Natural: " + str() + " not divisible by " + divisor.str());
  }
  return Natural(Backend(value_ / divisor.value_));
}

}  // namespace asmtree
