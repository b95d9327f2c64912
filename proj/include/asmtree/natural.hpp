#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace asmtree {

/// Arbitrary-precision nonnegative integer. All counts in the library are
/// carried in this type; subtraction that would go negative throws.
class Natural {
public:
  using Backend = boost::multiprecision::cpp_int;

  Natural() = default;
  Natural(std::uint64_t v) : value_(v) {}  // NOLINT(implicit)
  explicit Natural(const Backend& v);

  static Natural parse(std::string_view decimal);

  Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
  Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }
  Natural& operator-=(const Natural& o);

  friend Natural operator+(Natural a, const Natural& b) { return a += b; }
  friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
  friend Natural operator-(Natural a, const Natural& b) { return a -= b; }

  /// Throws std::domain_error unless `divisor` divides *this exactly.
  Natural divide_exact(const Natural& divisor) const;
  bool divisible_by(const Natural& divisor) const;

  friend bool operator==(const Natural&, const Natural&) = default;
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return a.value_ < b.value_   ? std::strong_ordering::less
           : a.value_ > b.value_ ? std::strong_ordering::greater
                                 : std::strong_ordering::equal;
  }

  bool is_zero() const { return value_.is_zero(); }
  std::string str() const { return value_.str(); }
  const Backend& backend() const { return value_; }

  friend std::ostream& operator<<(std::ostream& os, const Natural& n) {
    return os << n.value_;
  }

private:
  Backend value_{0};
};

}  // namespace asmtree
