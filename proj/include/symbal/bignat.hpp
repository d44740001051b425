#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace symbal {

/// Signed arbitrary-precision integer (Walsh values, signed sums, deficits).
using BigInt = mpz_class;

/// Arbitrary-precision non-negative integer.
///
/// Closed under addition and multiplication. Division is only offered in
/// its exact form: dividing by a non-divisor throws DomainError, as does
/// any subtraction that would leave the naturals.
class BigNat {
 public:
  BigNat() = default;
  BigNat(std::uint64_t v);  // NOLINT: implicit, mirrors integer literals

  /// Throws DomainError if v < 0.
  static BigNat from_int(const BigInt& v);
  static BigNat from_string(const std::string& decimal);

  static BigNat pow(std::uint64_t base, std::uint64_t exponent);
  static BigNat pow2(std::uint64_t exponent) { return pow(2, exponent); }
  static BigNat factorial(std::uint64_t n);

  BigNat& operator+=(const BigNat& rhs);
  BigNat& operator*=(const BigNat& rhs);

  friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
  friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }

  /// this - rhs; throws DomainError when rhs > this.
  BigNat checked_sub(const BigNat& rhs) const;

  /// this / divisor; throws DomainError when divisor is zero or does not divide.
  BigNat exact_div(const BigNat& divisor) const;
  bool divisible_by(const BigNat& divisor) const;

  std::uint64_t mod(std::uint64_t m) const;
  bool is_zero() const { return sgn(value_) == 0; }
  bool fits_u64() const;
  /// Throws DomainError when the value does not fit.
  std::uint64_t to_u64() const;
  long double to_long_double() const;
  std::size_t bit_length() const;

  BigInt to_int() const { return value_; }
  const BigInt& value() const { return value_; }
  std::string to_string() const { return value_.get_str(); }

  friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.value_; }

 private:
  explicit BigNat(BigInt v) : value_(std::move(v)) {}
  BigInt value_{0};
};

}  // namespace symbal
