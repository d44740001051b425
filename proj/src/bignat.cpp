#include "symbal/bignat.hpp"

#include <cmath>
#include <limits>

#include "symbal/errors.hpp"

namespace symbal {

BigNat::BigNat(std::uint64_t v) {
  // mpz_class has no portable uint64 constructor; go through two halves.
  value_ = static_cast<unsigned long>(v >> 32);
  value_ <<= 32;
  value_ += static_cast<unsigned long>(v & 0xffffffffu);
}

BigNat BigNat::from_int(const BigInt& v) {
  if (sgn(v) < 0) throw DomainError("BigNat: negative value " + v.get_str());
  return BigNat(v);
}

BigNat BigNat::from_string(const std::string& decimal) {
  BigInt v;
  if (decimal.empty() || v.set_str(decimal, 10) != 0) {
    throw DomainError("BigNat: not a decimal integer: '" + decimal + "'");
  }
  return from_int(v);
}

BigNat BigNat::pow(std::uint64_t base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned long>::max()) {
    throw DomainError("BigNat::pow: exponent too large");
  }
  BigInt b = BigNat(base).value_;
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return BigNat(r);
}

BigNat BigNat::factorial(std::uint64_t n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return BigNat(r);
}

BigNat& BigNat::operator+=(const BigNat& rhs) {
  value_ += rhs.value_;
  return *this;
}

BigNat& BigNat::operator*=(const BigNat& rhs) {
  value_ *= rhs.value_;
  return *this;
}

BigNat BigNat::checked_sub(const BigNat& rhs) const {
  if (rhs > *this) {
    throw DomainError("BigNat: " + rhs.to_string() + " > " + to_string() + " in subtraction");
  }
  return BigNat(BigInt(value_ - rhs.value_));
}

bool BigNat::divisible_by(const BigNat& divisor) const {
  if (divisor.is_zero()) return false;
  return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

BigNat BigNat::exact_div(const BigNat& divisor) const {
  if (!divisible_by(divisor)) {
    throw DomainError("BigNat: " + divisor.to_string() + " does not divide " + to_string());
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return BigNat(q);
}

std::uint64_t BigNat::mod(std::uint64_t m) const {
  if (m == 0) throw DomainError("BigNat::mod: zero modulus");
  const BigInt r = value_ % BigNat(m).value_;
  return BigNat(r).to_u64();
}

bool BigNat::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw DomainError("BigNat: value exceeds 64 bits");
  const BigInt hi = value_ >> 32;
  const BigInt lo = value_ - (hi << 32);
  return (static_cast<std::uint64_t>(hi.get_ui()) << 32) | lo.get_ui();
}

long double BigNat::to_long_double() const {
  // mpz_get_d truncates to 53 bits; reassemble from the top 64 bits instead.
  const std::size_t bits = bit_length();
  if (bits <= 64) return static_cast<long double>(to_u64());
  const std::size_t shift = bits - 64;
  const BigNat top(BigInt(value_ >> static_cast<mp_bitcnt_t>(shift)));
  return std::ldexp(static_cast<long double>(top.to_u64()), static_cast<int>(shift));
}

std::size_t BigNat::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(value_.get_mpz_t(), 2);
}

}  // namespace symbal
