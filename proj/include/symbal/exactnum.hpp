#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "symbal/bignat.hpp"

namespace symbal {

/// Working real type: x87 extended precision, 64 significand bits.
using Real = long double;

static_assert(sizeof(Real) >= 10, "Real must carry at least 64 significand bits");

/// Bit sequence, one byte per bit (0 or 1).
using Bits = std::vector<std::uint8_t>;

std::string to_string(const Bits& bits);

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(Real x);
  CompensatedSum& operator+=(Real x) {
    add(x);
    return *this;
  }
  Real value() const { return sum_ + correction_; }

 private:
  Real sum_ = 0;
  Real correction_ = 0;
};

/// cos(num * pi / den) and sin(num * pi / den), with the argument reduced
/// modulo 2*pi on the integers before any floating-point work. Multiples of
/// pi/2 are returned exactly.
Real cos_pi(std::int64_t num, std::int64_t den);
Real sin_pi(std::int64_t num, std::int64_t den);

// ---------------------------------------------------------------------------
// Exact combinatorics

/// Row n of Pascal's triangle, memoized and shared across threads.
std::shared_ptr<const std::vector<BigNat>> binomial_row(unsigned n);

/// C(n, k); zero outside 0 <= k <= n.
BigNat binom(unsigned n, std::int64_t k);

/// n! / (parts[0]! parts[1]! ...). Throws DomainError unless sum(parts) == n.
BigNat multinomial(unsigned n, std::span<const unsigned> parts);

BigNat factorial(unsigned n);

/// Trial-division primality; inputs here are small.
bool is_prime(std::uint64_t p);

/// C(n, k) mod p via base-p digits. Throws DomainError if p is not prime.
std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// ---------------------------------------------------------------------------
// Parity of C(j, d)

/// One period of j -> C(j, d) mod 2.
struct ParityWord {
  std::uint64_t period = 0;
  Bits bits;
};

/// Least period of j -> C(j, d) mod 2, i.e. 2^(floor(log2 d) + 1).
/// Requires d >= 2; the linear case d = 1 (0101..., period 2) is left to callers.
/// Throws InvariantError if the half period turns out to be a period.
std::uint64_t parity_period(std::uint64_t d);

ParityWord parity_word(std::uint64_t d);

/// Bits C(j, d) mod 2 for 0 <= j < len. Requires d >= 2.
Bits parity_sequence(std::uint64_t d, std::size_t len);

// ---------------------------------------------------------------------------
// Lacunary sums: sum of C(n, j) over 0 <= j <= n with j = i (mod 2^power)

BigNat lacunary_exact(unsigned n, unsigned power, std::uint64_t residue);

/// Closed trigonometric form of lacunary_exact.
Real lacunary_trig(unsigned n, unsigned power, std::uint64_t residue);

}  // namespace symbal
