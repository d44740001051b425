#include "symbal/exactnum.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

#include "symbal/errors.hpp"

namespace symbal {

std::string to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

void CompensatedSum::add(Real x) {
  const Real t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

namespace {

constexpr Real kPi = std::numbers::pi_v<Real>;

// Reduce num/den (in units of pi) to [0, 2*den).
std::int64_t reduce_half_turns(std::int64_t num, std::int64_t den) {
  const std::int64_t period = 2 * den;
  std::int64_t r = num % period;
  if (r < 0) r += period;
  return r;
}

}  // namespace

Real cos_pi(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("cos_pi: denominator must be positive");
  std::int64_t r = reduce_half_turns(num, den);
  // Exact at quarter turns.
  if (r == 0) return 1;
  if (r == den) return -1;
  if (2 * r == den || 2 * r == 3 * den) return 0;
  // Fold into [0, pi] then evaluate near the smaller endpoint.
  if (r > den) r = 2 * den - r;
  return std::cos(kPi * static_cast<Real>(r) / static_cast<Real>(den));
}

Real sin_pi(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("sin_pi: denominator must be positive");
  std::int64_t r = reduce_half_turns(num, den);
  if (r == 0 || r == den) return 0;
  if (2 * r == den) return 1;
  if (2 * r == 3 * den) return -1;
  Real sign = 1;
  if (r > den) {
    r -= den;
    sign = -1;
  }
  // sin(x) == sin(pi - x); keep the argument in [0, pi/2].
  if (2 * r > den) r = den - r;
  return sign * std::sin(kPi * static_cast<Real>(r) / static_cast<Real>(den));
}

// ---------------------------------------------------------------------------

namespace {

class RowCache {
 public:
  std::shared_ptr<const std::vector<BigNat>> get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = rows_.find(n); it != rows_.end()) return it->second;
    }
    auto row = std::make_shared<std::vector<BigNat>>(build(n));
    std::unique_lock lock(mutex_);
    auto [it, inserted] = rows_.emplace(n, std::move(row));
    return it->second;
  }

 private:
  // Incremental multiplication along the row: C(n,k+1) = C(n,k) (n-k) / (k+1).
  static std::vector<BigNat> build(unsigned n) {
    std::vector<BigInt> tmp(n + 1);
    tmp[0] = 1;
    for (unsigned k = 0; k < n; ++k) {
      tmp[k + 1] = tmp[k] * (n - k);
      mpz_divexact_ui(tmp[k + 1].get_mpz_t(), tmp[k + 1].get_mpz_t(), k + 1);
    }
    std::vector<BigNat> row;
    row.reserve(n + 1);
    for (auto& v : tmp) row.push_back(BigNat::from_int(v));
    return row;
  }

  std::shared_mutex mutex_;
  std::unordered_map<unsigned, std::shared_ptr<const std::vector<BigNat>>> rows_;
};

RowCache& row_cache() {
  static RowCache cache;
  return cache;
}

}  // namespace

std::shared_ptr<const std::vector<BigNat>> binomial_row(unsigned n) { return row_cache().get(n); }

BigNat binom(unsigned n, std::int64_t k) {
  if (k < 0 || k > static_cast<std::int64_t>(n)) return BigNat(0);
  return (*binomial_row(n))[static_cast<std::size_t>(k)];
}

BigNat multinomial(unsigned n, std::span<const unsigned> parts) {
  std::uint64_t total = 0;
  for (auto p : parts) total += p;
  if (total != n) {
    throw DomainError("multinomial: parts sum to " + std::to_string(total) + ", expected " +
                      std::to_string(n));
  }
  // Product of binomials C(i_0 + ... + i_k, i_k).
  BigNat result(1);
  unsigned running = 0;
  for (auto p : parts) {
    running += p;
    result *= binom(running, p);
  }
  return result;
}

BigNat factorial(unsigned n) { return BigNat::factorial(n); }

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q) {
    if (p % q == 0) return false;
  }
  return true;
}

std::uint64_t binom_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("binom_mod_p: " + std::to_string(p) + " is not prime");
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t a = n % p;
    const std::uint64_t b = k % p;
    if (b > a) return 0;
    // Small digit binomial C(a, b) mod p by the multiplicative formula.
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
      num = mul_mod(num, (a - i) % p, p);
      den = mul_mod(den, (i + 1) % p, p);
    }
    // den is invertible since every factor is < p.
    std::uint64_t inv = 1;
    std::uint64_t base = den;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = mul_mod(inv, base, p);
      base = mul_mod(base, base, p);
    }
    result = mul_mod(result, mul_mod(num, inv, p), p);
    n /= p;
    k /= p;
  }
  return result;
}

// ---------------------------------------------------------------------------

namespace {

bool has_period(const Bits& word, std::size_t period) {
  for (std::size_t j = period; j < word.size(); ++j) {
    if (word[j] != word[j - period]) return false;
  }
  return true;
}

Bits raw_parity(std::uint64_t d, std::size_t len) {
  Bits bits(len);
  for (std::size_t j = 0; j < len; ++j) bits[j] = static_cast<std::uint8_t>(binom_mod_p(j, d, 2));
  return bits;
}

}  // namespace

std::uint64_t parity_period(std::uint64_t d) {
  if (d < 2) throw DomainError("parity_period: requires d >= 2");
  if (std::bit_width(d) >= 63) throw DomainError("parity_period: d too large");
  const std::uint64_t period = std::uint64_t{1} << std::bit_width(d);
  // Minimality: two periods of the sequence must not repeat at half the period.
  if (period <= (std::uint64_t{1} << 20)) {
    const Bits two = raw_parity(d, static_cast<std::size_t>(2 * period));
    if (!has_period(two, period) || has_period(two, period / 2)) {
      throw InvariantError("parity_period: least period check failed for d=" + std::to_string(d));
    }
  }
  return period;
}

ParityWord parity_word(std::uint64_t d) {
  const std::uint64_t period = parity_period(d);
  return ParityWord{period, raw_parity(d, static_cast<std::size_t>(period))};
}

Bits parity_sequence(std::uint64_t d, std::size_t len) {
  if (d < 2) throw DomainError("parity_sequence: requires d >= 2");
  return raw_parity(d, len);
}

// ---------------------------------------------------------------------------

namespace {

void check_lacunary_args(unsigned power, std::uint64_t residue) {
  if (power < 1 || power > 30) throw DomainError("lacunary: power must be in [1, 30]");
  if (residue >= (std::uint64_t{1} << power)) {
    throw DomainError("lacunary: residue must be below 2^power");
  }
}

}  // namespace

BigNat lacunary_exact(unsigned n, unsigned power, std::uint64_t residue) {
  check_lacunary_args(power, residue);
  const auto row = binomial_row(n);
  const std::uint64_t step = std::uint64_t{1} << power;
  BigNat sum(0);
  for (std::uint64_t j = residue; j <= n; j += step) sum += (*row)[j];
  return sum;
}

Real lacunary_trig(unsigned n, unsigned power, std::uint64_t residue) {
  check_lacunary_args(power, residue);
  const std::int64_t den = std::int64_t{1} << power;
  const std::int64_t shift = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(residue);

  CompensatedSum sum;
  sum += std::ldexp(Real{1}, static_cast<int>(n) - static_cast<int>(power));
  for (std::int64_t j = 1; j < den / 2; ++j) {
    const Real base = 2 * cos_pi(j, den);
    const Real term = std::pow(base, static_cast<Real>(n)) * cos_pi(j * shift, den);
    sum += std::ldexp(term, 1 - static_cast<int>(power));
  }
  // The j = 2^(power-1) character contributes 0^n; it only survives at n = 0.
  if (n == 0) sum += std::ldexp(cos_pi(den / 2 * shift, den), -static_cast<int>(power));
  return sum.value();
}

}  // namespace symbal
