#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <thread>

#include "oracle.hpp"
#include "symbal/errors.hpp"
#include "symbal/exactnum.hpp"

using namespace symbal;

namespace {

BigNat from_mpz(const mpz_class& v) { return BigNat::from_int(v); }

}  // namespace

TEST_CASE("BigNat arithmetic and exact division") {
  const BigNat a = BigNat::pow2(100);
  const BigNat b = BigNat::pow(3, 40);
  CHECK((a * b).exact_div(b) == a);
  CHECK((a + b).checked_sub(b) == a);
  CHECK_THROWS_AS(b.checked_sub(a), DomainError);
  CHECK_THROWS_AS(BigNat(10).exact_div(BigNat(3)), DomainError);
  CHECK_THROWS_AS(BigNat(10).exact_div(BigNat(0)), DomainError);
  CHECK(BigNat(12).divisible_by(BigNat(4)));
  CHECK_FALSE(BigNat(12).divisible_by(BigNat(5)));
  CHECK_THROWS_AS(BigNat::from_int(BigInt(-1)), DomainError);
  CHECK_THROWS_AS(BigNat::from_string("12x"), DomainError);
  CHECK(BigNat::from_string("18446744073709551616") == BigNat::pow2(64));
  CHECK(BigNat(std::uint64_t{0xffffffffffffffffULL}).to_string() == "18446744073709551615");
  CHECK_FALSE(a.fits_u64());
  CHECK_THROWS_AS(a.to_u64(), DomainError);
  CHECK(a.bit_length() == 101);
  CHECK(a.to_long_double() == std::ldexp(1.0L, 100));
  CHECK(BigNat::pow(7, 3).mod(10) == 3);
  CHECK(BigNat::factorial(10) == BigNat(3628800));
  CHECK(BigNat(3) < BigNat(4));
}

TEST_CASE("binom examples") {
  CHECK(binom(5, 2) == BigNat(10));
  CHECK(binom(0, 0) == BigNat(1));
  CHECK(binom(3, 5) == BigNat(0));
  CHECK(binom(3, -1) == BigNat(0));
}

TEST_CASE("binom matches an independent Pascal triangle") {
  for (unsigned n = 0; n <= 150; ++n) {
    for (unsigned k = 0; k <= n; ++k) REQUIRE(binom(n, k) == from_mpz(oracle::pascal(n, k)));
  }
}

TEST_CASE("Pascal recurrence on random (n, k), n <= 200") {
  std::uniform_int_distribution<unsigned> pick_n(1, 200);
  for (int trial = 0; trial < 2000; ++trial) {
    const unsigned n = pick_n(oracle::rng());
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(-1, n + 1)(oracle::rng());
    CHECK(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
  }
}

TEST_CASE("binomial rows are shared safely across threads") {
  std::vector<std::shared_ptr<const std::vector<BigNat>>> seen(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t) {
      pool.emplace_back([&, t] {
        for (unsigned n = 300; n < 340; ++n) binomial_row(n);
        seen[t] = binomial_row(333);
      });
    }
  }
  for (const auto& row : seen) CHECK(*row == *seen[0]);
  BigNat total(0);
  for (const auto& v : *seen[0]) total += v;
  CHECK(total == BigNat::pow2(333));
}

TEST_CASE("multinomial") {
  const std::vector<unsigned> a{1, 2}, b{2, 2}, c{5}, d{3, 2, 1, 1}, bad{1, 1};
  CHECK(multinomial(3, a) == BigNat(3));
  CHECK(multinomial(4, b) == BigNat(6));
  CHECK(multinomial(5, c) == BigNat(1));
  CHECK(multinomial(7, d) == BigNat(420));
  CHECK_THROWS_AS(multinomial(3, bad), DomainError);
}

TEST_CASE("binom_mod_p examples and agreement with exact residues") {
  CHECK(binom_mod_p(10, 2, 2) == 1);
  CHECK(binom_mod_p(10, 3, 2) == 0);
  CHECK(binom_mod_p(4, 1, 3) == 1);
  CHECK_THROWS_AS(binom_mod_p(4, 1, 4), DomainError);
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 97u}) {
    for (unsigned n = 0; n <= 90; ++n) {
      for (unsigned k = 0; k <= n + 2; ++k) {
        const mpz_class r = oracle::pascal(n, k) % p;
        REQUIRE(binom_mod_p(n, k, p) == r.get_ui());
      }
    }
  }
  // Large arguments: C(2^40, 2^39) is odd iff 2^39 is dominated by 2^40, which it is not.
  CHECK(binom_mod_p(std::uint64_t{1} << 40, std::uint64_t{1} << 39, 2) == 0);
  // Digits (5, 3) over (4, 1) in base q: C(5, 4) C(3, 1) = 15.
  const std::uint64_t q = 1000000007ULL;
  CHECK(binom_mod_p(3 * q + 5, q + 4, q) == 15);
}

TEST_CASE("parity_period and parity words") {
  CHECK(parity_period(2) == 4);
  CHECK(parity_period(4) == 8);
  CHECK(parity_period(8) == 16);
  CHECK_THROWS_AS(parity_period(1), DomainError);
  CHECK_THROWS_AS(parity_period(0), DomainError);
  CHECK(to_string(parity_sequence(2, 8)) == "00110011");
  CHECK(to_string(parity_sequence(3, 8)) == "00010001");
  CHECK(to_string(parity_sequence(7, 8)) == "00000001");
  CHECK(to_string(parity_word(4).bits) == "00001111");
  CHECK_THROWS_AS(parity_sequence(1, 8), DomainError);
}

TEST_CASE("parity sequences agree with Lucas residues and have least period") {
  for (unsigned d = 2; d <= 64; ++d) {
    const Bits seq = parity_sequence(d, 129);
    for (unsigned j = 0; j <= 128; ++j) REQUIRE(seq[j] == binom_mod_p(j, d, 2));
    const ParityWord w = parity_word(d);
    REQUIRE(w.period == std::bit_ceil(std::uint64_t{d} + 1));
    REQUIRE(w.period == (std::uint64_t{1} << (std::bit_width(std::uint64_t{d}))));
    REQUIRE(w.bits.size() == w.period);
    const Bits two = parity_sequence(d, 2 * w.period);
    for (std::size_t j = 0; j < w.period; ++j) {
      REQUIRE(w.bits[j] == (oracle::pascal_odd(j, d) ? 1 : 0));
      REQUIRE(two[j] == two[j + w.period]);
    }
    // Half the period is not a period.
    const std::size_t half = w.period / 2;
    bool half_is_period = true;
    for (std::size_t j = 0; j + half < two.size(); ++j) half_is_period = half_is_period && two[j] == two[j + half];
    REQUIRE_FALSE(half_is_period);
  }
}

TEST_CASE("lacunary examples") {
  CHECK(lacunary_exact(4, 1, 0) == BigNat(8));
  CHECK(lacunary_exact(7, 2, 3) == BigNat(36));
  CHECK(lacunary_exact(3, 2, 1) == BigNat(3));
  CHECK(std::fabs(lacunary_trig(4, 1, 0) - 8.0L) < 1e-9L);
  CHECK(std::fabs(lacunary_trig(7, 2, 3) - 36.0L) < 1e-9L);
  CHECK(std::fabs(lacunary_trig(3, 2, 1) - 3.0L) < 1e-9L);
  CHECK_THROWS_AS(lacunary_exact(4, 0, 0), DomainError);
  CHECK_THROWS_AS(lacunary_exact(4, 2, 4), DomainError);
  CHECK_THROWS_AS(lacunary_trig(4, 2, 4), DomainError);
}

TEST_CASE("lacunary sums: closed form, direct sum and partition of 2^n") {
  for (unsigned n = 0; n <= 40; ++n) {
    for (unsigned power = 1; power <= 5; ++power) {
      const std::uint64_t mod = std::uint64_t{1} << power;
      BigNat total(0);
      for (std::uint64_t i = 0; i < mod; ++i) {
        mpz_class direct = 0;
        for (unsigned j = i; j <= n; j += mod) direct += oracle::pascal(n, j);
        const BigNat exact = lacunary_exact(n, power, i);
        REQUIRE(exact == from_mpz(direct));
        const Real trig = lacunary_trig(n, power, i);
        REQUIRE(std::fabs(trig - exact.to_long_double()) < 0.25L);
        total += exact;
      }
      REQUIRE(total == BigNat::pow2(n));
    }
  }
}

TEST_CASE("cos_pi and sin_pi") {
  CHECK(cos_pi(0, 1) == 1.0L);
  CHECK(cos_pi(1, 2) == 0.0L);
  CHECK(cos_pi(1, 1) == -1.0L);
  CHECK(sin_pi(1, 2) == 1.0L);
  CHECK(sin_pi(-1, 2) == -1.0L);
  CHECK(sin_pi(7, 1) == 0.0L);
  CHECK(sin_pi(1000001, 2) == 1.0L);
  CHECK_THROWS_AS(cos_pi(1, 0), DomainError);
  const long double pi = std::numbers::pi_v<long double>;
  for (std::int64_t num = -50; num <= 50; ++num) {
    for (std::int64_t den : {3, 8, 16, 64}) {
      CHECK(std::fabs(cos_pi(num, den) - std::cos(num * pi / den)) < 1e-17L);
      CHECK(std::fabs(sin_pi(num, den) - std::sin(num * pi / den)) < 1e-17L);
    }
  }
  // Argument reduction keeps huge multiples exact.
  CHECK(std::fabs(cos_pi(3 + 2 * 1000000000000LL, 8) - cos_pi(3, 8)) == 0.0L);
}

TEST_CASE("compensated summation recovers cancelled terms") {
  CompensatedSum s;
  s += 1e30L;
  for (int i = 0; i < 1000; ++i) s += 1.0L;
  s += -1e30L;
  CHECK(s.value() == 1000.0L);
  CHECK(std::numeric_limits<Real>::digits >= 64);
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(1000000007ULL));
}
