#include "symbal/spectral.hpp"

#include <bit>
#include <string>

#include "symbal/errors.hpp"

namespace symbal {

namespace {

BigInt krawtchouk_sum(unsigned k, unsigned y, unsigned n) {
  BigInt s = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const BigInt term = binom(y, j).value() * binom(n - y, static_cast<std::int64_t>(k) - j).value();
    if (j % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

// Truth table of a symmetric function: entry x is v(popcount(x)).
std::vector<std::uint8_t> truth_table(const WeightFunction& f) {
  const std::uint32_t size = std::uint32_t{1} << f.n;
  std::vector<std::uint8_t> table(size);
  for (std::uint32_t x = 0; x < size; ++x) table[x] = f.v[std::popcount(x)];
  return table;
}

void require_oracle_scale(unsigned n, unsigned cap, const char* what) {
  if (n > cap) {
    throw BudgetError(std::string(what) + ": n = " + std::to_string(n) + " exceeds oracle cap " +
                      std::to_string(cap));
  }
}

}  // namespace

KrawtchoukTable::KrawtchoukTable(unsigned n) : n_(n), values_((n + 1) * (n + 1)) {
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned y = 0; y <= n; ++y) values_[k * (n + 1) + y] = krawtchouk_sum(k, y, n);
  }
}

BigInt krawtchouk(unsigned k, unsigned y, unsigned n) {
  if (k > n || y > n) throw DomainError("krawtchouk: requires k, y <= n");
  return krawtchouk_sum(k, y, n);
}

BigInt walsh_symmetric(const WeightFunction& f, unsigned y) {
  if (y > f.n) throw DomainError("walsh_symmetric: weight y exceeds n");
  BigInt w = 0;
  for (unsigned k = 0; k <= f.n; ++k) {
    const BigInt p = krawtchouk_sum(k, y, f.n);
    if (f.v[k]) {
      w -= p;
    } else {
      w += p;
    }
  }
  return w;
}

WalshSpectrum walsh_spectrum(const WeightFunction& f) {
  const KrawtchoukTable table(f.n);
  WalshSpectrum s{f.n, std::vector<BigInt>(f.n + 1, 0)};
  for (unsigned y = 0; y <= f.n; ++y) {
    for (unsigned k = 0; k <= f.n; ++k) {
      if (f.v[k]) {
        s.by_weight[y] -= table(k, y);
      } else {
        s.by_weight[y] += table(k, y);
      }
    }
  }
  return s;
}

bool parseval_holds(const WalshSpectrum& spectrum) {
  BigInt total = 0;
  for (unsigned y = 0; y <= spectrum.n; ++y) {
    total += binom(spectrum.n, y).value() * spectrum.by_weight[y] * spectrum.by_weight[y];
  }
  return total == BigNat::pow2(2 * std::uint64_t{spectrum.n}).value();
}

std::int64_t walsh_bruteforce(const WeightFunction& f, std::uint32_t w) {
  require_oracle_scale(f.n, kWalshOracleMaxN, "walsh_bruteforce");
  const std::uint32_t size = std::uint32_t{1} << f.n;
  if (w >= size) throw DomainError("walsh_bruteforce: w has bits beyond n");
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    const unsigned exponent = f.v[std::popcount(x)] + std::popcount(x & w);
    sum += (exponent % 2 == 0) ? 1 : -1;
  }
  return sum;
}

std::vector<std::int64_t> walsh_bruteforce_all(const WeightFunction& f) {
  require_oracle_scale(f.n, kWalshOracleMaxN, "walsh_bruteforce_all");
  const auto table = truth_table(f);
  std::vector<std::int64_t> a(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) a[x] = table[x] ? -1 : 1;
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t u = a[j];
        const std::int64_t v = a[j + h];
        a[j] = u + v;
        a[j + h] = u - v;
      }
    }
  }
  return a;
}

bool is_sac_elem(unsigned d, unsigned n) {
  if (d < 2 || d > n) {
    throw DomainError("is_sac_elem: requires 2 <= d <= n, got d=" + std::to_string(d) +
                      ", n=" + std::to_string(n));
  }
  return is_balanced_elem(d - 1, n - 1);
}

bool is_sac_bruteforce(const WeightFunction& f) {
  if (f.n < 1) throw DomainError("is_sac_bruteforce: requires n >= 1");
  require_oracle_scale(f.n, kSacOracleMaxN, "is_sac_bruteforce");
  const auto table = truth_table(f);
  const std::uint32_t size = std::uint32_t{1} << f.n;
  for (unsigned bit = 0; bit < f.n; ++bit) {
    const std::uint32_t a = std::uint32_t{1} << bit;
    std::uint32_t changed = 0;
    for (std::uint32_t x = 0; x < size; ++x) changed += table[x] ^ table[x ^ a];
    if (changed != size / 2) return false;
  }
  return true;
}

bool check_antisymmetry(unsigned d, unsigned n) {
  if (d % 2 == 0) throw DomainError("check_antisymmetry: d must be odd");
  const auto spectrum = walsh_spectrum(elem_values(d, n));
  for (unsigned y = 1; y < n; ++y) {
    if (spectrum[y] != -spectrum[n - y]) return false;
  }
  return true;
}

bool check_half_sums(const WeightFunction& f) {
  if (f.n < 1) throw DomainError("check_half_sums: requires n >= 1");
  require_oracle_scale(f.n, kSacOracleMaxN, "check_half_sums");
  const auto spectrum = walsh_spectrum(f);
  std::vector<BigInt> squares(f.n + 1);
  for (unsigned y = 0; y <= f.n; ++y) squares[y] = spectrum[y] * spectrum[y];

  // w_n is the top coordinate, bit n-1 of w.
  const std::uint32_t size = std::uint32_t{1} << f.n;
  const std::uint32_t last = std::uint32_t{1} << (f.n - 1);
  BigInt low = 0;
  BigInt high = 0;
  for (std::uint32_t w = 0; w < size; ++w) {
    if (w & last) {
      high += squares[std::popcount(w)];
    } else {
      low += squares[std::popcount(w)];
    }
  }
  const BigInt half = BigNat::pow2(2 * std::uint64_t{f.n} - 1).value();
  return low == half && high == half;
}

}  // namespace symbal
