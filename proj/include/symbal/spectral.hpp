#pragma once

#include <cstdint>
#include <vector>

#include "symbal/bignat.hpp"
#include "symbal/symfun.hpp"

namespace symbal {

/// Walsh spectrum of a symmetric Boolean function. W_f(w) depends only on
/// wt(w), so by_weight[y] holds the common value for every w of weight y.
struct WalshSpectrum {
  unsigned n = 0;
  std::vector<BigInt> by_weight;

  const BigInt& operator[](unsigned y) const { return by_weight[y]; }
};

/// Krawtchouk values P_k(y, n) = sum_j (-1)^j C(y, j) C(n - y, k - j), 0 <= k, y <= n.
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(unsigned n);

  unsigned n() const { return n_; }
  const BigInt& operator()(unsigned k, unsigned y) const { return values_[k * (n_ + 1) + y]; }

 private:
  unsigned n_;
  std::vector<BigInt> values_;
};

/// P_k(y, n). Throws DomainError unless k, y <= n.
BigInt krawtchouk(unsigned k, unsigned y, unsigned n);

/// sum_k (-1)^v(k) P_k(y, n), the Walsh value at any w of weight y.
BigInt walsh_symmetric(const WeightFunction& f, unsigned y);
WalshSpectrum walsh_spectrum(const WeightFunction& f);

/// sum_y C(n, y) W(y)^2 == 2^(2n).
bool parseval_holds(const WalshSpectrum& spectrum);

/// Oracle scale for the truth-table routines below.
inline constexpr unsigned kWalshOracleMaxN = 20;
inline constexpr unsigned kSacOracleMaxN = 16;

/// Direct 2^n-term Walsh sum at w (bit i of w is coordinate i). n <= 20.
std::int64_t walsh_bruteforce(const WeightFunction& f, std::uint32_t w);

/// Full spectrum over all 2^n vectors w via the in-place Hadamard butterfly
/// on the truth table. n <= 20.
std::vector<std::int64_t> walsh_bruteforce_all(const WeightFunction& f);

/// X(d, n) is SAC iff X(d - 1, n - 1) is balanced. Requires 2 <= d <= n.
bool is_sac_elem(unsigned d, unsigned n);

/// SAC by definition: flipping any single input bit changes f on exactly
/// 2^(n-1) inputs. Requires 1 <= n <= 16.
bool is_sac_bruteforce(const WeightFunction& f);

/// For odd d: W(y) == -W(n - y) for every 0 < y < n. Throws DomainError for even d.
bool check_antisymmetry(unsigned d, unsigned n);

/// Both sums of W(w)^2 over {w : w_n = 0} and {w : w_n = 1} equal 2^(2n-1).
/// Enumerates all 2^n vectors w. Requires 1 <= n <= 16.
bool check_half_sums(const WeightFunction& f);

}  // namespace symbal
