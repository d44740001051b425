#pragma once

#include <functional>
#include <vector>

#include "symbal/bignat.hpp"
#include "symbal/exactnum.hpp"

namespace symbal {

/// One (d, n) cell of a balancedness scan over X(d, n).
struct ScanCell {
  unsigned d = 0;
  unsigned n = 0;
  BigNat weight;
  bool balanced = false;   // weight == 2^(n-1)
  bool predicted = false;  // d == 1, or d = 2^t and n = 2^(t+1) l - 1
};

/// Membership in {d = 1} or the family X(2^t, 2^(t+1) l - 1), t, l >= 1.
bool conjecture1_predicted(unsigned d, unsigned n);

ScanCell scan_cell(unsigned d, unsigned n);

struct ScanOptions {
  unsigned workers = 1;
  /// Called once per cell in canonical (n, d) order, as soon as the cell's row is complete.
  std::function<void(const ScanCell&)> on_cell;
};

inline constexpr unsigned kConjecture1MaxN = 64;
inline constexpr unsigned kConjecture2MaxN = 400;

/// Cells for 2 <= d <= n <= n_max, sorted by (n, d). Verdicts come from exact weights.
/// Throws BudgetError for n_max > kConjecture1MaxN.
std::vector<ScanCell> scan_conjecture1(unsigned n_max, const ScanOptions& options = {});

/// balanced == predicted in every cell.
bool conjecture1_consistent(const std::vector<ScanCell>& cells);

/// wt(X(2^t + 1, 2^(t+1) l)) == 2^(n-2).
bool lemma13_check(unsigned t, unsigned ell);

/// Closed form of wt(X(2^t + 1, m)) for m >= 2^(t+1), with r = m - 2^(t+1):
///   S = 2^(m-2) + 2^(-t) T,
///   T = sum over odd a < 2^t of (2 cos A)^(m-1) sin(rA) / sin A,  A = a pi / 2^(t+1).
struct Wt2Trig {
  Real value = 0;  // S
  Real t_sum = 0;  // T
  Real t_abs = 0;  // sum of |terms of T|, the scale of its rounding error
};
Wt2Trig weight_wt2_trig(unsigned t, unsigned m);

/// Closed form of wt(X(1 + 2^s + 2^t, n)) for 1 <= s < t, t >= 2, d <= n:
///   2^(n-3) - 2^(-t) sum_{odd j < 2^t} (2 cos A)^(n-1) sin((n - 2^s)A) sin(2^s A) / (sin A sin(2^(s+1) A))
///           - 2^(-s-1) sum_{odd k < 2^s} (2 cos B)^(n-1) sin(nB) / sin B,
/// with A = j pi / 2^(t+1) and B = k pi / 2^(s+1).
Real weight_wt3_trig(unsigned s, unsigned t, unsigned n);

/// T counts as zero when |T| is below this fraction of t_abs.
inline constexpr Real kTZeroRelative = 1e-12L;

/// For d = 2^t + 1 and m = 2^(t+1) + r: T has the sign of sin(r pi / 2^(t+1)),
/// and T vanishes only when r = 0 mod 2^(t+1).
bool t_sign_check(unsigned t, unsigned r);

/// One cell of the weight-deficit scan: deficit = wt(X(d, n)) - 2^(n-2).
struct DeficitCell {
  unsigned d = 0;
  unsigned n = 0;
  BigNat weight;
  BigInt deficit;
  bool holds = false;  // deficit < 0
};

DeficitCell deficit_cell(unsigned d, unsigned n);

/// Cells for every d with popcount(d) >= 6 and 2(d - 1) <= n <= n_max, sorted by (n, d).
/// Throws BudgetError for n_max > kConjecture2MaxN.
std::vector<DeficitCell> scan_conjecture2(unsigned n_max, unsigned workers = 1,
                                          const std::function<void(const DeficitCell&)>& on_cell = {});

}  // namespace symbal
