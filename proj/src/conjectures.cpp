#include "symbal/conjectures.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "symbal/errors.hpp"
#include "symbal/symfun.hpp"

namespace symbal {

namespace {

// Run fn(i) for i in [0, count) on up to `workers` threads. The first
// exception thrown by any worker is rethrown on the caller's thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned spawn = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
}

Real power_of_two(int e) { return std::ldexp(Real{1}, e); }

}  // namespace

bool conjecture1_predicted(unsigned d, unsigned n) {
  if (d == 1) return true;
  if (!std::has_single_bit(d)) return false;
  // n = 2^(t+1) l - 1 with 2^t = d, l >= 1.
  return (std::uint64_t{n} + 1) % (2 * std::uint64_t{d}) == 0;
}

ScanCell scan_cell(unsigned d, unsigned n) {
  ScanCell cell;
  cell.d = d;
  cell.n = n;
  cell.weight = weight_elem(d, n);
  cell.balanced = cell.weight == BigNat::pow2(n - 1);
  cell.predicted = conjecture1_predicted(d, n);
  return cell;
}

std::vector<ScanCell> scan_conjecture1(unsigned n_max, const ScanOptions& options) {
  if (n_max > kConjecture1MaxN) {
    throw BudgetError("scan_conjecture1: n_max = " + std::to_string(n_max) + " exceeds " +
                      std::to_string(kConjecture1MaxN));
  }
  std::vector<ScanCell> cells;
  for (unsigned n = 2; n <= n_max; ++n) {
    std::vector<ScanCell> row(n - 1);
    parallel_for(row.size(), options.workers, [&](std::size_t i) {
      row[i] = scan_cell(static_cast<unsigned>(i) + 2, n);
    });
    for (auto& cell : row) {
      if (options.on_cell) options.on_cell(cell);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

bool conjecture1_consistent(const std::vector<ScanCell>& cells) {
  return std::all_of(cells.begin(), cells.end(),
                     [](const ScanCell& c) { return c.balanced == c.predicted; });
}

bool lemma13_check(unsigned t, unsigned ell) {
  if (t < 1 || ell < 1) throw DomainError("lemma13_check: requires t, l >= 1");
  if (t > 20) throw BudgetError("lemma13_check: t too large");
  const std::uint64_t n64 = (std::uint64_t{1} << (t + 1)) * ell;
  if (n64 > 4096) throw BudgetError("lemma13_check: n too large for exact weights");
  const auto n = static_cast<unsigned>(n64);
  return weight_elem((1u << t) + 1, n) == BigNat::pow2(n - 2);
}

namespace {

// (2 cos A)^e with A = a pi / den. For A <= pi/4 squares go through
// 4 cos^2 A = 2 + 2 cos 2A, which has no cancellation there.
Real power_2cos(std::int64_t a, std::int64_t den, unsigned e) {
  if (4 * a > den) return std::pow(2 * cos_pi(a, den), static_cast<Real>(e));
  Real out = std::pow(2 + 2 * cos_pi(2 * a, den), static_cast<Real>(e / 2));
  if (e % 2) out *= 2 * cos_pi(a, den);
  return out;
}

}  // namespace

Wt2Trig weight_wt2_trig(unsigned t, unsigned m) {
  if (t < 1 || t > 30) throw DomainError("weight_wt2_trig: requires 1 <= t <= 30");
  const std::int64_t den = std::int64_t{1} << (t + 1);
  if (m < den) throw DomainError("weight_wt2_trig: requires m >= 2^(t+1)");
  const std::int64_t r = static_cast<std::int64_t>(m) - den;

  CompensatedSum t_sum;
  Real t_abs = 0;
  for (std::int64_t a = 1; a < den / 2; a += 2) {
    // (2 cos A)^(m-1) / sin A = (2 cos A)^(m-2) * 2 cot A.
    const Real cot = cos_pi(a, den) / cos_pi(den - 2 * a, 2 * den);
    const Real term = power_2cos(a, den, m - 2) * 2 * cot * sin_pi(r * a, den);
    t_sum += term;
    t_abs += std::fabs(term);
  }
  Wt2Trig out;
  out.t_sum = t_sum.value();
  out.t_abs = t_abs;
  CompensatedSum s;
  s += power_of_two(static_cast<int>(m) - 2);
  s += std::ldexp(out.t_sum, -static_cast<int>(t));
  out.value = s.value();
  return out;
}

Real weight_wt3_trig(unsigned s, unsigned t, unsigned n) {
  if (s < 1 || s >= t || t < 2 || t > 30) {
    throw DomainError("weight_wt3_trig: requires 1 <= s < t, t >= 2");
  }
  const std::uint64_t d = 1 + (std::uint64_t{1} << s) + (std::uint64_t{1} << t);
  if (n < d) throw DomainError("weight_wt3_trig: requires d = 1 + 2^s + 2^t <= n");

  const std::int64_t den_a = std::int64_t{1} << (t + 1);
  const std::int64_t den_b = std::int64_t{1} << (s + 1);
  const std::int64_t two_s = std::int64_t{1} << s;
  const auto nn = static_cast<std::int64_t>(n);
  const Real exponent = static_cast<Real>(n - 1);

  CompensatedSum total;
  total += power_of_two(static_cast<int>(n) - 3);
  for (std::int64_t j = 1; j < den_a / 2; j += 2) {
    const Real base = 2 * cos_pi(j, den_a);
    const Real num = sin_pi((nn - two_s) * j, den_a) * sin_pi(two_s * j, den_a);
    const Real den = sin_pi(j, den_a) * sin_pi(2 * two_s * j, den_a);
    total += -std::ldexp(std::pow(base, exponent) * num / den, -static_cast<int>(t));
  }
  for (std::int64_t k = 1; k < den_b / 2; k += 2) {
    const Real base = 2 * cos_pi(k, den_b);
    const Real term = std::pow(base, exponent) * sin_pi(nn * k, den_b) / sin_pi(k, den_b);
    total += -std::ldexp(term, -static_cast<int>(s) - 1);
  }
  return total.value();
}

bool t_sign_check(unsigned t, unsigned r) {
  if (t < 1 || t > 30) throw DomainError("t_sign_check: requires 1 <= t <= 30");
  const std::uint64_t period = std::uint64_t{1} << (t + 1);
  const std::uint64_t m = period + r;
  if (m > 16000) throw BudgetError("t_sign_check: m too large for extended precision");
  const Wt2Trig w = weight_wt2_trig(t, static_cast<unsigned>(m));
  const Real t_sum = w.t_sum;
  if (std::fabs(t_sum) <= kTZeroRelative * w.t_abs) return r % period == 0;
  const Real sin_alpha = sin_pi(r, static_cast<std::int64_t>(period));
  if (sin_alpha == 0) return false;
  return (t_sum > 0) == (sin_alpha > 0);
}

DeficitCell deficit_cell(unsigned d, unsigned n) {
  if (n < 2) throw DomainError("deficit_cell: requires n >= 2");
  DeficitCell cell;
  cell.d = d;
  cell.n = n;
  cell.weight = weight_elem(d, n);
  cell.deficit = cell.weight.value() - BigNat::pow2(n - 2).value();
  cell.holds = sgn(cell.deficit) < 0;
  return cell;
}

std::vector<DeficitCell> scan_conjecture2(unsigned n_max, unsigned workers,
                                          const std::function<void(const DeficitCell&)>& on_cell) {
  if (n_max > kConjecture2MaxN) {
    throw BudgetError("scan_conjecture2: n_max = " + std::to_string(n_max) + " exceeds " +
                      std::to_string(kConjecture2MaxN));
  }
  std::vector<DeficitCell> cells;
  for (unsigned n = 2; n <= n_max; ++n) {
    // 2(d - 1) <= n  <=>  d <= n/2 + 1.
    std::vector<unsigned> degrees;
    for (unsigned d = 1; d <= n / 2 + 1; ++d) {
      if (std::popcount(d) >= 6) degrees.push_back(d);
    }
    std::vector<DeficitCell> row(degrees.size());
    parallel_for(row.size(), workers, [&](std::size_t i) { row[i] = deficit_cell(degrees[i], n); });
    for (auto& cell : row) {
      if (on_cell) on_cell(cell);
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

}  // namespace symbal
