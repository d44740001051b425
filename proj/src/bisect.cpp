#include "symbal/bisect.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "symbal/errors.hpp"
#include "symbal/exactnum.hpp"

namespace symbal {

SignVector::SignVector(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  if (signs_.empty()) throw DomainError("SignVector: needs n + 1 >= 1 entries");
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw DomainError("SignVector: entries must be +1 or -1");
  }
}

SignVector SignVector::from_mask(unsigned n, std::uint64_t plus_mask) {
  if (n > 62) throw DomainError("SignVector::from_mask: n too large");
  std::vector<std::int8_t> s(n + 1);
  for (unsigned i = 0; i <= n; ++i) s[i] = (plus_mask >> i) & 1 ? 1 : -1;
  return SignVector(std::move(s));
}

SignVector SignVector::negated() const {
  auto s = signs_;
  for (auto& x : s) x = static_cast<std::int8_t>(-x);
  return SignVector(std::move(s));
}

BigInt signed_sum(const SignVector& delta) {
  const auto row = binomial_row(delta.n());
  BigInt s = 0;
  for (unsigned i = 0; i <= delta.n(); ++i) {
    if (delta[i] > 0) {
      s += (*row)[i].value();
    } else {
      s -= (*row)[i].value();
    }
  }
  return s;
}

namespace {

void require_solution(const SignVector& delta, const char* what) {
  if (signed_sum(delta) != 0) throw DomainError(std::string(what) + ": not a solution");
}

bool is_trivial_shape(const SignVector& delta) {
  const unsigned n = delta.n();
  if (n % 2 == 0) {
    for (unsigned i = 1; i <= n; ++i) {
      if (delta[i] != -delta[i - 1]) return false;
    }
    return true;
  }
  for (unsigned i = 0; i <= n; ++i) {
    if (delta[n - i] != -delta[i]) return false;
  }
  return true;
}

struct PartialSum {
  std::int64_t sum;
  std::uint32_t mask;
  friend bool operator<(const PartialSum& a, const PartialSum& b) {
    return a.sum != b.sum ? a.sum < b.sum : a.mask < b.mask;
  }
};

// All 2^|coeffs| signed sums of the given coefficients, sorted by sum.
std::vector<PartialSum> half_sums(const std::vector<std::int64_t>& coeffs) {
  const std::uint32_t count = std::uint32_t{1} << coeffs.size();
  std::vector<PartialSum> out(count);
  std::int64_t all_minus = 0;
  for (auto c : coeffs) all_minus -= c;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    std::int64_t s = all_minus;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if ((mask >> i) & 1) s += 2 * coeffs[i];
    }
    out[mask] = PartialSum{s, mask};
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_trivial(const SignVector& delta) {
  require_solution(delta, "is_trivial");
  return is_trivial_shape(delta);
}

BigNat count_trivial(unsigned n) {
  if (n == 0) return BigNat(0);
  if (n % 2 == 0) return BigNat(2);
  return BigNat::pow2((n + 1) / 2);
}

SolutionReport find_all_solutions(unsigned n, bool enumerate) {
  if (n > kBisectMaxN) {
    throw BudgetError("find_all_solutions: n = " + std::to_string(n) + " exceeds budget " +
                      std::to_string(kBisectMaxN));
  }
  const auto big_row = binomial_row(n);
  std::vector<std::int64_t> row(n + 1);
  for (unsigned i = 0; i <= n; ++i) row[i] = static_cast<std::int64_t>((*big_row)[i].to_u64());

  const unsigned split = (n + 1) / 2;  // ceil(n/2)
  const std::vector<std::int64_t> left_coeffs(row.begin(), row.begin() + split);
  const std::vector<std::int64_t> right_coeffs(row.begin() + split, row.end());
  const auto left = half_sums(left_coeffs);
  const auto right = half_sums(right_coeffs);

  // Join left sums s with right sums -s: walk left ascending, right descending.
  std::uint64_t total = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> matches;
  std::size_t li = 0;
  std::size_t ri = right.size();
  while (li < left.size() && ri > 0) {
    const std::int64_t target = -left[li].sum;
    const std::int64_t rs = right[ri - 1].sum;
    if (rs > target) {
      --ri;
      continue;
    }
    if (rs < target) {
      ++li;
      continue;
    }
    std::size_t l_end = li;
    while (l_end < left.size() && left[l_end].sum == left[li].sum) ++l_end;
    std::size_t r_begin = ri;
    while (r_begin > 0 && right[r_begin - 1].sum == target) --r_begin;
    const std::uint64_t pairs = static_cast<std::uint64_t>(l_end - li) * (ri - r_begin);
    total += pairs;
    if (matches.size() + pairs > kMaxWitnesses) {
      throw BudgetError("find_all_solutions: more than " + std::to_string(kMaxWitnesses) +
                        " solutions for n = " + std::to_string(n));
    }
    for (std::size_t a = li; a < l_end; ++a) {
      for (std::size_t b = r_begin; b < ri; ++b) matches.emplace_back(left[a].mask, right[b].mask);
    }
    li = l_end;
    ri = r_begin;
  }

  // Classify every joined solution by shape.
  std::vector<SignVector> trivial;
  std::vector<SignVector> nontrivial;
  for (const auto& [lm, rm] : matches) {
    const std::uint64_t mask = std::uint64_t{lm} | (std::uint64_t{rm} << split);
    SignVector v = SignVector::from_mask(n, mask);
    (is_trivial_shape(v) ? trivial : nontrivial).push_back(std::move(v));
  }

  SolutionReport report;
  report.n = n;
  report.total = BigNat(total);
  report.trivial = BigNat(trivial.size());
  report.nontrivial = BigNat(nontrivial.size());
  if (report.trivial + report.nontrivial != report.total) {
    throw InvariantError("find_all_solutions: classification lost solutions at n = " + std::to_string(n));
  }
  if (enumerate) {
    std::sort(nontrivial.begin(), nontrivial.end());
    std::sort(trivial.begin(), trivial.end());
    report.witnesses = std::move(nontrivial);
    report.witnesses.insert(report.witnesses.end(), std::make_move_iterator(trivial.begin()),
                            std::make_move_iterator(trivial.end()));
  }
  return report;
}

Bisection bisection_from_solution(const SignVector& delta) {
  require_solution(delta, "bisection_from_solution");
  const auto row = binomial_row(delta.n());
  Bisection b;
  for (unsigned i = 0; i <= delta.n(); ++i) {
    if (delta[i] > 0) {
      b.plus.push_back(i);
      b.plus_sum += (*row)[i];
    } else {
      b.minus.push_back(i);
      b.minus_sum += (*row)[i];
    }
  }
  return b;
}

SignVector elem_sign_vector(unsigned d, unsigned n) {
  std::vector<std::int8_t> s(n + 1);
  for (unsigned j = 0; j <= n; ++j) s[j] = binom_mod_p(j, d, 2) ? -1 : 1;
  return SignVector(std::move(s));
}

}  // namespace symbal
