#pragma once

#include <cstdint>
#include <vector>

#include "symbal/bignat.hpp"

namespace symbal {

/// A candidate signing (delta_0, ..., delta_n), each entry +1 or -1.
class SignVector {
 public:
  explicit SignVector(std::vector<std::int8_t> signs);

  /// Bit i of `plus_mask` set means delta_i = +1. Requires n <= 62.
  static SignVector from_mask(unsigned n, std::uint64_t plus_mask);

  unsigned n() const { return static_cast<unsigned>(signs_.size() - 1); }
  std::int8_t operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<std::int8_t>& signs() const { return signs_; }

  SignVector negated() const;

  /// Lexicographic with -1 < +1.
  friend auto operator<=>(const SignVector&, const SignVector&) = default;
  friend bool operator==(const SignVector&, const SignVector&) = default;

 private:
  std::vector<std::int8_t> signs_;
};

/// sum_i delta_i C(n, i).
BigInt signed_sum(const SignVector& delta);

/// Whether delta is one of the trivial solutions: the two alternating
/// signings for even n, or an antisymmetric signing delta_{n-i} = -delta_i
/// for odd n. Throws DomainError if delta is not a solution.
bool is_trivial(const SignVector& delta);

/// Number of trivial solutions: 2 for even n >= 2, 2^((n+1)/2) for odd n.
/// Row 0 has no solutions at all, so count_trivial(0) = 0.
BigNat count_trivial(unsigned n);

struct SolutionReport {
  unsigned n = 0;
  BigNat total;
  BigNat trivial;
  BigNat nontrivial;
  /// Only filled when enumeration was requested: nontrivial solutions in
  /// lexicographic order, followed by the trivial ones in lexicographic order.
  std::vector<SignVector> witnesses;
};

inline constexpr unsigned kBisectMaxN = 32;
inline constexpr std::size_t kMaxWitnesses = std::size_t{1} << 20;

/// Exact solution counts of sum_i delta_i C(n, i) = 0 by a meet-in-the-middle
/// join over the index halves [0, ceil(n/2)) and [ceil(n/2), n].
/// Throws BudgetError for n > 32 or when the row has more than kMaxWitnesses solutions.
SolutionReport find_all_solutions(unsigned n, bool enumerate);

/// Index sets A = {i : delta_i = +1} and B = its complement.
struct Bisection {
  std::vector<unsigned> plus;
  std::vector<unsigned> minus;
  BigNat plus_sum;
  BigNat minus_sum;
};

/// Throws DomainError if delta is not a solution.
Bisection bisection_from_solution(const SignVector& delta);

/// delta_j = (-1)^C(j, d) for 0 <= j <= n.
SignVector elem_sign_vector(unsigned d, unsigned n);

}  // namespace symbal
