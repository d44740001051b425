#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symbal/bignat.hpp"
#include "symbal/errors.hpp"
#include "symbal/symfun.hpp"

namespace symbal {

/// Raised when the orbit-splitting lower bound is requested outside its
/// hypothesis (some part multiplicity m_l reaches p, which happens when p | n).
class HypothesisError : public DomainError {
 public:
  explicit HypothesisError(const std::string& what) : DomainError(what) {}
};

/// Multiplicities of part sizes in a class: m[l] = #{j : counts[j] = l}.
/// Satisfies sum_l m[l] = p and sum_l l * m[l] = n.
struct MVector {
  unsigned p = 2;
  unsigned n = 0;
  std::vector<unsigned> m;  // length n + 1

  /// Throws DomainError if the two linear constraints fail.
  void validate() const;

  friend bool operator==(const MVector&, const MVector&) = default;
  friend auto operator<=>(const MVector&, const MVector&) = default;
};

/// p^C(p + n - 1, n).
BigNat count_symmetric(unsigned p, unsigned n);

/// (p^n)! / ((p^(n-1))!)^p, the number of balanced functions GF(p)^n -> GF(p).
BigNat count_balanced_all(unsigned p, unsigned n);

MVector mvector_of(const MultisetClass& cls);

/// p! / prod_l m[l]!, the number of classes sharing this MVector.
BigNat orbit_size(const MVector& mv);

/// p divides orbit_size(mv). Throws DomainError if mv violates its constraints.
bool check_divisibility(const MVector& mv);

/// Every MVector for (p, n), in lexicographic order.
std::vector<MVector> enumerate_mvectors(unsigned p, unsigned n);

/// All m[l] < p for every MVector of (p, n), or gcd(n, p) = 1.
bool lower_bound_hypothesis(unsigned p, unsigned n);

/// prod over MVectors of (O!) / ((O/p)!)^p with O = orbit_size.
/// Throws HypothesisError when lower_bound_hypothesis fails.
BigNat lower_bound_balanced(unsigned p, unsigned n);

/// Balanced symmetric functions built by splitting every orbit of classes
/// into p equal-size labelled groups. The first function labels each orbit
/// in consecutive runs of canonical class order; later ones step through
/// the labelled splits of each orbit, first orbit fastest.
class BalancedGenerator {
 public:
  /// Throws HypothesisError when lower_bound_hypothesis fails.
  BalancedGenerator(unsigned p, unsigned n);

  std::optional<SymmetricFunction> next();

  /// Number of distinct functions the generator can reach.
  const BigNat& reachable() const { return reachable_; }

 private:
  unsigned p_;
  unsigned n_;
  std::size_t class_count_;
  std::vector<std::vector<std::size_t>> orbits_;  // class indices per orbit
  std::vector<std::vector<std::uint32_t>> labels_;
  BigNat reachable_;
  bool exhausted_ = false;
};

std::vector<SymmetricFunction> generate_balanced(unsigned p, unsigned n, std::size_t limit);

/// Cap on p^(number of classes) for the exhaustive count.
inline constexpr std::uint64_t kBruteAssignmentCap = std::uint64_t{1} << 26;

/// Exhaustive count of balanced symmetric functions. Throws BudgetError when
/// p^C(p + n - 1, n) exceeds kBruteAssignmentCap.
BigNat brute_count_balanced_symmetric(unsigned p, unsigned n);

/// a (x_1 + ... + x_n) + b as a symmetric function.
SymmetricFunction affine_symmetric(unsigned p, unsigned n, unsigned a, unsigned b);

bool is_affine(const SymmetricFunction& f);

/// A balanced symmetric function outside the affine family, taken from the
/// orbit-splitting generator. Empty when the generator reaches only affine
/// functions, as for n = 1 with p <= 3.
std::optional<SymmetricFunction> find_nonlinear_balanced(unsigned p, unsigned n);

}  // namespace symbal
