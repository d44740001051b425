#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symbal/bignat.hpp"
#include "symbal/exactnum.hpp"

namespace symbal {

/// Representative of a permutation orbit of GF(p)^n: counts[j] is the number
/// of coordinates equal to j.
struct MultisetClass {
  unsigned p = 2;
  unsigned n = 0;
  std::vector<unsigned> counts;

  /// Number of vectors in the orbit, multinomial(n, counts).
  BigNat size() const;

  friend bool operator==(const MultisetClass&, const MultisetClass&) = default;
};

/// All classes for (p, n) in lexicographic order of counts.
/// Length is C(p + n - 1, n). Throws DomainError if p is not prime.
std::vector<MultisetClass> enumerate_classes(unsigned p, unsigned n);

/// Position of `counts` in the enumerate_classes order.
std::size_t class_index(unsigned p, unsigned n, std::span<const unsigned> counts);

/// Number of classes for (p, n), checked to fit in size_t.
std::size_t class_count(unsigned p, unsigned n);

/// A GF(p)-valued symmetric function, one value per class in canonical order.
class SymmetricFunction {
 public:
  SymmetricFunction(unsigned p, unsigned n, std::vector<std::uint32_t> values);

  unsigned p() const { return p_; }
  unsigned n() const { return n_; }
  const std::vector<std::uint32_t>& values() const { return values_; }
  std::uint32_t operator[](std::size_t class_idx) const { return values_[class_idx]; }

  friend bool operator==(const SymmetricFunction&, const SymmetricFunction&) = default;
  friend auto operator<=>(const SymmetricFunction&, const SymmetricFunction&) = default;

 private:
  unsigned p_;
  unsigned n_;
  std::vector<std::uint32_t> values_;
};

/// Boolean symmetric function as v(0..n), v(j) = f(x) for wt(x) = j.
struct WeightFunction {
  unsigned n = 0;
  Bits v;

  static WeightFunction from_bits(const Bits& v);
  std::uint8_t operator()(unsigned weight) const { return v[weight]; }
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

/// Coefficients lambda(0..n) of f = XOR_d lambda(d) X(d, n).
struct AnfVector {
  unsigned n = 0;
  Bits lambda;

  static AnfVector from_bits(const Bits& lambda);
  friend bool operator==(const AnfVector&, const AnfVector&) = default;
};

/// j is bitwise dominated by i: every binary digit of j is <= that of i.
constexpr bool dominated(std::uint64_t j, std::uint64_t i) { return (j & i) == j; }

/// For each k in GF(p), the number of inputs x with f(x) = k.
std::vector<BigNat> balance_histogram(const SymmetricFunction& f);

/// Every bucket of balance_histogram equals p^(n-1). Throws DomainError for n = 0.
bool is_balanced(const SymmetricFunction& f);

/// Lift a weight-indexed Boolean function to the class representation (p = 2).
SymmetricFunction to_symmetric(const WeightFunction& f);

/// Number of inputs with f(x) = 1.
BigNat weight(const WeightFunction& f);

/// v(j) = C(j, d) mod 2, the value table of X(d, n). Requires 1 <= d <= n.
WeightFunction elem_values(unsigned d, unsigned n);

/// wt(X(d, n)) = sum of C(n, i) over d dominated by i <= n.
BigNat weight_elem(unsigned d, unsigned n);

/// sum_j C(n, j) (-1)^C(j, d); zero exactly when X(d, n) is balanced.
BigInt elem_signed_sum(unsigned d, unsigned n);

/// Balancedness of X(d, n). Decided by the weight and cross-checked against
/// elem_signed_sum; a disagreement throws InvariantError.
bool is_balanced_elem(unsigned d, unsigned n);

/// Moebius pair over the domination order.
WeightFunction values_from_anf(const AnfVector& anf);
AnfVector anf_from_values(const WeightFunction& f);

}  // namespace symbal
