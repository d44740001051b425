#include "symbal/symfun.hpp"

#include <string>

#include "symbal/errors.hpp"

namespace symbal {

namespace {

void require_prime(unsigned p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

void require_degree(unsigned d, unsigned n) {
  if (d < 1 || d > n) {
    throw DomainError("degree d = " + std::to_string(d) + " must satisfy 1 <= d <= n = " +
                      std::to_string(n));
  }
}

// Compositions of m into k ordered non-negative parts.
BigNat compositions(unsigned m, unsigned k) {
  if (k == 0) return BigNat(m == 0 ? 1 : 0);
  return binom(m + k - 1, k - 1);
}

}  // namespace

BigNat MultisetClass::size() const { return multinomial(n, counts); }

std::size_t class_count(unsigned p, unsigned n) {
  require_prime(p);
  const BigNat c = binom(p + n - 1, n);
  if (!c.fits_u64() || c > BigNat(std::uint64_t{1} << 40)) {
    throw BudgetError("class count C(" + std::to_string(p + n - 1) + ", " + std::to_string(n) +
                      ") is too large to materialize");
  }
  return static_cast<std::size_t>(c.to_u64());
}

std::vector<MultisetClass> enumerate_classes(unsigned p, unsigned n) {
  std::vector<MultisetClass> out;
  out.reserve(class_count(p, n));
  std::vector<unsigned> counts(p, 0);
  // Lexicographic odometer: the last part absorbs the remainder.
  auto rec = [&](auto&& self, unsigned pos, unsigned remaining) -> void {
    if (pos + 1 == p) {
      counts[pos] = remaining;
      out.push_back(MultisetClass{p, n, counts});
      return;
    }
    for (unsigned c = 0; c <= remaining; ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::size_t class_index(unsigned p, unsigned n, std::span<const unsigned> counts) {
  if (counts.size() != p) throw DomainError("class_index: expected " + std::to_string(p) + " counts");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total != n) throw DomainError("class_index: counts do not sum to n");
  std::uint64_t rank = 0;
  unsigned remaining = n;
  for (unsigned pos = 0; pos + 1 < p; ++pos) {
    for (unsigned x = 0; x < counts[pos]; ++x) {
      rank += compositions(remaining - x, p - pos - 1).to_u64();
    }
    remaining -= counts[pos];
  }
  return static_cast<std::size_t>(rank);
}

SymmetricFunction::SymmetricFunction(unsigned p, unsigned n, std::vector<std::uint32_t> values)
    : p_(p), n_(n), values_(std::move(values)) {
  const std::size_t expected = class_count(p, n);
  if (values_.size() != expected) {
    throw DomainError("SymmetricFunction: expected " + std::to_string(expected) + " class values, got " +
                      std::to_string(values_.size()));
  }
  for (auto v : values_) {
    if (v >= p) throw DomainError("SymmetricFunction: value " + std::to_string(v) + " outside GF(p)");
  }
}

WeightFunction WeightFunction::from_bits(const Bits& v) {
  if (v.empty()) throw DomainError("WeightFunction: needs n + 1 >= 1 values");
  for (auto b : v) {
    if (b > 1) throw DomainError("WeightFunction: values must be 0 or 1");
  }
  return WeightFunction{static_cast<unsigned>(v.size() - 1), v};
}

AnfVector AnfVector::from_bits(const Bits& lambda) {
  if (lambda.empty()) throw DomainError("AnfVector: needs n + 1 >= 1 coefficients");
  for (auto b : lambda) {
    if (b > 1) throw DomainError("AnfVector: coefficients must be 0 or 1");
  }
  return AnfVector{static_cast<unsigned>(lambda.size() - 1), lambda};
}

std::vector<BigNat> balance_histogram(const SymmetricFunction& f) {
  std::vector<BigNat> buckets(f.p(), BigNat(0));
  const auto classes = enumerate_classes(f.p(), f.n());
  for (std::size_t i = 0; i < classes.size(); ++i) buckets[f[i]] += classes[i].size();
  return buckets;
}

bool is_balanced(const SymmetricFunction& f) {
  if (f.n() == 0) throw DomainError("is_balanced: undefined for n = 0");
  const BigNat target = BigNat::pow(f.p(), f.n() - 1);
  bool balanced = true;
  for (const auto& bucket : balance_histogram(f)) balanced = balanced && bucket == target;
  return balanced;
}

SymmetricFunction to_symmetric(const WeightFunction& f) {
  // Class k in lexicographic order is (i_0, i_1) = (k, n - k), i.e. weight n - k.
  std::vector<std::uint32_t> values(f.n + 1);
  for (unsigned k = 0; k <= f.n; ++k) values[k] = f.v[f.n - k];
  return SymmetricFunction(2, f.n, std::move(values));
}

BigNat weight(const WeightFunction& f) {
  const auto row = binomial_row(f.n);
  BigNat w(0);
  for (unsigned j = 0; j <= f.n; ++j) {
    if (f.v[j]) w += (*row)[j];
  }
  return w;
}

WeightFunction elem_values(unsigned d, unsigned n) {
  require_degree(d, n);
  Bits v(n + 1);
  for (unsigned j = 0; j <= n; ++j) v[j] = static_cast<std::uint8_t>(binom_mod_p(j, d, 2));
  return WeightFunction{n, std::move(v)};
}

BigNat weight_elem(unsigned d, unsigned n) {
  require_degree(d, n);
  const auto row = binomial_row(n);
  BigNat w(0);
  for (unsigned i = d; i <= n; ++i) {
    if (dominated(d, i)) w += (*row)[i];
  }
  return w;
}

BigInt elem_signed_sum(unsigned d, unsigned n) {
  require_degree(d, n);
  const auto row = binomial_row(n);
  BigInt s = 0;
  for (unsigned j = 0; j <= n; ++j) {
    if (binom_mod_p(j, d, 2) == 0) {
      s += (*row)[j].value();
    } else {
      s -= (*row)[j].value();
    }
  }
  return s;
}

bool is_balanced_elem(unsigned d, unsigned n) {
  const bool by_weight = weight_elem(d, n) == BigNat::pow2(n - 1);
  const bool by_signed_sum = elem_signed_sum(d, n) == 0;
  if (by_weight != by_signed_sum) {
    throw InvariantError("is_balanced_elem: weight and signed-sum criteria disagree at d=" +
                         std::to_string(d) + ", n=" + std::to_string(n));
  }
  return by_weight;
}

namespace {

// XOR over the down-set {j : j dominated by i, j <= n}.
Bits domination_transform(const Bits& in) {
  const std::size_t len = in.size();
  Bits out(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    std::uint8_t acc = 0;
    // Walk submasks of i.
    for (std::size_t j = i;; j = (j - 1) & i) {
      acc ^= in[j];
      if (j == 0) break;
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace

WeightFunction values_from_anf(const AnfVector& anf) {
  return WeightFunction{anf.n, domination_transform(anf.lambda)};
}

AnfVector anf_from_values(const WeightFunction& f) { return AnfVector{f.n, domination_transform(f.v)}; }

}  // namespace symbal
