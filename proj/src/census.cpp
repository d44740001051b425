#include "symbal/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace symbal {

namespace {

void require_prime(unsigned p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

std::string pn(unsigned p, unsigned n) {
  return "(p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")";
}

// Orbit sizes feed a factorial; keep them desk-sized.
constexpr std::uint64_t kMaxOrbitFactorial = 100000;

}  // namespace

void MVector::validate() const {
  if (m.size() != n + 1) throw DomainError("MVector: expected n + 1 multiplicities");
  std::uint64_t parts = 0;
  std::uint64_t weighted = 0;
  for (unsigned l = 0; l <= n; ++l) {
    parts += m[l];
    weighted += std::uint64_t{l} * m[l];
  }
  if (parts != p || weighted != n) {
    throw DomainError("MVector: constraints violated (sum m = " + std::to_string(parts) +
                      ", sum l*m = " + std::to_string(weighted) + ") for " + pn(p, n));
  }
}

BigNat count_symmetric(unsigned p, unsigned n) {
  require_prime(p);
  const BigNat exponent = binom(p + n - 1, n);
  if (!exponent.fits_u64() || exponent.to_u64() > (std::uint64_t{1} << 20)) {
    throw BudgetError("count_symmetric: exponent C(p+n-1, n) too large for " + pn(p, n));
  }
  return BigNat::pow(p, exponent.to_u64());
}

BigNat count_balanced_all(unsigned p, unsigned n) {
  require_prime(p);
  if (n == 0) throw DomainError("count_balanced_all: requires n >= 1");
  const BigNat size = BigNat::pow(p, n);
  if (!size.fits_u64() || size.to_u64() > 65536) {
    throw BudgetError("count_balanced_all: p^n too large for exact factorials " + pn(p, n));
  }
  const std::uint64_t part = size.to_u64() / p;
  BigNat denominator(1);
  const BigNat part_fact = BigNat::factorial(part);
  for (unsigned k = 0; k < p; ++k) denominator *= part_fact;
  return BigNat::factorial(size.to_u64()).exact_div(denominator);
}

MVector mvector_of(const MultisetClass& cls) {
  MVector mv{cls.p, cls.n, std::vector<unsigned>(cls.n + 1, 0)};
  for (auto c : cls.counts) {
    if (c > cls.n) throw DomainError("mvector_of: count exceeds n");
    ++mv.m[c];
  }
  mv.validate();
  return mv;
}

BigNat orbit_size(const MVector& mv) {
  mv.validate();
  BigNat denominator(1);
  for (auto x : mv.m) denominator *= BigNat::factorial(x);
  return BigNat::factorial(mv.p).exact_div(denominator);
}

bool check_divisibility(const MVector& mv) { return orbit_size(mv).divisible_by(BigNat(mv.p)); }

std::vector<MVector> enumerate_mvectors(unsigned p, unsigned n) {
  require_prime(p);
  std::vector<MVector> out;
  std::vector<unsigned> m(n + 1, 0);
  // Assign m[n], m[n-1], ..., m[1]; m[0] absorbs the remaining parts.
  auto rec = [&](auto&& self, unsigned l, unsigned parts_left, unsigned weight_left) -> void {
    if (l == 0) {
      if (weight_left == 0) {
        m[0] = parts_left;
        out.push_back(MVector{p, n, m});
        m[0] = 0;
      }
      return;
    }
    const unsigned max_here = std::min(parts_left, weight_left / l);
    for (unsigned c = 0; c <= max_here; ++c) {
      m[l] = c;
      self(self, l - 1, parts_left - c, weight_left - c * l);
    }
    m[l] = 0;
  };
  rec(rec, n, p, n);
  std::sort(out.begin(), out.end());
  return out;
}

bool lower_bound_hypothesis(unsigned p, unsigned n) {
  if (std::gcd(n, p) == 1) return true;
  for (const auto& mv : enumerate_mvectors(p, n)) {
    for (auto x : mv.m) {
      if (x >= p) return false;
    }
  }
  return true;
}

namespace {

void require_hypothesis(unsigned p, unsigned n, const char* what) {
  require_prime(p);
  if (!lower_bound_hypothesis(p, n)) {
    throw HypothesisError(std::string(what) + ": hypothesis fails for " + pn(p, n) +
                          ": some orbit has a part multiplicity m_l >= p, so p | n and gcd(n, p) != 1");
  }
}

BigNat split_count(const BigNat& orbit, unsigned p) {
  if (!orbit.fits_u64() || orbit.to_u64() > kMaxOrbitFactorial) {
    throw BudgetError("orbit of size " + orbit.to_string() + " is too large to split exactly");
  }
  const std::uint64_t o = orbit.to_u64();
  BigNat denominator(1);
  const BigNat group_fact = BigNat::factorial(o / p);
  for (unsigned k = 0; k < p; ++k) denominator *= group_fact;
  return BigNat::factorial(o).exact_div(denominator);
}

}  // namespace

BigNat lower_bound_balanced(unsigned p, unsigned n) {
  require_hypothesis(p, n, "lower_bound_balanced");
  BigNat bound(1);
  for (const auto& mv : enumerate_mvectors(p, n)) bound *= split_count(orbit_size(mv), p);
  return bound;
}

BalancedGenerator::BalancedGenerator(unsigned p, unsigned n)
    : p_(p), n_(n), class_count_(0), reachable_(1) {
  require_hypothesis(p, n, "generate_balanced");
  const auto classes = enumerate_classes(p, n);
  class_count_ = classes.size();

  // Group classes by MVector; orbits ordered by their first class.
  std::map<MVector, std::size_t> orbit_of;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const MVector mv = mvector_of(classes[i]);
    auto [it, inserted] = orbit_of.emplace(mv, orbits_.size());
    if (inserted) orbits_.emplace_back();
    orbits_[it->second].push_back(i);
  }
  for (const auto& orbit : orbits_) {
    if (orbit.size() % p != 0) {
      throw InvariantError("generate_balanced: orbit size " + std::to_string(orbit.size()) +
                           " not divisible by p");
    }
    std::vector<std::uint32_t> labels(orbit.size());
    const std::size_t group = orbit.size() / p;
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<std::uint32_t>(i / group);
    labels_.push_back(std::move(labels));
    reachable_ *= split_count(BigNat(orbit.size()), p);
  }
}

std::optional<SymmetricFunction> BalancedGenerator::next() {
  if (exhausted_) return std::nullopt;
  std::vector<std::uint32_t> values(class_count_);
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    for (std::size_t i = 0; i < orbits_[k].size(); ++i) values[orbits_[k][i]] = labels_[k][i];
  }
  // Odometer over labelled splits; next_permutation wraps to sorted on carry.
  exhausted_ = true;
  for (auto& labels : labels_) {
    if (std::next_permutation(labels.begin(), labels.end())) {
      exhausted_ = false;
      break;
    }
  }
  return SymmetricFunction(p_, n_, std::move(values));
}

std::vector<SymmetricFunction> generate_balanced(unsigned p, unsigned n, std::size_t limit) {
  BalancedGenerator gen(p, n);
  std::vector<SymmetricFunction> out;
  while (out.size() < limit) {
    auto f = gen.next();
    if (!f) break;
    out.push_back(std::move(*f));
  }
  return out;
}

BigNat brute_count_balanced_symmetric(unsigned p, unsigned n) {
  require_prime(p);
  if (n == 0) throw DomainError("brute_count_balanced_symmetric: requires n >= 1");
  const std::size_t classes_n = class_count(p, n);
  // p^classes <= cap, checked without overflow.
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < classes_n; ++i) {
    assignments *= p;
    if (assignments > kBruteAssignmentCap) {
      throw BudgetError("brute_count_balanced_symmetric: p^" + std::to_string(classes_n) +
                        " assignments exceed the cap for " + pn(p, n));
    }
  }
  const auto classes = enumerate_classes(p, n);
  std::vector<std::uint64_t> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(c.size().to_u64());
  const std::uint64_t target = BigNat::pow(p, n - 1).to_u64();

  // Depth-first over assignments; a bucket above target can never recover.
  std::vector<std::uint64_t> bucket(p, 0);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == sizes.size()) {
      bool ok = true;
      for (auto b : bucket) ok = ok && b == target;
      count += ok ? 1 : 0;
      return;
    }
    for (unsigned v = 0; v < p; ++v) {
      if (bucket[v] + sizes[i] > target) continue;
      bucket[v] += sizes[i];
      self(self, i + 1);
      bucket[v] -= sizes[i];
    }
  };
  rec(rec, 0);
  return BigNat(count);
}

SymmetricFunction affine_symmetric(unsigned p, unsigned n, unsigned a, unsigned b) {
  require_prime(p);
  if (a >= p || b >= p) throw DomainError("affine_symmetric: coefficients must lie in GF(p)");
  const auto classes = enumerate_classes(p, n);
  std::vector<std::uint32_t> values(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    // x_1 + ... + x_n on the class is sum_j j * counts[j].
    std::uint64_t coordinate_sum = 0;
    for (unsigned j = 0; j < p; ++j) coordinate_sum += std::uint64_t{j} * classes[i].counts[j];
    values[i] = static_cast<std::uint32_t>((a * (coordinate_sum % p) + b) % p);
  }
  return SymmetricFunction(p, n, std::move(values));
}

bool is_affine(const SymmetricFunction& f) {
  for (unsigned a = 0; a < f.p(); ++a) {
    for (unsigned b = 0; b < f.p(); ++b) {
      if (affine_symmetric(f.p(), f.n(), a, b) == f) return true;
    }
  }
  return false;
}

std::optional<SymmetricFunction> find_nonlinear_balanced(unsigned p, unsigned n) {
  BalancedGenerator gen(p, n);
  // Only p(p-1) affine functions are balanced, so p(p-1) + 1 distinct draws suffice.
  const std::uint64_t draws = std::uint64_t{p} * (p - 1) + 1;
  for (std::uint64_t i = 0; i < draws; ++i) {
    auto f = gen.next();
    if (!f) break;
    if (!is_affine(*f)) return f;
  }
  return std::nullopt;
}

}  // namespace symbal
