#include "privlabel/coverfree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "privlabel/random_stream.hpp"

namespace privlabel {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  if (x % 2 == 0) return x == 2;
  for (std::uint64_t f = 3; f * f <= x; f += 2) {
    if (x % f == 0) return false;
  }
  return true;
}

std::uint64_t smallest_prime_geq(std::uint64_t x) {
  std::uint64_t c = std::max<std::uint64_t>(x, 2);
  while (!is_prime(c)) ++c;
  return c;
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (!is_prime(q)) throw std::invalid_argument("field order " + std::to_string(q) + " is not prime");
  if (q >= (1ull << 32)) throw std::invalid_argument("field order must be below 2^32");
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1 % q_;
  a %= q_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inverse(std::uint64_t a) const {
  if (a % q_ == 0) throw std::domain_error("zero has no inverse");
  return pow(a, q_ - 2);
}

PolyFamily::PolyFamily(std::uint64_t d, std::uint64_t q) : d_(d), field_(q), family_size_(1) {
  if (d < 1) throw std::invalid_argument("polynomial degree bound must be >= 1");
  for (std::uint64_t i = 0; i <= d; ++i) {
    if (family_size_ > std::numeric_limits<std::uint64_t>::max() / q) {
      throw std::invalid_argument("q^(d+1) overflows 64 bits");
    }
    family_size_ *= q;
  }
}

std::uint64_t PolyFamily::cover_free_degree() const { return cover_free_degree(0); }

std::uint64_t PolyFamily::cover_free_degree(std::uint64_t rho) const {
  const std::uint64_t num = prime() * (rho + 1);
  return (num + d_ - 1) / d_ - 1;
}

void PolyFamily::check_index(std::uint64_t index) const {
  if (index >= family_size_) {
    throw std::out_of_range("set index " + std::to_string(index) + " outside family of size " +
                            std::to_string(family_size_));
  }
}

std::uint64_t PolyFamily::evaluate(std::uint64_t index, std::uint64_t a) const {
  check_index(index);
  const std::uint64_t q = prime();
  // Horner from the highest coefficient down.
  std::uint64_t digits[64];
  std::uint64_t rest = index;
  for (std::uint64_t i = 0; i <= d_; ++i) {
    digits[i] = rest % q;
    rest /= q;
  }
  std::uint64_t acc = 0;
  for (std::uint64_t i = d_ + 1; i-- > 0;) acc = field_.add(field_.mul(acc, a), digits[i]);
  return acc;
}

bool PolyFamily::contains(std::uint64_t index, std::uint64_t element) const {
  const std::uint64_t q = prime();
  if (element >= q * q) return false;
  return evaluate(index, element / q) == element % q;
}

std::vector<std::uint64_t> PolyFamily::set(std::uint64_t index) const {
  std::vector<std::uint64_t> out(prime());
  for (std::uint64_t a = 0; a < prime(); ++a) out[a] = element(index, a);
  return out;
}

std::vector<std::uint64_t> residual_elements(const PolyFamily& fam, std::uint64_t s0,
                                             std::span<const std::uint64_t> others, std::uint64_t rho) {
  const std::uint64_t q = fam.prime();
  std::vector<std::uint64_t> base(q);
  for (std::uint64_t a = 0; a < q; ++a) base[a] = fam.evaluate(s0, a);
  std::vector<std::uint64_t> hits(q, 0);
  for (std::uint64_t j : others) {
    if (j == s0) throw std::invalid_argument("residual_elements: s0 listed among the covering sets");
    for (std::uint64_t a = 0; a < q; ++a) {
      if (fam.evaluate(j, a) == base[a]) ++hits[a];
    }
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a < q; ++a) {
    if (hits[a] <= rho) out.push_back(a * q + base[a]);
  }
  return out;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(acc);
}

namespace {

/// Evaluation table values[index * q + a] = g_index(a).
std::vector<std::uint32_t> evaluation_table(const PolyFamily& fam) {
  const std::uint64_t q = fam.prime();
  std::vector<std::uint32_t> table(fam.family_size() * q);
  for (std::uint64_t i = 0; i < fam.family_size(); ++i)
    for (std::uint64_t a = 0; a < q; ++a) table[i * q + a] = static_cast<std::uint32_t>(fam.evaluate(i, a));
  return table;
}

bool covered(const std::vector<std::uint32_t>& table, std::uint64_t q, std::uint64_t s0,
             std::span<const std::uint64_t> others, std::uint64_t rho) {
  for (std::uint64_t a = 0; a < q; ++a) {
    const std::uint32_t y = table[s0 * q + a];
    std::uint64_t hits = 0;
    for (std::uint64_t j : others) hits += table[j * q + a] == y;
    if (hits <= rho) return false;
  }
  return true;
}

}  // namespace

CoverFreeVerdict verify_cover_free(const PolyFamily& fam, std::uint64_t delta, std::uint64_t rho,
                                   const CoverFreeMode& mode) {
  const std::uint64_t n = fam.family_size();
  const std::uint64_t q = fam.prime();
  if (n == 0 || delta > n - 1) throw std::invalid_argument("delta exceeds the number of other sets");
  if (n > 50'000'000) throw std::length_error("family too large to tabulate");
  const auto table = evaluation_table(fam);
  CoverFreeVerdict verdict;
  std::vector<std::uint64_t> others(delta);

  auto record = [&](std::uint64_t s0) {
    verdict.cover_free = false;
    std::vector<std::uint64_t> tuple{s0};
    tuple.insert(tuple.end(), others.begin(), others.end());
    verdict.counterexample = std::move(tuple);
  };

  if (const auto* ex = std::get_if<Exhaustive>(&mode)) {
    const std::uint64_t per = binomial_saturating(n - 1, delta);
    if (per == std::numeric_limits<std::uint64_t>::max() || per > ex->budget / n) {
      throw std::length_error("exhaustive cover-free check needs C(" + std::to_string(n - 1) + "," +
                              std::to_string(delta) + ")*" + std::to_string(n) + " tuples, over budget " +
                              std::to_string(ex->budget));
    }
    // Combinations of positions 0..n-2 over the n-1 indices other than s0.
    std::vector<std::uint64_t> pos(delta);
    for (std::uint64_t s0 = 0; s0 < n; ++s0) {
      for (std::uint64_t i = 0; i < delta; ++i) pos[i] = i;
      for (;;) {
        for (std::uint64_t i = 0; i < delta; ++i) others[i] = pos[i] < s0 ? pos[i] : pos[i] + 1;
        ++verdict.tuples_checked;
        if (covered(table, q, s0, others, rho)) {
          record(s0);
          return verdict;
        }
        std::int64_t i = static_cast<std::int64_t>(delta) - 1;
        while (i >= 0 && pos[i] == n - 1 - delta + static_cast<std::uint64_t>(i)) --i;
        if (i < 0) break;
        ++pos[i];
        for (std::uint64_t j = static_cast<std::uint64_t>(i) + 1; j < delta; ++j) pos[j] = pos[j - 1] + 1;
      }
    }
    return verdict;
  }

  const auto& sm = std::get<Sampled>(mode);
  RandomStream rng(sm.seed, 0x636F766572ull);
  for (std::uint64_t t = 0; t < sm.trials; ++t) {
    const std::uint64_t s0 = rng.uniform(n);
    for (std::uint64_t i = 0; i < delta; ++i) {
      for (;;) {
        const std::uint64_t c = rng.uniform(n);
        if (c == s0 || std::find(others.begin(), others.begin() + i, c) != others.begin() + i) continue;
        others[i] = c;
        break;
      }
    }
    ++verdict.tuples_checked;
    if (covered(table, q, s0, others, rho)) {
      record(s0);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace privlabel
