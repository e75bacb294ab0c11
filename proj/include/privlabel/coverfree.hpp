#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace privlabel {

bool is_prime(std::uint64_t x);

/// Least prime >= x (x >= 1). Trial division; intended for desk-scale x.
std::uint64_t smallest_prime_geq(std::uint64_t x);

/// GF(q) for prime q. Elements are integers in [0, q).
class PrimeField {
 public:
  /// Throws std::invalid_argument if q is not prime.
  explicit PrimeField(std::uint64_t q);

  std::uint64_t order() const { return q_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q_ - b) % q_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % q_; }
  std::uint64_t neg(std::uint64_t a) const { return (q_ - a) % q_; }
  /// Multiplicative inverse; throws std::domain_error for 0.
  std::uint64_t inverse(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

 private:
  std::uint64_t q_;
};

/// The family { S_g : g in Poly(d, q) } of point sets of all polynomials of
/// degree <= d over GF(q).
///
/// Set index i encodes g's coefficients as base-q digits, least significant
/// digit = constant term. Ground element (a, b) is encoded as a*q + b, so the
/// ground set is [0, q^2). Every set has exactly q elements, one per
/// abscissa, and two distinct sets share at most d elements.
class PolyFamily {
 public:
  /// Throws std::invalid_argument if q is not prime, d < 1, or q^(d+1)
  /// does not fit in 64 bits.
  PolyFamily(std::uint64_t d, std::uint64_t q);

  std::uint64_t degree() const { return d_; }
  std::uint64_t prime() const { return field_.order(); }
  std::uint64_t ground_size() const { return prime() * prime(); }
  std::uint64_t family_size() const { return family_size_; }
  const PrimeField& field() const { return field_; }

  /// Largest Delta for which the family is Delta-cover-free: ceil(q/d) - 1.
  std::uint64_t cover_free_degree() const;
  /// Largest Delta for which no Delta sets (rho+1)-cover another:
  /// ceil(q(rho+1)/d) - 1.
  std::uint64_t cover_free_degree(std::uint64_t rho) const;

  /// g(a) for the polynomial with the given index.
  std::uint64_t evaluate(std::uint64_t index, std::uint64_t a) const;
  /// Element of S_index with abscissa a.
  std::uint64_t element(std::uint64_t index, std::uint64_t a) const { return a * prime() + evaluate(index, a); }
  bool contains(std::uint64_t index, std::uint64_t element) const;
  /// S_index, ordered by abscissa.
  std::vector<std::uint64_t> set(std::uint64_t index) const;

 private:
  void check_index(std::uint64_t index) const;

  std::uint64_t d_;
  PrimeField field_;
  std::uint64_t family_size_;
};

/// Elements of S_s0 contained in at most rho of the sets S_j, j in others.
/// rho = 0 gives the elements no other set covers. Throws on invalid
/// indices or if s0 appears in others.
std::vector<std::uint64_t> residual_elements(const PolyFamily& fam, std::uint64_t s0,
                                             std::span<const std::uint64_t> others, std::uint64_t rho);

struct Exhaustive {
  std::uint64_t budget = 10'000'000;
};
struct Sampled {
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0;
};
using CoverFreeMode = std::variant<Exhaustive, Sampled>;

struct CoverFreeVerdict {
  bool cover_free = true;
  std::uint64_t tuples_checked = 0;
  /// First tuple (s0, s1..s_delta) in which s0 was (rho+1)-covered.
  std::optional<std::vector<std::uint64_t>> counterexample;
};

/// Tests whether any tuple (S0; S1..S_delta) of distinct sets has S0
/// (rho+1)-covered, i.e. every element of S0 lies in > rho of the others.
/// Exhaustive mode refuses (std::length_error) when C(n-1, delta) * n
/// exceeds the budget; it never falls back to sampling.
CoverFreeVerdict verify_cover_free(const PolyFamily& fam, std::uint64_t delta, std::uint64_t rho,
                                   const CoverFreeMode& mode);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k);

}  // namespace privlabel
