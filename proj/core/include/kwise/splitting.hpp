#ifndef KWISE_SPLITTING_HPP
#define KWISE_SPLITTING_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kwise/field.hpp"
#include "kwise/polymod.hpp"

namespace kwise {

class ResourceLimitError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One splitting shape above a rational prime: g distinct prime ideals,
// each with residue degree f (norm p^f) and ramification exponent e.
// Sum of e*f*g over the classes above p equals the field degree.
struct PrimeClass {
  std::uint64_t p = 0;
  unsigned f = 1;
  unsigned e = 1;
  unsigned g = 1;
  // Polynomial fields only: the reduction was not squarefree, so e (and
  // in principle the whole shape) rests on an uncertified Dedekind step.
  bool uncertain = false;

  friend auto operator<=>(const PrimeClass&, const PrimeClass&) = default;
};

// Label for one prime ideal. The index distinguishes ideals sharing
// (p, f); it carries no arithmetic content beyond distinctness.
struct PrimeIdealId {
  std::uint64_t p = 0;
  unsigned f = 1;
  unsigned index = 0;

  friend auto operator<=>(const PrimeIdealId&, const PrimeIdealId&) = default;
};

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

// Ascending primes <= limit (segmented sieve).
std::vector<std::uint64_t> rational_primes_up_to(std::uint64_t limit,
                                                 std::uint64_t cap = kDefaultSieveCap);

// p_1 = 2.
std::uint64_t nth_prime(std::uint64_t n, std::uint64_t cap = kDefaultSieveCap);

// Standard Kronecker symbol (a|b), b != 0.
int kronecker_symbol(std::int64_t a, std::int64_t b);

// Least t >= 1 with a^t = 1 (mod m); requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

struct FactorDegrees {
  // (degree, count) for the squarefree part, ascending in degree.
  std::vector<std::pair<unsigned, unsigned>> degrees;
  // Degree lost when passing to the squarefree part.
  unsigned removed_multiplicity = 0;
};

// Distinct-degree census of a monic polynomial mod p.
FactorDegrees distinct_degree_factor_degrees(const polymod::Poly& poly, std::uint64_t p);

// Splitting shapes above p, sorted by (f, e). Memoized per field.
std::vector<PrimeClass> split_prime(const NumberField& field, std::uint64_t p);

}  // namespace kwise

#endif  // KWISE_SPLITTING_HPP
