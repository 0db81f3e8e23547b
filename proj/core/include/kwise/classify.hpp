#ifndef KWISE_CLASSIFY_HPP
#define KWISE_CLASSIFY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kwise/ideals.hpp"
#include "kwise/numeric.hpp"

namespace kwise {

// A tuple of n >= 2 ideals drawn from one field.
using IdealTuple = std::vector<IdealFactorization>;

// Indicator of k-wise relative r-primality: 1 iff for every prime ideal,
// at most k-1 members are divisible by its r-th power.
bool is_kwise_rprime(std::span<const IdealFactorization> items, unsigned k, unsigned r);

// Independent oracle: scan all C(n,k) subsets; a subset fails iff the
// gcd of its members is divisible by some r-th prime power.
bool is_kwise_rprime_by_subsets(std::span<const IdealFactorization> items, unsigned k,
                                unsigned r);

// Single-prime value of the Mobius transform of the indicator, on one
// exponent column (nu_1, ..., nu_n):
//   1                         if all nu_i = 0,
//   (-1)^(m-k+1) C(m-1, k-1)  if all nu_i in {0, r} and m = #{nu_i = r} >= k,
//   0                         otherwise.
long long mobius_weight_local(unsigned n, unsigned k, unsigned r,
                              std::span<const unsigned> exponents);

// Multiplicative assembly of mobius_weight_local over the prime support
// of the tuple, with zero short-circuit.
BigInt mobius_weight(std::span<const IdealFactorization> items, unsigned k, unsigned r);

// Defining convolution, evaluated directly:
//   sum over all splittings a_i = d_i e_i of indicator(d) mu(e_1)...mu(e_n).
// The cap bounds the product of divisor counts.
BigInt mobius_weight_by_convolution(std::span<const IdealFactorization> items, unsigned k,
                                    unsigned r, std::uint64_t cap = 4'000'000);

// Checks indicator(a) = sum over divisor tuples d_i | a_i of the weight.
bool mobius_inversion_holds(std::span<const IdealFactorization> items, unsigned k, unsigned r,
                            std::uint64_t cap = 4'000'000);

}  // namespace kwise

#endif  // KWISE_CLASSIFY_HPP
