#ifndef KWISE_IDEALS_HPP
#define KWISE_IDEALS_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "kwise/field.hpp"
#include "kwise/numeric.hpp"
#include "kwise/splitting.hpp"

namespace kwise {

// An ideal as a sorted exponent vector over prime-ideal labels. The unit
// ideal (1) is the empty vector. Norm = prod p^(f * exponent).
struct IdealFactorization {
  std::vector<std::pair<PrimeIdealId, unsigned>> factors;

  bool is_unit() const { return factors.empty(); }
  BigInt norm() const;

  friend bool operator==(const IdealFactorization&, const IdealFactorization&) = default;
  // Lexicographic over the sorted factor list; part of the enumeration
  // order contract.
  friend std::strong_ordering operator<=>(const IdealFactorization& a,
                                          const IdealFactorization& b) {
    return a.factors <=> b.factors;
  }
};

IdealFactorization make_ideal(std::vector<std::pair<PrimeIdealId, unsigned>> factors);

// Every ideal of norm <= x, sorted by (norm, factorization), with the
// supporting prime-ideal list. Immutable once built.
struct IdealUniverse {
  NumberField field;
  std::uint64_t x = 1;
  std::vector<PrimeIdealId> primes;
  std::vector<std::uint64_t> prime_norms;  // parallel to primes
  std::vector<IdealFactorization> ideals;
  std::vector<std::uint64_t> norms;  // parallel to ideals, nondecreasing

  std::uint64_t size() const { return ideals.size(); }
  // H(y) for y <= x, by binary search on the sorted norm list.
  std::uint64_t count_norm_at_most(std::uint64_t y) const;
  // Line-oriented dump: norm<TAB>p^f#idx:e,...
  void dump(std::ostream& os) const;
};

inline constexpr std::uint64_t kDefaultUniverseCap = 10'000'000;
inline constexpr std::uint64_t kMaxUniverseNormBound = std::uint64_t(1) << 62;

// Labels of the prime ideals with norm p^f <= x, ordered by (p, f, index).
std::vector<PrimeIdealId> prime_ideals_up_to(const NumberField& field, std::uint64_t x);

IdealUniverse enumerate_ideals(const NumberField& field, std::uint64_t x,
                               std::uint64_t cap = kDefaultUniverseCap);

// H(x) without materializing the universe.
std::uint64_t ideal_count(const NumberField& field, std::uint64_t x,
                          std::uint64_t cap = kDefaultUniverseCap);

// 0 if any exponent >= 2, else (-1)^(number of prime factors).
int mobius(const IdealFactorization& a);

// All divisors, lexicographic over exponent tuples (first factor most
// significant); size = prod (e_i + 1).
std::vector<IdealFactorization> divisors(const IdealFactorization& a);

// Exponent-wise minimum over the shared prime support.
IdealFactorization gcd_ideal(std::span<const IdealFactorization> items);

// Exponent-wise sum (ideal product).
IdealFactorization multiply(const IdealFactorization& a, const IdealFactorization& b);

}  // namespace kwise

#endif  // KWISE_IDEALS_HPP
