#ifndef KWISE_PRODUCT_HPP
#define KWISE_PRODUCT_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "kwise/field.hpp"
#include "kwise/splitting.hpp"

namespace kwise {

// Requested precision cannot be honored in double arithmetic.
class PrecisionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr unsigned kMaxDigits = 6;

struct ProbabilityQuery {
  NumberField field;
  unsigned n = 2;
  unsigned k = 2;
  unsigned r = 1;
  // Digits mode (default): choose the prime count so the result carries
  // t correct decimals. Alternatively fix the prime count directly.
  unsigned digits = 4;
  std::uint64_t explicit_primes = 0;  // 0 = digits mode
  unsigned threads = 1;               // 0 = hardware concurrency
};

struct ProbabilityResult {
  double value = 0.0;
  std::uint64_t primes_used = 0;  // N
  std::uint64_t last_prime = 0;   // p_N
  double error_bound = 0.0;       // bound on the truncation error of -log P
  bool caveat = false;            // polynomial-field splitting uncertainty
  bool digits_mode = false;
  unsigned digits = 0;
};

// Smallest admissible N for t-decimal accuracy:
//   max( ceil((d (n-1)^2 10^t + n - 3) / 2), 5, least N with p_N > n-1 ).
std::uint64_t required_primes(unsigned degree, unsigned n, unsigned digits);

// Tail bound after N primes: d (n-1)^2 / (2 (2N - n + 3)).
// Requires N >= 5 and p_N > n - 1.
double truncation_bound(unsigned degree, unsigned n, std::uint64_t N);

// Truncated Euler product for the probability that n ideals are k-wise
// relatively r-prime. Deterministic for any thread count.
ProbabilityResult probability(const ProbabilityQuery& query);

// Truncated Euler product of the Dedekind zeta function at real s > 1,
// over rational primes p <= prime_limit.
double dedekind_zeta(const NumberField& field, double s, std::uint64_t prime_limit,
                     unsigned threads = 1);

// True iff the sum of the j smallest entries exceeds 1/r for every
// j in [k, n]: the absolute-convergence region of the cofactor below.
bool in_convergence_region(const std::vector<double>& s, unsigned k, unsigned r);

// Euler cofactor of zeta_K(s_1)...zeta_K(s_n) in the Dirichlet series of
// the k-wise r-primality indicator:
//   prod_p [ 1 - sum_{j=k}^n (-1)^{j-k} C(j-1,k-1) e_j(N(p)^{-r s_1}, ...) ].
// At s = (1,...,1) this equals the probability product over the same primes.
double zeta_cofactor(const NumberField& field, const std::vector<double>& s, unsigned k,
                     unsigned r, std::uint64_t prime_limit);

}  // namespace kwise

#endif  // KWISE_PRODUCT_HPP
