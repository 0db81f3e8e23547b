#ifndef KWISE_EXPERIMENT_HPP
#define KWISE_EXPERIMENT_HPP

#include <cstdint>
#include <vector>

#include "kwise/classify.hpp"
#include "kwise/ideals.hpp"
#include "kwise/numeric.hpp"
#include "kwise/product.hpp"

namespace kwise {

struct ExactCount {
  std::uint64_t x = 1;
  unsigned n = 2, k = 2, r = 1;
  BigInt favorable = 0;  // k-wise relatively r-prime tuples
  BigInt total = 0;      // H(x)^n
  double ratio = 0.0;
};

inline constexpr std::uint64_t kDefaultExactCap = 100'000'000;

// Exact count over all H(x)^n ordered tuples from the universe.
ExactCount count_tuples_exhaustive(const IdealUniverse& universe, unsigned n, unsigned k,
                                   unsigned r, std::uint64_t cap = kDefaultExactCap,
                                   unsigned threads = 1);

// The same count through the divisor-sum identity: sum over tuples of
// r-th powers of squarefree ideals d_i with nonzero Mobius weight of
// weight(d) * prod H(x / N(d_i)). Must agree exactly with the
// exhaustive route.
ExactCount count_tuples_by_mobius(const IdealUniverse& universe, unsigned n, unsigned k,
                                  unsigned r, std::uint64_t cap = kDefaultExactCap);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t x = 1;
};

// Seeded counter-based sampling of index tuples, uniform over the
// universe. Identical (seed, samples) give identical estimates for any
// worker count.
MonteCarloEstimate empirical_probability(const IdealUniverse& universe, unsigned n, unsigned k,
                                         unsigned r, std::uint64_t samples, std::uint64_t seed,
                                         unsigned threads = 1);

struct ConvergenceRow {
  std::uint64_t x = 1;
  std::uint64_t ideal_count = 0;  // H(x)
  double ratio = 0.0;             // exact ratio or Monte-Carlo mean
  bool exact = true;
  double probability = 0.0;  // limiting value
  double gap = 0.0;          // |ratio - probability|
};

struct ConvergenceOptions {
  std::uint64_t exact_cap = 2'000'000;  // switch to sampling above this tuple count
  std::uint64_t samples = 100'000;
  std::uint64_t seed = 1;
  unsigned digits = 4;
  unsigned threads = 1;
};

std::vector<ConvergenceRow> convergence_table(const NumberField& field, unsigned n, unsigned k,
                                              unsigned r,
                                              const std::vector<std::uint64_t>& x_values,
                                              const ConvergenceOptions& options = {});

}  // namespace kwise

#endif  // KWISE_EXPERIMENT_HPP
