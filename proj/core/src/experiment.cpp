#include "kwise/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "kwise/combinatorics.hpp"
#include "kwise/rng.hpp"

namespace kwise {

namespace {

void check_params(unsigned n, unsigned k, unsigned r) {
  if (n < 2 || k < 2 || k > n || r < 1)
    throw std::invalid_argument("experiment: need n >= k >= 2 and r >= 1");
}

BigInt pow_big(std::uint64_t base, unsigned exp) {
  BigInt b = base, out = 1;
  for (unsigned i = 0; i < exp; ++i) out *= b;
  return out;
}

}  // namespace

ExactCount count_tuples_exhaustive(const IdealUniverse& universe, unsigned n, unsigned k,
                                   unsigned r, std::uint64_t cap, unsigned threads) {
  check_params(n, k, r);
  const std::uint64_t size = universe.size();
  if (size == 0) throw std::invalid_argument("count_tuples_exhaustive: empty universe");

  BigInt total = pow_big(size, n);
  if (total > cap)
    throw ResourceLimitError("count_tuples_exhaustive: H(x)^n exceeds cap");

  // Partition on the outermost index; the count is an exact integer, so
  // any reduction order gives the same result.
  std::vector<std::uint64_t> partial(size, 0);
  parallel_chunks(size, threads, [&](std::size_t first) {
    std::vector<const IdealFactorization*> refs(n);
    std::vector<IdealFactorization> tuple(n);
    std::vector<std::uint64_t> index(n, 0);
    index[0] = first;
    tuple[0] = universe.ideals[first];
    std::uint64_t hits = 0;
    // Odometer over the remaining n-1 positions.
    while (true) {
      for (unsigned i = 1; i < n; ++i) tuple[i] = universe.ideals[index[i]];
      if (is_kwise_rprime(tuple, k, r)) ++hits;
      unsigned pos = n;
      bool done = true;
      while (pos-- > 1) {
        if (index[pos] + 1 < size) {
          ++index[pos];
          std::fill(index.begin() + pos + 1, index.end(), 0);
          done = false;
          break;
        }
      }
      if (done) break;
    }
    partial[first] = hits;
  });

  ExactCount out;
  out.x = universe.x;
  out.n = n;
  out.k = k;
  out.r = r;
  out.total = total;
  BigInt favorable = 0;
  for (std::uint64_t h : partial) favorable += h;
  out.favorable = favorable;
  out.ratio = static_cast<double>(BigRational(favorable, total));
  return out;
}

ExactCount count_tuples_by_mobius(const IdealUniverse& universe, unsigned n, unsigned k,
                                  unsigned r, std::uint64_t cap) {
  check_params(n, k, r);
  const std::uint64_t x = universe.x;
  if (universe.size() == 0) throw std::invalid_argument("count_tuples_by_mobius: empty universe");

  // Candidate d_i: r-th powers of squarefree ideals with norm <= x. Only
  // these carry nonzero weight. The unit ideal comes first.
  struct Candidate {
    IdealFactorization power;          // b^r
    std::vector<std::size_t> support;  // indices into `universe.primes`
    std::uint64_t h;                   // H(x / norm(b^r))
  };
  std::vector<Candidate> candidates;
  candidates.push_back(Candidate{IdealFactorization{}, {}, universe.count_norm_at_most(x)});

  // Enumerate squarefree supports over the universe's prime list with
  // norm(b)^r <= x.
  const auto& prime_norms = universe.prime_norms;
  std::vector<std::size_t> stack;
  auto norm_pow_r_at_most_x = [&](std::uint64_t norm) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < r; ++i) {
      if (acc > x / norm) return std::pair(false, std::uint64_t(0));
      acc *= norm;
    }
    return std::pair(true, acc);
  };
  auto emit = [&](std::uint64_t powered_norm) {
    Candidate c;
    for (std::size_t idx : stack) c.power.factors.emplace_back(universe.primes[idx], r);
    c.support = stack;
    c.h = universe.count_norm_at_most(x / powered_norm);
    candidates.push_back(std::move(c));
  };
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t from,
                                                             std::uint64_t norm) {
    for (std::size_t i = from; i < prime_norms.size(); ++i) {
      if (norm > x / prime_norms[i]) continue;
      std::uint64_t next = norm * prime_norms[i];
      auto [fits, powered] = norm_pow_r_at_most_x(next);
      if (!fits) continue;
      stack.push_back(i);
      emit(powered);
      walk(i + 1, next);
      stack.pop_back();
    }
  };
  walk(0, 1);

  BigInt tuple_combinations = pow_big(candidates.size(), n);
  if (tuple_combinations > cap)
    throw ResourceLimitError("count_tuples_by_mobius: candidate tuple count exceeds cap");

  // Iterate candidate tuples; the weight is a product over the union
  // support of (-1)^(m-k+1) C(m-1, k-1) where m counts members whose
  // squarefree base contains the prime (m in [1, k) kills the term).
  const std::size_t prime_count = universe.primes.size();
  std::vector<unsigned> occurrences(prime_count, 0);
  std::vector<std::size_t> pick(n, 0);
  BigInt favorable = 0;

  while (true) {
    bool viable = true;
    for (std::size_t i = 0; i < prime_count; ++i) occurrences[i] = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t idx : candidates[pick[i]].support) ++occurrences[idx];

    BigInt weight = 1;
    for (std::size_t i = 0; i < prime_count && viable; ++i) {
      unsigned m = occurrences[i];
      if (m == 0) continue;
      if (m < k) {
        viable = false;
        break;
      }
      BigInt mag = binomial(m - 1, k - 1);
      weight *= ((m - k + 1) % 2 == 0) ? mag : -mag;
    }

    if (viable) {
      BigInt h_product = 1;
      for (std::size_t i = 0; i < n; ++i) h_product *= candidates[pick[i]].h;
      favorable += weight * h_product;
    }

    std::size_t pos = n;
    bool done = true;
    while (pos-- > 0) {
      if (pick[pos] + 1 < candidates.size()) {
        ++pick[pos];
        std::fill(pick.begin() + pos + 1, pick.end(), 0);
        done = false;
        break;
      }
    }
    if (done) break;
  }

  ExactCount out;
  out.x = x;
  out.n = n;
  out.k = k;
  out.r = r;
  out.favorable = favorable;
  out.total = pow_big(universe.size(), n);
  out.ratio = static_cast<double>(BigRational(favorable, out.total));
  return out;
}

MonteCarloEstimate empirical_probability(const IdealUniverse& universe, unsigned n, unsigned k,
                                         unsigned r, std::uint64_t samples, std::uint64_t seed,
                                         unsigned threads) {
  check_params(n, k, r);
  const std::uint64_t size = universe.size();
  if (size == 0) throw std::invalid_argument("empirical_probability: empty universe");
  if (samples < 1) throw std::invalid_argument("empirical_probability: need samples >= 1");

  constexpr std::uint64_t kBlock = 4096;
  std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_chunks(blocks, threads, [&](std::size_t b) {
    std::uint64_t begin = b * kBlock;
    std::uint64_t end = std::min(begin + kBlock, samples);
    std::vector<IdealFactorization> tuple(n);
    std::uint64_t local = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      for (unsigned i = 0; i < n; ++i) {
        std::uint64_t idx = bounded_index(counter_draw(seed, s, i), size);
        tuple[i] = universe.ideals[idx];
      }
      if (is_kwise_rprime(tuple, k, r)) ++local;
    }
    hits[b] = local;
  });

  std::uint64_t favorable = 0;
  for (std::uint64_t h : hits) favorable += h;

  MonteCarloEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.x = universe.x;
  est.mean = static_cast<double>(favorable) / static_cast<double>(samples);
  est.standard_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(samples));
  return est;
}

std::vector<ConvergenceRow> convergence_table(const NumberField& field, unsigned n, unsigned k,
                                              unsigned r,
                                              const std::vector<std::uint64_t>& x_values,
                                              const ConvergenceOptions& options) {
  check_params(n, k, r);
  if (!std::is_sorted(x_values.begin(), x_values.end()))
    throw std::invalid_argument("convergence_table: x values must be ascending");

  ProbabilityQuery query;
  query.field = field;
  query.n = n;
  query.k = k;
  query.r = r;
  query.digits = options.digits;
  query.threads = options.threads;
  double limit_value = probability(query).value;

  std::vector<ConvergenceRow> rows;
  for (std::uint64_t x : x_values) {
    IdealUniverse universe = enumerate_ideals(field, x);
    ConvergenceRow row;
    row.x = x;
    row.ideal_count = universe.size();
    row.probability = limit_value;
    BigInt tuples = pow_big(universe.size(), n);
    if (tuples <= options.exact_cap) {
      row.ratio = count_tuples_exhaustive(universe, n, k, r, options.exact_cap, options.threads)
                      .ratio;
      row.exact = true;
    } else {
      row.ratio =
          empirical_probability(universe, n, k, r, options.samples, options.seed, options.threads)
              .mean;
      row.exact = false;
    }
    row.gap = std::abs(row.ratio - limit_value);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kwise
