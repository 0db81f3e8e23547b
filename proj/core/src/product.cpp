#include "kwise/product.hpp"

#include <algorithm>
#include <cmath>

#include "kwise/numeric.hpp"

namespace kwise {

namespace {

// Least N with p_N > bound; tiny bounds only (bound < n).
std::uint64_t prime_count_floor(std::uint64_t bound) {
  if (bound < 2) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t p : rational_primes_up_to(bound)) {
    (void)p;
    ++count;
  }
  return count + 1;
}

// -log of the local factor at q = p^(f r), evaluated through the
// complementary tail so factors near 1 keep full precision:
//   1 - factor = sum_{j=k}^{n} C(n,j) (1 - 1/q)^{n-j} q^{-j}.
double neg_log_local_factor(double q, unsigned n, unsigned k,
                            const std::vector<double>& binomials) {
  double inv_q = 1.0 / q;
  double one_minus = 1.0 - inv_q;
  double tail = 0.0;
  double qpow = std::pow(inv_q, static_cast<double>(k));
  for (unsigned j = k; j <= n; ++j) {
    tail += binomials[j] * std::pow(one_minus, static_cast<double>(n - j)) * qpow;
    qpow *= inv_q;
  }
  return -std::log1p(-tail);
}

std::vector<double> binomial_row(unsigned n) {
  std::vector<double> row(n + 1);
  row[0] = 1.0;
  for (unsigned j = 1; j <= n; ++j)
    row[j] = row[j - 1] * static_cast<double>(n - j + 1) / static_cast<double>(j);
  return row;
}

constexpr std::size_t kChunk = 8192;

// Shared driver: accumulates term(p) over the first `primes.size()`
// primes in fixed chunks, merging partials in chunk order so the result
// is bit-identical for every worker count.
template <typename Term>
double chunked_prime_sum(const std::vector<std::uint64_t>& primes, unsigned threads,
                         Term&& term) {
  std::size_t chunk_count = (primes.size() + kChunk - 1) / kChunk;
  std::vector<CompensatedSum> partials(chunk_count);
  parallel_chunks(chunk_count, threads, [&](std::size_t c) {
    std::size_t begin = c * kChunk;
    std::size_t end = std::min(begin + kChunk, primes.size());
    CompensatedSum acc;
    for (std::size_t i = begin; i < end; ++i) acc.add(term(primes[i]));
    partials[c] = acc;
  });
  CompensatedSum total;
  for (const auto& partial : partials) total.merge(partial);
  return total.value();
}

}  // namespace

std::uint64_t required_primes(unsigned degree, unsigned n, unsigned digits) {
  if (degree < 1 || n < 2) throw std::invalid_argument("required_primes: need d >= 1, n >= 2");
  BigInt numerator = BigInt(degree) * BigInt(n - 1) * BigInt(n - 1);
  for (unsigned i = 0; i < digits; ++i) numerator *= 10;
  numerator += static_cast<std::int64_t>(n) - 3;
  BigInt n_formula = (numerator + 1) / 2;  // ceil(numerator / 2), numerator > 0
  if (n_formula > BigInt(std::uint64_t(1) << 62))
    throw ResourceLimitError("required_primes: prime count out of range");
  std::uint64_t N = static_cast<std::uint64_t>(n_formula);
  N = std::max<std::uint64_t>(N, 5);
  N = std::max(N, prime_count_floor(n - 1));
  return N;
}

double truncation_bound(unsigned degree, unsigned n, std::uint64_t N) {
  if (N < 5) throw std::invalid_argument("truncation_bound: need N >= 5");
  if (N < prime_count_floor(n - 1))
    throw std::invalid_argument("truncation_bound: need p_N > n - 1");
  double denom = 2.0 * (2.0 * static_cast<double>(N) - static_cast<double>(n) + 3.0);
  return static_cast<double>(degree) * (n - 1.0) * (n - 1.0) / denom;
}

ProbabilityResult probability(const ProbabilityQuery& query) {
  const unsigned n = query.n, k = query.k, r = query.r;
  if (n < 2 || k < 2 || k > n || r < 1)
    throw std::invalid_argument("probability: need n >= k >= 2 and r >= 1");

  ProbabilityResult result;
  std::uint64_t N;
  if (query.explicit_primes > 0) {
    N = query.explicit_primes;
    std::uint64_t floor_N = std::max<std::uint64_t>(5, prime_count_floor(n - 1));
    if (N < floor_N)
      throw std::invalid_argument("probability: explicit prime count below admissible floor " +
                                  std::to_string(floor_N));
  } else {
    if (query.digits < 1) throw std::invalid_argument("probability: digits must be >= 1");
    if (query.digits > kMaxDigits)
      throw PrecisionError("probability: requested digits exceed double-precision ceiling (" +
                           std::to_string(kMaxDigits) + ")");
    // The formula bounds the tail of -log P by 10^-t / 2. The absolute
    // error of the value is at most 1.01x that for these magnitudes, so
    // inflate N by 1.01 to keep the claim absolute.
    std::uint64_t base = required_primes(query.field.degree, n, query.digits);
    N = (base * 101 + 99) / 100;
    result.digits_mode = true;
    result.digits = query.digits;
  }

  std::uint64_t p_N = nth_prime(N);
  auto primes = rational_primes_up_to(p_N);

  const auto binomials = binomial_row(n);
  const NumberField& field = query.field;
  double total = chunked_prime_sum(primes, query.threads, [&](std::uint64_t p) {
    double sum = 0.0;
    for (const auto& cls : split_prime(field, p)) {
      double q = std::pow(static_cast<double>(p), static_cast<double>(cls.f) * r);
      sum += cls.g * neg_log_local_factor(q, n, k, binomials);
    }
    return sum;
  });

  result.value = std::exp(-total);
  result.primes_used = N;
  result.last_prime = p_N;
  result.error_bound = truncation_bound(field.degree, n, N);
  result.caveat = !field.exact_splitting;
  return result;
}

double dedekind_zeta(const NumberField& field, double s, std::uint64_t prime_limit,
                     unsigned threads) {
  if (!(s > 1.0)) throw std::invalid_argument("dedekind_zeta: need s > 1");
  if (prime_limit < 2) return 1.0;
  auto primes = rational_primes_up_to(prime_limit);
  double total = chunked_prime_sum(primes, threads, [&](std::uint64_t p) {
    double sum = 0.0;
    for (const auto& cls : split_prime(field, p)) {
      double term = std::pow(static_cast<double>(p), -static_cast<double>(cls.f) * s);
      sum += -static_cast<double>(cls.g) * std::log1p(-term);
    }
    return sum;
  });
  return std::exp(total);
}

bool in_convergence_region(const std::vector<double>& s, unsigned k, unsigned r) {
  if (s.size() < 2 || k < 2 || k > s.size() || r < 1)
    throw std::invalid_argument("in_convergence_region: need n >= k >= 2 and r >= 1");
  std::vector<double> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  // Only the j smallest entries matter for subset sums of size j.
  double partial = 0.0;
  for (unsigned j = 1; j <= sorted.size(); ++j) {
    partial += sorted[j - 1];
    if (j >= k && !(partial > 1.0 / r)) return false;
  }
  return true;
}

double zeta_cofactor(const NumberField& field, const std::vector<double>& s, unsigned k,
                     unsigned r, std::uint64_t prime_limit) {
  const unsigned n = static_cast<unsigned>(s.size());
  if (!in_convergence_region(s, k, r))
    throw std::domain_error("zeta_cofactor: arguments outside the convergence region");
  if (prime_limit < 2) return 1.0;

  std::vector<double> coeff(n + 1, 0.0);  // C(j-1, k-1) for j in [k, n]
  for (unsigned j = k; j <= n; ++j) {
    double c = 1.0;
    for (unsigned i = 1; i <= k - 1; ++i)
      c = c * static_cast<double>(j - 1 - (k - 1) + i) / static_cast<double>(i);
    coeff[j] = c;
  }

  auto primes = rational_primes_up_to(prime_limit);
  std::vector<double> values(n), e(n + 1);
  CompensatedSum total;
  for (std::uint64_t p : primes) {
    for (const auto& cls : split_prime(field, p)) {
      for (unsigned i = 0; i < n; ++i)
        values[i] = std::pow(static_cast<double>(p), -static_cast<double>(cls.f) * r * s[i]);
      // elementary symmetric polynomials of the values
      std::fill(e.begin(), e.end(), 0.0);
      e[0] = 1.0;
      for (unsigned idx = 0; idx < n; ++idx)
        for (unsigned t = std::min(idx + 1, n); t >= 1; --t) e[t] += e[t - 1] * values[idx];
      double correction = 0.0;
      int sign = 1;
      for (unsigned j = k; j <= n; ++j) {
        correction += sign * coeff[j] * e[j];
        sign = -sign;
      }
      total.add(cls.g * std::log(1.0 - correction));
    }
  }
  return std::exp(total.value());
}

}  // namespace kwise
