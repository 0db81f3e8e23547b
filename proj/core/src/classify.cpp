#include "kwise/classify.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kwise/combinatorics.hpp"

namespace kwise {

namespace {

void check_params(std::size_t n, unsigned k, unsigned r) {
  if (n < 2 || k < 2 || k > n || r < 1)
    throw std::invalid_argument("tuple classification: need n >= k >= 2 and r >= 1");
}

// Prime ideals dividing any member to exponent >= r, with the number of
// members they divide that deeply.
std::vector<std::pair<PrimeIdealId, unsigned>> deep_divisor_counts(
    std::span<const IdealFactorization> items, unsigned r) {
  std::vector<PrimeIdealId> hits;
  for (const auto& item : items)
    for (const auto& [id, exp] : item.factors)
      if (exp >= r) hits.push_back(id);
  std::sort(hits.begin(), hits.end());
  std::vector<std::pair<PrimeIdealId, unsigned>> counts;
  for (std::size_t i = 0; i < hits.size();) {
    std::size_t j = i;
    while (j < hits.size() && hits[j] == hits[i]) ++j;
    counts.emplace_back(hits[i], static_cast<unsigned>(j - i));
    i = j;
  }
  return counts;
}

}  // namespace

bool is_kwise_rprime(std::span<const IdealFactorization> items, unsigned k, unsigned r) {
  check_params(items.size(), k, r);
  for (const auto& [id, count] : deep_divisor_counts(items, r))
    if (count >= k) return false;
  return true;
}

bool is_kwise_rprime_by_subsets(std::span<const IdealFactorization> items, unsigned k,
                                unsigned r) {
  check_params(items.size(), k, r);
  const std::size_t n = items.size();
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::vector<IdealFactorization> subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[pick[i]];
    IdealFactorization g = gcd_ideal(subset);
    bool subset_fails = std::any_of(g.factors.begin(), g.factors.end(),
                                    [r](const auto& f) { return f.second >= r; });
    if (subset_fails) return false;
    // next k-combination
    std::size_t i = k;
    while (i-- > 0) {
      if (pick[i] != i + n - k) {
        ++pick[i];
        for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        break;
      }
      if (i == 0) return true;
    }
  }
}

long long mobius_weight_local(unsigned n, unsigned k, unsigned r,
                              std::span<const unsigned> exponents) {
  check_params(n, k, r);
  if (exponents.size() != n)
    throw std::invalid_argument("mobius_weight_local: exponent count != n");
  unsigned deep = 0;
  for (unsigned nu : exponents) {
    if (nu == 0) continue;
    if (nu != r) return 0;
    ++deep;
  }
  if (deep == 0) return 1;
  if (deep < k) return 0;
  BigInt mag = binomial(deep - 1, k - 1);
  if (mag > std::numeric_limits<long long>::max())
    throw std::overflow_error("mobius_weight_local: binomial exceeds long long");
  long long magnitude = static_cast<long long>(mag);
  return ((deep - k + 1) % 2 == 0) ? magnitude : -magnitude;
}

BigInt mobius_weight(std::span<const IdealFactorization> items, unsigned k, unsigned r) {
  check_params(items.size(), k, r);
  const unsigned n = static_cast<unsigned>(items.size());

  // Union of the prime supports.
  std::vector<PrimeIdealId> support;
  for (const auto& item : items)
    for (const auto& [id, exp] : item.factors) support.push_back(id);
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());

  BigInt product = 1;
  std::vector<unsigned> column(n);
  for (const auto& id : support) {
    for (unsigned i = 0; i < n; ++i) {
      column[i] = 0;
      for (const auto& [fid, exp] : items[i].factors)
        if (fid == id) {
          column[i] = exp;
          break;
        }
    }
    long long local = mobius_weight_local(n, k, r, column);
    if (local == 0) return 0;
    product *= local;
  }
  return product;
}

BigInt mobius_weight_by_convolution(std::span<const IdealFactorization> items, unsigned k,
                                    unsigned r, std::uint64_t cap) {
  check_params(items.size(), k, r);
  const std::size_t n = items.size();

  std::uint64_t combinations = 1;
  std::vector<std::vector<IdealFactorization>> divisor_lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    divisor_lists[i] = divisors(items[i]);
    combinations *= divisor_lists[i].size();
    if (combinations > cap)
      throw ResourceLimitError("convolution: divisor tuple count exceeds cap");
  }

  BigInt total = 0;
  std::vector<std::size_t> pick(n, 0);
  std::vector<IdealFactorization> d(n);
  while (true) {
    int mu_product = 1;
    for (std::size_t i = 0; i < n && mu_product != 0; ++i) {
      d[i] = divisor_lists[i][pick[i]];
      // complement e_i = a_i / d_i: exponent differences
      IdealFactorization e;
      std::size_t di = 0;
      for (const auto& [id, exp] : items[i].factors) {
        unsigned used = 0;
        if (di < d[i].factors.size() && d[i].factors[di].first == id) used = d[i].factors[di++].second;
        if (exp > used) e.factors.emplace_back(id, exp - used);
      }
      mu_product *= mobius(e);
    }
    if (mu_product != 0 && is_kwise_rprime(d, k, r)) total += mu_product;

    std::size_t pos = n;
    bool done = true;
    while (pos-- > 0) {
      if (pick[pos] + 1 < divisor_lists[pos].size()) {
        ++pick[pos];
        std::fill(pick.begin() + pos + 1, pick.end(), 0);
        done = false;
        break;
      }
    }
    if (done) break;
  }
  return total;
}

bool mobius_inversion_holds(std::span<const IdealFactorization> items, unsigned k, unsigned r,
                            std::uint64_t cap) {
  check_params(items.size(), k, r);
  const std::size_t n = items.size();

  std::uint64_t combinations = 1;
  std::vector<std::vector<IdealFactorization>> divisor_lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    divisor_lists[i] = divisors(items[i]);
    combinations *= divisor_lists[i].size();
    if (combinations > cap)
      throw ResourceLimitError("mobius inversion check: divisor tuple count exceeds cap");
  }

  BigInt total = 0;
  std::vector<std::size_t> pick(n, 0);
  std::vector<IdealFactorization> d(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) d[i] = divisor_lists[i][pick[i]];
    total += mobius_weight(d, k, r);

    std::size_t pos = n;
    bool done = true;
    while (pos-- > 0) {
      if (pick[pos] + 1 < divisor_lists[pos].size()) {
        ++pick[pos];
        std::fill(pick.begin() + pos + 1, pick.end(), 0);
        done = false;
        break;
      }
    }
    if (done) break;
  }
  BigInt indicator = is_kwise_rprime(items, k, r) ? 1 : 0;
  return total == indicator;
}

}  // namespace kwise
