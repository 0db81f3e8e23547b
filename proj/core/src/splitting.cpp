#include "kwise/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <unordered_map>

namespace kwise {

std::vector<std::uint64_t> rational_primes_up_to(std::uint64_t limit, std::uint64_t cap) {
  if (limit < 2) return {};
  if (limit > cap)
    throw ResourceLimitError("sieve limit " + std::to_string(limit) + " exceeds cap " +
                             std::to_string(cap));

  const std::uint64_t segment_size = 1 << 18;
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  while (root > 1 && root * root > limit) --root;

  // small primes <= sqrt(limit)
  std::vector<char> small(root + 1, 1);
  for (std::uint64_t i = 2; i * i <= root; ++i)
    if (small[i])
      for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i)
    if (small[i]) base.push_back(i);

  std::vector<std::uint64_t> primes;
  if (limit >= 2)
    primes.reserve(static_cast<std::size_t>(
        limit / std::max(1.0, std::log(static_cast<double>(limit)) - 1.2)));

  std::vector<char> sieve(segment_size);
  for (std::uint64_t low = 2; low <= limit; low += segment_size) {
    std::uint64_t high = std::min(low + segment_size - 1, limit);
    std::fill(sieve.begin(), sieve.end(), 1);
    for (std::uint64_t q : base) {
      std::uint64_t start = std::max(q * q, (low + q - 1) / q * q);
      for (std::uint64_t j = start; j <= high; j += q) sieve[j - low] = 0;
    }
    for (std::uint64_t v = low; v <= high; ++v)
      if (sieve[v - low]) primes.push_back(v);
  }
  return primes;
}

std::uint64_t nth_prime(std::uint64_t n, std::uint64_t cap) {
  if (n == 0) throw std::invalid_argument("nth_prime: n must be >= 1");
  static const std::uint64_t first[] = {2, 3, 5, 7, 11, 13};
  if (n <= 6) return first[n - 1];
  // p_n < n (ln n + ln ln n) for n >= 6 (Rosser)
  double dn = static_cast<double>(n);
  std::uint64_t bound =
      static_cast<std::uint64_t>(dn * (std::log(dn) + std::log(std::log(dn)))) + 16;
  auto primes = rational_primes_up_to(bound, cap);
  if (primes.size() < n)
    throw ResourceLimitError("nth_prime: bound estimate too small");  // unreachable by Rosser
  return primes[n - 1];
}

int kronecker_symbol(std::int64_t a, std::int64_t b) {
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;

  int k = 1;
  int v = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++v;
  }
  if (v % 2 == 1) {
    // (a|2): 0 for even a (excluded above), +1 for a = ±1 (mod 8), -1 otherwise
    int am8 = static_cast<int>(((a % 8) + 8) % 8);
    if (am8 == 3 || am8 == 5) k = -1;
  }
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  // b is now odd and positive; run the Jacobi ladder.
  a %= b;
  if (a < 0) a += b;
  while (a != 0) {
    v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1) {
      int bm8 = static_cast<int>(b % 8);
      if (bm8 == 3 || bm8 == 5) k = -k;
    }
    if (a % 4 == 3 && b % 4 == 3) k = -k;
    std::int64_t t = b % a;
    b = a;
    a = t;
  }
  return b == 1 ? k : 0;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("multiplicative_order: m must be >= 1");
  if (m == 1) return 1;
  a %= m;
  if (std::gcd(a, m) != 1)
    throw std::invalid_argument("multiplicative_order: arguments are not coprime");
  std::uint64_t acc = a;
  std::uint64_t order = 1;
  while (acc != 1) {
    acc = mulmod_u64(acc, a, m);
    ++order;
  }
  return order;
}

FactorDegrees distinct_degree_factor_degrees(const polymod::Poly& poly, std::uint64_t p) {
  if (polymod::is_zero(poly))
    throw std::invalid_argument("distinct_degree_factor_degrees: zero polynomial");
  FactorDegrees out;
  polymod::Poly squarefree{1};
  for (const auto& [mult, part] : polymod::squarefree_decomposition(poly, p))
    squarefree = polymod::mul(squarefree, part, p);
  out.removed_multiplicity =
      static_cast<unsigned>(polymod::degree(poly) - polymod::degree(squarefree));
  out.degrees = polymod::distinct_degree_counts(squarefree, p);
  return out;
}

namespace {

std::vector<PrimeClass> split_rational(std::uint64_t p) { return {PrimeClass{p, 1, 1, 1}}; }

std::vector<PrimeClass> split_quadratic(std::int64_t m, std::uint64_t p) {
  std::int64_t disc = (((m % 4) + 4) % 4 == 1) ? m : 4 * m;
  std::int64_t sp = static_cast<std::int64_t>(p);
  if (disc % sp == 0) return {PrimeClass{p, 1, 2, 1}};
  int symbol = kronecker_symbol(disc, sp);
  if (symbol == 1) return {PrimeClass{p, 1, 1, 2}};
  return {PrimeClass{p, 2, 1, 1}};
}

std::vector<PrimeClass> split_cyclotomic(std::int64_t m_signed, std::uint64_t p) {
  std::uint64_t m = static_cast<std::uint64_t>(m_signed);
  std::uint64_t pa = 1;
  std::uint64_t m_prime = m;
  while (m_prime % p == 0) {
    m_prime /= p;
    pa *= p;
  }
  unsigned e = static_cast<unsigned>(euler_phi(pa));
  unsigned f = static_cast<unsigned>(m_prime <= 2 ? 1 : multiplicative_order(p, m_prime));
  unsigned g = static_cast<unsigned>(euler_phi(m_prime)) / f;
  return {PrimeClass{p, f, e, g}};
}

std::vector<PrimeClass> split_polynomial(const std::vector<BigInt>& coeffs, std::uint64_t p) {
  polymod::Poly f = polymod::reduce_coeffs(coeffs, p);
  auto parts = polymod::squarefree_decomposition(f, p);
  bool ramified = parts.size() > 1 || (parts.size() == 1 && parts.front().first != 1);

  std::vector<PrimeClass> classes;
  for (const auto& [mult, part] : parts)
    for (auto [deg, count] : polymod::distinct_degree_counts(part, p))
      classes.push_back(PrimeClass{p, deg, mult, count, ramified});

  std::sort(classes.begin(), classes.end(), [](const PrimeClass& a, const PrimeClass& b) {
    return std::pair(a.f, a.e) < std::pair(b.f, b.e);
  });
  return classes;
}

}  // namespace

struct SplitCache {
  std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, std::vector<PrimeClass>> entries;
};

std::shared_ptr<SplitCache> make_split_cache() { return std::make_shared<SplitCache>(); }

std::vector<PrimeClass> split_prime(const NumberField& field, std::uint64_t p) {
  if (field.split_cache) {
    std::shared_lock lock(field.split_cache->mutex);
    auto it = field.split_cache->entries.find(p);
    if (it != field.split_cache->entries.end()) return it->second;
  }

  std::vector<PrimeClass> classes;
  switch (field.spec.kind) {
    case FieldKind::Rational:
      classes = split_rational(p);
      break;
    case FieldKind::Quadratic:
      classes = split_quadratic(field.spec.m, p);
      break;
    case FieldKind::Cyclotomic:
      classes = split_cyclotomic(field.spec.m, p);
      break;
    case FieldKind::MonicPolynomial:
      classes = split_polynomial(field.spec.coefficients, p);
      break;
  }

  if (field.split_cache) {
    std::unique_lock lock(field.split_cache->mutex);
    field.split_cache->entries.emplace(p, classes);
  }
  return classes;
}

}  // namespace kwise
