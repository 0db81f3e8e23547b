#include "kwise/ideals.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace kwise {

BigInt IdealFactorization::norm() const {
  BigInt result = 1;
  for (const auto& [id, exp] : factors) {
    BigInt pf = pow(BigInt(id.p), id.f);
    result *= pow(pf, exp);
  }
  return result;
}

IdealFactorization make_ideal(std::vector<std::pair<PrimeIdealId, unsigned>> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].second == 0) throw std::invalid_argument("make_ideal: zero exponent");
    if (i + 1 < factors.size() && factors[i].first == factors[i + 1].first)
      throw std::invalid_argument("make_ideal: duplicate prime ideal");
  }
  return IdealFactorization{std::move(factors)};
}

std::uint64_t IdealUniverse::count_norm_at_most(std::uint64_t y) const {
  auto it = std::upper_bound(norms.begin(), norms.end(), y);
  return static_cast<std::uint64_t>(it - norms.begin());
}

void IdealUniverse::dump(std::ostream& os) const {
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    os << norms[i] << '\t';
    const auto& factors = ideals[i].factors;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (j) os << ',';
      os << factors[j].first.p << '^' << factors[j].first.f << '#' << factors[j].first.index
         << ':' << factors[j].second;
    }
    os << '\n';
  }
}

std::vector<PrimeIdealId> prime_ideals_up_to(const NumberField& field, std::uint64_t x) {
  std::vector<PrimeIdealId> out;
  if (x < 2) return out;
  for (std::uint64_t p : rational_primes_up_to(x)) {
    auto classes = split_prime(field, p);  // sorted by (f, e)
    unsigned index_within_f = 0;
    unsigned last_f = 0;
    for (const auto& cls : classes) {
      if (cls.f != last_f) {
        index_within_f = 0;
        last_f = cls.f;
      }
      // norm p^f <= x, with overflow-safe comparison
      bool fits = true;
      std::uint64_t norm = 1;
      for (unsigned i = 0; i < cls.f && fits; ++i) {
        if (norm > x / p) fits = false;
        else norm *= p;
      }
      if (fits && norm <= x)
        for (unsigned i = 0; i < cls.g; ++i) out.push_back(PrimeIdealId{p, cls.f, index_within_f++});
      else
        index_within_f += cls.g;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct EnumerationContext {
  std::uint64_t x;
  std::uint64_t cap;
  const std::vector<PrimeIdealId>* primes;
  const std::vector<std::uint64_t>* norms;
  std::vector<std::pair<PrimeIdealId, unsigned>> stack;
  std::uint64_t count = 0;
  std::vector<IdealFactorization>* sink = nullptr;  // null for count-only
  std::vector<std::uint64_t>* sink_norms = nullptr;

  void emit(std::uint64_t norm) {
    if (++count > cap)
      throw ResourceLimitError("ideal enumeration exceeds cap of " + std::to_string(cap));
    if (sink) {
      sink->push_back(IdealFactorization{stack});
      sink_norms->push_back(norm);
    }
  }

  // Depth-first product over the prime list with a running norm bound.
  void walk(std::size_t from, std::uint64_t norm) {
    emit(norm);
    for (std::size_t i = from; i < primes->size(); ++i) {
      std::uint64_t q = (*norms)[i];
      if (norm > x / q) continue;
      std::uint64_t next = norm * q;
      unsigned exponent = 1;
      stack.emplace_back((*primes)[i], exponent);
      while (true) {
        stack.back().second = exponent;
        walk(i + 1, next);
        if (next > x / q) break;
        next *= q;
        ++exponent;
      }
      stack.pop_back();
    }
  }
};

void check_bound(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("norm bound must be >= 1");
  if (x > kMaxUniverseNormBound)
    throw std::invalid_argument("norm bound exceeds 2^62");
}

}  // namespace

IdealUniverse enumerate_ideals(const NumberField& field, std::uint64_t x, std::uint64_t cap) {
  check_bound(x);
  IdealUniverse universe;
  universe.field = field;
  universe.x = x;
  universe.primes = prime_ideals_up_to(field, x);
  universe.prime_norms.reserve(universe.primes.size());
  for (const auto& id : universe.primes) {
    std::uint64_t norm = 1;
    for (unsigned i = 0; i < id.f; ++i) norm *= id.p;
    universe.prime_norms.push_back(norm);
  }

  EnumerationContext ctx{x, cap, &universe.primes, &universe.prime_norms};
  ctx.sink = &universe.ideals;
  ctx.sink_norms = &universe.norms;
  ctx.walk(0, 1);

  // Contract: sorted by (norm, factorization lexicographic).
  std::vector<std::size_t> order(universe.ideals.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (universe.norms[a] != universe.norms[b]) return universe.norms[a] < universe.norms[b];
    return universe.ideals[a] < universe.ideals[b];
  });
  std::vector<IdealFactorization> ideals_sorted;
  std::vector<std::uint64_t> norms_sorted;
  ideals_sorted.reserve(order.size());
  norms_sorted.reserve(order.size());
  for (std::size_t i : order) {
    ideals_sorted.push_back(std::move(universe.ideals[i]));
    norms_sorted.push_back(universe.norms[i]);
  }
  universe.ideals = std::move(ideals_sorted);
  universe.norms = std::move(norms_sorted);
  return universe;
}

std::uint64_t ideal_count(const NumberField& field, std::uint64_t x, std::uint64_t cap) {
  check_bound(x);
  auto primes = prime_ideals_up_to(field, x);
  std::vector<std::uint64_t> prime_norms;
  prime_norms.reserve(primes.size());
  for (const auto& id : primes) {
    std::uint64_t norm = 1;
    for (unsigned i = 0; i < id.f; ++i) norm *= id.p;
    prime_norms.push_back(norm);
  }
  EnumerationContext ctx{x, cap, &primes, &prime_norms};
  ctx.walk(0, 1);
  return ctx.count;
}

int mobius(const IdealFactorization& a) {
  for (const auto& [id, exp] : a.factors)
    if (exp >= 2) return 0;
  return a.factors.size() % 2 == 0 ? 1 : -1;
}

std::vector<IdealFactorization> divisors(const IdealFactorization& a) {
  std::uint64_t total = 1;
  for (const auto& [id, exp] : a.factors) {
    total *= exp + 1;
    if (total > 4'000'000)
      throw ResourceLimitError("divisor count exceeds cap");
  }
  std::vector<IdealFactorization> out;
  out.reserve(total);
  std::vector<unsigned> exponents(a.factors.size(), 0);
  while (true) {
    IdealFactorization d;
    for (std::size_t i = 0; i < exponents.size(); ++i)
      if (exponents[i] > 0) d.factors.emplace_back(a.factors[i].first, exponents[i]);
    out.push_back(std::move(d));
    // Odometer, last position fastest: lexicographic over exponent tuples.
    std::size_t pos = exponents.size();
    while (pos > 0) {
      --pos;
      if (exponents[pos] < a.factors[pos].second) {
        ++exponents[pos];
        std::fill(exponents.begin() + pos + 1, exponents.end(), 0);
        break;
      }
      if (pos == 0) return out;
    }
    if (exponents.empty()) return out;
  }
}

IdealFactorization multiply(const IdealFactorization& a, const IdealFactorization& b) {
  IdealFactorization out;
  std::size_t i = 0, j = 0;
  while (i < a.factors.size() || j < b.factors.size()) {
    if (j == b.factors.size() ||
        (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
      out.factors.push_back(a.factors[i++]);
    } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
      out.factors.push_back(b.factors[j++]);
    } else {
      out.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

IdealFactorization gcd_ideal(std::span<const IdealFactorization> items) {
  if (items.empty()) throw std::invalid_argument("gcd_ideal: empty list");
  IdealFactorization result = items.front();
  for (std::size_t i = 1; i < items.size() && !result.is_unit(); ++i) {
    const auto& other = items[i].factors;
    std::vector<std::pair<PrimeIdealId, unsigned>> merged;
    std::size_t a = 0, b = 0;
    while (a < result.factors.size() && b < other.size()) {
      if (result.factors[a].first < other[b].first) {
        ++a;
      } else if (other[b].first < result.factors[a].first) {
        ++b;
      } else {
        merged.emplace_back(result.factors[a].first,
                            std::min(result.factors[a].second, other[b].second));
        ++a;
        ++b;
      }
    }
    result.factors = std::move(merged);
  }
  return result;
}

}  // namespace kwise
