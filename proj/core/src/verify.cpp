#include "kwise/verify.hpp"

#include <cmath>
#include <sstream>

#include "kwise/classify.hpp"
#include "kwise/combinatorics.hpp"
#include "kwise/experiment.hpp"
#include "kwise/field.hpp"
#include "kwise/ideals.hpp"
#include "kwise/product.hpp"
#include "kwise/rng.hpp"

namespace kwise {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok) {
      ++result_.failures;
      if (result_.messages.size() < 8) result_.messages.push_back(what);
    }
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

IdealFactorization prime_power(std::uint64_t p, unsigned f, unsigned index, unsigned exp) {
  IdealFactorization a;
  if (exp > 0) a.factors.emplace_back(PrimeIdealId{p, f, index}, exp);
  return a;
}

}  // namespace

SuiteResult verify_identities() {
  Recorder rec("identities");

  const BigRational points[] = {BigRational(1, 2), BigRational(1, 3), BigRational(2, 7),
                                BigRational(-1, 5)};
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned k = 1; k <= n; ++k)
      for (const auto& x : points) {
        auto [lhs, rhs] = binomial_tail_identity(n, k, x);
        std::ostringstream what;
        what << "binomial tail identity n=" << n << " k=" << k;
        rec.expect(lhs == rhs, what.str());
      }

  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned d = 0; d < n; ++d) {
      auto [sum, closed] = alternating_binomial_prefix(n, d);
      std::ostringstream what;
      what << "alternating prefix identity n=" << n << " d=" << d;
      rec.expect(sum == closed, what.str());
    }

  for (std::uint64_t q = 2; q <= 64; ++q)
    for (unsigned n = 2; n <= 10; ++n)
      for (unsigned k = 2; k <= n; ++k) {
        BigRational direct = local_factor(BigInt(q), n, k);
        BigRational complement = local_factor_complement(BigInt(q), n, k);
        std::ostringstream what;
        what << "local factor routes q=" << q << " n=" << n << " k=" << k;
        rec.expect(direct == complement, what.str());
        rec.expect(direct > 0 && direct < 1, "local factor range " + what.str());
        if (q > n - 1) {
          BigRational floor_bound =
              1 - BigRational((n - 1) * (n - 1), q * q);
          rec.expect(direct >= floor_bound, "local factor lower bound " + what.str());
        }
      }

  return rec.take();
}

SuiteResult verify_psi() {
  Recorder rec("psi");

  // Single-prime exponent patterns against the defining convolution.
  for (unsigned n = 2; n <= 4; ++n)
    for (unsigned r = 1; r <= 2; ++r)
      for (unsigned k = 2; k <= n; ++k) {
        std::vector<unsigned> nu(n, 0);
        while (true) {
          IdealTuple tuple;
          for (unsigned e : nu) tuple.push_back(prime_power(2, 1, 0, e));
          long long closed = mobius_weight_local(n, k, r, nu);
          BigInt convolved = mobius_weight_by_convolution(tuple, k, r);
          std::ostringstream what;
          what << "psi closed form vs convolution n=" << n << " k=" << k << " r=" << r << " nu=(";
          for (unsigned e : nu) what << e << ",";
          what << ")";
          rec.expect(BigInt(closed) == convolved, what.str());
          // vanishing cases stated separately
          bool has_partial = false, has_over = false;
          for (unsigned e : nu) {
            if (e >= 1 && e <= r - 1) has_partial = true;
            if (e >= r + 1) has_over = true;
          }
          if (has_partial || has_over) rec.expect(closed == 0, "psi vanishing " + what.str());

          std::size_t pos = n;
          bool done = true;
          while (pos-- > 0) {
            if (nu[pos] < r + 2) {
              ++nu[pos];
              std::fill(nu.begin() + pos + 1, nu.end(), 0u);
              done = false;
              break;
            }
          }
          if (done) break;
        }
      }

  // Symmetry and multiplicativity, sampled over random small tuples.
  std::vector<PrimeIdealId> ids = {{2, 1, 0}, {3, 1, 0}, {5, 1, 0}, {5, 1, 1}, {7, 2, 0}};
  for (std::uint64_t trial = 0; trial < 1000; ++trial) {
    unsigned n = 2 + static_cast<unsigned>(bounded_index(counter_draw(7, trial, 0), 3));
    unsigned k = 2 + static_cast<unsigned>(bounded_index(counter_draw(7, trial, 1), n - 1));
    unsigned r = 1 + static_cast<unsigned>(bounded_index(counter_draw(7, trial, 2), 2));

    IdealTuple left(n), right(n);
    for (unsigned i = 0; i < n; ++i) {
      // left over ids[0..1], right over ids[2..4]: disjoint supports
      for (unsigned j = 0; j < 2; ++j) {
        unsigned e = static_cast<unsigned>(
            bounded_index(counter_draw(11, trial, 10 + i * 8 + j), r + 2));
        if (e > 0) left[i] = multiply(left[i], prime_power(ids[j].p, ids[j].f, ids[j].index, e));
      }
      for (unsigned j = 2; j < 5; ++j) {
        unsigned e = static_cast<unsigned>(
            bounded_index(counter_draw(13, trial, 40 + i * 8 + j), r + 2));
        if (e > 0) right[i] = multiply(right[i], prime_power(ids[j].p, ids[j].f, ids[j].index, e));
      }
    }

    IdealTuple combined(n);
    for (unsigned i = 0; i < n; ++i) combined[i] = multiply(left[i], right[i]);

    bool rho_left = is_kwise_rprime(left, k, r);
    bool rho_right = is_kwise_rprime(right, k, r);
    bool rho_combined = is_kwise_rprime(combined, k, r);
    rec.expect(rho_combined == (rho_left && rho_right),
               "indicator multiplicativity on coprime tuples, trial " + std::to_string(trial));

    BigInt psi_left = mobius_weight(left, k, r);
    BigInt psi_right = mobius_weight(right, k, r);
    BigInt psi_combined = mobius_weight(combined, k, r);
    rec.expect(psi_combined == psi_left * psi_right,
               "weight multiplicativity on coprime tuples, trial " + std::to_string(trial));

    IdealTuple permuted = combined;
    std::rotate(permuted.begin(), permuted.begin() + 1, permuted.end());
    rec.expect(mobius_weight(permuted, k, r) == psi_combined,
               "weight symmetry under permutation, trial " + std::to_string(trial));
  }

  return rec.take();
}

SuiteResult verify_rho() {
  Recorder rec("rho");
  NumberField gaussian = make_field("Q(sqrt-1)");
  IdealUniverse universe = enumerate_ideals(gaussian, 30);
  const std::uint64_t size = universe.size();

  struct Combo {
    unsigned n, k, r;
  };
  const Combo combos[] = {{2, 2, 1}, {3, 2, 1}, {3, 3, 1}, {3, 2, 2}, {4, 3, 1}};
  for (const auto& combo : combos) {
    double tuple_count = std::pow(static_cast<double>(size), combo.n);
    if (tuple_count <= 1e7) {
      std::vector<std::uint64_t> index(combo.n, 0);
      IdealTuple tuple(combo.n);
      std::uint64_t mismatches = 0, seen = 0;
      while (true) {
        for (unsigned i = 0; i < combo.n; ++i) tuple[i] = universe.ideals[index[i]];
        ++seen;
        if (is_kwise_rprime(tuple, combo.k, combo.r) !=
            is_kwise_rprime_by_subsets(tuple, combo.k, combo.r))
          ++mismatches;
        std::size_t pos = combo.n;
        bool done = true;
        while (pos-- > 0) {
          if (index[pos] + 1 < size) {
            ++index[pos];
            std::fill(index.begin() + pos + 1, index.end(), 0);
            done = false;
            break;
          }
        }
        if (done) break;
      }
      std::ostringstream what;
      what << "indicator vs subset oracle, exhaustive n=" << combo.n << " k=" << combo.k
           << " r=" << combo.r << " (" << seen << " tuples, " << mismatches << " mismatches)";
      rec.expect(mismatches == 0, what.str());
    } else {
      std::uint64_t mismatches = 0;
      IdealTuple tuple(combo.n);
      for (std::uint64_t s = 0; s < 100'000; ++s) {
        for (unsigned i = 0; i < combo.n; ++i)
          tuple[i] = universe.ideals[bounded_index(counter_draw(42, s, i), size)];
        if (is_kwise_rprime(tuple, combo.k, combo.r) !=
            is_kwise_rprime_by_subsets(tuple, combo.k, combo.r))
          ++mismatches;
      }
      std::ostringstream what;
      what << "indicator vs subset oracle, sampled n=" << combo.n << " k=" << combo.k
           << " r=" << combo.r;
      rec.expect(mismatches == 0, what.str());
    }
  }
  return rec.take();
}

SuiteResult verify_mobius_count() {
  Recorder rec("mobius-count");

  const char* specs[] = {"Q", "Q(sqrt-1)", "Q(zeta3)"};
  const std::uint64_t xs[] = {1, 3, 4, 5, 10, 16, 20, 30};
  for (const char* spec : specs) {
    NumberField field = make_field(spec);
    for (std::uint64_t x : xs) {
      IdealUniverse universe = enumerate_ideals(field, x);
      for (unsigned n = 2; n <= 3; ++n)
        for (unsigned k = 2; k <= n; ++k)
          for (unsigned r = 1; r <= 2; ++r) {
            ExactCount direct = count_tuples_exhaustive(universe, n, k, r);
            ExactCount mobius_route = count_tuples_by_mobius(universe, n, k, r);
            std::ostringstream what;
            what << "counting identity " << spec << " x=" << x << " n=" << n << " k=" << k
                 << " r=" << r << ": exhaustive " << direct.favorable << " vs mobius "
                 << mobius_route.favorable;
            rec.expect(direct.favorable == mobius_route.favorable, what.str());
            rec.expect(direct.total == mobius_route.total, "tuple totals " + what.str());
          }
    }
  }

  // Pointwise Mobius inversion, exhaustive on small Gaussian pairs and
  // sampled on triples.
  NumberField gaussian = make_field("Q(sqrt-1)");
  IdealUniverse small = enumerate_ideals(gaussian, 20);
  for (std::uint64_t a = 0; a < small.size(); ++a)
    for (std::uint64_t b = 0; b < small.size(); ++b) {
      IdealTuple tuple{small.ideals[a], small.ideals[b]};
      rec.expect(mobius_inversion_holds(tuple, 2, 1),
                 "mobius inversion, pair index " + std::to_string(a) + "," + std::to_string(b));
    }
  IdealUniverse medium = enumerate_ideals(gaussian, 50);
  for (std::uint64_t s = 0; s < 300; ++s) {
    IdealTuple tuple(3);
    for (unsigned i = 0; i < 3; ++i)
      tuple[i] = medium.ideals[bounded_index(counter_draw(99, s, i), medium.size())];
    for (unsigned k = 2; k <= 3; ++k)
      rec.expect(mobius_inversion_holds(tuple, k, 1),
                 "mobius inversion, sampled triple " + std::to_string(s));
  }

  return rec.take();
}

SuiteResult verify_zeta_consistency() {
  Recorder rec("zeta-consistency");
  const char* specs[] = {"Q", "Q(sqrt2)", "Q(sqrt-1)", "Q(zeta3)", "Q(zeta5)"};
  const std::uint64_t N = 5000;
  for (const char* spec : specs) {
    NumberField field = make_field(spec);
    for (unsigned n = 2; n <= 4; ++n)
      for (unsigned r = 1; r <= 2; ++r) {
        ProbabilityQuery query;
        query.field = field;
        query.n = n;
        query.k = n;
        query.r = r;
        query.explicit_primes = N;
        ProbabilityResult res = probability(query);
        double zeta = dedekind_zeta(field, static_cast<double>(r) * n, res.last_prime);
        double product = res.value * zeta;
        std::ostringstream what;
        what << "zeta consistency " << spec << " n=" << n << " r=" << r << ": P*zeta = "
             << product;
        rec.expect(std::abs(product - 1.0) <= 1e-9, what.str());
      }
  }
  return rec.take();
}

std::vector<SuiteResult> run_verify_suites(const std::string& name) {
  std::vector<SuiteResult> results;
  bool all = name == "all";
  bool known = all;
  if (all || name == "identities") results.push_back(verify_identities()), known = true;
  if (all || name == "psi") results.push_back(verify_psi()), known = true;
  if (all || name == "rho") results.push_back(verify_rho()), known = true;
  if (all || name == "mobius-count") results.push_back(verify_mobius_count()), known = true;
  if (all || name == "zeta-consistency") results.push_back(verify_zeta_consistency()), known = true;
  if (!known)
    throw std::invalid_argument(
        "unknown suite '" + name +
        "' (expected identities, psi, rho, mobius-count, zeta-consistency, or all)");
  return results;
}

}  // namespace kwise
