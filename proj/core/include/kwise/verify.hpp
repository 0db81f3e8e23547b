#ifndef KWISE_VERIFY_HPP
#define KWISE_VERIFY_HPP

#include <string>
#include <vector>

namespace kwise {

struct SuiteResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions

  bool passed() const { return failures == 0; }
};

// Exact binomial identities: the tail identity grid, the alternating
// prefix identity, and the two local-factor routes.
SuiteResult verify_identities();

// Mobius transform against its defining convolution on single-prime
// exponent patterns, plus vanishing, symmetry, and multiplicativity.
SuiteResult verify_psi();

// Indicator against the subset-scan oracle, exhaustive and sampled.
SuiteResult verify_rho();

// Divisor-sum counting identity: exhaustive tuple counts equal the
// Mobius-weighted route, exactly, across a small field/parameter grid.
SuiteResult verify_mobius_count();

// probability(n, n, r) * zeta_K(r n) = 1 over the identical prime set.
SuiteResult verify_zeta_consistency();

// name in {identities, psi, rho, mobius-count, zeta-consistency, all}.
std::vector<SuiteResult> run_verify_suites(const std::string& name);

}  // namespace kwise

#endif  // KWISE_VERIFY_HPP
