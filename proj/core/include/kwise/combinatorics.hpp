#ifndef KWISE_COMBINATORICS_HPP
#define KWISE_COMBINATORICS_HPP

#include <vector>

#include "kwise/numeric.hpp"

namespace kwise {

// C(n, j); zero when j > n.
BigInt binomial(unsigned n, unsigned j);

// The per-prime-ideal factor of the k-wise r-primality product:
//   sum_{j=0}^{k-1} C(n,j) (1 - 1/q)^{n-j} q^{-j},  q = ideal norm^r.
// Exact, strictly inside (0, 1) for q >= 2 and n >= k >= 2.
BigRational local_factor(const BigInt& q, unsigned n, unsigned k);

// Same value through the complementary alternating expansion:
//   1 - sum_{j=k}^{n} (-1)^{j-k} C(n,j) C(j-1,k-1) q^{-j}.
BigRational local_factor_complement(const BigInt& q, unsigned n, unsigned k);

// e_j of the inputs via the stable product recurrence.
BigRational elementary_symmetric(const std::vector<BigRational>& values, unsigned j);

struct RationalPair {
  BigRational alternating;
  BigRational direct;
};

// Both routes of the binomial-tail identity
//   sum_{j=k}^n (-1)^{j-k} C(n,j) C(j-1,k-1) x^j = sum_{j=k}^n C(n,j) x^j (1-x)^{n-j};
// callers assert the two agree.
RationalPair binomial_tail_identity(unsigned n, unsigned k, const BigRational& x);

struct IntPair {
  BigInt sum;
  BigInt closed_form;
};

// Partial alternating row sum sum_{i=0}^{d} (-1)^i C(n,i) next to its
// closed form (-1)^d C(n-1,d); callers assert the two agree.
IntPair alternating_binomial_prefix(unsigned n, unsigned d);

}  // namespace kwise

#endif  // KWISE_COMBINATORICS_HPP
