#include "kwise/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace kwise {

BigInt binomial(unsigned n, unsigned j) {
  if (j > n) return 0;
  if (j > n - j) j = n - j;
  // Multiplicative form; the division is exact at every step.
  BigInt result = 1;
  for (unsigned i = 1; i <= j; ++i) {
    result *= n - j + i;
    result /= i;
  }
  return result;
}

BigRational local_factor(const BigInt& q, unsigned n, unsigned k) {
  if (q < 2) throw std::invalid_argument("local_factor: q must be >= 2");
  if (n < k || k < 2) throw std::invalid_argument("local_factor: need n >= k >= 2");
  BigRational inv_q(1, q);
  BigRational one_minus(q - 1, q);
  BigRational sum = 0;
  for (unsigned j = 0; j < k; ++j) {
    BigRational term(binomial(n, j));
    for (unsigned i = 0; i < n - j; ++i) term *= one_minus;
    for (unsigned i = 0; i < j; ++i) term *= inv_q;
    sum += term;
  }
  return sum;
}

BigRational local_factor_complement(const BigInt& q, unsigned n, unsigned k) {
  if (q < 2) throw std::invalid_argument("local_factor_complement: q must be >= 2");
  if (n < k || k < 2) throw std::invalid_argument("local_factor_complement: need n >= k >= 2");
  BigRational inv_q(1, q);
  BigRational qpow = 1;
  for (unsigned i = 0; i < k; ++i) qpow *= inv_q;
  BigRational sum = 0;
  int sign = 1;
  for (unsigned j = k; j <= n; ++j) {
    BigRational term(binomial(n, j) * binomial(j - 1, k - 1));
    sum += sign * term * qpow;
    qpow *= inv_q;
    sign = -sign;
  }
  return 1 - sum;
}

BigRational elementary_symmetric(const std::vector<BigRational>& values, unsigned j) {
  if (j > values.size()) throw std::invalid_argument("elementary_symmetric: j out of range");
  std::vector<BigRational> e(j + 1, BigRational(0));
  e[0] = 1;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    unsigned top = static_cast<unsigned>(std::min<std::size_t>(j, idx + 1));
    for (unsigned t = top; t >= 1; --t) e[t] += e[t - 1] * values[idx];
  }
  return e[j];
}

RationalPair binomial_tail_identity(unsigned n, unsigned k, const BigRational& x) {
  if (k < 1 || k > n) throw std::invalid_argument("binomial_tail_identity: need 1 <= k <= n");
  RationalPair out{BigRational(0), BigRational(0)};
  BigRational one_minus = 1 - x;
  for (unsigned j = k; j <= n; ++j) {
    BigRational xj = 1;
    for (unsigned i = 0; i < j; ++i) xj *= x;
    int sign = ((j - k) % 2 == 0) ? 1 : -1;
    out.alternating += sign * BigRational(binomial(n, j) * binomial(j - 1, k - 1)) * xj;
    BigRational direct_term = BigRational(binomial(n, j)) * xj;
    for (unsigned i = 0; i < n - j; ++i) direct_term *= one_minus;
    out.direct += direct_term;
  }
  return out;
}

IntPair alternating_binomial_prefix(unsigned n, unsigned d) {
  if (n < 1 || d >= n) throw std::invalid_argument("alternating_binomial_prefix: need 0 <= d < n");
  IntPair out{BigInt(0), BigInt(0)};
  for (unsigned i = 0; i <= d; ++i) out.sum += (i % 2 == 0 ? 1 : -1) * binomial(n, i);
  out.closed_form = (d % 2 == 0 ? 1 : -1) * binomial(n - 1, d);
  return out;
}

}  // namespace kwise
