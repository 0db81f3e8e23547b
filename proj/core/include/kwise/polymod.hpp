#ifndef KWISE_POLYMOD_HPP
#define KWISE_POLYMOD_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "kwise/numeric.hpp"

// Dense univariate polynomial arithmetic over F_p, p an odd-or-even prime
// that fits in 62 bits. Coefficients are stored constant-term first with
// no trailing zeros; the zero polynomial is the empty vector.
namespace kwise::polymod {

using Poly = std::vector<std::uint64_t>;

void normalize(Poly& a);
int degree(const Poly& a);  // -1 for the zero polynomial
bool is_zero(const Poly& a);

// Reduction of an integer polynomial; keeps the degree of a monic input.
Poly reduce_coeffs(const std::vector<BigInt>& coeffs, std::uint64_t p);

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);

// Quotient and remainder; the divisor need not be monic.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);

Poly make_monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);  // monic
Poly derivative(const Poly& a, std::uint64_t p);

// base^exp reduced mod `modulus` at every step.
Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus, std::uint64_t p);

// f = prod part^multiplicity with each part monic squarefree and the
// multiplicities distinct. Handles vanishing derivatives via p-th roots.
std::vector<std::pair<unsigned, Poly>> squarefree_decomposition(const Poly& f, std::uint64_t p);

// For squarefree monic g: the number of monic irreducible factors of each
// degree, ascending in degree. No equal-degree splitting is performed.
std::vector<std::pair<unsigned, unsigned>> distinct_degree_counts(const Poly& g, std::uint64_t p);

}  // namespace kwise::polymod

#endif  // KWISE_POLYMOD_HPP
