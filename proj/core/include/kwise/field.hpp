#ifndef KWISE_FIELD_HPP
#define KWISE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kwise/numeric.hpp"

namespace kwise {

// Raised by parse_field_spec with the offending input offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Raised when a spec parses but violates a field invariant (non-squarefree
// quadratic parameter, reducible polynomial, ...).
class FieldError : public std::domain_error {
  using std::domain_error::domain_error;
};

enum class FieldKind { Rational, Quadratic, Cyclotomic, MonicPolynomial };

struct FieldSpec {
  FieldKind kind = FieldKind::Rational;
  // Quadratic: squarefree m with m not in {0, 1}. Cyclotomic: m >= 3.
  std::int64_t m = 0;
  // MonicPolynomial, constant term first, leading coefficient 1.
  std::vector<BigInt> coefficients;
};

// Grammar: `Q` | `Q(sqrt<m>)` | `Q(zeta<m>)` | `poly:<c0>,...,<c_{d-1}>,1`.
FieldSpec parse_field_spec(std::string_view text);

// Canonical spec string; parse_field_spec(render(s)) == s.
std::string render(const FieldSpec& spec);

struct SplitCache;  // defined in splitting.cpp, shared across field copies
std::shared_ptr<SplitCache> make_split_cache();

struct NumberField {
  FieldSpec spec;
  unsigned degree = 1;
  // False for MonicPolynomial fields, where primes dividing the index of
  // the reduction order can be misclassified.
  bool exact_splitting = true;
  std::string label;
  std::shared_ptr<SplitCache> split_cache;
};

// Validates invariants, normalizes cyclotomic m (Q(zeta_m) = Q(zeta_2m)
// for odd m), computes the degree, and certifies irreducibility for
// polynomial fields.
NumberField normalize(const FieldSpec& spec);

// parse + normalize in one step.
NumberField make_field(std::string_view text);

std::uint64_t euler_phi(std::uint64_t n);

bool operator==(const FieldSpec& a, const FieldSpec& b);

}  // namespace kwise

#endif  // KWISE_FIELD_HPP
