#include "kwise/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "kwise/polymod.hpp"

namespace kwise {

namespace {

std::int64_t parse_int(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin) throw ParseError("expected integer literal", start);
  std::int64_t value = 0;
  auto res = std::from_chars(text.data() + start, text.data() + pos, value);
  if (res.ec != std::errc()) throw ParseError("integer literal out of range", start);
  return value;
}

BigInt parse_bigint(std::string_view text, std::size_t& pos) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  std::size_t digits_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_begin) throw ParseError("expected integer literal", start);
  return BigInt(std::string(text.substr(start, pos - start)));
}

bool is_squarefree(std::int64_t m) {
  std::uint64_t v = static_cast<std::uint64_t>(m < 0 ? -m : m);
  if (v == 0) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    unsigned count = 0;
    while (v % d == 0) {
      v /= d;
      if (++count >= 2) return false;
    }
  }
  return true;
}

// Monic integer polynomial evaluated at a rational candidate root c;
// roots of a monic polynomial are integers dividing the constant term.
bool has_integer_root(const std::vector<BigInt>& coeffs) {
  const BigInt& c0 = coeffs.front();
  if (c0 == 0) return true;
  std::vector<BigInt> candidates;
  BigInt a = abs(c0);
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      candidates.push_back(d);
      candidates.push_back(a / d);
    }
  }
  for (const BigInt& d : candidates) {
    for (int sign : {1, -1}) {
      BigInt x = sign * d;
      BigInt value = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * x + *it;
      if (value == 0) return true;
    }
  }
  return false;
}

// Best-effort irreducibility certificate: degree patterns of the
// factorization mod several primes with squarefree reduction. A proper
// rational factor would have a degree realizable as a subset sum of
// every pattern; an empty intersection certifies irreducibility.
void check_irreducible(const std::vector<BigInt>& coeffs) {
  const std::size_t deg = coeffs.size() - 1;
  if (coeffs.front() == 0) throw FieldError("polynomial is reducible: x divides it");
  if (has_integer_root(coeffs)) throw FieldError("polynomial is reducible: rational root found");
  if (deg <= 3) return;  // no rational root is decisive up to degree 3

  std::set<std::size_t> possible;
  for (std::size_t d = 1; d < deg; ++d) possible.insert(d);

  unsigned usable = 0;
  static const std::uint64_t small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                               31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                               73, 79, 83, 89, 97, 101};
  for (std::uint64_t p : small_primes) {
    polymod::Poly f = polymod::reduce_coeffs(coeffs, p);
    if (polymod::degree(f) != static_cast<int>(deg)) continue;  // cannot happen: monic
    polymod::Poly d = polymod::derivative(f, p);
    if (polymod::is_zero(d) || polymod::degree(polymod::gcd(f, d, p)) > 0) continue;

    std::vector<unsigned> factor_degrees;
    for (auto [fdeg, count] : polymod::distinct_degree_counts(f, p))
      for (unsigned i = 0; i < count; ++i) factor_degrees.push_back(fdeg);

    // Subset sums of this prime's factor degrees.
    std::vector<char> reachable(deg + 1, 0);
    reachable[0] = 1;
    for (unsigned fd : factor_degrees)
      for (std::size_t s = deg; s >= fd; --s)
        if (reachable[s - fd]) reachable[s] = 1;

    for (auto it = possible.begin(); it != possible.end();)
      it = reachable[*it] ? std::next(it) : possible.erase(it);

    ++usable;
    if (possible.empty()) return;  // certified irreducible
    if (usable >= 5) break;
  }
  if (usable < 5)
    throw FieldError("cannot certify irreducibility: too few primes with squarefree reduction");
  throw FieldError("cannot certify irreducibility: compatible factor degrees persist mod 5 primes");
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  FieldSpec spec;
  std::size_t pos = 0;

  if (text.rfind("poly:", 0) == 0) {
    pos = 5;
    spec.kind = FieldKind::MonicPolynomial;
    while (true) {
      spec.coefficients.push_back(parse_bigint(text, pos));
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ',' between coefficients", pos);
      ++pos;
    }
    if (spec.coefficients.size() < 3)
      throw ParseError("polynomial fields need degree >= 2", text.size());
    if (spec.coefficients.back() != 1)
      throw ParseError("polynomial must be monic (leading coefficient 1)", text.size());
    return spec;
  }

  if (pos >= text.size() || text[pos] != 'Q') throw ParseError("expected 'Q'", pos);
  ++pos;
  if (pos == text.size()) {
    spec.kind = FieldKind::Rational;
    return spec;
  }
  if (text[pos] != '(') throw ParseError("expected '(' after 'Q'", pos);
  ++pos;

  if (text.compare(pos, 4, "sqrt") == 0) {
    pos += 4;
    spec.kind = FieldKind::Quadratic;
    spec.m = parse_int(text, pos);
  } else if (text.compare(pos, 4, "zeta") == 0) {
    pos += 4;
    spec.kind = FieldKind::Cyclotomic;
    spec.m = parse_int(text, pos);
  } else {
    throw ParseError("expected 'sqrt' or 'zeta'", pos);
  }

  if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
  ++pos;
  if (pos != text.size()) throw ParseError("trailing input after field spec", pos);
  return spec;
}

std::string render(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::Rational:
      return "Q";
    case FieldKind::Quadratic:
      return "Q(sqrt" + std::to_string(spec.m) + ")";
    case FieldKind::Cyclotomic:
      return "Q(zeta" + std::to_string(spec.m) + ")";
    case FieldKind::MonicPolynomial: {
      std::string out = "poly:";
      for (std::size_t i = 0; i < spec.coefficients.size(); ++i) {
        if (i) out += ',';
        out += spec.coefficients[i].str();
      }
      return out;
    }
  }
  return {};
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      result -= result / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

NumberField normalize(const FieldSpec& spec_in) {
  NumberField field;
  field.spec = spec_in;

  switch (spec_in.kind) {
    case FieldKind::Rational:
      field.degree = 1;
      field.label = "Z";
      break;

    case FieldKind::Quadratic: {
      std::int64_t m = spec_in.m;
      if (m == 0 || m == 1) throw FieldError("quadratic parameter must not be 0 or 1");
      if (m > 1'000'000'000'000LL || m < -1'000'000'000'000LL)
        throw FieldError("quadratic parameter too large (max |m| = 10^12)");
      if (!is_squarefree(m))
        throw FieldError("quadratic parameter " + std::to_string(m) + " is not squarefree");
      field.degree = 2;
      if (m == -1)
        field.label = "Z[i]";
      else if (((m % 4) + 4) % 4 == 1)
        field.label = "Z[(1+sqrt" + std::to_string(m) + ")/2]";
      else
        field.label = "Z[sqrt" + std::to_string(m) + "]";
      break;
    }

    case FieldKind::Cyclotomic: {
      std::int64_t m = spec_in.m;
      if (m < 3) throw FieldError("cyclotomic parameter must be >= 3");
      if (m % 4 == 2) {
        m /= 2;  // Q(zeta_m) = Q(zeta_{2m}) for odd m
        field.spec.m = m;
      }
      if (m > 1'000'000) throw FieldError("cyclotomic parameter too large (max 10^6)");
      field.degree = static_cast<unsigned>(euler_phi(static_cast<std::uint64_t>(m)));
      field.label = "Z[zeta" + std::to_string(m) + "]";
      break;
    }

    case FieldKind::MonicPolynomial: {
      const auto& c = spec_in.coefficients;
      if (c.size() < 3) throw FieldError("polynomial degree must be >= 2");
      if (c.back() != 1) throw FieldError("polynomial must be monic");
      check_irreducible(c);
      field.degree = static_cast<unsigned>(c.size() - 1);
      field.exact_splitting = false;
      field.label = "O(" + render(field.spec) + ")";
      break;
    }
  }

  field.split_cache = make_split_cache();
  return field;
}

NumberField make_field(std::string_view text) { return normalize(parse_field_spec(text)); }

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  return a.kind == b.kind && a.m == b.m && a.coefficients == b.coefficients;
}

}  // namespace kwise
