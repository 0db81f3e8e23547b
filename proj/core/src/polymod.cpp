#include "kwise/polymod.hpp"

#include <stdexcept>

namespace kwise::polymod {

void normalize(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Poly& a) { return a.empty(); }

Poly reduce_coeffs(const std::vector<BigInt>& coeffs, std::uint64_t p) {
  Poly out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    BigInt c = coeffs[i] % p;
    if (c < 0) c += p;
    out[i] = static_cast<std::uint64_t>(c);
  }
  normalize(out);
  return out;
}

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + b[i]) % p;
  normalize(out);
  return out;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = (out[i] + p - b[i]) % p;
  normalize(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + mulmod_u64(a[i], b[j], p)) % p;
  }
  normalize(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, std::uint64_t p) {
  if (b.empty()) throw std::domain_error("polymod: division by zero polynomial");
  if (a.size() < b.size()) return {Poly{}, a};
  std::uint64_t lead_inv = powmod_u64(b.back(), p - 2, p);
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  for (std::size_t i = a.size(); i-- >= b.size() && i < a.size();) {
    if (r[i] == 0) continue;
    std::uint64_t c = mulmod_u64(r[i], lead_inv, p);
    q[i - b.size() + 1] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t k = i - b.size() + 1 + j;
      r[k] = (r[k] + p - mulmod_u64(c, b[j], p)) % p;
    }
  }
  normalize(q);
  normalize(r);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, std::uint64_t p) { return divmod(a, b, p).second; }

Poly make_monic(const Poly& a, std::uint64_t p) {
  if (a.empty() || a.back() == 1) return a;
  std::uint64_t inv = powmod_u64(a.back(), p - 2, p);
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mulmod_u64(a[i], inv, p);
  return out;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = mulmod_u64(a[i], i % p, p);
  normalize(out);
  return out;
}

Poly powmod(const Poly& base, std::uint64_t exp, const Poly& modulus, std::uint64_t p) {
  Poly result{1};
  Poly b = rem(base, modulus, p);
  while (exp > 0) {
    if (exp & 1) result = rem(mul(result, b, p), modulus, p);
    b = rem(mul(b, b, p), modulus, p);
    exp >>= 1;
  }
  return result;
}

namespace {

// Coefficientwise p-th root of g(x^p); valid over F_p where c^p = c.
Poly pth_root(const Poly& f, std::uint64_t p) {
  Poly out;
  for (std::size_t i = 0; i < f.size(); i += p) out.push_back(f[i]);
  normalize(out);
  return out;
}

}  // namespace

std::vector<std::pair<unsigned, Poly>> squarefree_decomposition(const Poly& f_in, std::uint64_t p) {
  std::vector<std::pair<unsigned, Poly>> parts;
  Poly f = make_monic(f_in, p);
  if (degree(f) <= 0) return parts;

  Poly d = derivative(f, p);
  Poly c = d.empty() ? f : gcd(f, d, p);
  Poly w = divmod(f, c, p).first;

  // Multiplicities coprime to p fall out of the classic gcd ladder.
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly part = divmod(w, y, p).first;
    if (degree(part) > 0) parts.emplace_back(i, make_monic(part, p));
    w = std::move(y);
    c = divmod(c, w, p).first;
    ++i;
  }

  // What is left of c is a perfect p-th power.
  if (degree(c) > 0) {
    for (auto& [mult, part] : squarefree_decomposition(pth_root(c, p), p))
      parts.emplace_back(mult * static_cast<unsigned>(p), std::move(part));
  }
  return parts;
}

std::vector<std::pair<unsigned, unsigned>> distinct_degree_counts(const Poly& g_in, std::uint64_t p) {
  std::vector<std::pair<unsigned, unsigned>> out;
  Poly g = make_monic(g_in, p);
  if (degree(g) <= 0) return out;

  Poly x{0, 1};
  Poly h = rem(x, g, p);
  unsigned i = 1;
  while (degree(g) >= static_cast<int>(2 * i)) {
    h = powmod(h, p, g, p);
    Poly d = gcd(sub(h, x, p), g, p);
    if (degree(d) > 0) {
      out.emplace_back(i, static_cast<unsigned>(degree(d)) / i);
      g = divmod(g, d, p).first;
      h = rem(h, g, p);
    }
    ++i;
  }
  if (degree(g) > 0) out.emplace_back(static_cast<unsigned>(degree(g)), 1);
  return out;
}

}  // namespace kwise::polymod
