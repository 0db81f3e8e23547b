#ifndef KWISE_NUMERIC_HPP
#define KWISE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace kwise {

// Exact arithmetic carriers. cpp_rational keeps values reduced with a
// positive denominator, which is exactly the invariant we need.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const BigRational& q) { return boost::multiprecision::denominator(q); }

// Neumaier-compensated accumulator. Used everywhere a sum over many
// prime ideals must be reproducible to the last bit for a fixed
// ordering of the terms.
class CompensatedSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }

  // Merging partials in a fixed order keeps the total independent of
  // how many workers produced them.
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.comp_);
  }

  double value() const { return sum_ + comp_; }
  double raw_sum() const { return sum_; }
  double compensation() const { return comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Runs fn(chunk_index) for chunk_index in [0, chunk_count) on up to
// `threads` workers. Chunk boundaries are the caller's business; the
// point of the helper is that the set of chunks never depends on the
// worker count, so deterministic reductions stay bit-identical.
inline void parallel_chunks(std::size_t chunk_count, unsigned threads,
                            const std::function<void(std::size_t)>& fn) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned workers = threads == 0 ? hw : threads;
  if (workers > chunk_count) workers = static_cast<unsigned>(chunk_count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < chunk_count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([=, &fn] {
      for (std::size_t i = w; i < chunk_count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

// 64-bit modular helpers on top of 128-bit intermediates.
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace kwise

#endif  // KWISE_NUMERIC_HPP
