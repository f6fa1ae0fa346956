#include "halflog/kernels.hpp"

#include <algorithm>

#include "halflog/padic.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace halflog::kernels {

namespace {

constexpr std::size_t kParallelTerms = 16384;

std::size_t term_count(std::size_t nf, std::size_t ng, std::size_t len) {
  std::size_t terms = 0;
  for (std::size_t i = 0; i < std::min(nf, len); ++i) terms += std::min(ng, len - i);
  return terms;
}

void convolve_one(std::span<const mpz_class> f, std::span<const mpz_class> g, std::size_t k,
                  mpz_class& out) {
  // i ranges over indices with f[i] and g[k-i] both present
  const std::size_t lo = k >= g.size() ? k - g.size() + 1 : 0;
  const std::size_t hi = std::min(k, f.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) {
    if (f[i] == 0) continue;
    mpz_addmul(out.get_mpz_t(), f[i].get_mpz_t(), g[k - i].get_mpz_t());
  }
}

long min_plus_one(std::span<const long> a, std::span<const long> b, std::size_t k) {
  long best = kInfinity;
  const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
  const std::size_t hi = std::min(k, a.size() - 1);
  for (std::size_t i = lo; i <= hi; ++i) best = std::min(best, sat_add(a[i], b[k - i]));
  return best;
}

}  // namespace

std::vector<mpz_class> convolve_serial(std::span<const mpz_class> f,
                                       std::span<const mpz_class> g, std::size_t len) {
  std::vector<mpz_class> out(len);
  if (f.empty() || g.empty()) return out;
  for (std::size_t k = 0; k < len; ++k) convolve_one(f, g, k, out[k]);
  return out;
}

std::vector<mpz_class> convolve_parallel(std::span<const mpz_class> f,
                                         std::span<const mpz_class> g, std::size_t len) {
  std::vector<mpz_class> out(len);
  if (f.empty() || g.empty()) return out;
  const long n = static_cast<long>(len);
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < n; ++k) convolve_one(f, g, static_cast<std::size_t>(k), out[k]);
  return out;
}

std::vector<mpz_class> convolve(std::span<const mpz_class> f, std::span<const mpz_class> g,
                                std::size_t len) {
  if (max_threads() > 1 && term_count(f.size(), g.size(), len) >= kParallelTerms) {
    return convolve_parallel(f, g, len);
  }
  return convolve_serial(f, g, len);
}

std::vector<long> min_plus_serial(std::span<const long> a, std::span<const long> b,
                                  std::size_t len) {
  std::vector<long> out(len, kInfinity);
  if (a.empty() || b.empty()) return out;
  for (std::size_t k = 0; k < len; ++k) out[k] = min_plus_one(a, b, k);
  return out;
}

std::vector<long> min_plus_parallel(std::span<const long> a, std::span<const long> b,
                                    std::size_t len) {
  std::vector<long> out(len, kInfinity);
  if (a.empty() || b.empty()) return out;
  const long n = static_cast<long>(len);
#pragma omp parallel for schedule(dynamic, 16)
  for (long k = 0; k < n; ++k) out[k] = min_plus_one(a, b, static_cast<std::size_t>(k));
  return out;
}

std::vector<long> min_plus(std::span<const long> a, std::span<const long> b, std::size_t len) {
  if (max_threads() > 1 && term_count(a.size(), b.size(), len) >= 4 * kParallelTerms) {
    return min_plus_parallel(a, b, len);
  }
  return min_plus_serial(a, b, len);
}

int max_threads() {
#ifdef _OPENMP
  if (omp_in_parallel()) return 1;
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace halflog::kernels
