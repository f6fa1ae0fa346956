#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

// Integer kernels behind truncated series multiplication.  Each kernel has a
// serial reference and an OpenMP version; the two must agree bit for bit.
namespace halflog::kernels {

/// c[k] = sum_{i+j=k} f[i]*g[j] for 0 <= k < len.
std::vector<mpz_class> convolve_serial(std::span<const mpz_class> f,
                                       std::span<const mpz_class> g, std::size_t len);
std::vector<mpz_class> convolve_parallel(std::span<const mpz_class> f,
                                         std::span<const mpz_class> g, std::size_t len);

/// Picks the parallel kernel once the triangular term count is large enough
/// to amortize a thread team.
std::vector<mpz_class> convolve(std::span<const mpz_class> f, std::span<const mpz_class> g,
                                std::size_t len);

/// Min-plus convolution: out[k] = min_{i+j=k} (a[i] + b[j]) with kInfinity
/// absorbing; used for per-coefficient precision bounds.
std::vector<long> min_plus_serial(std::span<const long> a, std::span<const long> b,
                                  std::size_t len);
std::vector<long> min_plus_parallel(std::span<const long> a, std::span<const long> b,
                                    std::size_t len);
std::vector<long> min_plus(std::span<const long> a, std::span<const long> b, std::size_t len);

/// Number of worker threads the parallel kernels would use.
int max_threads();

}  // namespace halflog::kernels
