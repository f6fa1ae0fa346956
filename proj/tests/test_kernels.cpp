#include <doctest.h>

#include <random>

#include "halflog/kernels.hpp"
#include "halflog/padic.hpp"

using namespace halflog;

namespace {

std::vector<mpz_class> random_poly(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  std::vector<mpz_class> f(len);
  for (auto& x : f) x = mpz_class(d(rng)) * d(rng) * d(rng);
  return f;
}

}  // namespace

TEST_CASE("convolution agrees with the schoolbook definition") {
  std::mt19937_64 rng(3);
  for (const std::size_t n : {1u, 7u, 64u, 300u}) {
    const auto f = random_poly(rng, n);
    const auto g = random_poly(rng, n + 5);
    const std::size_t len = 2 * n + 2;
    std::vector<mpz_class> ref(len);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < g.size() && i + j < len; ++j) ref[i + j] += f[i] * g[j];
    CHECK(kernels::convolve_serial(f, g, len) == ref);
    CHECK(kernels::convolve_parallel(f, g, len) == ref);
    CHECK(kernels::convolve(f, g, len) == ref);
    // truncated output
    const std::vector<mpz_class> head(ref.begin(), ref.begin() + static_cast<long>(n / 2 + 1));
    CHECK(kernels::convolve_parallel(f, g, n / 2 + 1) == head);
  }
}

TEST_CASE("convolution with empty input") {
  const std::vector<mpz_class> f;
  const std::vector<mpz_class> g{1, 2};
  const auto out = kernels::convolve(f, g, 3);
  CHECK(out.size() == 3);
  for (const auto& x : out) CHECK(x == 0);
}

TEST_CASE("min-plus kernels agree") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> d(-20, 40);
  for (const std::size_t n : {1u, 13u, 500u}) {
    std::vector<long> a(n), b(n + 3);
    for (auto& x : a) x = d(rng) > 35 ? kInfinity : d(rng);
    for (auto& x : b) x = d(rng) > 35 ? kInfinity : d(rng);
    const std::size_t len = 2 * n;
    std::vector<long> ref(len, kInfinity);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
        ref[i + j] = std::min(ref[i + j], sat_add(a[i], b[j]));
    CHECK(kernels::min_plus_serial(a, b, len) == ref);
    CHECK(kernels::min_plus_parallel(a, b, len) == ref);
    CHECK(kernels::min_plus(a, b, len) == ref);
  }
}

TEST_CASE("thread count is positive") { CHECK(kernels::max_threads() >= 1); }
