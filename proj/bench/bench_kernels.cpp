// Serial reference against the OpenMP kernels on ladder-sized inputs.
#include <chrono>
#include <cstdio>
#include <random>

#include "halflog/kernels.hpp"
#include "halflog/ladder.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double seconds(F&& f) {
  const auto t0 = clock_type::now();
  f();
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<mpz_class> random_poly(std::mt19937_64& rng, std::size_t len, unsigned bits) {
  gmp_randclass r(gmp_randinit_default);
  r.seed(rng());
  std::vector<mpz_class> f(len);
  for (auto& x : f) x = r.get_z_bits(bits) - (mpz_class(1) << (bits - 1));
  return f;
}

}  // namespace

int main() {
  namespace k = halflog::kernels;
  std::printf("threads: %d\n", k::max_threads());
  std::printf("%8s %6s %12s %12s %8s\n", "len", "bits", "serial_s", "parallel_s", "match");
  std::mt19937_64 rng(7);
  for (const std::size_t len : {64u, 256u, 1024u, 4096u}) {
    for (const unsigned bits : {32u, 512u}) {
      const auto f = random_poly(rng, len, bits);
      const auto g = random_poly(rng, len, bits);
      std::vector<mpz_class> a, b;
      const double ts = seconds([&] { a = k::convolve_serial(f, g, len); });
      const double tp = seconds([&] { b = k::convolve_parallel(f, g, len); });
      std::printf("%8zu %6u %12.4f %12.4f %8s\n", len, bits, ts, tp, a == b ? "yes" : "NO");
    }
  }
  const double tl = seconds([] { halflog::ladder_infinity(3, 3, 1, 200, 20); });
  std::printf("ladder_infinity(3, 3, i=1, cap=200, prec=20): %.3f s\n", tl);
  return 0;
}
