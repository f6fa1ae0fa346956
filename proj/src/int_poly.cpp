#include "halflog/int_poly.hpp"

#include <algorithm>

#include "halflog/kernels.hpp"
#include "halflog/padic.hpp"

namespace halflog::ipoly {

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly lincomb(const mpz_class& a, const IntPoly& f, const mpz_class& b, const IntPoly& g) {
  IntPoly out(std::max(f.size(), g.size()));
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = a * f[k];
  if (b != 0) {
    for (std::size_t k = 0; k < g.size(); ++k) mpz_addmul(out[k].get_mpz_t(), b.get_mpz_t(), g[k].get_mpz_t());
  }
  trim(out);
  return out;
}

IntPoly scale(const IntPoly& f, const mpz_class& c) {
  if (c == 0) return {};
  IntPoly out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) out[k] = c * f[k];
  return out;
}

IntPoly mul(const IntPoly& f, const IntPoly& g, std::size_t cap) {
  if (f.empty() || g.empty()) return {};
  const std::size_t len = std::min(cap, f.size() + g.size() - 1);
  IntPoly out = kernels::convolve(f, g, len);
  trim(out);
  return out;
}

void reduce_coeffs(IntPoly& f, const mpz_class& mod) {
  for (auto& c : f) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
  trim(f);
}

void truncate(IntPoly& f, std::size_t cap) {
  if (f.size() > cap) f.resize(cap);
  trim(f);
}

IntPoly rem(const IntPoly& f, const IntPoly& g, IntPoly* quotient) {
  const std::size_t dg = g.size() - 1;
  IntPoly r(f);
  trim(r);
  if (quotient != nullptr) quotient->assign(r.size() > dg ? r.size() - dg : 0, 0);
  if (r.size() <= dg) return r;
  for (std::size_t k = r.size(); k-- > dg;) {
    if (r[k] == 0) continue;
    const mpz_class c = r[k];
    const std::size_t shift = k - dg;
    if (quotient != nullptr) (*quotient)[shift] = c;
    for (std::size_t t = 0; t <= dg; ++t) {
      mpz_submul(r[shift + t].get_mpz_t(), c.get_mpz_t(), g[t].get_mpz_t());
    }
  }
  r.resize(dg);
  trim(r);
  if (quotient != nullptr) trim(*quotient);
  return r;
}

namespace {

// (1+X)^m modulo X^cap, accumulated into out.
void add_binomial_row(IntPoly& out, const mpz_class& m, std::size_t cap) {
  mpz_class c = 1;
  for (std::size_t k = 0; k < cap; ++k) {
    if (c == 0) break;
    if (out.size() <= k) out.resize(k + 1);
    out[k] += c;
    // C(m, k+1) = C(m, k) * (m - k) / (k + 1)
    c *= (m - static_cast<unsigned long>(k));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
}

}  // namespace

IntPoly phi(long p, long j, std::size_t cap) {
  if (j < 1) fail(ErrorCode::InvalidArgument, "phi needs j >= 1");
  const mpz_class step = pow_p(p, static_cast<unsigned long>(j - 1));
  IntPoly out;
  for (long t = 0; t < p; ++t) add_binomial_row(out, step * t, cap);
  trim(out);
  return out;
}

IntPoly omega(long p, long n, std::size_t cap) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "omega needs n >= 0");
  IntPoly out;
  add_binomial_row(out, pow_p(p, static_cast<unsigned long>(n)), cap);
  out[0] -= 1;
  trim(out);
  return out;
}

}  // namespace halflog::ipoly
