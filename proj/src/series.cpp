#include "halflog/series.hpp"

#include <algorithm>
#include <sstream>

#include "halflog/kernels.hpp"
#include "halflog/trace_ladder.hpp"

namespace halflog {

namespace {

std::size_t as_size_cap(long cap) {
  return cap == PowerSeries::kExactCap ? ipoly::kNoCap : static_cast<std::size_t>(cap);
}

void check_same_prime(const PowerSeries& f, const PowerSeries& g) {
  if (f.prime() != g.prime()) {
    fail(ErrorCode::MixedPrime,
         "series over p=" + std::to_string(f.prime()) + " and p=" + std::to_string(g.prime()));
  }
}

// f = p^exp / den * ints, with ints integral.
struct Scaled {
  ipoly::IntPoly ints;
  long exp = 0;
  mpz_class den = 1;
};

Scaled scale_to_ints(const PowerSeries& f) {
  Scaled s;
  long e = kInfinity;
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    e = std::min(e, c.unit_exponent());
    mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.unit().get_den().get_mpz_t());
  }
  if (e == kInfinity) return s;
  s.exp = e;
  s.ints.resize(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    mpz_class v = c.unit().get_num() * (s.den / c.unit().get_den());
    v *= pow_p(f.prime(), static_cast<unsigned long>(c.unit_exponent() - e));
    s.ints[k] = std::move(v);
  }
  return s;
}

PowerSeries unscale(long p, const ipoly::IntPoly& ints, long exp, const mpz_class& den,
                    const std::vector<long>& prec, long cap) {
  std::vector<PadicScalar> out;
  out.reserve(ints.size());
  for (std::size_t k = 0; k < ints.size(); ++k) {
    const long ap = prec.empty() ? kInfinity : prec[k];
    out.push_back(PadicScalar::make(p, mpq_class(ints[k], den), exp, ap));
  }
  return {p, std::move(out), cap};
}

}  // namespace

PowerSeries::PowerSeries(long p, long cap) : p_(p), cap_(cap) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (cap < 0) fail(ErrorCode::InvalidArgument, "negative cap");
}

PowerSeries::PowerSeries(long p, std::vector<PadicScalar> coeffs, long cap)
    : p_(p), cap_(cap), coeffs_(std::move(coeffs)) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (cap < 0) fail(ErrorCode::InvalidArgument, "negative cap");
  for (const auto& c : coeffs_) {
    if (c.prime() != p) fail(ErrorCode::MixedPrime, "coefficient over p=" + std::to_string(c.prime()));
  }
  normalize();
}

void PowerSeries::normalize() {
  if (cap_ != kExactCap && coeffs_.size() > static_cast<std::size_t>(cap_)) {
    coeffs_.resize(static_cast<std::size_t>(cap_), PadicScalar::zero(p_));
  }
  while (!coeffs_.empty() && coeffs_.back().is_exact_zero()) coeffs_.pop_back();
}

PowerSeries PowerSeries::from_integers(long p, std::initializer_list<long> coeffs, long cap) {
  std::vector<PadicScalar> c;
  for (long v : coeffs) c.push_back(PadicScalar::from_integer(p, v));
  return {p, std::move(c), cap};
}

PowerSeries PowerSeries::from_integers(long p, const std::vector<mpz_class>& coeffs, long cap) {
  return from_int_poly(p, coeffs, cap);
}

PowerSeries PowerSeries::constant(const PadicScalar& c, long cap) {
  return {c.prime(), {c}, cap};
}

PowerSeries PowerSeries::monomial(long p, std::size_t k, long cap) {
  std::vector<PadicScalar> c(k + 1, PadicScalar::zero(p));
  c[k] = PadicScalar::from_integer(p, 1);
  return {p, std::move(c), cap};
}

PadicScalar PowerSeries::coeff(std::size_t k) const {
  if (k < coeffs_.size()) return coeffs_[k];
  return PadicScalar::zero(p_);
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_zero(); });
}

bool PowerSeries::is_exact() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_exact(); });
}

long PowerSeries::min_absprec() const {
  long m = kInfinity;
  for (const auto& c : coeffs_) m = std::min(m, c.absprec());
  return m;
}

long PowerSeries::min_valuation() const {
  long m = kInfinity;
  for (const auto& c : coeffs_) m = std::min(m, c.valuation_bound());
  return m;
}

PowerSeries PowerSeries::truncated(long cap) const {
  return {p_, coeffs_, std::min(cap, cap_)};
}

PowerSeries PowerSeries::with_absprec(long prec) const {
  std::vector<PadicScalar> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x.with_absprec(prec));
  return {p_, std::move(c), cap_};
}

PowerSeries PowerSeries::derivative() const {
  std::vector<PadicScalar> c;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    c.push_back(PadicScalar::from_integer(p_, static_cast<long>(k)) * coeffs_[k]);
  }
  return {p_, std::move(c), cap_ == kExactCap ? kExactCap : std::max(0L, cap_ - 1)};
}

PowerSeries PowerSeries::as_polynomial() const { return {p_, coeffs_, kExactCap}; }

PowerSeries PowerSeries::operator-() const {
  std::vector<PadicScalar> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(-x);
  return {p_, std::move(c), cap_};
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
  check_same_prime(f, g);
  const long cap = std::min(f.cap_, g.cap_);
  std::size_t len = std::max(f.size(), g.size());
  if (cap != PowerSeries::kExactCap) len = std::min(len, static_cast<std::size_t>(cap));
  std::vector<PadicScalar> c;
  c.reserve(len);
  for (std::size_t k = 0; k < len; ++k) c.push_back(f.coeff(k) + g.coeff(k));
  return {f.p_, std::move(c), cap};
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

bool operator==(const PowerSeries& f, const PowerSeries& g) {
  return f.p_ == g.p_ && f.cap_ == g.cap_ && f.coeffs_ == g.coeffs_;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_exact_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[k].to_string() << ")";
    if (k > 0) os << "*X^" << k;
  }
  if (first) os << "0";
  if (cap_ != kExactCap) os << " + O(X^" << cap_ << ")";
  return os.str();
}

PowerSeries scalar_mul(const PadicScalar& s, const PowerSeries& f) {
  if (s.prime() != f.prime()) fail(ErrorCode::MixedPrime, "scalar and series over different p");
  std::vector<PadicScalar> c;
  c.reserve(f.size());
  for (const auto& x : f.coeffs()) c.push_back(s * x);
  return {f.prime(), std::move(c), f.cap()};
}

PowerSeries scalar_mul(long s, const PowerSeries& f) {
  return scalar_mul(PadicScalar::from_integer(f.prime(), s), f);
}

PowerSeries mul(const PowerSeries& f, const PowerSeries& g, long cap) {
  check_same_prime(f, g);
  const long p = f.prime();
  const long out_cap = std::min({cap, f.cap(), g.cap()});
  if (f.size() == 0 || g.size() == 0) return PowerSeries(p, out_cap);
  const std::size_t len = std::min(as_size_cap(out_cap), f.size() + g.size() - 1);

  const Scaled sf = scale_to_ints(f);
  const Scaled sg = scale_to_ints(g);
  std::vector<long> prec;
  if (!f.is_exact() || !g.is_exact()) {
    auto bounds = [](const PowerSeries& h, std::vector<long>& vb, std::vector<long>& ap) {
      for (const auto& c : h.coeffs()) {
        vb.push_back(c.valuation_bound());
        ap.push_back(c.absprec());
      }
    };
    std::vector<long> vf, af, vg, ag;
    bounds(f, vf, af);
    bounds(g, vg, ag);
    prec = kernels::min_plus(vf, ag, len);
    const auto other = kernels::min_plus(af, vg, len);
    for (std::size_t k = 0; k < len; ++k) prec[k] = std::min(prec[k], other[k]);
  }
  if (sf.ints.empty() || sg.ints.empty()) {
    // every stored coefficient is zero; keep only the precision information
    std::vector<PadicScalar> c;
    for (std::size_t k = 0; k < len; ++k) c.push_back(PadicScalar::zero(p, prec.empty() ? kInfinity : prec[k]));
    return {p, std::move(c), out_cap};
  }
  ipoly::IntPoly prod = kernels::convolve(sf.ints, sg.ints, len);
  return unscale(p, prod, sf.exp + sg.exp, sf.den * sg.den, prec, out_cap);
}

PowerSeries phi(long p, long j, long cap, long absprec) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  PowerSeries f = from_int_poly(p, ipoly::phi(p, j, as_size_cap(cap)), cap);
  return absprec == kInfinity ? f : f.with_absprec(absprec);
}

PowerSeries omega(long p, long n, long cap) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  return from_int_poly(p, ipoly::omega(p, n, as_size_cap(cap)), cap);
}

PowerSeries omega_congruent(long p, long ap, long n, long i) {
  const PeriodConstants pc = period_constants(p, ap);
  ipoly::IntPoly acc{1};
  for (long j = 1; j <= n; ++j) {
    if (((j - i) % pc.two_tilde + pc.two_tilde) % pc.two_tilde != 0) continue;
    acc = ipoly::mul(acc, ipoly::phi(p, j));
  }
  return from_int_poly(p, acc);
}

DivMod divmod(const PowerSeries& f, const PowerSeries& g) {
  check_same_prime(f, g);
  const ipoly::IntPoly gi = to_int_poly(g);
  if (gi.empty() || gi.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
  const long p = f.prime();
  const Scaled sf = scale_to_ints(f);
  const long prec = f.min_absprec();
  ipoly::IntPoly q;
  const ipoly::IntPoly r = ipoly::rem(sf.ints, gi, &q);
  const std::vector<long> pr_r(r.size(), prec), pr_q(q.size(), prec);
  PowerSeries rem = unscale(p, r, sf.exp, sf.den, pr_r, PowerSeries::kExactCap);
  if (prec != kInfinity) {
    // pad the remainder so that its precision survives trimming
    std::vector<PadicScalar> c(rem.coeffs().begin(), rem.coeffs().end());
    c.resize(std::max<std::size_t>(c.size(), gi.size() - 1), PadicScalar::zero(p, prec));
    rem = PowerSeries(p, std::move(c));
  }
  return {unscale(p, q, sf.exp, sf.den, pr_q, PowerSeries::kExactCap), std::move(rem)};
}

PowerSeries reduce_mod(const PowerSeries& f, const PowerSeries& g) { return divmod(f, g).remainder; }

PowerSeries eval_at_root(const PowerSeries& f, long j) { return reduce_mod(f, phi(f.prime(), j)); }

PowerSeries exact_divide(const PowerSeries& f, const PowerSeries& g) {
  DivMod d = divmod(f, g);
  if (!d.remainder.is_zero()) {
    fail(ErrorCode::InexactDivision, "remainder " + d.remainder.to_string());
  }
  return std::move(d.quotient);
}

std::optional<mpq_class> gauss_norm_log(const PowerSeries& f, const mpq_class& s) {
  std::optional<mpq_class> best;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& c = f.coeffs()[k];
    if (c.is_exact_zero()) continue;
    mpq_class v = -mpq_class(c.valuation_bound()) - mpq_class(static_cast<long>(k)) * s;
    if (!best || v > *best) best = v;
  }
  return best;
}

PowerSeries log_series(long p, long cap) {
  if (cap < 1) fail(ErrorCode::InvalidArgument, "log_series needs cap >= 1");
  std::vector<PadicScalar> c;
  c.reserve(static_cast<std::size_t>(cap));
  c.push_back(PadicScalar::zero(p));
  for (long k = 1; k < cap; ++k) {
    c.push_back(PadicScalar::from_rational(p, mpq_class(k % 2 == 1 ? 1 : -1, k)));
  }
  return {p, std::move(c), cap};
}

bool agree_mod(const PowerSeries& f, const PowerSeries& g, long prec) {
  if (f.prime() != g.prime()) return false;
  std::size_t len = std::max(f.size(), g.size());
  const long cap = std::min(f.cap(), g.cap());
  if (cap != PowerSeries::kExactCap) len = std::min(len, static_cast<std::size_t>(cap));
  for (std::size_t k = 0; k < len; ++k) {
    if (!agree_mod(f.coeff(k), g.coeff(k), prec)) return false;
  }
  return true;
}

long agreement_valuation(const PowerSeries& f, const PowerSeries& g) {
  check_same_prime(f, g);
  std::size_t len = std::max(f.size(), g.size());
  const long cap = std::min(f.cap(), g.cap());
  if (cap != PowerSeries::kExactCap) len = std::min(len, static_cast<std::size_t>(cap));
  long v = kInfinity;
  for (std::size_t k = 0; k < len; ++k) v = std::min(v, (f.coeff(k) - g.coeff(k)).valuation_bound());
  return v;
}

ipoly::IntPoly to_int_poly(const PowerSeries& f) {
  ipoly::IntPoly out(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& c = f.coeffs()[k];
    if (c.is_exact_zero()) continue;
    if (!c.is_exact() || c.unit().get_den() != 1 || c.unit_exponent() < 0) {
      fail(ErrorCode::NonIntegralCoefficient,
           "coefficient " + std::to_string(k) + " is " + c.to_string());
    }
    out[k] = c.numerator();
  }
  return out;
}

PowerSeries from_int_poly(long p, const ipoly::IntPoly& f, long cap) {
  std::vector<PadicScalar> c;
  c.reserve(f.size());
  for (const auto& x : f) c.push_back(PadicScalar::make(p, mpq_class(x), 0, kInfinity));
  return {p, std::move(c), cap};
}

// ---------------------------------------------------------------------------

QuadSeries::QuadSeries(long ap, PowerSeries a, PowerSeries b)
    : ap_(ap), a_(std::move(a)), b_(std::move(b)) {
  check_same_prime(a_, b_);
}

QuadSeries QuadSeries::from_series(long ap, const PowerSeries& a) {
  return {ap, a, PowerSeries(a.prime(), a.cap())};
}

QuadExtScalar QuadSeries::coeff(std::size_t k) const {
  return {prime(), ap_, a_.coeff(k), b_.coeff(k)};
}

QuadSeries QuadSeries::truncated(long cap) const {
  return {ap_, a_.truncated(cap), b_.truncated(cap)};
}

QuadSeries QuadSeries::with_absprec(long prec) const {
  return {ap_, a_.with_absprec(prec), b_.with_absprec(prec)};
}

long QuadSeries::min_absprec() const { return std::min(a_.min_absprec(), b_.min_absprec()); }

QuadSeries QuadSeries::operator-() const { return {ap_, -a_, -b_}; }

namespace {

void check_same_extension(const QuadSeries& f, const QuadSeries& g) {
  if (f.prime() != g.prime() || f.ap() != g.ap()) {
    fail(ErrorCode::MixedExtension, "series over different (p, a_p)");
  }
}

}  // namespace

QuadSeries operator+(const QuadSeries& f, const QuadSeries& g) {
  check_same_extension(f, g);
  return {f.ap_, f.a_ + g.a_, f.b_ + g.b_};
}

QuadSeries operator-(const QuadSeries& f, const QuadSeries& g) {
  check_same_extension(f, g);
  return {f.ap_, f.a_ - g.a_, f.b_ - g.b_};
}

bool operator==(const QuadSeries& f, const QuadSeries& g) {
  return f.ap_ == g.ap_ && f.a_ == g.a_ && f.b_ == g.b_;
}

QuadSeries scalar_mul(const QuadExtScalar& s, const QuadSeries& f) {
  if (s.prime() != f.prime() || s.ap() != f.ap()) {
    fail(ErrorCode::MixedExtension, "scalar and series over different (p, a_p)");
  }
  const long p = f.prime();
  // (x + y alpha)(a + b alpha) = (xa - p yb) + (xb + ya + a_p yb) alpha
  const PowerSeries yb = scalar_mul(s.b(), f.b());
  PowerSeries a = scalar_mul(s.a(), f.a()) - scalar_mul(p, yb);
  PowerSeries b = scalar_mul(s.a(), f.b()) + scalar_mul(s.b(), f.a()) + scalar_mul(f.ap(), yb);
  return {f.ap(), std::move(a), std::move(b)};
}

QuadSeries mul(const QuadSeries& f, const PowerSeries& g, long cap) {
  return {f.ap(), mul(f.a(), g, cap), mul(f.b(), g, cap)};
}

QuadSeries mul(const QuadSeries& f, const QuadSeries& g, long cap) {
  check_same_extension(f, g);
  const long p = f.prime();
  const PowerSeries bd = mul(f.b(), g.b(), cap);
  PowerSeries a = mul(f.a(), g.a(), cap) - scalar_mul(p, bd);
  PowerSeries b = mul(f.a(), g.b(), cap) + mul(f.b(), g.a(), cap) + scalar_mul(f.ap(), bd);
  return {f.ap(), std::move(a), std::move(b)};
}

QuadSeries eval_at_root(const QuadSeries& f, long j) {
  return {f.ap(), eval_at_root(f.a(), j), eval_at_root(f.b(), j)};
}

bool agree_mod(const QuadSeries& f, const QuadSeries& g, long prec) {
  return f.ap() == g.ap() && agree_mod(f.a(), g.a(), prec) && agree_mod(f.b(), g.b(), prec);
}

std::optional<mpq_class> gauss_norm_log(const QuadSeries& f, const mpq_class& s) {
  std::optional<mpq_class> best;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const QuadExtScalar c = f.coeff(k);
    if (c.a().is_exact_zero() && c.b().is_exact_zero()) continue;
    const long twice = c.valuation_half_bound();
    mpq_class v = -mpq_class(twice, 2) - mpq_class(static_cast<long>(k)) * s;
    v.canonicalize();
    if (!best || v > *best) best = v;
  }
  return best;
}

}  // namespace halflog
