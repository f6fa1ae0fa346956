#include "halflog/padic.hpp"

#include <algorithm>
#include <sstream>

namespace halflog {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::MixedPrime: return "MixedPrime";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::MixedExtension: return "MixedExtension";
    case ErrorCode::NotSupersingular: return "NotSupersingular";
    case ErrorCode::NonIntegralCoefficient: return "NonIntegralCoefficient";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::HasseViolation: return "HasseViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

long sat_add(long a, long b) {
  if (a == kInfinity || b == kInfinity) return kInfinity;
  return a + b;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

mpz_class pow_p(long p, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), e);
  return r;
}

long strip_p(mpz_class& z, long p) {
  mpz_class pp(p);
  return static_cast<long>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t()));
}

namespace {

void check_same_prime(const PadicScalar& x, const PadicScalar& y) {
  if (x.prime() != y.prime()) {
    fail(ErrorCode::MixedPrime,
         "operands over p=" + std::to_string(x.prime()) + " and p=" + std::to_string(y.prime()));
  }
}

// unit * p^shift as a rational, shift >= 0.
mpq_class shifted(const mpq_class& unit, long shift, long p) {
  if (shift == 0) return unit;
  mpq_class r(unit);
  r *= mpq_class(pow_p(p, static_cast<unsigned long>(shift)));
  return r;
}

}  // namespace

PadicScalar PadicScalar::make(long p, mpq_class unit, long exponent, long absprec) {
  PadicScalar r(p, absprec);
  if (unit == 0) return r;
  mpz_class num = unit.get_num();
  mpz_class den = unit.get_den();
  long v = exponent + strip_p(num, p) - strip_p(den, p);
  if (absprec != kInfinity) {
    if (v >= absprec) return r;
    mpz_class mod = pow_p(p, static_cast<unsigned long>(absprec - v));
    if (den != 1) {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
      num *= inv;
    }
    mpz_class red;
    mpz_mod(red.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    r.unit_ = mpq_class(red);
  } else {
    r.unit_ = mpq_class(num, den);
    r.unit_.canonicalize();
  }
  r.val_ = v;
  return r;
}

PadicScalar PadicScalar::zero(long p, long absprec) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  return PadicScalar(p, absprec);
}

PadicScalar PadicScalar::from_integer(long p, const mpz_class& n, long absprec) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  return make(p, mpq_class(n), 0, absprec);
}

PadicScalar PadicScalar::from_rational(long p, const mpq_class& q, long absprec) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  mpq_class c(q);
  c.canonicalize();
  return make(p, c, 0, absprec);
}

PadicScalar padic_from_rational(long p, const mpz_class& num, long den_pow, long absprec) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (den_pow < 0) fail(ErrorCode::InvalidArgument, "den_pow must be non-negative");
  return PadicScalar::make(p, mpq_class(num), -den_pow, absprec);
}

PadicScalar PadicScalar::p_power(long p, long e) {
  if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  return make(p, mpq_class(1), e, kInfinity);
}

long PadicScalar::valuation() const {
  if (!is_zero()) return val_;
  if (is_exact()) return kInfinity;
  fail(ErrorCode::PrecisionExhausted,
       "value is 0 modulo " + std::to_string(p_) + "^" + std::to_string(absprec_));
}

mpq_class PadicScalar::value() const {
  if (is_zero()) return 0;
  if (val_ >= 0) return shifted(unit_, val_, p_);
  mpq_class r(unit_);
  r /= mpq_class(pow_p(p_, static_cast<unsigned long>(-val_)));
  return r;
}

mpz_class PadicScalar::numerator() const {
  if (is_zero()) return 0;
  mpz_class n = unit_.get_num();
  if (val_ > 0) n *= pow_p(p_, static_cast<unsigned long>(val_));
  return n;
}

long PadicScalar::den_pow() const { return (is_zero() || val_ >= 0) ? 0 : -val_; }

mpz_class PadicScalar::den_unit() const { return is_zero() ? mpz_class(1) : unit_.get_den(); }

PadicScalar PadicScalar::with_absprec(long prec) const {
  if (prec >= absprec_) return *this;
  return make(p_, unit_, val_, prec);
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  return make(p_, -unit_, val_, absprec_);
}

PadicScalar operator+(const PadicScalar& x, const PadicScalar& y) {
  check_same_prime(x, y);
  const long prec = std::min(x.absprec_, y.absprec_);
  if (x.is_zero()) return y.with_absprec(prec);
  if (y.is_zero()) return x.with_absprec(prec);
  const long e = std::min(x.val_, y.val_);
  mpq_class sum = shifted(x.unit_, x.val_ - e, x.p_) + shifted(y.unit_, y.val_ - e, x.p_);
  return PadicScalar::make(x.p_, std::move(sum), e, prec);
}

PadicScalar operator-(const PadicScalar& x, const PadicScalar& y) { return x + (-y); }

PadicScalar operator*(const PadicScalar& x, const PadicScalar& y) {
  check_same_prime(x, y);
  if (x.is_exact_zero() || y.is_exact_zero()) return PadicScalar::zero(x.p_);
  const long prec = std::min(sat_add(x.valuation_bound(), y.absprec_),
                             sat_add(y.valuation_bound(), x.absprec_));
  if (x.is_zero() || y.is_zero()) return PadicScalar(x.p_, prec);
  return PadicScalar::make(x.p_, x.unit_ * y.unit_, x.val_ + y.val_, prec);
}

PadicScalar operator/(const PadicScalar& x, const PadicScalar& y) {
  check_same_prime(x, y);
  if (y.is_exact_zero()) fail(ErrorCode::DivisionByZero, "division by exact zero");
  if (y.is_zero()) {
    fail(ErrorCode::PrecisionExhausted, "divisor is 0 modulo " + std::to_string(y.p_) + "^" +
                                            std::to_string(y.absprec_));
  }
  if (x.is_exact_zero()) return PadicScalar::zero(x.p_);
  if (x.is_zero()) return PadicScalar(x.p_, x.absprec_ - y.val_);
  const long rel_y = y.is_exact() ? kInfinity : y.absprec_ - y.val_;
  const long rel_x = x.is_exact() ? kInfinity : x.absprec_ - x.val_;
  const long v = x.val_ - y.val_;
  const long prec = sat_add(v, std::min(rel_x, rel_y));
  return PadicScalar::make(x.p_, x.unit_ / y.unit_, v, prec);
}

bool operator==(const PadicScalar& x, const PadicScalar& y) {
  return x.p_ == y.p_ && x.absprec_ == y.absprec_ && x.unit_ == y.unit_ &&
         (x.is_zero() || x.val_ == y.val_);
}

std::string PadicScalar::to_string() const {
  std::ostringstream os;
  if (is_zero()) {
    os << "0";
  } else {
    os << unit_.get_str();
    if (val_ != 0) os << "*" << p_ << "^" << val_;
  }
  if (!is_exact()) os << " + O(" << p_ << "^" << absprec_ << ")";
  return os.str();
}

bool agree_mod(const PadicScalar& x, const PadicScalar& y, long prec) {
  if (x.absprec() < prec || y.absprec() < prec) return false;
  return (x - y).valuation_bound() >= prec;
}

// ---------------------------------------------------------------------------

namespace {

void check_same_extension(const QuadExtScalar& x, const QuadExtScalar& y) {
  if (x.prime() != y.prime() || x.ap() != y.ap()) {
    fail(ErrorCode::MixedExtension, "(p, a_p) = (" + std::to_string(x.prime()) + ", " +
                                        std::to_string(x.ap()) + ") vs (" +
                                        std::to_string(y.prime()) + ", " + std::to_string(y.ap()) +
                                        ")");
  }
}

}  // namespace

QuadExtScalar::QuadExtScalar(long p, long ap, PadicScalar a, PadicScalar b)
    : p_(p), ap_(ap), a_(std::move(a)), b_(std::move(b)) {
  if (a_.prime() != p || b_.prime() != p) {
    fail(ErrorCode::MixedPrime, "coordinates do not live over p=" + std::to_string(p));
  }
}

QuadExtScalar QuadExtScalar::zero(long p, long ap) {
  return {p, ap, PadicScalar::zero(p), PadicScalar::zero(p)};
}

QuadExtScalar QuadExtScalar::one(long p, long ap) {
  return {p, ap, PadicScalar::from_integer(p, 1), PadicScalar::zero(p)};
}

QuadExtScalar QuadExtScalar::alpha(long p, long ap) {
  return {p, ap, PadicScalar::zero(p), PadicScalar::from_integer(p, 1)};
}

QuadExtScalar QuadExtScalar::alpha_bar(long p, long ap) {
  return {p, ap, PadicScalar::from_integer(p, ap), PadicScalar::from_integer(p, -1)};
}

QuadExtScalar QuadExtScalar::from_scalar(long ap, const PadicScalar& a) {
  return {a.prime(), ap, a, PadicScalar::zero(a.prime())};
}

QuadExtScalar QuadExtScalar::conj() const {
  // a + b*alpha -> a + b*(a_p - alpha)
  return {p_, ap_, a_ + PadicScalar::from_integer(p_, ap_) * b_, -b_};
}

PadicScalar QuadExtScalar::norm() const {
  const PadicScalar ap = PadicScalar::from_integer(p_, ap_);
  const PadicScalar p = PadicScalar::from_integer(p_, p_);
  return a_ * a_ + ap * a_ * b_ + p * b_ * b_;
}

PadicScalar QuadExtScalar::trace() const {
  return PadicScalar::from_integer(p_, 2) * a_ + PadicScalar::from_integer(p_, ap_) * b_;
}

QuadExtScalar QuadExtScalar::inverse() const {
  const PadicScalar n = norm();
  const QuadExtScalar c = conj();
  return {p_, ap_, c.a_ / n, c.b_ / n};
}

QuadExtScalar QuadExtScalar::pow(long e) const {
  QuadExtScalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  QuadExtScalar acc = one(p_, ap_);
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

QuadExtScalar QuadExtScalar::with_absprec(long prec) const {
  return {p_, ap_, a_.with_absprec(prec), b_.with_absprec(prec)};
}

long QuadExtScalar::valuation_half_bound() const {
  const long va = a_.valuation_bound();
  const long vb = b_.valuation_bound();
  const long twice_a = va == kInfinity ? kInfinity : 2 * va;
  const long twice_b = vb == kInfinity ? kInfinity : 2 * vb + 1;
  return std::min(twice_a, twice_b);
}

QuadExtScalar QuadExtScalar::operator-() const { return {p_, ap_, -a_, -b_}; }

QuadExtScalar operator+(const QuadExtScalar& x, const QuadExtScalar& y) {
  check_same_extension(x, y);
  return {x.p_, x.ap_, x.a_ + y.a_, x.b_ + y.b_};
}

QuadExtScalar operator-(const QuadExtScalar& x, const QuadExtScalar& y) {
  check_same_extension(x, y);
  return {x.p_, x.ap_, x.a_ - y.a_, x.b_ - y.b_};
}

QuadExtScalar operator*(const QuadExtScalar& x, const QuadExtScalar& y) {
  check_same_extension(x, y);
  // alpha^2 = a_p*alpha - p
  const PadicScalar bd = x.b_ * y.b_;
  const PadicScalar ap = PadicScalar::from_integer(x.p_, x.ap_);
  const PadicScalar p = PadicScalar::from_integer(x.p_, x.p_);
  return {x.p_, x.ap_, x.a_ * y.a_ - p * bd, x.a_ * y.b_ + x.b_ * y.a_ + ap * bd};
}

QuadExtScalar operator*(const PadicScalar& s, const QuadExtScalar& x) {
  return {x.p_, x.ap_, s * x.a_, s * x.b_};
}

QuadExtScalar operator/(const QuadExtScalar& x, const QuadExtScalar& y) {
  check_same_extension(x, y);
  return x * y.inverse();
}

bool operator==(const QuadExtScalar& x, const QuadExtScalar& y) {
  return x.p_ == y.p_ && x.ap_ == y.ap_ && x.a_ == y.a_ && x.b_ == y.b_;
}

std::string QuadExtScalar::to_string() const {
  return "(" + a_.to_string() + ") + (" + b_.to_string() + ")*alpha";
}

bool agree_mod(const QuadExtScalar& x, const QuadExtScalar& y, long prec) {
  return x.prime() == y.prime() && x.ap() == y.ap() && agree_mod(x.a(), y.a(), prec) &&
         agree_mod(x.b(), y.b(), prec);
}

}  // namespace halflog
