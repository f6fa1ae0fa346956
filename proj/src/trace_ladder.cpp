#include "halflog/trace_ladder.hpp"

#include <sstream>

namespace halflog {

bool is_supersingular_pair(long p, long ap) {
  return is_prime(p) && ap % p == 0 && ap * ap <= 4 * p;
}

void require_supersingular(long p, long ap) {
  if (!is_supersingular_pair(p, ap)) {
    fail(ErrorCode::NotSupersingular,
         "(p, a_p) = (" + std::to_string(p) + ", " + std::to_string(ap) + ")");
  }
}

Mat2 Mat2::inverse() const {
  const mpq_class det = a * d - b * c;
  if (det == 0) fail(ErrorCode::DivisionByZero, "singular matrix");
  return {d / det, -b / det, -c / det, a / det};
}

Mat2 Mat2::pow(long e) const {
  Mat2 base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Mat2 acc = identity();
  while (k > 0) {
    if (k & 1UL) acc = acc * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return acc;
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

std::string Mat2::to_string() const {
  return "[[" + a.get_str() + ", " + b.get_str() + "], [" + c.get_str() + ", " + d.get_str() +
         "]]";
}

Mat2 hecke_matrix(long p, long ap) { return {ap, -1, p, 0}; }

PeriodConstants period_constants(long p, long ap) {
  require_supersingular(p, ap);
  const PeriodConstants pc = ap == 0 ? PeriodConstants{2, 4, 1} : PeriodConstants{2 * p, 4 * p, p};
  const mpq_class scale(-pow_p(p, static_cast<unsigned long>(pc.one_tilde)));
  const Mat2 expected{scale, 0, 0, scale};
  const Mat2 got = hecke_matrix(p, ap).pow(pc.two_tilde);
  if (!(got == expected)) {
    fail(ErrorCode::NotSupersingular, "C^" + std::to_string(pc.two_tilde) + " = " + got.to_string());
  }
  return pc;
}

long ap_at(long p, long ap, long i) { return (i % 2 != 0) ? ap / p : ap; }

DeltaCoeffs delta_coeffs(long p, long ap, long i) {
  const PeriodConstants pc = period_constants(p, ap);
  long r = ((i % pc.four_tilde) + pc.four_tilde) % pc.four_tilde;
  long sign = 1;
  if (r >= pc.two_tilde) {
    r -= pc.two_tilde;
    sign = -1;
  }
  // top row of C^r scaled by p^-[r/2]
  const Mat2 m = hecke_matrix(p, ap).pow(r);
  const mpq_class s(1, pow_p(p, static_cast<unsigned long>(r / 2)));
  const mpq_class y = m.a * s;
  const mpq_class yp = m.b * s;
  if (y.get_den() != 1 || yp.get_den() != 1) {
    fail(ErrorCode::NonIntegralCoefficient, "delta^" + std::to_string(i) + " = (" + y.get_str() +
                                                ", " + yp.get_str() + ")");
  }
  return {p, ap, i, sign * y.get_num(), sign * yp.get_num()};
}

std::string render_delta(const mpz_class& y, const mpz_class& y_prime) {
  std::string out;
  auto coefficient = [](const mpz_class& c) {
    return abs(c) == 1 ? std::string() : mpz_class(abs(c)).get_str();
  };
  if (y != 0) out = (y < 0 ? "-" : "") + coefficient(y) + "c_n";
  if (y_prime != 0) {
    if (out.empty()) {
      out = (y_prime < 0 ? "-" : "");
    } else {
      out += y_prime < 0 ? " - " : " + ";
    }
    out += coefficient(y_prime) + "c_{n-1}";
  }
  return out.empty() ? "0" : out;
}

std::vector<DeltaRow> delta_table(long p, long ap, long i_min, long i_max) {
  period_constants(p, ap);
  std::vector<DeltaRow> rows;
  for (long i = i_min; i <= i_max; ++i) {
    DeltaCoeffs d = delta_coeffs(p, ap, i);
    rows.push_back({i, d.y, d.y_prime, render_delta(d.y, d.y_prime)});
  }
  return rows;
}

Mat2 a_matrix(long p, long ap, long l) {
  require_supersingular(p, ap);
  if (l < 1) fail(ErrorCode::InvalidArgument, "a_matrix needs l >= 1");
  Mat2 a{ap, -1, 1, 0};
  for (long i = 1; i < l; ++i) a = a * Mat2{ap_at(p, ap, i), -1, 1, 0};

  const Mat2 lhs = a.inverse() * Mat2{ap, -p, 1, 0}.pow(l - 1);
  const Mat2 diag{mpq_class(pow_p(p, static_cast<unsigned long>(l / 2))), 0, 0,
                  mpq_class(pow_p(p, static_cast<unsigned long>((l - 1) / 2)))};
  const Mat2 rhs = diag * Mat2{0, 1, -1, ap};
  if (!(lhs == rhs)) {
    fail(ErrorCode::IdentityViolation, "A_" + std::to_string(l) + ": " + lhs.to_string() +
                                           " != " + rhs.to_string());
  }
  return a;
}

QuadExtScalar beta(long p, long ap, long m) {
  const DeltaCoeffs d = delta_coeffs(p, ap, m);
  const PadicScalar scale = PadicScalar::p_power(p, floor_div(m, 2)) *
                            PadicScalar::from_integer(p, d.y);
  return scale * QuadExtScalar::alpha(p, ap).pow(-m);
}

CheckReport y_beta_identity_check(long p, long ap, long i, long k) {
  const nlohmann::json config = {{"p", p}, {"ap", ap}, {"i", i}, {"k", k}};
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
  auto scaled_y = [&](long m) {
    return PadicScalar::p_power(p, floor_div(m, 2)) *
           PadicScalar::from_integer(p, delta_coeffs(p, ap, m).y);
  };
  const QuadExtScalar alpha = QuadExtScalar::alpha(p, ap);
  const QuadExtScalar lhs = QuadExtScalar::from_scalar(ap, scaled_y(i)) -
                            scaled_y(i - k) * QuadExtScalar::alpha_bar(p, ap).pow(k);
  const QuadExtScalar rhs = beta(p, ap, k - 1) * alpha.pow(i);
  if (lhs == rhs) return CheckReport::pass("y_beta_identity", config);
  return CheckReport::failure("y_beta_identity", config,
                              {{"lhs", lhs.to_string()}, {"rhs", rhs.to_string()}});
}

}  // namespace halflog
