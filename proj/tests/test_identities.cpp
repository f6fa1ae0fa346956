#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "halflog/identities.hpp"
#include "halflog/trace_ladder.hpp"

using namespace halflog;

TEST_CASE("the default suite passes") {
  const auto reports = run_suite(default_suite_config());
  CHECK(!reports.empty());
  std::set<std::string> seen;
  for (const auto& r : reports) {
    seen.insert(r.name);
    INFO(r.name << " " << r.config.dump() << " " << r.witness.dump());
    CHECK(r.passed);
  }
  const auto names = suite_check_names();
  CHECK(seen == std::set<std::string>(names.begin(), names.end()));
  CHECK(std::is_sorted(reports.begin(), reports.end(),
                       [](const auto& a, const auto& b) { return a.name < b.name; }));
}

TEST_CASE("an empty configuration runs nothing") {
  SuiteConfig c = default_suite_config();
  c.pairs.clear();
  CHECK(run_suite(c).empty());
}

TEST_CASE("parity fault injection is caught") {
  SuiteConfig c = default_suite_config();
  c.pairs = {{3, 3}};
  c.ladder.swap_parity = true;
  c.ladder.max_level = 12;
  const auto reports = run_suite(c);
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed; });
  CHECK(failed > 0);
  for (const auto& r : reports)
    if (!r.passed) CHECK(!r.witness.is_null());
}

TEST_CASE("the printed table") {
  const auto& cols = printed_delta_table();
  CHECK(cols.size() == 5);
  for (const auto& c : cols) {
    CHECK(c.rows.size() == 10);
    CHECK(delta_table_check(c.p == 0 ? 3 : c.p, c.ap).passed);
  }
  CHECK(delta_table_check(5, 0).passed);
  CHECK(delta_table_check(7, 0).passed);
  CHECK(cols[0].rows[2] == render_delta(delta_coeffs(cols[0].p, cols[0].ap, 0).y,
                                        delta_coeffs(cols[0].p, cols[0].ap, 0).y_prime));
}

TEST_CASE("factorization with a random integral pair") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-9, 9);
  std::vector<mpz_class> a(6), b(6);
  for (auto& x : a) x = d(rng);
  for (auto& x : b) x = d(rng);
  const PowerSeries lt = PowerSeries::from_integers(3, a);
  const PowerSeries lu = PowerSeries::from_integers(3, b);
  const CheckReport r = factorization_check(3, 3, lt, lu, 50, 6, 2);
  INFO(r.witness.dump());
  CHECK(r.passed);
}

TEST_CASE("determinant at infinity: literal form fails, normalized form holds") {
  for (const auto& [p, ap] : {std::pair{3L, 3L}, std::pair{2L, -2L}}) {
    const CheckReport lit = infinity_determinant_check(p, ap, 30, 8, DeterminantForm::Literal);
    const CheckReport norm = infinity_determinant_check(p, ap, 30, 8, DeterminantForm::Normalized);
    CHECK(!lit.passed);
    CHECK(!lit.witness.is_null());
    CHECK(norm.passed);
  }
}

TEST_CASE("individual checks") {
  CHECK(coefficient_lemma_check(2, -2).passed);
  CHECK(matrix_identity_check(3, 0).passed);
  CHECK(finite_determinant_check(2, 2, 3, -1).passed);
  CHECK(coefficient_factorization_check(3, -3, 3, 2).passed);
  CHECK(kernel_check(5, 0, 1, 3, 9).passed);
  CHECK(infinity_row_recursion_check(2, 2, 3, 20, 6).passed);
  CHECK(half_log_growth_check(3, 0, 40, 8).passed);
}

TEST_CASE("unknown check names are rejected") {
  SuiteConfig c = default_suite_config();
  c.only = {"no_such_check"};
  CHECK_THROWS_AS((void)run_suite(c), Error);
}
