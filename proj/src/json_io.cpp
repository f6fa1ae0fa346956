#include "halflog/json_io.hpp"

#include <sstream>

namespace halflog::io {

namespace {

json cap_to_json(long v) { return v == kInfinity ? json("inf") : json(v); }

long cap_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInfinity;
    fail(ErrorCode::ParseError, "expected an integer or \"inf\"");
  }
  return j.get<long>();
}

mpz_class mpz_from_json(const json& j) {
  mpz_class z;
  const std::string s = j.is_string() ? j.get<std::string>() : j.dump();
  if (z.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad integer '" + s + "'");
  return z;
}

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

json to_json(const PadicScalar& x) {
  json j = {{"num", x.numerator().get_str()}, {"den_pow", x.den_pow()},
            {"absprec", cap_to_json(x.absprec())}};
  const mpz_class du = x.den_unit();
  if (du != 1) j["den_unit"] = du.get_str();
  return j;
}

PadicScalar scalar_from_json(long p, const json& j) {
  return guarded("scalar", [&] {
    const mpz_class num = mpz_from_json(j.at("num"));
    const long den_pow = j.at("den_pow").get<long>();
    const long absprec = cap_from_json(j.at("absprec"));
    if (den_pow < 0) fail(ErrorCode::ParseError, "den_pow must be non-negative");
    mpq_class q(num, j.contains("den_unit") ? mpz_from_json(j.at("den_unit")) : mpz_class(1));
    if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator");
    q.canonicalize();
    q /= mpq_class(pow_p(p, static_cast<unsigned long>(den_pow)));
    return PadicScalar::from_rational(p, q, absprec);
  });
}

json to_json(const PowerSeries& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
  return {{"p", f.prime()}, {"cap", cap_to_json(f.cap())}, {"coeffs", coeffs}};
}

PowerSeries series_from_json(const json& j) {
  return guarded("series", [&] {
    const long p = j.at("p").get<long>();
    if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
    std::vector<PadicScalar> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(scalar_from_json(p, c));
    return PowerSeries(p, std::move(coeffs), cap_from_json(j.at("cap")));
  });
}

json to_json(const QuadSeries& f) {
  json coeffs = json::array();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const QuadExtScalar c = f.coeff(k);
    coeffs.push_back({{"a", to_json(c.a())}, {"b", to_json(c.b())}});
  }
  return {{"p", f.prime()}, {"ap", f.ap()}, {"cap", cap_to_json(f.cap())}, {"coeffs", coeffs}};
}

QuadSeries quad_series_from_json(const json& j) {
  return guarded("quadratic series", [&] {
    const long p = j.at("p").get<long>();
    const long ap = j.at("ap").get<long>();
    const long cap = cap_from_json(j.at("cap"));
    if (!is_prime(p)) fail(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
    std::vector<PadicScalar> a, b;
    for (const auto& c : j.at("coeffs")) {
      a.push_back(scalar_from_json(p, c.at("a")));
      b.push_back(scalar_from_json(p, c.at("b")));
    }
    return QuadSeries(ap, PowerSeries(p, std::move(a), cap), PowerSeries(p, std::move(b), cap));
  });
}

json to_json(const LadderMatrix& m) {
  json j = {{"kind", "ladder"},
            {"p", m.p},
            {"ap", m.ap},
            {"level", m.level ? json(*m.level) : json("infinity")},
            {"index", m.index},
            {"cap", cap_to_json(m.cap)},
            {"prec", cap_to_json(m.prec)},
            {"entries",
             {{to_json(m.upper.theta), to_json(m.upper.upsilon)},
              {to_json(m.lower.theta), to_json(m.lower.upsilon)}}}};
  if (m.at_infinity()) j["stop_level"] = m.stop_level;
  return j;
}

LadderMatrix ladder_from_json(const json& j) {
  return guarded("ladder", [&] {
    LadderMatrix m{j.at("p").get<long>(),
                   j.at("ap").get<long>(),
                   std::nullopt,
                   j.at("index").get<long>(),
                   cap_from_json(j.at("cap")),
                   cap_from_json(j.at("prec")),
                   {series_from_json(j.at("entries").at(0).at(0)),
                    series_from_json(j.at("entries").at(0).at(1))},
                   {series_from_json(j.at("entries").at(1).at(0)),
                    series_from_json(j.at("entries").at(1).at(1))},
                   j.value("stop_level", 0L)};
    const json& level = j.at("level");
    if (!(level.is_string() && level.get<std::string>() == "infinity")) m.level = level.get<long>();
    return m;
  });
}

json to_json(const HalfLogPair& h) {
  return {{"kind", "halflog"},          {"p", h.p},
          {"ap", h.ap},                 {"root", h.root_tag},
          {"cap", h.cap},               {"prec", h.prec},
          {"log_theta", to_json(h.log_theta)}, {"log_upsilon", to_json(h.log_upsilon)}};
}

HalfLogPair half_logs_from_json(const json& j) {
  return guarded("half-log pair", [&] {
    return HalfLogPair{j.at("p").get<long>(),
                       j.at("ap").get<long>(),
                       j.at("root").get<std::string>(),
                       quad_series_from_json(j.at("log_theta")),
                       quad_series_from_json(j.at("log_upsilon")),
                       j.at("cap").get<long>(),
                       j.at("prec").get<long>()};
  });
}

json table_to_json(long p, long ap, const std::vector<DeltaRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"i", r.i}, {"y", r.y.get_si()}, {"yp", r.y_prime.get_si()}, {"rendered", r.rendered}});
  }
  return {{"kind", "delta_table"}, {"p", p}, {"ap", ap}, {"rows", out}};
}

std::vector<DeltaRow> table_from_json(const json& j) {
  return guarded("table", [&] {
    std::vector<DeltaRow> rows;
    for (const auto& r : j.at("rows")) {
      const mpz_class y = mpz_from_json(r.at("y"));
      const mpz_class yp = mpz_from_json(r.at("yp"));
      rows.push_back({r.at("i").get<long>(), y, yp, r.value("rendered", render_delta(y, yp))});
    }
    return rows;
  });
}

std::string table_to_csv(const std::vector<DeltaRow>& rows) {
  std::ostringstream os;
  os << "i,y,y_prime,rendered\n";
  for (const auto& r : rows) os << r.i << ',' << r.y << ',' << r.y_prime << ',' << r.rendered << '\n';
  return os.str();
}

std::vector<DeltaRow> table_from_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != "i,y,y_prime,rendered") {
    fail(ErrorCode::ParseError, "missing table CSV header");
  }
  std::vector<DeltaRow> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int k = 0; k < 3; ++k) {
      const std::size_t comma = line.find(',', start);
      if (comma == std::string::npos) fail(ErrorCode::ParseError, "short CSV row '" + line + "'");
      fields.push_back(line.substr(start, comma - start));
      start = comma + 1;
    }
    fields.push_back(line.substr(start));
    try {
      rows.push_back({std::stol(fields[0]), mpz_class(fields[1]), mpz_class(fields[2]), fields[3]});
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad CSV row '" + line + "'");
    }
  }
  return rows;
}

json to_json(const LambdaPair& v) {
  return {{"kind", "lambda_pair"},
          {"p", v.first.prime()},
          {"level", v.first.level()},
          {"first", to_json(v.first.poly())},
          {"second", to_json(v.second.poly())}};
}

LambdaPair lambda_pair_from_json(const json& j) {
  return guarded("Lambda pair", [&] {
    const long p = j.at("p").get<long>();
    const long level = j.at("level").get<long>();
    const bool decomposed = j.contains("theta");
    const PowerSeries a = series_from_json(j.at(decomposed ? "theta" : "first"));
    const PowerSeries b = series_from_json(j.at(decomposed ? "upsilon" : "second"));
    return LambdaPair{LambdaElement(p, level, a), LambdaElement(p, level, b)};
  });
}

json decomposition_to_json(const LambdaPair& v, const std::string& note) {
  return {{"kind", "decomposition"},
          {"p", v.first.prime()},
          {"level", v.first.level()},
          {"theta", to_json(v.first.poly())},
          {"upsilon", to_json(v.second.poly())},
          {"kernel_coset_note", note}};
}

std::string series_to_csv(const PowerSeries& f) {
  std::ostringstream os;
  os << "degree,numerator,den_pow,absprec\n";
  for (std::size_t k = 0; k < f.size(); ++k) {
    const PadicScalar& c = f.coeffs()[k];
    os << k << ',' << c.numerator() << ',' << c.den_pow() << ','
       << (c.is_exact() ? std::string("inf") : std::to_string(c.absprec())) << '\n';
  }
  return os.str();
}

json reports_to_json(const std::vector<CheckReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(r);
  return out;
}

}  // namespace halflog::io
