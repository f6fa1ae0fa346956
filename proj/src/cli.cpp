#include "halflog/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "halflog/curves.hpp"
#include "halflog/decomposer.hpp"
#include "halflog/error.hpp"
#include "halflog/half_log.hpp"
#include "halflog/identities.hpp"
#include "halflog/json_io.hpp"
#include "halflog/ladder.hpp"
#include "halflog/trace_ladder.hpp"

namespace halflog::cli {

namespace {

using nlohmann::json;

constexpr const char* kLimitEnv = "SPRUNG_MAX_LIMIT_STEPS";

struct Options {
  long p = 0;
  long ap = 0;
  std::string level;
  long index = 0;
  long cap = 0;
  long prec = 10;
  long imin = -2;
  long imax = 7;
  std::string format = "json";
  std::string in;
  std::string out;
  CurveData curve;
  bool all = false;
  std::vector<std::string> checks;
  long max_level = 3;
  long samples = 10;
  std::uint64_t seed = 1;
  bool corrupt_parity = false;
  bool no_limits = false;
};

LadderOptions ladder_options() {
  LadderOptions opts;
  if (const char* env = std::getenv(kLimitEnv)) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      fail(ErrorCode::InvalidArgument, std::string(kLimitEnv) + " must be a positive integer");
    }
    opts.max_level = v;
  }
  return opts;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) fail(ErrorCode::InvalidArgument, "cannot write '" + o.out + "'");
  f << text;
}

void emit(const json& j, const Options& o, std::ostream& out) { emit(j.dump(2) + "\n", o, out); }

int cmd_table(const Options& o, std::ostream& out) {
  if (o.imin > o.imax) fail(ErrorCode::InvalidArgument, "imin exceeds imax");
  const auto rows = delta_table(o.p, o.ap, o.imin, o.imax);
  if (o.format == "csv") {
    emit(io::table_to_csv(rows), o, out);
  } else {
    emit(io::table_to_json(o.p, o.ap, rows), o, out);
  }
  return kOk;
}

int cmd_ladder(const Options& o, std::ostream& out) {
  const LadderOptions opts = ladder_options();
  if (o.level == "inf" || o.level == "infinity") {
    if (o.cap < 1) fail(ErrorCode::InvalidArgument, "--cap is required at infinity");
    emit(io::to_json(ladder_infinity(o.p, o.ap, o.index, o.cap, o.prec, opts)), o, out);
    return kOk;
  }
  long n = 0;
  try {
    std::size_t used = 0;
    n = std::stol(o.level, &used);
    if (used != o.level.size()) throw std::invalid_argument(o.level);
  } catch (const std::exception&) {
    fail(ErrorCode::InvalidArgument, "--level takes an integer or 'inf'");
  }
  const long cap = o.cap > 0 ? o.cap : PowerSeries::kExactCap;
  emit(io::to_json(ladder(o.p, o.ap, n, o.index, cap, opts)), o, out);
  return kOk;
}

int cmd_halflog(const Options& o, std::ostream& out) {
  emit(io::to_json(half_logs(o.p, o.ap, o.cap, o.prec, ladder_options())), o, out);
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  require_supersingular(o.p, o.ap);
  const LambdaPair input = io::lambda_pair_from_json(io::parse(read_file(o.in)));
  if (input.first.prime() != o.p) fail(ErrorCode::MixedPrime, "input pair is over another prime");
  const long n = std::stol(o.level);
  // re-reduce at the requested level
  const LambdaElement p1(o.p, n, input.first.poly());
  const LambdaElement p0(o.p, n, input.second.poly());
  const LambdaPair v = decompose(o.p, o.ap, n, p1, p0);
  emit(io::decomposition_to_json(v, kernel_coset_note(o.p, o.ap, n)), o, out);
  return kOk;
}

int cmd_ap(const Options& o, std::ostream& out) {
  const long count = count_points(o.curve, o.p);
  const long a = ap(o.curve, o.p);
  emit(json{{"kind", "ap"}, {"p", o.p}, {"count", count}, {"ap", a},
            {"supersingular", a % o.p == 0}},
       o, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SuiteConfig config = default_suite_config();
  if (o.p != 0) {
    require_supersingular(o.p, o.ap);
    config.pairs = {{o.p, o.ap}};
  }
  config.only = o.checks;
  if (o.cap > 0) config.cap = o.cap;
  config.prec = o.prec;
  config.max_level = o.max_level;
  config.kernel_samples = o.samples;
  config.seed = o.seed;
  config.include_limits = !o.no_limits;
  config.ladder = ladder_options();
  config.ladder.swap_parity = o.corrupt_parity;
  const auto reports = run_suite(config);
  emit(io::reports_to_json(reports), o, out);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
  return ok ? kOk : kVerificationFailed;
}

// Parses any artifact the CLI writes and writes it back out.
int cmd_inspect(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.in);
  if (text.rfind("i,y,y_prime,rendered", 0) == 0) {
    emit(io::table_to_csv(io::table_from_csv(text)), o, out);
    return kOk;
  }
  const json j = io::parse(text);
  if (j.is_array()) {
    std::vector<CheckReport> reports;
    try {
      for (const auto& r : j) reports.push_back(r.get<CheckReport>());
    } catch (const json::exception& e) {
      fail(ErrorCode::ParseError, e.what());
    }
    emit(io::reports_to_json(reports), o, out);
    return kOk;
  }
  const std::string kind = j.is_object() ? j.value("kind", "") : "";
  if (kind == "ladder") {
    emit(io::to_json(io::ladder_from_json(j)), o, out);
  } else if (kind == "halflog") {
    emit(io::to_json(io::half_logs_from_json(j)), o, out);
  } else if (kind == "delta_table") {
    emit(io::table_to_json(j.at("p").get<long>(), j.at("ap").get<long>(), io::table_from_json(j)), o,
         out);
  } else if (kind == "lambda_pair") {
    emit(io::to_json(io::lambda_pair_from_json(j)), o, out);
  } else if (kind == "decomposition") {
    const LambdaPair v = io::lambda_pair_from_json(j);
    emit(io::decomposition_to_json(v, j.at("kernel_coset_note").get<std::string>()), o, out);
  } else if (kind == "ap") {
    emit(json{{"kind", "ap"}, {"p", j.at("p").get<long>()}, {"count", j.at("count").get<long>()},
              {"ap", j.at("ap").get<long>()}, {"supersingular", j.at("supersingular").get<bool>()}},
         o, out);
  } else {
    fail(ErrorCode::ParseError, "unrecognized artifact kind '" + kind + "'");
  }
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::ParseError:
      return kUsageError;
    default:
      return kDomainError;
  }
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace ladders, half-logarithms and finite-level decompositions"};
  app.require_subcommand(1);
  Options o;

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime")->required();
    sub->add_option("--ap", o.ap, "trace of Frobenius")->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output path (default stdout)"); };

  auto* table = app.add_subcommand("table", "delta^i coefficients over an index range");
  add_pair(table);
  table->add_option("--imin", o.imin, "first index");
  table->add_option("--imax", o.imax, "last index");
  table->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  add_out(table);

  auto* lad = app.add_subcommand("ladder", "ladder matrix at a finite level or at infinity");
  add_pair(lad);
  lad->add_option("--level", o.level, "level n, or inf")->required();
  lad->add_option("--index", o.index, "index i")->required();
  lad->add_option("--cap", o.cap, "truncation X^cap (required at infinity)");
  lad->add_option("--prec", o.prec, "absolute precision at infinity");
  add_out(lad);

  auto* half = app.add_subcommand("halflog", "the half-logarithm pair");
  add_pair(half);
  half->add_option("--cap", o.cap, "truncation X^cap")->required()->check(CLI::PositiveNumber);
  half->add_option("--prec", o.prec, "absolute precision")->check(CLI::PositiveNumber);
  add_out(half);

  auto* dec = app.add_subcommand("decompose", "split (P1, P0) into (theta, upsilon)");
  add_pair(dec);
  dec->add_option("--level", o.level, "level n")->required();
  dec->add_option("--in", o.in, "JSON Lambda pair")->required();
  add_out(dec);

  auto* apc = app.add_subcommand("ap", "a_p of a Weierstrass curve by point counting");
  apc->add_option("--a1", o.curve.a1);
  apc->add_option("--a2", o.curve.a2);
  apc->add_option("--a3", o.curve.a3);
  apc->add_option("--a4", o.curve.a4);
  apc->add_option("--a6", o.curve.a6);
  apc->add_option("--p", o.p, "prime")->required();
  add_out(apc);

  auto* ver = app.add_subcommand("verify", "run the identity suite");
  auto* all = ver->add_flag("--all", o.all, "run every check (the default)");
  ver->add_option("--check", o.checks, "restrict to these checks")
      ->excludes(all)
      ->check(CLI::IsMember(suite_check_names()));
  auto* vp = ver->add_option("--p", o.p, "restrict to one pair");
  auto* vap = ver->add_option("--ap", o.ap, "restrict to one pair");
  vp->needs(vap);
  vap->needs(vp);
  ver->add_option("--cap", o.cap, "truncation for limit checks")->check(CLI::PositiveNumber);
  ver->add_option("--prec", o.prec, "precision for limit checks")->check(CLI::PositiveNumber);
  ver->add_option("--max-level", o.max_level, "largest finite level")->check(CLI::PositiveNumber);
  ver->add_option("--samples", o.samples, "random pairs per kernel check");
  ver->add_option("--seed", o.seed, "seed for the kernel samples");
  ver->add_flag("--no-limits", o.no_limits, "skip the checks at infinity");
  ver->add_flag("--corrupt-parity", o.corrupt_parity, "fault injection: swap the a_p(i) parity");
  add_out(ver);

  auto* ins = app.add_subcommand("inspect", "re-read an exported artifact and write it back");
  ins->add_option("--in", o.in, "artifact path")->required();
  add_out(ins);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", e.what());
    return kUsageError;
  }

  try {
    if (table->parsed()) return cmd_table(o, out);
    if (lad->parsed()) return cmd_ladder(o, out);
    if (half->parsed()) return cmd_halflog(o, out);
    if (dec->parsed()) return cmd_decompose(o, out);
    if (apc->parsed()) return cmd_ap(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (ins->parsed()) return cmd_inspect(o, out);
  } catch (const Error& e) {
    report_error(err, std::string(error_name(e.code())), e.what());
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    report_error(err, "InternalError", e.what());
    return kDomainError;
  }
  return kUsageError;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace halflog::cli
