#include "cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "schurid/errors.hpp"
#include "schurid/haar.hpp"
#include "schurid/identity.hpp"
#include "schurid/measures.hpp"
#include "schurid/numeric.hpp"
#include "schurid/report.hpp"
#include "schurid/sampling.hpp"

namespace schurid::cli {

namespace {

const std::vector<std::string> kCommands = {"verify-theorem1", "verify-corollary", "verify-lemmas",
                                            "z-check",         "bessel-recovery",  "haar-check",
                                            "sample",          "limits"};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  Json results;
  Json table;  // null when the command has no tabular projection
  bool passed = false;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

SParameter parse_s(const std::string& text) {
  if (text == "sym") return SymbolicS{};
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw ConfigError("--s must be an integer or 'sym'");
  }
  require(used == text.size(), "--s must be an integer or 'sym'");
  require(v >= -16 && v <= 16, "--s must lie in [-16, 16]");
  return v;
}

long integer_s(const RunConfig& c, long lo, long hi) {
  const SParameter s = parse_s(c.s);
  require(std::holds_alternative<long>(s), c.command + " needs an integer --s");
  const long v = std::get<long>(s);
  require(v >= lo && v <= hi,
          c.command + " needs --s in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

BigRational parse_alpha(const std::string& text) {
  BigRational q;
  if (q.set_str(text, 10) != 0) throw ConfigError("--alpha must be a rational like 1 or 3/2");
  require(q.get_den() != 0, "--alpha has a zero denominator");
  q.canonicalize();
  require(q >= 0, "--alpha must be nonnegative");
  return q;
}

void validate(const RunConfig& c) {
  require(c.m >= 1 && c.m <= 6, "--m must lie in [1, 6]");
  require(c.n >= 1 && c.n <= 6, "--n must lie in [1, 6]");
  require(c.degree >= 0 && c.degree <= 16, "--degree must lie in [0, 16]");
  require(c.weight >= 0 && c.weight <= 16, "--weight must lie in [0, 16]");
  require(c.cutoff >= 0 && c.cutoff <= 200, "--cutoff must lie in [0, 200]");
  require(c.samples >= 1 && c.samples <= 10000000, "--samples must lie in [1, 10^7]");
  require(c.precision >= 10 && c.precision <= 2000, "--precision must lie in [10, 2000]");
  require(c.threads >= 1 && c.threads <= 256, "--threads must lie in [1, 256]");
  require(c.format == "json" || c.format == "csv" || c.format == "text",
          "--format must be json, csv or text");
  parse_s(c.s);
  parse_alpha(c.alpha);

  if (c.command == "verify-corollary") integer_s(c, 0, 16);
  if (c.command == "z-check") {
    integer_s(c, 0, 16);
    require(c.cutoff <= 40, "z-check needs --cutoff <= 40");
  }
  if (c.command == "bessel-recovery") {
    require(c.m <= 3, "bessel-recovery needs --m <= 3");
    require(c.cutoff >= 10, "bessel-recovery needs --cutoff >= 10");
  }
  if (c.command == "haar-check") {
    integer_s(c, 0, 4);
    require(c.n <= 3, "haar-check needs --n <= 3");
    require(c.cutoff >= 10, "haar-check needs --cutoff >= 10");
    require(c.samples >= 2, "haar-check needs --samples >= 2");
  }
  if (c.command == "sample") integer_s(c, 0, 4);
}

Json config_json(const RunConfig& c) {
  return {{"command", c.command}, {"m", c.m},           {"n", c.n},
          {"s", c.s},             {"degree", c.degree}, {"weight", c.weight},
          {"cutoff", c.cutoff},   {"seed", c.seed},     {"samples", c.samples},
          {"alpha", c.alpha},     {"precision", c.precision}, {"output", c.output},
          {"format", c.format},   {"threads", c.threads}, {"timing", c.timing}};
}

Outcome verify_theorem1_cmd(const RunConfig& c) {
  const auto r = verify_theorem1(static_cast<std::size_t>(c.m), static_cast<std::size_t>(c.n),
                                 parse_s(c.s), c.degree, c.threads);
  return {to_json(r, c.timing), failure_table(r), r.passed()};
}

Outcome verify_corollary_cmd(const RunConfig& c) {
  const auto r = verify_corollary(static_cast<std::size_t>(c.m), static_cast<std::size_t>(c.n),
                                  static_cast<int>(integer_s(c, 0, 16)), c.weight, c.threads);
  return {to_json(r, c.timing), failure_table(r), r.passed()};
}

Outcome verify_lemmas_cmd(const RunConfig& c) {
  const int instances = c.samples_given ? static_cast<int>(c.samples) : 100;
  const auto cauchy = verify_cauchy_battery(instances, c.seed);
  const auto andreief = verify_andreief_battery(instances, c.seed);
  Json table = failure_table(cauchy);
  const Json extra = failure_table(andreief);
  for (const auto& row : extra["rows"]) table["rows"].push_back(row);
  return {{{"cauchy_determinant", to_json(cauchy, c.timing)}, {"andreief", to_json(andreief, c.timing)}},
          table,
          cauchy.passed() && andreief.passed()};
}

Outcome z_check_cmd(const RunConfig& c) {
  const auto m = static_cast<std::size_t>(c.m), n = static_cast<std::size_t>(c.n);
  const int s = static_cast<int>(integer_s(c, 0, 16));
  const Precision prec{c.precision};
  const ZBracket bracket = normalization_Z_truncated(m, n, s, c.cutoff);
  const TrackedReal det = normalization_Z_bessel(m, n, s, prec);
  const BigRational half_tail = bracket.tail_bound / 2;
  const TrackedReal interval = TrackedReal::from_rational(bracket.partial_sum + half_tail, prec)
                                   .widened(MpReal::from_rational(half_tail, kRadiusBits, MPFR_RNDU));
  const bool contained = interval.overlaps(det);
  const TrackedReal gap = abs(TrackedReal::from_rational(bracket.partial_sum, prec) - det);
  const int digits = static_cast<int>(c.precision);
  return {{{"bracket", to_json(bracket)},
           {"bessel_determinant", to_json(det, digits)},
           {"bracket_contains_determinant", contained},
           {"abs_difference", to_json(gap, 6)}},
          nullptr,
          contained};
}

Outcome bessel_recovery_cmd(const RunConfig& c) {
  const auto m = static_cast<std::size_t>(c.m);
  const Precision prec{c.precision};
  Json rows = Json::array(), cases = Json::array();
  bool ok = true;
  for (const BigRational& beta_q : {BigRational(1, 2), BigRational(1)}) {
    const TrackedReal beta = TrackedReal::from_rational(beta_q, prec);
    std::vector<TrackedReal> lambda, z;
    for (std::size_t i = 1; i <= m; ++i) {
      const BigRational l(static_cast<long>(i));
      lambda.push_back(TrackedReal::from_rational(l, prec));
      z.push_back(TrackedReal::from_rational(beta_q * beta_q * l * l, prec));
    }
    const TrackedReal reference = series_G(z, 0, c.cutoff, prec);
    for (const auto& [mm, nn] : {std::pair{m, std::size_t{0}}, std::pair{std::size_t{0}, m}}) {
      const TrackedReal value = theorem2_rhs(beta, lambda, mm, nn, prec);
      const double rel = abs(value - reference).magnitude_upper().to_double(MPFR_RNDU) /
                         reference.magnitude_lower().to_double(MPFR_RNDD);
      const bool pass = rel <= 1e-6;
      ok = ok && pass;
      cases.push_back({{"beta", to_string(beta_q)},
                       {"m", mm},
                       {"n", nn},
                       {"theorem2_rhs", to_json(value, 20)},
                       {"series_G", to_json(reference, 20)},
                       {"relative_error_bound", rel},
                       {"passed", pass}});
      rows.push_back({to_string(beta_q), mm, nn, value.value().to_string(20),
                      reference.value().to_string(20), rel});
    }
  }
  return {{{"cases", cases}},
          {{"columns", {"beta", "m", "n", "theorem2_rhs", "series_G", "relative_error_bound"}}, {"rows", rows}},
          ok};
}

ComplexMatrix diagonal(const std::vector<double>& d) {
  ComplexMatrix a = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = d[i];
  return a;
}

// |U_11|^2 is identically 1 at n = 1.
double deviation(double diff, double se) {
  if (diff <= 1e-12) return 0.0;
  return se > 0 ? diff / se : INFINITY;
}

Json mc_comparison(const std::string& name, const MCEstimate& e, const TrackedReal& reference,
                   bool& ok) {
  const double ref = reference.value_double();
  const double z = deviation(std::abs(e.mean - std::complex<double>(ref, 0)), e.standard_error);
  const bool pass = z <= 5.0;
  ok = ok && pass;
  return {{"integral", name},
          {"estimate", to_json(e)},
          {"reference", to_json(reference, 20)},
          {"deviation_in_standard_errors", z},
          {"passed", pass}};
}

Outcome haar_check_cmd(const RunConfig& c) {
  const auto n = static_cast<std::size_t>(c.n);
  const long s = integer_s(c, 0, 4);
  const Precision prec{c.precision};
  bool ok = true;

  const HaarStatistics stats = haar_statistics(n, c.samples, c.seed, c.threads);
  const double z_abs2 = deviation(std::abs(stats.abs2_u11.mean.real() - 1.0 / static_cast<double>(n)),
                                  stats.abs2_u11.standard_error);
  const double z_u11 = deviation(std::abs(stats.u11.mean), stats.u11.standard_error);
  const bool haar_ok = z_abs2 <= 5.0 && z_u11 <= 5.0 && stats.max_defect <= 1e-12;
  ok = haar_ok;

  std::vector<double> a_diag, b_diag;
  std::vector<TrackedReal> x, y;
  for (std::size_t i = 0; i < n; ++i) {
    a_diag.push_back(static_cast<double>(i + 1));
    b_diag.push_back(static_cast<double>(2 * i + 1));
    x.push_back(TrackedReal::exact(static_cast<long>(i + 1), prec));
    y.push_back(TrackedReal::exact(static_cast<long>(2 * i + 1), prec));
  }
  const ComplexMatrix a = diagonal(a_diag), b = diagonal(b_diag);
  const ComplexMatrix id = ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));

  // G with A = diag(1..n), B = Id: the eigenvalues of AB are 1..n.
  const MCEstimate g = mc_integral_G(a, id, s, c.samples, c.seed, c.threads);
  const Json g_json = mc_comparison("G", g, series_G(x, s, c.cutoff, prec), ok);
  // K with A = diag(1..n), B = diag(1,3,..), C = D = Id.
  const MCEstimate k = mc_integral_K(a, b, id, id, s, c.samples, c.seed + 1, c.threads);
  const Json k_json = mc_comparison("K", k, series_K(x, y, s, c.cutoff, prec), ok);

  return {{{"haar",
            {{"dimension", n},
             {"abs2_u11", to_json(stats.abs2_u11)},
             {"u11", to_json(stats.u11)},
             {"max_unitarity_defect", stats.max_defect},
             {"passed", haar_ok}}},
           {"integrals", Json::array({g_json, k_json})}},
          nullptr,
          ok};
}

Outcome sample_cmd(const RunConfig& c) {
  const auto m = static_cast<std::size_t>(c.m), n = static_cast<std::size_t>(c.n);
  const int s = static_cast<int>(integer_s(c, 0, 4));
  const SamplerCheck p = p_frequencies(m, n, s, 3, c.samples, c.seed, c.threads);
  const SamplerCheck q = q_frequencies(m, n, s, 3, c.samples, c.seed + 1, c.threads);
  const SamplerCheck pl = plancherel_goodness_of_fit(parse_alpha(c.alpha), 3, c.samples, c.seed + 2, c.threads);
  Json table = {{"columns", {"measure", "cell", "observed", "expected_probability", "z_score"}},
                {"rows", Json::array()}};
  for (const SamplerCheck* check : {&p, &q, &pl})
    for (const FrequencyCell& cell : check->cells)
      table["rows"].push_back({check->measure, cell.label, cell.observed, cell.expected_probability, cell.z_score});
  return {{{"P", to_json(p)}, {"Q", to_json(q)}, {"poissonized_plancherel", to_json(pl)}},
          table,
          p.passed && q.passed && pl.passed};
}

Outcome limits_cmd(const RunConfig& c) {
  const Precision prec{c.precision};
  const int digits = 20;
  bool ok = true;

  std::uint64_t identity_checked = 0, identity_failed = 0;
  for (std::size_t m = 1; m <= 64; ++m)
    for (std::size_t n = 1; n <= 64; ++n) {
      ++identity_checked;
      const BigRational lhs = hook_ratio_52(Partition{1}, m, n);
      if (lhs != make_rational(BigInt(static_cast<long>(m)), BigInt(static_cast<long>(m + n)))) ++identity_failed;
    }
  ok = ok && identity_failed == 0;

  Json lemma_rows = Json::array();
  auto lemma_case = [&](const std::string& label, const BigRational& r8, const BigRational& r64,
                        const TrackedReal& limit) {
    const TrackedReal e8 = abs(TrackedReal::from_rational(r8, prec) - limit);
    const TrackedReal e64 = abs(TrackedReal::from_rational(r64, prec) - limit);
    const bool pass = compare(e64.magnitude_upper(), e8.magnitude_lower()) < 0;
    ok = ok && pass;
    lemma_rows.push_back({{"case", label},
                          {"error_t8", to_json(e8, digits)},
                          {"error_t64", to_json(e64, digits)},
                          {"decreasing", pass}});
  };
  const Partition l21{2, 1};
  lemma_case("ratio52 [2,1]", hook_ratio_52(l21, 8, 8), hook_ratio_52(l21, 64, 64), limit_52(l21, 1, prec));
  for (const Partition& mu : {Partition{1}, Partition{2}})
    for (const Partition& nu : {Partition{1}, Partition{2}})
      lemma_case("ratio53 " + mu.to_string() + "|" + nu.to_string(), hook_ratio_53(mu, nu, 8, 8),
                 hook_ratio_53(mu, nu, 64, 64), limit_53(mu, nu, 1, prec));

  const std::array<int, 4> ts{2, 4, 8, 16};
  const auto points = diagonal_points(ts);
  std::vector<ConvergenceTable> tables;
  for (const Partition& lambda : {Partition{}, Partition{1}, Partition{2}})
    tables.push_back(limit_check_54_P(lambda, points, 1, 1, prec));
  tables.push_back(limit_check_54_Q(Partition{1}, Partition{}, points, 1, 1, prec));

  Json tables_json = Json::array();
  Json table = {{"columns", {"series", "m", "n", "s", "finite", "limit", "abs_error"}}, {"rows", Json::array()}};
  for (const ConvergenceTable& t : tables) {
    bool below = !t.rows.empty() && t.rows.back().error.magnitude_upper().to_double(MPFR_RNDU) < 0.05;
    const bool pass = t.strictly_decreasing() && below;
    ok = ok && pass;
    Json tj = to_json(t, digits);
    tj["final_error_below_0.05"] = below;
    tables_json.push_back(tj);
    const Json projected = convergence_table(t, digits);
    for (const auto& row : projected["rows"]) table["rows"].push_back(row);
  }
  return {{{"hook_ratio_identity", {{"checked", identity_checked}, {"failed", identity_failed}}},
           {"finite_to_limit", lemma_rows},
           {"convergence", tables_json}},
          table,
          ok};
}

Outcome dispatch(const RunConfig& c) {
  if (c.command == "verify-theorem1") return verify_theorem1_cmd(c);
  if (c.command == "verify-corollary") return verify_corollary_cmd(c);
  if (c.command == "verify-lemmas") return verify_lemmas_cmd(c);
  if (c.command == "z-check") return z_check_cmd(c);
  if (c.command == "bessel-recovery") return bessel_recovery_cmd(c);
  if (c.command == "haar-check") return haar_check_cmd(c);
  if (c.command == "sample") return sample_cmd(c);
  return limits_cmd(c);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact and numerical checks of Bessel-type unitary integral identities", "schurid"};
  app.add_option("command", c.command, "Command to run")->required()->check(CLI::IsMember(kCommands));
  app.add_option("--m", c.m, "Size of the first block");
  app.add_option("--n", c.n, "Size of the second block");
  app.add_option("--s", c.s, "Integer s or 'sym'");
  app.add_option("--degree", c.degree, "Total degree bound for coefficient checks");
  app.add_option("--weight", c.weight, "Bound on |mu| + |nu|");
  app.add_option("--cutoff", c.cutoff, "Series or partition-size cutoff");
  app.add_option("--seed", c.seed, "64-bit RNG seed");
  auto* samples = app.add_option("--samples", c.samples, "Monte Carlo draws or random instances");
  app.add_option("--alpha", c.alpha, "Poissonized Plancherel parameter");
  app.add_option("--precision", c.precision, "Working precision in decimal digits");
  app.add_option("--output", c.output, "Report path (default: stdout)");
  app.add_option("--format", c.format, "json, csv or text");
  app.add_option("--threads", c.threads, "Worker threads");
  app.add_flag("--timing", c.timing, "Include wall-clock timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "schurid: " << e.what() << "\n";
    return kInvalidConfig;
  }
  c.samples_given = samples->count() > 0;

  try {
    validate(c);
  } catch (const ConfigError& e) {
    err << "schurid: " << e.what() << "\n";
    return kInvalidConfig;
  }

  Outcome outcome;
  try {
    outcome = dispatch(c);
  } catch (const ConfigError& e) {
    err << "schurid: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const schurid::Error& e) {
    err << "schurid: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::invalid_argument& e) {
    err << "schurid: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "schurid: " << e.what() << "\n";
    return kFail;
  }

  Json doc = {{"tool", "schurid"},
              {"config", config_json(c)},
              {"verdict", outcome.passed ? "PASS" : "FAIL"},
              {"results", outcome.results}};
  if (!outcome.table.is_null()) doc["table"] = outcome.table;

  std::string text;
  if (c.format == "json") text = render_json(doc);
  else if (c.format == "csv") text = render_csv(doc);
  else text = render_text(doc);

  if (c.output.empty()) {
    out << text;
  } else {
    std::ofstream file(c.output, std::ios::binary);
    if (!file) {
      err << "schurid: cannot open " << c.output << "\n";
      return kInvalidConfig;
    }
    file << text;
  }
  return outcome.passed ? kPass : kFail;
}

}  // namespace schurid::cli
