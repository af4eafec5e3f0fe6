#include "hlwhit/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hlwhit/oracles.hpp"
#include "hlwhit/render.hpp"
#include "hlwhit/verify.hpp"

namespace hlwhit {

namespace {

struct CommandOutput {
  Json envelope;
  std::string text;
  int exit_code = 0;
};

Json make_envelope(const std::string& command, Json inputs, Json result,
                   const std::string& status, const std::string& violation_detail = "") {
  Json env;
  env["command"] = command;
  env["inputs"] = std::move(inputs);
  env["result"] = std::move(result);
  env["status"] = status;
  if (!violation_detail.empty()) env["violation_detail"] = violation_detail;
  return env;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

// ---- value ----------------------------------------------------------------

struct ValueArgs {
  int k = 1, c = 1;
  std::string mu;
  std::string q, x;
  std::string format = "text";
};

CommandOutput cmd_value(const ValueArgs& a) {
  WeaklyDecreasingTuple tuple = WeaklyDecreasingTuple::parse(a.mu);
  SpehContext ctx{a.k, a.c};
  SatakeSpec spec = SatakeSpec::symbolic();
  if (!a.q.empty()) {
    if (a.x.empty())
      throw std::invalid_argument("value: numeric mode needs --x with k parameters");
    spec = SatakeSpec::numeric(parse_rational(a.q), parse_rational_list(a.x));
  }
  WhittakerValue w = speh_value_tuple(tuple, ctx, spec);

  Json inputs;
  inputs["k"] = a.k;
  inputs["c"] = a.c;
  inputs["mu"] = tuple.str();
  if (!a.q.empty()) {
    inputs["q"] = a.q;
    inputs["x"] = a.x;
  }
  CommandOutput out;
  out.envelope = make_envelope("value", std::move(inputs), whittaker_to_json(w, "q"), "ok");
  std::ostringstream text;
  if (w.zero) {
    text << "value: Zero\n";
  } else {
    text << "q_exponent: " << w.q_exponent.str() << "\n";
    if (w.symbolic) text << "value: " << w.symbolic->str("q") << "\n";
    if (w.numeric) text << "numeric_value: " << to_string(*w.numeric) << "\n";
  }
  out.text = text.str();
  return out;
}

// ---- kostka ---------------------------------------------------------------

struct KostkaArgs {
  int m = 0;
  bool cocharge = false;
  std::string format = "text";
};

CommandOutput cmd_kostka(const KostkaArgs& a, const CliConfig& cfg) {
  if (a.m < 0 || a.m > cfg.max_table_m)
    throw std::invalid_argument("kostka: m exceeds the configured bound of " +
                                std::to_string(cfg.max_table_m));
  KostkaFoulkesTable table = kostka_foulkes_table(a.m, a.cocharge);
  std::string var = a.cocharge ? "q" : "t";

  Json inputs;
  inputs["m"] = a.m;
  inputs["cocharge"] = a.cocharge;
  CommandOutput out;
  out.envelope =
      make_envelope("kostka", std::move(inputs), kostka_table_to_json(table, var), "ok");
  std::ostringstream text;
  for (const auto& [key, poly] : table.entries)
    text << (a.cocharge ? "K~[" : "K[") << key.first.str() << ";" << key.second.str()
         << "] = " << poly.str(var) << "\n";
  out.text = text.str();
  return out;
}

// ---- hl -------------------------------------------------------------------

struct HlArgs {
  std::string family;
  std::string mu;
  int vars = 1;
  std::string basis;
  std::string format = "text";
};

CommandOutput cmd_hl(const HlArgs& a, const CliConfig& cfg) {
  if (a.vars < 1 || a.vars > cfg.max_vars)
    throw std::invalid_argument("hl: --vars outside [1, " + std::to_string(cfg.max_vars) + "]");
  Partition mu = Partition::parse(a.mu);
  if (mu.size() > cfg.max_table_m)
    throw std::invalid_argument("hl: |mu| exceeds the configured bound of " +
                                std::to_string(cfg.max_table_m));
  SymFunc f = [&] {
    if (a.family == "p") return hl_p(mu, a.vars);
    if (a.family == "q") return hl_q(mu, a.vars);
    if (a.family == "h") return transformed_h(mu, a.vars);
    if (a.family == "hmod") return modified_h(mu, a.vars);
    throw std::invalid_argument("hl: unknown family '" + a.family + "'");
  }();
  std::string basis = a.basis;
  if (basis.empty()) basis = (a.family == "p" || a.family == "q") ? "monomial" : "schur";
  f = convert(f, parse_basis(basis));

  Json inputs;
  inputs["family"] = a.family;
  inputs["mu"] = mu.str();
  inputs["vars"] = a.vars;
  inputs["basis"] = basis;
  CommandOutput out;
  out.envelope = make_envelope("hl", std::move(inputs), symfunc_to_json(f, "t"), "ok");
  out.text = f.str("t") + "\n";
  return out;
}

// ---- flags ----------------------------------------------------------------

struct FlagsArgs {
  std::string mu;
  unsigned q = 2;
  std::string lambda;
  std::string format = "text";
};

CommandOutput cmd_flags(const FlagsArgs& a, const CliConfig& cfg) {
  Partition mu = Partition::parse(a.mu);
  Json inputs;
  inputs["mu"] = mu.str();
  inputs["q"] = a.q;
  CommandOutput out;
  std::ostringstream text;
  if (!a.lambda.empty()) {
    Partition lambda = Partition::parse(a.lambda);
    inputs["lambda"] = lambda.str();
    long count = oracles::flag_count(mu, lambda, a.q, cfg.flag_budget);
    Json result;
    result["count"] = count;
    out.envelope = make_envelope("flags", std::move(inputs), std::move(result), "ok");
    text << count << "\n";
  } else {
    Json counts = Json::array();
    for (const auto& lambda : enumerate_partitions(mu.size())) {
      long count = oracles::flag_count(mu, lambda, a.q, cfg.flag_budget);
      Json entry;
      entry["lambda"] = lambda.str();
      entry["count"] = count;
      counts.push_back(std::move(entry));
      text << lambda.str() << ": " << count << "\n";
    }
    Json result;
    result["counts"] = std::move(counts);
    out.envelope = make_envelope("flags", std::move(inputs), std::move(result), "ok");
  }
  out.text = text.str();
  return out;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  int max_size = 4;
  int k = 2, c = 2;
  int max_degree = 6;
  unsigned seed = 20240601;
  std::string format = "text";
};

std::vector<verify::SuiteResult> run_suites(const VerifyArgs& a, const CliConfig& cfg) {
  using namespace verify;
  std::vector<SuiteResult> results;
  auto want = [&](const std::string& name) { return a.suite == name || a.suite == "all"; };
  if (want("duality")) results.push_back(duality(a.max_size));
  if (want("charge")) results.push_back(charge(a.max_size, a.max_size));
  if (want("flag")) results.push_back(flag(std::min(a.max_size, 5), cfg.flag_budget));
  if (want("zeta"))
    results.push_back(zeta(a.k, a.c, std::min(a.max_degree, cfg.max_series_degree), a.seed));
  if (want("cauchy"))
    results.push_back(cauchy(a.k, a.c, std::min(a.max_degree, cfg.max_series_degree), a.seed));
  if (want("corollary"))
    results.push_back(corollary(std::min(a.max_size, 4), std::min(a.k, 3), std::min(a.c, 3), a.seed));
  if (want("shintani"))
    results.push_back(shintani(std::min(a.max_size + 2, 8), std::min(std::max(a.k, 2), 4), a.seed));
  if (results.empty())
    throw std::invalid_argument("verify: unknown suite '" + a.suite + "'");
  return results;
}

CommandOutput cmd_verify(const VerifyArgs& a, const CliConfig& cfg) {
  auto results = run_suites(a, cfg);

  Json inputs;
  inputs["suite"] = a.suite;
  inputs["max_size"] = a.max_size;
  inputs["k"] = a.k;
  inputs["c"] = a.c;
  inputs["max_degree"] = a.max_degree;
  inputs["seed"] = a.seed;

  long failures = 0;
  std::string first_violation;
  Json suites = Json::array();
  std::ostringstream text;
  for (const auto& r : results) {
    failures += r.failures;
    if (first_violation.empty() && !r.first_violation.empty())
      first_violation = r.suite + ": " + r.first_violation;
    Json s;
    s["suite"] = r.suite;
    s["cases"] = r.cases;
    s["failures"] = r.failures;
    s["elapsed_ms"] = r.elapsed_ms;
    if (!r.first_violation.empty()) s["first_violation"] = r.first_violation;
    suites.push_back(std::move(s));
    for (const auto& [label, pass] : r.case_lines)
      text << (pass ? "[ok]   " : "[FAIL] ") << r.suite << ": " << label << "\n";
    text << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures
         << " failures (" << r.elapsed_ms << " ms)\n";
  }
  Json result;
  result["suites"] = std::move(suites);
  result["failures"] = failures;

  CommandOutput out;
  bool ok = failures == 0;
  out.envelope = make_envelope("verify", std::move(inputs), std::move(result),
                               ok ? "ok" : "violation", ok ? "" : first_violation);
  text << (ok ? "all checks passed" : "FAILURES: " + first_violation) << "\n";
  out.text = text.str();
  out.exit_code = ok ? 0 : 1;
  return out;
}

void emit(const CommandOutput& result, const std::string& format, std::ostream& out) {
  if (format == "json")
    out << result.envelope.dump(2) << "\n";
  else
    out << result.text;
}

}  // namespace

CliConfig load_config_from_env() {
  CliConfig cfg;
  const char* path = std::getenv("HLWHIT_CONFIG");
  if (!path) return cfg;
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(std::string("config file not readable: ") + path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq);
    long value = std::stol(line.substr(eq + 1));
    if (key == "max_table_m") cfg.max_table_m = static_cast<int>(value);
    else if (key == "max_series_degree") cfg.max_series_degree = static_cast<int>(value);
    else if (key == "flag_budget") cfg.flag_budget = value;
    else if (key == "max_vars") cfg.max_vars = static_cast<int>(value);
  }
  return cfg;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hall-Littlewood symmetric functions and spherical Whittaker values"};
  app.require_subcommand(1);

  ValueArgs va;
  auto* value_cmd = app.add_subcommand(
      "value", "Whittaker value of the normalized spherical element at diag(pi^mu, 1)");
  value_cmd->add_option("--k", va.k, "number of Satake parameters")->required();
  value_cmd->add_option("--c", va.c, "block size c of the (k,c) model")->required();
  value_cmd->add_option("--mu", va.mu, "weakly decreasing integer tuple, e.g. 2,1 or 1,0,-1")
      ->required();
  value_cmd->add_option("--q", va.q, "residue cardinality (rational > 1), numeric mode");
  value_cmd->add_option("--x", va.x, "comma-separated Satake parameter values");
  value_cmd->add_option("--format", va.format)->check(CLI::IsMember({"text", "json"}));

  KostkaArgs ka;
  auto* kostka_cmd = app.add_subcommand("kostka", "Kostka-Foulkes table for one degree");
  kostka_cmd->add_option("--m", ka.m, "degree")->required();
  kostka_cmd->add_flag("--cocharge", ka.cocharge, "cocharge variant K~(q)");
  kostka_cmd->add_option("--format", ka.format)->check(CLI::IsMember({"text", "json"}));

  HlArgs ha;
  auto* hl_cmd = app.add_subcommand("hl", "Hall-Littlewood family member");
  hl_cmd->add_option("--family", ha.family, "p | q | h | hmod")->required();
  hl_cmd->add_option("--mu", ha.mu, "partition")->required();
  hl_cmd->add_option("--vars", ha.vars, "number of variables")->required();
  hl_cmd->add_option("--basis", ha.basis, "schur | monomial");
  hl_cmd->add_option("--format", ha.format)->check(CLI::IsMember({"text", "json"}));

  FlagsArgs fa;
  auto* flags_cmd = app.add_subcommand("flags", "Jordan-fixed flag counts over F_q");
  flags_cmd->add_option("--mu", fa.mu, "Jordan type")->required();
  flags_cmd->add_option("--q", fa.q, "field size (2, 3 or 5)")->required();
  flags_cmd->add_option("--lambda", fa.lambda, "flag type (omit for the full table)");
  flags_cmd->add_option("--format", fa.format)->check(CLI::IsMember({"text", "json"}));

  VerifyArgs ve;
  auto* verify_cmd = app.add_subcommand("verify", "run an identity-check suite");
  verify_cmd
      ->add_option("--suite", ve.suite,
                   "duality | cauchy | zeta | flag | charge | corollary | shintani | all")
      ->required();
  verify_cmd->add_option("--max-size", ve.max_size, "partition size bound");
  verify_cmd->add_option("--k", ve.k);
  verify_cmd->add_option("--c", ve.c);
  verify_cmd->add_option("--max-degree", ve.max_degree, "series truncation");
  verify_cmd->add_option("--seed", ve.seed, "seed for randomized numeric points");
  verify_cmd->add_option("--format", ve.format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, const_cast<char**>(argv));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  std::string command, format = "text";
  try {
    CliConfig cfg = load_config_from_env();
    CommandOutput result;
    if (value_cmd->parsed()) {
      command = "value";
      format = va.format;
      result = cmd_value(va);
    } else if (kostka_cmd->parsed()) {
      command = "kostka";
      format = ka.format;
      result = cmd_kostka(ka, cfg);
    } else if (hl_cmd->parsed()) {
      command = "hl";
      format = ha.format;
      result = cmd_hl(ha, cfg);
    } else if (flags_cmd->parsed()) {
      command = "flags";
      format = fa.format;
      result = cmd_flags(fa, cfg);
    } else {
      command = "verify";
      format = ve.format;
      result = cmd_verify(ve, cfg);
    }
    emit(result, format, out);
    return result.exit_code;
  } catch (const UnramifiedError& e) {
    CommandOutput result;
    result.envelope = make_envelope(command, Json::object(), Json(), "violation", e.what());
    result.text = std::string("violation: ") + e.what() + "\n";
    emit(result, format, out);
    return 1;
  } catch (const std::exception& e) {
    CommandOutput result;
    result.envelope = make_envelope(command, Json::object(), Json(), "error", e.what());
    emit(result, format, out);
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hlwhit
