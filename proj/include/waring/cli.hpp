#pragma once

// The `waring` command line. run_cli is kept separate from main so the
// commands can be exercised in-process.

#include <waring/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace waring::cli {

enum ExitCode : int { ok = 0, math_failure = 1, usage_error = 2, budget_exhausted = 3 };

/// Thrown for bad input detected after argument parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

inline ExponentSeq parse_exponents(const std::string& text) {
  std::vector<unsigned> a;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw UsageError("empty entry in exponent list '" + text + "'");
    item = item.substr(first, last - first + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
      throw UsageError("exponent '" + item + "' is not a positive integer");
    const unsigned long v = std::stoul(item);
    if (v < 1) throw UsageError("exponents must be positive");
    a.push_back(static_cast<unsigned>(v));
  }
  if (a.size() < 2) throw UsageError("need at least two exponents, got '" + text + "'");
  return ExponentSeq(a);
}

inline Rational parse_param(const std::string& text, bool point_producing) {
  Rational t;
  try {
    t = parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (point_producing && (t == 0 || abs(t) == 1)) throw UsageError("parameter t must not be 0, 1 or -1");
  if (t == 0) throw UsageError("parameter t must be nonzero");
  return t;
}

inline std::string point_text(const ProjPoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " : " : "") + to_string(p[i]);
  return s + "]";
}

struct Config {
  std::vector<std::string> exponents;
  std::string param = "2";
  std::string format = "json";
  bool prune = false;
  std::size_t budget = GroebnerOptions{}.budget;
  std::size_t attempts = DecomposeOptions{}.max_attempts;
  std::string out;
  std::string input;
  bool timing = false;
  bool skip_groebner = false;
};

namespace detail {

inline void emit(const Config& cfg, const std::string& data, std::ostream& out) {
  if (cfg.out.empty()) {
    out << data;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file '" + cfg.out + "'");
  f << data;
}

inline const std::string& single_exponents(const Config& cfg) {
  if (cfg.exponents.size() != 1) throw UsageError("exactly one -a/--exponents list is required");
  return cfg.exponents.front();
}

inline int cmd_points(const Config& cfg, std::ostream& out) {
  const ExponentSeq a = parse_exponents(single_exponents(cfg));
  const Rational t = parse_param(cfg.param, true);
  const ApolarPointSet pts = enumerate_points(a, t);
  std::string data;
  if (cfg.format == "json") {
    data = points_to_json(pts.points).dump() + "\n";
  } else if (cfg.format == "csv") {
    for (std::size_t i = 0; i < a.size(); ++i) data += (i ? ",x" : "x") + std::to_string(i);
    data += "\n";
    for (const auto& p : pts.points) {
      for (std::size_t i = 0; i < p.size(); ++i) data += (i ? "," : "") + to_string(p[i]);
      data += "\n";
    }
  } else {
    for (const auto& p : pts.points) data += point_text(p) + "\n";
  }
  emit(cfg, data, out);
  return distinct_projective_count(pts.points) == pts.size() ? ok : math_failure;
}

inline int cmd_decompose(const Config& cfg, std::ostream& out, std::ostream& err) {
  const ExponentSeq a = parse_exponents(single_exponents(cfg));
  const Rational t = parse_param(cfg.param, true);
  DecomposeOptions opts;
  opts.prune = cfg.prune;
  opts.max_attempts = cfg.attempts;
  opts.on_attempt = [&](const Rational& s) { err << "decompose: trying t = " << s << "\n"; };
  WaringDecomposition dec;
  try {
    dec = decompose_monomial(a, t, opts);
  } catch (const BudgetExhausted&) {
    throw;
  } catch (const Error& e) {
    err << "decompose: " << e.what() << "\n";
    return math_failure;
  }
  std::string data;
  if (cfg.format == "json") {
    data = decomposition_to_json(dec).dump() + "\n";
  } else {
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
      const auto& w = dec.terms[i];
      std::string lin;
      for (std::size_t k = 0; k < w.point.size(); ++k)
        if (w.point[k] != 0)
          lin += (lin.empty() ? "" : " + ") + std::string("(") + to_string(w.point[k]) + ")*X" + std::to_string(k);
      data += "(" + to_string(w.lambda) + ") * (" + lin + ")^" + std::to_string(dec.degree()) + "\n";
    }
  }
  emit(cfg, data, out);
  return ok;
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw UsageError("verify needs a decomposition file");
  std::string text;
  if (cfg.input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(cfg.input, std::ios::binary);
    if (!f) throw UsageError("cannot read '" + cfg.input + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  WaringDecomposition dec;
  try {
    dec = decomposition_from_json(Json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  const bool verified = verify_decomposition(dec);
  Json res;
  res["exponents"] = exponents_to_json(dec.a);
  res["term_count"] = dec.terms.size();
  res["nonzero_terms"] = dec.nonzero_terms();
  res["verified"] = verified;
  emit(cfg, res.dump() + "\n", out);
  return verified ? ok : math_failure;
}

inline int cmd_bounds(const Config& cfg, std::ostream& out, bool table) {
  std::vector<ExponentSeq> seqs;
  if (table) {
    for (const auto& e : cfg.exponents) seqs.push_back(parse_exponents(e));
    if (seqs.empty()) seqs = reference_table_sequences();
  } else {
    seqs.push_back(parse_exponents(single_exponents(cfg)));
  }
  const auto rows = bounds_table(seqs);
  std::string data;
  if (cfg.format == "csv") {
    data = bounds_csv(rows);
  } else if (cfg.format == "json") {
    data = bounds_to_json(rows).dump() + "\n";
  } else {
    for (const auto& r : rows)
      data += "(" + r.a.to_string() + ")  UB_BT=" + to_string(r.ub_bt) + "  UB_CKOV=" + to_string(r.ub_ckov) +
              "  UB_HM=" + to_string(r.ub_hm) + "\n";
  }
  emit(cfg, data, out);
  return ok;
}

inline int cmd_check_initial(const Config& cfg, std::ostream& out) {
  const ExponentSeq a = parse_exponents(single_exponents(cfg));
  const Rational t = parse_param(cfg.param, false);
  GroebnerOptions g;
  g.budget = cfg.budget;
  const auto chk = check_initial_ideal(a, t, g);
  emit(cfg, initial_check_to_json(a, t, chk).dump() + "\n", out);
  return chk.pass() ? ok : math_failure;
}

inline int cmd_validate(const Config& cfg, std::ostream& out, std::ostream& err) {
  const ExponentSeq a = parse_exponents(single_exponents(cfg));
  const Rational t = parse_param(cfg.param, false);
  ValidationOptions opts;
  opts.groebner.budget = cfg.budget;
  opts.run_groebner = !cfg.skip_groebner;
  const auto rep = validate_theorem_pipeline(a, t, opts);
  emit(cfg, report_to_json(rep, cfg.timing).dump() + "\n", out);
  if (rep.budget_exhausted) return budget_exhausted;
  if (!rep.pass()) {
    err << "validate: failed at step " << rep.first_failure() << "\n";
    return math_failure;
  }
  return ok;
}

}  // namespace detail

/// Parses argv and runs one command; returns the process exit status.
inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Exact Waring decompositions of monomials and their apolar point sets", "waring"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub, bool many) {
    if (many)
      sub->add_option("-a,--exponents", cfg.exponents, "Comma-separated exponents (repeatable)");
    else
      sub->add_option("-a,--exponents", cfg.exponents, "Comma-separated exponents, e.g. 3,3,3")->required();
    sub->add_option("--out", cfg.out, "Write output to FILE");
  };
  auto add_param = [&](CLI::App* sub) {
    sub->add_option("-t,--param", cfg.param, "Parameter t as an integer or p/q (default 2)");
  };

  auto* points = app.add_subcommand("points", "Enumerate the apolar point set");
  add_common(points, false);
  add_param(points);
  points->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* decompose = app.add_subcommand("decompose", "Compute and verify a Waring decomposition");
  add_common(decompose, false);
  add_param(decompose);
  decompose->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  decompose->add_flag("--prune", cfg.prune, "Drop terms with zero weight");
  decompose->add_option("--attempts", cfg.attempts, "Number of parameters to try")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Re-check a decomposition file (use - for stdin)");
  verify->add_option("file", cfg.input, "Decomposition JSON")->required();
  verify->add_option("--out", cfg.out, "Write output to FILE");

  auto* bounds = app.add_subcommand("bounds", "Upper bounds for one exponent sequence");
  add_common(bounds, false);
  bounds->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* table = app.add_subcommand("table", "Bounds for several sequences (default: the reference rows)");
  add_common(table, true);
  table->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* check = app.add_subcommand("check-initial", "Compare the Groebner initial ideal with its recursive form");
  add_common(check, false);
  add_param(check);
  check->add_option("--budget", cfg.budget, "Maximum S-pair reductions")->check(CLI::PositiveNumber);

  auto* validate = app.add_subcommand("validate", "Run the five-step validation of the point set");
  add_common(validate, false);
  add_param(validate);
  validate->add_option("--budget", cfg.budget, "Maximum S-pair reductions")->check(CLI::PositiveNumber);
  validate->add_flag("--timing", cfg.timing, "Include per-step timings in the report");
  validate->add_flag("--skip-groebner", cfg.skip_groebner, "Omit the initial-ideal step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "waring: " << e.what() << "\n";
    return usage_error;
  }
  // CLI11 applies defaults lazily; a table without --format is CSV.
  if (table->parsed() && table->count("--format") == 0) cfg.format = "csv";
  if (bounds->parsed() && bounds->count("--format") == 0) cfg.format = "csv";

  try {
    if (points->parsed()) return detail::cmd_points(cfg, out);
    if (decompose->parsed()) return detail::cmd_decompose(cfg, out, err);
    if (verify->parsed()) return detail::cmd_verify(cfg, out);
    if (bounds->parsed()) return detail::cmd_bounds(cfg, out, false);
    if (table->parsed()) return detail::cmd_bounds(cfg, out, true);
    if (check->parsed()) return detail::cmd_check_initial(cfg, out);
    if (validate->parsed()) return detail::cmd_validate(cfg, out, err);
  } catch (const UsageError& e) {
    err << "waring: " << e.what() << "\n";
    return usage_error;
  } catch (const BudgetExhausted& e) {
    err << "waring: " << e.what() << "\n";
    return budget_exhausted;
  } catch (const Error& e) {
    err << "waring: " << e.what() << "\n";
    return math_failure;
  }
  return usage_error;
}

}  // namespace waring::cli
