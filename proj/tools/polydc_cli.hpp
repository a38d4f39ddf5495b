#ifndef POLYDC_TOOLS_POLYDC_CLI_HPP
#define POLYDC_TOOLS_POLYDC_CLI_HPP

// Command-line front end. Kept in a header so the test suites can drive the
// exact same code path in-process.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "polydc/polydc.hpp"

namespace polydc::cli {

enum ExitCode : int { kSuccess = 0, kIdentityViolation = 1, kUsage = 2 };

enum class Format { json, csv };

struct CliConfig {
  std::string command;
  Format format = Format::json;
  std::string output;
  bool deterministic = false;
  std::vector<std::string> args;
};

/// Exact signed 64-bit integer; anything else is a UsageError.
inline std::int64_t parse_int(std::string_view text, std::string_view what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError("expected an integer for " + std::string(what) + ", got '" +
                     std::string(text) + "'");
  }
  return value;
}

/// Range grammar: comma-separated items, each "v", "lo..hi" or "lo..hi:step",
/// optionally prefixed with "odd" or "even" to keep only that parity.
/// Ranges are inclusive.
inline std::vector<std::int64_t> parse_range(std::string_view text, std::string_view what) {
  std::vector<std::int64_t> out;
  if (text.empty()) throw UsageError("empty range for " + std::string(what));
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    std::optional<int> parity;
    if (item.starts_with("odd")) {
      parity = 1;
      item.remove_prefix(3);
    } else if (item.starts_with("even")) {
      parity = 0;
      item.remove_prefix(4);
    }
    std::int64_t lo = 0, hi = 0, step = 1;
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      lo = hi = parse_int(item, what);
    } else {
      std::string_view upper = item.substr(dots + 2);
      const std::size_t colon = upper.find(':');
      if (colon != std::string_view::npos) {
        step = parse_int(upper.substr(colon + 1), what);
        upper = upper.substr(0, colon);
        if (step < 1) throw UsageError("range step must be positive for " + std::string(what));
      }
      lo = parse_int(item.substr(0, dots), what);
      hi = parse_int(upper, what);
      if (lo > hi) throw UsageError("empty range " + std::string(item) + " for " + std::string(what));
    }
    for (std::int64_t v = lo; v <= hi; v += step) {
      if (!parity || ((v % 2 + 2) % 2) == *parity) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Splits "key=value" tokens. Duplicates and tokens without '=' are rejected.
inline std::map<std::string, std::string> parse_key_values(const std::vector<std::string>& tokens) {
  std::map<std::string, std::string> out;
  for (const auto& token : tokens) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw UsageError("expected key=value, got '" + token + "'");
    }
    const std::string key = token.substr(0, eq);
    if (!out.emplace(key, token.substr(eq + 1)).second) {
      throw UsageError("parameter '" + key + "' given twice");
    }
  }
  return out;
}

namespace detail {

using Json = nlohmann::ordered_json;

struct Args {
  std::map<std::string, std::string> values;
  std::string context;

  bool has(const std::string& key) const { return values.contains(key); }

  std::string take(const std::string& key) {
    auto it = values.find(key);
    if (it == values.end()) throw UsageError(context + ": missing parameter '" + key + "'");
    std::string v = it->second;
    values.erase(it);
    return v;
  }

  std::int64_t take_int(const std::string& key) { return parse_int(take(key), key); }

  std::optional<std::int64_t> take_optional_int(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return take_int(key);
  }

  /// Anything left over is an unknown flag.
  void finish() const {
    if (!values.empty()) {
      throw UsageError(context + ": unknown parameter '" + values.begin()->first + "'");
    }
  }
};

inline Args split_args(const std::vector<std::string>& tokens, std::string context) {
  return {parse_key_values(tokens), std::move(context)};
}

inline Json json_or_null(const std::optional<std::int64_t>& v) {
  return v ? Json(*v) : Json(nullptr);
}

inline double elapsed_ms(const VerificationReport& r, bool deterministic) {
  if (deterministic) return 0.0;
  return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

inline Json report_json(const VerificationReport& r, bool deterministic) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  return Json{{"verifier", std::string(to_string(r.verifier))},
              {"params", params},
              {"lhs", to_string(r.lhs)},
              {"rhs", to_string(r.rhs)},
              {"holds", r.holds},
              {"elapsed_ms", elapsed_ms(r, deterministic)}};
}

inline std::string params_cell(const ParamMap& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

inline void write_report_csv_header(std::ostream& out) {
  out << "verifier,params,lhs,rhs,holds,elapsed_ms\n";
}

inline void write_report_csv_row(std::ostream& out, const VerificationReport& r, bool deterministic) {
  out << to_string(r.verifier) << ',' << params_cell(r.params) << ',' << to_string(r.lhs) << ','
      << to_string(r.rhs) << ',' << (r.holds ? "true" : "false") << ','
      << elapsed_ms(r, deterministic) << '\n';
}

inline void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

inline int cmd_table(const CliConfig& cfg, std::ostream& out) {
  if (cfg.args.empty()) throw UsageError("table: missing sequence name");
  const std::string sequence = cfg.args.front();
  Args args = split_args({cfg.args.begin() + 1, cfg.args.end()}, "table");
  const std::int64_t max_n = args.take_int("max_n");
  if (max_n < 0) throw UsageError("table: max_n must be nonnegative");
  const bool indexed = sequence == "poly-genocchi" || sequence == "poly-euler";
  std::optional<std::int64_t> k;
  if (indexed) k = args.take_int("k");
  args.finish();

  if (sequence == "stirling1") {
    Json rows = Json::array();
    if (cfg.format == Format::csv) out << "n,m,value\n";
    for (std::int64_t n = 0; n <= max_n; ++n) {
      for (std::int64_t m = 0; m <= n; ++m) {
        const std::string value = stirling1(n, m).get_str();
        if (cfg.format == Format::csv) {
          out << n << ',' << m << ',' << value << '\n';
        } else {
          rows.push_back(Json{{"index", Json::array({n, m})}, {"value", value}});
        }
      }
    }
    if (cfg.format == Format::json) {
      emit_json(out, Json{{"sequence", sequence}, {"k", nullptr}, {"max_n", max_n}, {"rows", rows}});
    }
    return kSuccess;
  }

  std::vector<Rational> values;
  if (sequence == "euler") {
    values = euler_numbers(max_n);
  } else if (sequence == "genocchi") {
    values = genocchi_numbers(max_n);
  } else if (sequence == "poly-genocchi") {
    values = poly_genocchi_numbers(PolyIndex(*k), max_n);
  } else if (sequence == "poly-euler") {
    values = poly_euler_numbers(PolyIndex(*k), max_n);
  } else {
    throw UsageError("table: unknown sequence '" + sequence +
                     "' (euler, genocchi, poly-genocchi, poly-euler, stirling1)");
  }
  if (cfg.format == Format::csv) {
    out << "index,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) out << i << ',' << to_string(values[i]) << '\n';
    return kSuccess;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    rows.push_back(Json{{"index", i}, {"value", to_string(values[i])}});
  }
  emit_json(out, Json{{"sequence", sequence}, {"k", json_or_null(k)}, {"max_n", max_n}, {"rows", rows}});
  return kSuccess;
}

inline int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  if (cfg.args.empty()) throw UsageError("eval: missing kind");
  const std::string kind = cfg.args.front();
  Args args = split_args({cfg.args.begin() + 1, cfg.args.end()}, "eval");
  const Rational x = parse_rational(args.take("x"));
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> k;
  Rational value;
  if (kind == "sawtooth") {
    value = sawtooth(x);
  } else if (kind == "euler-poly" || kind == "bar-euler") {
    n = args.take_int("n");
    const Polynomial p = euler_poly(*n);
    value = kind == "euler-poly" ? p(x) : bar_eval(p, x);
  } else if (kind == "poly-euler-poly" || kind == "bar-poly-euler") {
    n = args.take_int("n");
    k = args.take_int("k");
    const Polynomial p = poly_euler_poly(PolyIndex(*k), *n);
    value = kind == "poly-euler-poly" ? p(x) : bar_eval(p, x);
  } else {
    throw UsageError("eval: unknown kind '" + kind +
                     "' (euler-poly, poly-euler-poly, bar-euler, bar-poly-euler, sawtooth)");
  }
  args.finish();
  if (cfg.format == Format::csv) {
    out << "kind,n,k,x,value\n"
        << kind << ',' << (n ? std::to_string(*n) : "") << ',' << (k ? std::to_string(*k) : "")
        << ',' << to_string(x) << ',' << to_string(value) << '\n';
    return kSuccess;
  }
  emit_json(out, Json{{"kind", kind},
                      {"n", json_or_null(n)},
                      {"k", json_or_null(k)},
                      {"x", to_string(x)},
                      {"value", to_string(value)}});
  return kSuccess;
}

inline int cmd_dcsum(const CliConfig& cfg, std::ostream& out) {
  Args args = split_args(cfg.args, "dcsum");
  DcParams params;
  params.p = args.take_int("p");
  params.h = args.take_int("h");
  params.m = args.take_int("m");
  const auto k = args.take_optional_int("k");
  if (k) params.k = PolyIndex(*k);
  args.finish();
  if (params.p < 1 || params.h < 1 || params.m < 1) {
    throw UsageError("dcsum: p, h and m must be positive integers");
  }
  const Rational value = dc_sum(params);
  if (cfg.format == Format::csv) {
    out << "p,h,m,k,value\n"
        << params.p << ',' << params.h << ',' << params.m << ',' << (k ? std::to_string(*k) : "")
        << ',' << to_string(value) << '\n';
    return kSuccess;
  }
  emit_json(out, Json{{"p", params.p},
                      {"h", params.h},
                      {"m", params.m},
                      {"k", json_or_null(k)},
                      {"value", to_string(value)}});
  return kSuccess;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  if (cfg.args.empty()) throw UsageError("verify: missing verifier id; valid ids: " + valid_verifier_names());
  const VerifierId id = parse_verifier_id(cfg.args.front());
  ParamMap params;
  for (const auto& [key, value] : parse_key_values({cfg.args.begin() + 1, cfg.args.end()})) {
    params[key] = parse_int(value, key);
  }
  const VerificationReport report = verify(id, std::move(params));
  if (cfg.format == Format::csv) {
    write_report_csv_header(out);
    write_report_csv_row(out, report, cfg.deterministic);
  } else {
    emit_json(out, report_json(report, cfg.deterministic));
  }
  if (verifier_info(id).exploratory) return kSuccess;
  return report.holds ? kSuccess : kIdentityViolation;
}

inline int cmd_sweep(const CliConfig& cfg, std::ostream& out) {
  if (cfg.args.empty()) throw UsageError("sweep: missing verifier id; valid ids: " + valid_verifier_names());
  SweepSpec spec;
  spec.verifier = parse_verifier_id(cfg.args.front());
  for (const auto& [key, value] : parse_key_values({cfg.args.begin() + 1, cfg.args.end()})) {
    spec.ranges[key] = parse_range(value, key);
  }
  const SweepResult result = sweep(spec);
  if (cfg.format == Format::csv) {
    write_report_csv_header(out);
    for (const auto& r : result.reports) write_report_csv_row(out, r, cfg.deterministic);
  } else {
    Json reports = Json::array();
    Json failures = Json::array();
    for (const auto& r : result.reports) reports.push_back(report_json(r, cfg.deterministic));
    for (const auto& r : result.failures) failures.push_back(report_json(r, cfg.deterministic));
    emit_json(out, Json{{"verifier", std::string(to_string(result.verifier))},
                        {"exploratory", result.exploratory},
                        {"total", result.total},
                        {"passed", result.passed},
                        {"failed", result.failed},
                        {"failures", failures},
                        {"reports", reports}});
  }
  if (result.exploratory) return kSuccess;
  return result.all_hold() ? kSuccess : kIdentityViolation;
}

inline int dispatch(const CliConfig& cfg, std::ostream& out) {
  if (cfg.command == "table") return cmd_table(cfg, out);
  if (cfg.command == "eval") return cmd_eval(cfg, out);
  if (cfg.command == "dcsum") return cmd_dcsum(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out);
  if (cfg.command == "sweep") return cmd_sweep(cfg, out);
  throw UsageError("unknown command '" + cfg.command + "'");
}

}  // namespace detail

/// Runs one invocation. argv[0] is the program name. Returns the exit code.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact poly-Euler sequences, poly-Dedekind-type DC sums and identity checks", "polydc"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", cfg.output, "Write to this file instead of standard output");
  app.add_flag("--deterministic", cfg.deterministic, "Zero all timing fields");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"table", "Emit a sequence table: table <euler|genocchi|poly-genocchi|poly-euler|stirling1> max_n=N [k=K]"},
      {"eval", "Evaluate: eval <euler-poly|poly-euler-poly|bar-euler|bar-poly-euler|sawtooth> [n=N] [k=K] x=P/Q"},
      {"dcsum", "DC sum T_p(h,m), or T_p^(k)(h,m) when k is given: dcsum p=P h=H m=M [k=K]"},
      {"verify", "Check one identity at one point: verify <id> key=value..."},
      {"sweep", "Check one identity over a grid: sweep <id> key=lo..hi|oddlo..hi|a,b,c ..."},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("args", cfg.args, "Positional name and key=value parameters");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cfg.format = format == "csv" ? Format::csv : Format::json;

  std::ostringstream buffer;
  int code = kSuccess;
  try {
    code = detail::dispatch(cfg, buffer);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kIdentityViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      err << "error: cannot open '" << cfg.output << "' for writing\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace polydc::cli

#endif  // POLYDC_TOOLS_POLYDC_CLI_HPP
