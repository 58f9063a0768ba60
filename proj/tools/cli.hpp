#pragma once

// Command-line front end: table, verify, series, limit.
//
// Exit codes: 0 success / all checks pass, 1 identity failure or limit
// mismatch, 2 usage error. Data goes to `out`, diagnostics to `err`.

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dstir/dstir.hpp"
#include "dstir/report_json.hpp"

namespace dstir::cli {

enum class OutputFormat { Csv, Json, Pretty };

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rows of string/number cells under a fixed header, rendered in any format.
struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
};

inline std::string cell_text(const nlohmann::ordered_json& c) {
  if (c.is_string()) return c.get<std::string>();
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  return c.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

/// Display width in code points (the λ glyph is two bytes).
inline std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char ch : s)
    if ((ch & 0xC0) != 0x80) ++w;
  return w;
}

inline void render(const Rows& t, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::Csv: {
      for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << csv_escape(t.header[i]);
      out << "\n";
      for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(cell_text(row[i]));
        out << "\n";
      }
      break;
    }
    case OutputFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.header[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << "\n";
      break;
    }
    case OutputFormat::Pretty: {
      std::vector<std::size_t> width(t.header.size());
      for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = display_width(t.header[i]);
      for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], display_width(cell_text(row[i])));
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "") << cells[i];
          if (i + 1 < cells.size()) out << std::string(width[i] - display_width(cells[i]), ' ');
        }
        out << "\n";
      };
      line(t.header);
      for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (const auto& c : row) cells.push_back(cell_text(c));
        line(cells);
      }
      break;
    }
  }
}

inline BigRational parse_rational_or_throw(const std::string& text, const std::string& flag) {
  auto r = BigRational::parse(text);
  if (!r) throw UsageError("malformed rational for " + flag + ": '" + text + "' (expected p/q or an integer)");
  return *r;
}

/// λ-polynomial, or its value when a λ was supplied.
inline std::string render_value(const LambdaPoly& p, const std::optional<BigRational>& lam) {
  return lam ? p.eval(*lam).to_string() : p.to_string();
}

// ---- table -----------------------------------------------------------------

struct TableArgs {
  std::string kind;
  std::size_t n_max = 0;
  std::optional<std::string> lambda;
  std::optional<unsigned> r;
};

inline Rows cmd_table(const TableArgs& a) {
  std::optional<BigRational> lam;
  if (a.lambda) lam = parse_rational_or_throw(*a.lambda, "--lambda");
  Rows t{{"n", "k", "value"}, {}};
  auto emit = [&](std::size_t n, std::size_t k, const LambdaPoly& v) {
    t.rows.push_back({n, k, render_value(v, lam)});
  };
  if (a.kind == "rs2") {
    if (!a.r) throw UsageError("table --kind rs2 requires --r");
    Triangle s2(StirlingKind::S2Lambda, a.n_max);
    for (std::size_t n = 0; n <= a.n_max; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        emit(n, k, r_stirling2(static_cast<long>(n), static_cast<long>(k), *a.r, s2));
    return t;
  }
  StirlingKind kind;
  if (a.kind == "s1") kind = StirlingKind::S1Lambda;
  else if (a.kind == "s2") kind = StirlingKind::S2Lambda;
  else if (a.kind == "us1") kind = StirlingKind::UnsignedS1Lambda;
  else if (a.kind == "lah") kind = StirlingKind::Lah;
  else throw UsageError("unknown --kind '" + a.kind + "' (expected s1, s2, us1, lah, rs2)");
  Triangle tri(kind, a.n_max);
  for (std::size_t n = 0; n <= a.n_max; ++n)
    for (std::size_t k = 0; k <= n; ++k) emit(n, k, tri.at(static_cast<long>(n), static_cast<long>(k)));
  return t;
}

// ---- series ----------------------------------------------------------------

struct SeriesArgs {
  std::string which;
  std::size_t order = 0;
  std::optional<std::string> lambda;
  std::optional<std::string> x;
  unsigned k = 1;
};

inline Rows cmd_series(const SeriesArgs& a) {
  std::optional<BigRational> lam;
  if (a.lambda) lam = parse_rational_or_throw(*a.lambda, "--lambda");
  BigRational x = a.x ? parse_rational_or_throw(*a.x, "--x") : BigRational(1);
  std::optional<TruncatedSeries<LambdaPoly>> s;
  if (a.which == "eexp") s = deg_exp(LambdaPoly(x), a.order);
  else if (a.which == "elog") s = deg_log(a.order);
  else if (a.which == "bell") s = bell_series(x, a.order);
  else if (a.which == "lahgf") s = kind_series(StirlingKind::Lah, a.k, a.order);
  else throw UsageError("unknown --which '" + a.which + "' (expected eexp, elog, bell, lahgf)");
  Rows t{{"n", "coeff", "egf"}, {}};
  for (std::size_t n = 0; n <= a.order; ++n) t.rows.push_back({n, render_value((*s)[n], lam), render_value(s->egf(n), lam)});
  return t;
}

// ---- limit -----------------------------------------------------------------

struct LimitArgs {
  std::string kind;
  std::size_t n_max = 0;
};

/// λ = 0 specialization of the degenerate triangle against the independently
/// built classical triangle. Returns rows and whether every entry matched.
inline std::pair<Rows, bool> cmd_limit(const LimitArgs& a) {
  StirlingKind degenerate, classical;
  if (a.kind == "s1") {
    degenerate = StirlingKind::S1Lambda;
    classical = StirlingKind::S1Classical;
  } else if (a.kind == "s2") {
    degenerate = StirlingKind::S2Lambda;
    classical = StirlingKind::S2Classical;
  } else {
    throw UsageError("unknown --kind '" + a.kind + "' (expected s1, s2)");
  }
  Triangle d(degenerate, a.n_max), c(classical, a.n_max);
  Rows t{{"n", "k", "degenerate_at_0", "classical", "match"}, {}};
  bool all = true;
  for (long n = 0; n <= static_cast<long>(a.n_max); ++n)
    for (long k = 0; k <= n; ++k) {
      auto lhs = d.at(n, k).eval(0);
      auto rhs = c.at(n, k).constant_term();
      const bool match = lhs == rhs;
      all = all && match;
      t.rows.push_back({n, k, lhs.to_string(), rhs.to_string(), match});
    }
  return {std::move(t), all};
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> ids{"all"};
  std::size_t n_max = 12;
  std::string mode = "defaults";
  std::uint64_t seed = CheckMode{}.seed;
};

inline std::vector<IdentityReport> cmd_verify(const VerifyArgs& a) {
  std::vector<IdentityId> ids;
  for (const auto& tag : a.ids) {
    if (tag == "all") {
      ids.clear();
      break;
    }
    auto id = parse_identity(tag);
    if (!id) throw UsageError("unknown identity id '" + tag + "'");
    ids.push_back(*id);
  }
  ModeRequest req;
  if (a.mode == "defaults") req = ModeRequest::Defaults;
  else if (a.mode == "symbolic") req = ModeRequest::Symbolic;
  else if (a.mode == "sampled") req = ModeRequest::Sampled;
  else throw UsageError("unknown --mode '" + a.mode + "' (expected defaults, symbolic, sampled)");
  return check_many(std::move(ids), a.n_max, req, a.seed);
}

inline std::string params_text(const Counterexample& c) {
  std::string s;
  for (const auto& p : c.params) s += (s.empty() ? "" : " ") + p.name + "=" + p.value.to_string();
  return s;
}

inline void render_reports(const std::vector<IdentityReport>& reports, OutputFormat fmt, std::ostream& out) {
  if (fmt == OutputFormat::Json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
    return;
  }
  Rows t{{"id", "mode", "n_max", "status", "probe", "cases", "counterexample", "lhs", "rhs"}, {}};
  for (const auto& r : reports) {
    std::string status = r.passed() ? "pass" : (r.probe ? "expected-fail" : "FAIL");
    if (r.probe && r.passed()) status = "pass (probe expected to fail)";
    const auto& c = r.counterexample;
    t.rows.push_back({std::string(to_string(r.id)), std::string(to_string(r.mode)), r.n_max, status, r.probe, r.cases,
                      c ? params_text(*c) : "", c ? c->lhs : "", c ? c->rhs : ""});
  }
  render(t, fmt, out);
}

// ---- entry point -----------------------------------------------------------

inline OutputFormat parse_format(const std::string& f) {
  if (f == "csv") return OutputFormat::Csv;
  if (f == "json") return OutputFormat::Json;
  if (f == "pretty") return OutputFormat::Pretty;
  throw UsageError("unknown --format '" + f + "' (expected csv, json, pretty)");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degenerate Stirling numbers: exact tables, series and identity verification", "dstir"};
  app.require_subcommand(1);
  std::string format = "csv";

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Emit a number triangle");
  table->add_option("--kind", ta.kind, "s1 | s2 | us1 | lah | rs2")->required();
  table->add_option("--nmax", ta.n_max, "Largest n")->required();
  table->add_option("--lambda", ta.lambda, "Evaluate at this rational λ (p/q)");
  table->add_option("--r", ta.r, "r for the r-Stirling table (rows are (n,k) -> S^(r)(n+r,k+r))");
  table->add_option("--format", format, "csv | json | pretty");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check identities over a bounded range");
  verify->add_option("--ids", va.ids, "Identity tags (comma separated) or 'all'")->delimiter(',');
  verify->add_option("--nmax", va.n_max, "Largest n scanned");
  verify->add_option("--mode", va.mode, "defaults | symbolic | sampled");
  verify->add_option("--seed", va.seed, "Seed for extra sampled points (DSTIR_SEED overrides)");
  verify->add_option("--format", format, "csv | json | pretty");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Emit generating-function coefficients");
  series->add_option("--which", sa.which, "eexp | elog | bell | lahgf")->required();
  series->add_option("--order", sa.order, "Truncation order")->required();
  series->add_option("--lambda", sa.lambda, "Evaluate at this rational λ (p/q)");
  series->add_option("--x", sa.x, "x for eexp and bell (default 1)");
  series->add_option("--k", sa.k, "k for lahgf (default 1)");
  series->add_option("--format", format, "csv | json | pretty");

  LimitArgs la;
  auto* limit = app.add_subcommand("limit", "Compare λ = 0 against the classical triangle");
  limit->add_option("--kind", la.kind, "s1 | s2")->required();
  limit->add_option("--nmax", la.n_max, "Largest n")->required();
  limit->add_option("--format", format, "csv | json | pretty");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const auto fmt = parse_format(format);
    if (*table) {
      render(cmd_table(ta), fmt, out);
      return kExitOk;
    }
    if (*series) {
      render(cmd_series(sa), fmt, out);
      return kExitOk;
    }
    if (*limit) {
      auto [rows, all] = cmd_limit(la);
      render(rows, fmt, out);
      return all ? kExitOk : kExitFailure;
    }
    if (*verify) {
      if (const char* env = std::getenv("DSTIR_SEED")) {
        try {
          va.seed = std::stoull(env);
        } catch (const std::exception&) {
          throw UsageError(std::string("malformed DSTIR_SEED '") + env + "'");
        }
      }
      auto reports = cmd_verify(va);
      render_reports(reports, fmt, out);
      bool ok = true;
      for (const auto& r : reports) {
        if (r.probe) continue;
        if (!r.passed()) {
          ok = false;
          err << "identity " << to_string(r.id) << " failed at " << params_text(*r.counterexample) << "\n";
        }
      }
      return ok ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dstir::cli
