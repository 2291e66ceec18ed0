#include "cli_app.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <algorithm>

#include <CLI11.hpp>

#include "dpc/asymptotics.hpp"
#include "dpc/effective.hpp"
#include "dpc/error.hpp"
#include "dpc/inequality.hpp"
#include "dpc/series.hpp"
#include "dtable_cache.hpp"
#include "envelope.hpp"

namespace dpc::cli {

namespace {

// Above this many exhaustive terms verify-corollary needs an explicit opt-in.
constexpr long kLongRunThreshold = 20000;

struct Settings {
  long precision_bits = kDefaultPrecision.bits;
  /// Empty selects the command's default: text for dvalue, json elsewhere.
  std::string format;
  unsigned jobs = 1;
  std::string cache_dir;
};

long default_precision_bits() {
  if (const char* env = std::getenv("DPC_PRECISION")) {
    char* end = nullptr;
    const long bits = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && bits >= kMinPrecisionBits) return bits;
  }
  return kDefaultPrecision.bits;
}

// Significant decimal digits carried by a binary precision.
int decimal_digits(Precision prec) { return static_cast<int>(std::floor(prec.bits * std::log10(2.0))); }

std::string sci(const BigReal& x, Precision prec) { return x.to_sci(decimal_digits(prec)); }

class CommandRunner {
 public:
  CommandRunner(const Settings& settings, std::ostream& out) : s_(settings), out_(out) {}

  int emit(OutputEnvelope envelope, int code) {
    envelope.precision_bits = s_.precision_bits;
    out_ << serialize(envelope);
    return code;
  }

  [[nodiscard]] Precision precision() const { return Precision{s_.precision_bits}; }

  int dvalue(long r, long t, long n, const std::string& method) {
    const CongruenceClass cls(r, t);
    if (n < 0) throw InvalidArgument("n must be non-negative");
    const auto N = static_cast<std::size_t>(n);
    mpz_class value;
    std::vector<std::string> warnings;
    if (method == "brute") {
      value = brute_force_d(cls, n);
    } else if (method == "single") {
      value = d_single(cls, N);
    } else {
      std::optional<std::vector<mpz_class>> table;
      if (!s_.cache_dir.empty()) table = DTableCache(s_.cache_dir).load(cls, N);
      if (!table) {
        table = d_table(cls, N);
        if (!s_.cache_dir.empty()) DTableCache(s_.cache_dir).store(cls, *table);
      }
      value = (*table)[N];
    }
    if (s_.format != "json") {
      out_ << value.get_str() << '\n';
      return kExitOk;
    }
    OutputEnvelope env{"dvalue", {{"r", r}, {"t", t}, {"n", n}, {"method", method}}, 0,
                       {{"value", value.get_str()}}, warnings};
    return emit(std::move(env), kExitOk);
  }

  int table1(long nmax) {
    const std::vector<long> grid{10, 100, 1000, 10000};
    std::vector<long> ns;
    for (long n : grid) {
      if (n <= nmax) ns.push_back(n);
    }
    if (ns.empty()) throw InvalidArgument("--nmax must be at least 10");
    const QSeries distinct = distinct_series(static_cast<std::size_t>(ns.back()));
    Json rows = Json::array();
    std::vector<std::vector<std::string>> cells(3);
    for (long r = 1; r <= 3; ++r) {
      const CongruenceClass cls(r, 3);
      for (long n : ns) {
        const mpz_class d = d_single(cls, static_cast<std::size_t>(n), distinct);
        const std::string q = q_ratio(cls, n, d, precision()).to_fixed(6);
        cells[static_cast<std::size_t>(r - 1)].push_back(q);
        rows.push_back(Json{{"r", r}, {"n", n}, {"d_exact", d.get_str()}, {"q", q}});
      }
    }
    if (s_.format == "csv") {
      out_ << "r,n,q\n";
      for (const auto& row : rows) {
        out_ << row["r"].get<long>() << ',' << row["n"].get<long>() << ',' << row["q"].get<std::string>() << '\n';
      }
      return kExitOk;
    }
    if (s_.format == "md") {
      std::vector<std::string> header{"r"};
      for (long n : ns) header.push_back("n = " + std::to_string(n));
      std::vector<std::vector<std::string>> body;
      for (long r = 1; r <= 3; ++r) {
        std::vector<std::string> line{"Q_" + std::to_string(r)};
        for (const auto& c : cells[static_cast<std::size_t>(r - 1)]) line.push_back(c);
        body.push_back(std::move(line));
      }
      write_markdown(header, body);
      return kExitOk;
    }
    OutputEnvelope env{"table1", {{"nmax", nmax}}, 0, {{"t", 3}, {"rows", rows}}, {}};
    return emit(std::move(env), kExitOk);
  }

  int table2(long tmin, long tmax, long window, long scan_limit, const std::string& scaling_name) {
    if (tmin < 2 || tmax < tmin) throw InvalidArgument("table2 requires 2 <= tmin <= tmax");
    FindNtOptions options;
    options.precision = precision();
    options.stability_window = window;
    options.scan_limit = scan_limit;
    options.scaling = scaling_name == "exact" ? QuarticScaling::Exact : QuarticScaling::TableCompatible;
    std::vector<std::string> warnings;
    if (tmax > 10) warnings.push_back("thresholds for t > 10 are computed but unvalidated");
    Json rows = Json::array();
    std::vector<std::vector<std::string>> body;
    for (long t = tmin; t <= tmax; ++t) {
      const NtSearch nt = find_nt(t, options);
      rows.push_back(Json{{"t", t},
                          {"n_t", nt.n_t},
                          {"stability_window", nt.stability_window},
                          {"scan_limit", nt.scan_limit},
                          {"evaluations", nt.evaluations}});
      body.push_back({std::to_string(t), std::to_string(nt.n_t), std::to_string(nt.stability_window)});
    }
    if (s_.format == "csv") {
      out_ << "t,n_t,stability_window\n";
      for (const auto& line : body) out_ << line[0] << ',' << line[1] << ',' << line[2] << '\n';
      return kExitOk;
    }
    if (s_.format == "md") {
      write_markdown({"t", "N_t", "window"}, body);
      return kExitOk;
    }
    OutputEnvelope env{"table2",
                       {{"tmin", tmin}, {"tmax", tmax}, {"window", window}, {"scan_limit", scan_limit},
                        {"scaling", to_string(options.scaling)}},
                       0,
                       {{"rows", rows}},
                       warnings};
    return emit(std::move(env), kExitOk);
  }

  int check_effective_cmd(long r, long t, long n) {
    const EffectiveReport rep = check_effective(CongruenceClass(r, t), n, precision());
    const Precision p = precision();
    Json results{{"d_exact", rep.d_exact.get_str()},
                 {"m_value", sci(rep.m_value, p)},
                 {"m_uncertainty", sci(rep.m_uncertainty, p)},
                 {"err_bound", sci(rep.err_bound, p)},
                 {"pass", rep.pass}};
    OutputEnvelope env{"check-effective", {{"r", r}, {"t", t}, {"n", n}}, 0, results, {}};
    return emit(std::move(env), rep.pass ? kExitOk : kExitCheckFailed);
  }

  int scan(long t, long nmax, const std::string& mode) {
    ScanOptions options{s_.jobs, mode == "adjacent" ? ScanMode::Adjacent : ScanMode::AllPairs};
    Json list = Json::array();
    for (const Counterexample& c : scan_counterexamples(t, nmax, options)) list.push_back(Json::array({c.r, c.s, c.n}));
    OutputEnvelope env{"scan-counterexamples", {{"t", t}, {"nmax", nmax}, {"mode", mode}}, 0,
                       {{"counterexamples", list}}, {}};
    return emit(std::move(env), kExitOk);
  }

  int verify(long t, long exhaustive_to, bool long_run, long window, long scan_limit) {
    if (t < 2) throw InvalidArgument("verify-corollary requires t >= 2");
    if (exhaustive_to > kLongRunThreshold && !long_run) {
      throw InvalidArgument("--exhaustive-to above " + std::to_string(kLongRunThreshold) +
                            " requires --i-understand-long-run");
    }
    FindNtOptions nt_options;
    nt_options.precision = precision();
    nt_options.stability_window = window;
    nt_options.scan_limit = scan_limit;
    const InequalityReport rep = verify_corollary(t, exhaustive_to, nt_options, ScanOptions{s_.jobs});
    Json list = Json::array();
    long largest = 0;
    for (const Counterexample& c : rep.counterexamples) {
      list.push_back(Json::array({c.r, c.s, c.n}));
      largest = std::max(largest, c.n);
    }
    const bool small_only = largest <= 8;
    std::vector<std::string> warnings;
    if (!rep.validated_range) warnings.push_back("t > 10 lies outside the validated range");
    if (!rep.full_reproduction) {
      warnings.push_back("reduced-scale reproduction: exhaustive scan stops at " + std::to_string(exhaustive_to) +
                         ", below n_t = " + std::to_string(rep.n_t));
    }
    Json results{{"n_t", rep.n_t},
                 {"stability_window", rep.stability_window},
                 {"scan_limit_used", rep.scan_limit_used},
                 {"exhaustive_to", rep.exhaustive_to},
                 {"full_reproduction", rep.full_reproduction},
                 {"counterexamples", list},
                 {"counterexamples_at_most_8", small_only}};
    OutputEnvelope env{"verify-corollary", {{"t", t}, {"exhaustive_to", exhaustive_to}}, 0, results, warnings};
    return emit(std::move(env), small_only ? kExitOk : kExitCheckFailed);
  }

  int arc(const std::string& lemma_name, int samples, long t, long r) {
    const std::optional<ArcLemma> lemma = parse_arc_lemma(lemma_name);
    if (!lemma) throw InvalidArgument("unknown lemma '" + lemma_name + "'");
    const CongruenceClass cls(r, t);
    const Precision p = precision();
    const std::vector<BigComplex> grid = arc_sample_grid(*lemma, t, samples, p);
    long held = 0;
    Json failures = Json::array();
    std::vector<std::string> warnings;
    for (const BigComplex& z : grid) {
      const ArcCheck c = arc_check(*lemma, cls, z, p);
      if (c.holds) {
        ++held;
      } else {
        failures.push_back(Json{{"eta", z.re.to_sci(12)}, {"y", z.im.to_sci(12)}, {"lhs", c.lhs.to_sci(12)},
                                {"rhs", c.rhs.to_sci(12)}});
      }
      if (c.warning) warnings.push_back(*c.warning);
    }
    Json results{{"samples", static_cast<long>(grid.size())}, {"holds", held}, {"failures", failures}};
    OutputEnvelope env{"arc-check", {{"lemma", lemma_name}, {"samples", samples}, {"t", t}, {"r", r}}, 0, results,
                       warnings};
    return emit(std::move(env), failures.empty() ? kExitOk : kExitCheckFailed);
  }

 private:
  void write_markdown(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& body) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& line : body) width[c] = std::max(width[c], line[c].size());
    }
    auto row = [&](const std::vector<std::string>& cells) {
      out_ << '|';
      for (std::size_t c = 0; c < cells.size(); ++c) out_ << ' ' << std::setw(static_cast<int>(width[c])) << cells[c] << " |";
      out_ << '\n';
    };
    row(header);
    out_ << '|';
    for (std::size_t w : width) out_ << std::string(w + 2, '-') << '|';
    out_ << '\n';
    for (const auto& line : body) row(line);
  }

  Settings s_;
  std::ostream& out_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact values, asymptotics and effective bounds for parts in residue classes of distinct-part partitions",
               "dpc"};
  app.require_subcommand(1);
  Settings settings;
  settings.precision_bits = default_precision_bits();
  app.add_option("--precision", settings.precision_bits, "working precision in bits (env DPC_PRECISION)")
      ->check(CLI::Range(kMinPrecisionBits, 1L << 20));
  app.add_option("--format", settings.format, "output format")->check(CLI::IsMember({"json", "csv", "md", "text"}));
  app.add_option("--jobs", settings.jobs, "worker threads for scans")->check(CLI::Range(1U, 1024U));
  app.add_option("--cache-dir", settings.cache_dir, "directory for D table snapshots");

  long r = 1;
  long t = 2;
  long n = 0;
  std::string method = "table";
  auto* dvalue = app.add_subcommand("dvalue", "print D_{r,t}(n)");
  dvalue->add_option("--r", r)->required();
  dvalue->add_option("--t", t)->required();
  dvalue->add_option("--n", n)->required();
  dvalue->add_option("--method", method)->check(CLI::IsMember({"table", "single", "brute"}));

  long nmax = 10000;
  auto* table1 = app.add_subcommand("table1", "ratios of D_{r,3}(n) to the two-term main term");
  table1->add_option("--nmax", nmax);

  long tmin = 2;
  long tmax = 10;
  long window = 1000;
  long scan_limit = 1'000'000;
  std::string scaling = "table";
  auto* table2 = app.add_subcommand("table2", "thresholds N_t of the reduced inequality");
  table2->add_option("--tmin", tmin);
  table2->add_option("--tmax", tmax);
  table2->add_option("--window", window)->check(CLI::PositiveNumber);
  table2->add_option("--scan-limit", scan_limit)->check(CLI::PositiveNumber);
  table2->add_option("--scaling", scaling)->check(CLI::IsMember({"table", "exact"}));

  auto* effective = app.add_subcommand("check-effective", "check |D - M| + uncertainty <= Err_t at one n");
  effective->add_option("--r", r)->required();
  effective->add_option("--t", t)->required();
  effective->add_option("--n", n)->required();

  std::string mode = "all";
  auto* scan = app.add_subcommand("scan-counterexamples", "list (r, s, n) with r < s and D_r(n) < D_s(n)");
  scan->add_option("--t", t)->required();
  scan->add_option("--nmax", nmax)->required();
  scan->add_option("--mode", mode)->check(CLI::IsMember({"all", "adjacent"}));

  long exhaustive_to = 2000;
  bool long_run = false;
  auto* verify = app.add_subcommand("verify-corollary", "threshold search plus exhaustive scan below it");
  verify->add_option("--t", t)->required();
  verify->add_option("--exhaustive-to", exhaustive_to)->check(CLI::PositiveNumber);
  verify->add_option("--window", window)->check(CLI::PositiveNumber);
  verify->add_option("--scan-limit", scan_limit)->check(CLI::PositiveNumber);
  verify->add_flag("--i-understand-long-run", long_run, "allow scans beyond the desk-scale limit");

  std::string lemma;
  int samples = 50;
  auto* arc = app.add_subcommand("arc-check", "evaluate one arc bound on a deterministic grid");
  arc->add_option("--lemma", lemma)->required();
  arc->add_option("--samples", samples)->check(CLI::PositiveNumber);
  arc->add_option("--t", t)->required();
  arc->add_option("--r", r);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidArgs;
  }

  if (settings.format.empty()) settings.format = *dvalue ? "text" : "json";
  CommandRunner runner(settings, out);
  try {
    if (*dvalue) return runner.dvalue(r, t, n, method);
    if (*table1) return runner.table1(nmax);
    if (*table2) return runner.table2(tmin, tmax, window, scan_limit, scaling);
    if (*effective) return runner.check_effective_cmd(r, t, n);
    if (*scan) return runner.scan(t, nmax, mode);
    if (*verify) return runner.verify(t, exhaustive_to, long_run, window, scan_limit);
    if (*arc) return runner.arc(lemma, samples, t, r);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const HypothesisViolation& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidArgs;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const OracleCapExceeded& e) {
    err << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const Error& e) {
    err << "check could not be completed: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitInvalidArgs;
}

}  // namespace dpc::cli
