#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jtheta/jtheta.hpp"

namespace jtheta::cli {
namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// A column of optional numbers; missing cells print empty in CSV and null in JSON.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::optional<double>>> rows;
};

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (row[i]) os << num(*row[i]);
    }
    os << '\n';
  }
}

json number_or_null(std::optional<double> v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

void write_json(std::ostream& os, const Table& t, json meta) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = number_or_null(row[i]);
    rows.push_back(std::move(obj));
  }
  meta["rows"] = std::move(rows);
  os << meta.dump(2) << '\n';
}

// Writes to --output when given, otherwise to the data stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw IoError("cannot open output file '" + path + "'");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw IoError("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("JTHETA_SEED");
  if (env == nullptr || *env == '\0') return 1;
  std::uint64_t v = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto res = std::from_chars(env, end, v);
  if (res.ec != std::errc() || res.ptr != end) throw UsageError("JTHETA_SEED is not an unsigned integer");
  return v;
}

std::vector<double> make_grid(double from, double to, int points, bool log_spacing) {
  if (points < 1) throw UsageError("--points must be at least 1");
  if (!(from <= to)) throw UsageError("--from must not exceed --to");
  if (log_spacing && from <= 0.0) throw UsageError("--log-grid needs a positive --from");
  std::vector<double> g(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double f = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
    g[static_cast<std::size_t>(i)] =
        log_spacing ? from * std::pow(to / from, f) : from + (to - from) * f;
  }
  if (points > 1) g.back() = to;
  return g;
}

// ---------------------------------------------------------------- eval

struct EvalOptions {
  double m = 1.0;
  std::string what = "cdf";
  double from = 0.1;
  double to = 10.0;
  int points = 100;
  bool log_grid = false;
  bool with_asymptotic = false;
  bool with_lognormal = false;
  std::string format = "csv";
  std::string output;
};

std::optional<double> asymptotic_value(const std::string& what, ThetaParam p, double x) {
  if (!(x > 0.0) || x > approx::asymptotic_upper(p)) return std::nullopt;
  return what == "cdf" ? approx::asymptotic_cdf(p, x) : approx::asymptotic_pdf(p, x);
}

int cmd_eval(const EvalOptions& o, std::ostream& out) {
  const ThetaParam p(o.m);
  const auto grid = make_grid(o.from, o.to, o.points, o.log_grid);
  const bool dist_fn = o.what == "cdf" || o.what == "pdf";
  if ((o.with_asymptotic || o.with_lognormal) && !(dist_fn || o.what == "quantile")) {
    throw UsageError("approximation columns apply to pdf, cdf and quantile only");
  }
  if (o.with_asymptotic && o.what == "quantile") {
    throw UsageError("--with-asymptotic does not apply to quantile");
  }
  const auto lp = approx::lognormal_match(p);

  Table t;
  if (o.what == "spectrum") {
    t.columns = {"omega", "magnitude_sq", "phase"};
  } else {
    const std::string input = o.what == "quantile" ? "u" : o.what == "laplace" ? "alpha" : o.what == "mgf" ? "t" : "x";
    t.columns = {input, "exact"};
    if (o.with_asymptotic) t.columns.push_back("asymptotic");
    if (o.with_lognormal) t.columns.push_back("lognormal");
  }

  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    try {
      std::vector<std::optional<double>> row{x};
      if (o.what == "cdf") {
        row.push_back(cdf(p, x));
      } else if (o.what == "pdf") {
        row.push_back(pdf(p, x));
      } else if (o.what == "quantile") {
        row.push_back(quantile(p, x));
      } else if (o.what == "laplace") {
        row.push_back(laplace_transform(p, x));
      } else if (o.what == "mgf") {
        row.push_back(mgf(p, x));
      } else {
        row.push_back(spectrum_magnitude_sq(p, x));
        row.push_back(spectrum_phase(p, x));
      }
      if (o.with_asymptotic) row.push_back(asymptotic_value(o.what, p, x));
      if (o.with_lognormal) {
        if (o.what == "quantile") {
          row.push_back(approx::lognormal_quantile(lp, x));
        } else {
          row.push_back(o.what == "cdf" ? approx::lognormal_cdf(lp, x) : approx::lognormal_pdf(lp, x));
        }
      }
      t.rows.push_back(std::move(row));
    } catch (const DomainError& e) {
      throw DomainError("row " + std::to_string(i + 1) + " (" + t.columns[0] + " = " + num(x) + "): " + e.what());
    }
  }

  Sink sink(o.output, out);
  if (o.format == "json") {
    write_json(sink.stream(), t, {{"command", "eval"}, {"m", o.m}, {"what", o.what}});
  } else {
    write_csv(sink.stream(), t);
  }
  sink.finish();
  return kOk;
}

// ---------------------------------------------------------------- sample

struct SampleOptions {
  double m = 1.0;
  long long n = 1000;
  std::string method = "inverse";
  std::optional<std::uint64_t> seed;
  int k = 10000;
  std::string tail = "compensate";
  std::string output;
};

int cmd_sample(const SampleOptions& o, std::ostream& out) {
  if (o.n < 1) throw UsageError("--n must be a positive integer");
  if (o.k < 1) throw UsageError("--k must be a positive integer");
  const ThetaParam p(o.m);
  Rng rng(o.seed.value_or(default_seed()));
  SeriesSamplerConfig cfg;
  cfg.truncation_k = o.k;
  cfg.tail_policy = o.tail == "drop" ? TailPolicy::drop : TailPolicy::mean_compensate;
  Sink sink(o.output, out);
  auto& os = sink.stream();
  // Stream values so large n does not need a buffer.
  for (long long i = 0; i < o.n; ++i) {
    const double v = o.method == "series" ? sample_theta_series(rng, p, cfg) : sample_theta_inverse(rng, p);
    os << num(v) << '\n';
  }
  sink.finish();
  return kOk;
}

// ---------------------------------------------------------------- fit

struct FitOptions {
  std::string input = "-";
  std::string method = "all";
  double u = 0.5;
  std::string output;
};

std::vector<double> read_values(std::istream& is, const std::string& name) {
  std::vector<double> v;
  std::string line;
  long long line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char* b = line.data() + first;
    const char* e = line.data() + last + 1;
    double x = 0.0;
    const auto res = std::from_chars(b, e, x);
    if (res.ec != std::errc() || res.ptr != e) {
      throw IoError(name + ":" + std::to_string(line_no) + ": not a number: '" + std::string(b, e) + "'");
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
      throw DomainError(name + ":" + std::to_string(line_no) + ": value must be positive and finite, got " +
                        std::string(b, e));
    }
    v.push_back(x);
  }
  if (is.bad()) throw IoError("read failed on " + name);
  if (v.empty()) throw DomainError(name + ": no values");
  return v;
}

int cmd_fit(const FitOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<double> values;
  if (o.input == "-") {
    values = read_values(in, "<stdin>");
  } else {
    std::ifstream f(o.input);
    if (!f) throw IoError("cannot open input file '" + o.input + "'");
    values = read_values(f, o.input);
  }
  const SampleSet s(std::move(values));

  std::vector<EstimatorMethod> methods;
  if (o.method == "all") {
    methods.assign(kAllEstimators.begin(), kAllEstimators.end());
  } else if (o.method == "exact") {
    methods = {EstimatorMethod::exact_cdf_root};
  } else if (o.method == "asymptotic") {
    methods = {EstimatorMethod::asymptotic_lambert};
  } else {
    methods = {EstimatorMethod::lognormal_mle};
  }

  int code = kOk;
  json reports = json::array();
  for (auto method : methods) {
    json r = {{"method", std::string(to_string(method))}};
    try {
      const auto rep = estimate(method, s, o.u);
      r["m_hat"] = rep.m_hat;
      r["u"] = rep.u_used ? json(*rep.u_used) : json(nullptr);
      r["iterations"] = rep.iterations;
      r["residual"] = rep.residual;
    } catch (const DomainError& e) {
      r["error"] = e.what();
      err << "fit: " << to_string(method) << ": " << e.what() << '\n';
      code = std::max(code, kDomain);
    } catch (const ConvergenceError& e) {
      r["error"] = e.what();
      err << "fit: " << to_string(method) << ": " << e.what() << '\n';
      code = std::max(code, kConvergence);
    }
    reports.push_back(std::move(r));
  }
  Sink sink(o.output, out);
  sink.stream() << json{{"n", s.size()}, {"estimates", std::move(reports)}}.dump(2) << '\n';
  sink.finish();
  return code;
}

// ---------------------------------------------------------------- study

struct StudyOptions {
  StudyConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string sampler = "inverse";
  std::string raw = "study_raw.csv";
  std::string summary = "study_summary.csv";
};

int cmd_study(StudyOptions o, std::ostream& out, std::ostream& err, bool quiet) {
  if (o.cfg.n_per_sample < 1 || o.cfg.replicates < 1 || o.cfg.bins < 1) {
    throw UsageError("--n, --replicates and --bins must be positive");
  }
  o.cfg.seed = o.seed.value_or(default_seed());
  o.cfg.sampler = o.sampler == "series" ? SamplerMethod::series : SamplerMethod::inverse;
  const auto r = run_estimator_study(o.cfg);

  {
    Sink sink(o.raw, out);
    auto& os = sink.stream();
    os << "replicate,method,m_hat\n";
    for (std::size_t j = 0; j < static_cast<std::size_t>(o.cfg.replicates); ++j) {
      for (std::size_t k = 0; k < r.estimates.size(); ++k) {
        const double v = r.estimates[k][j];
        os << j << ',' << to_string(r.summaries[k].method) << ',' << (std::isnan(v) ? "" : num(v)) << '\n';
      }
    }
    sink.finish();
  }
  {
    Sink sink(o.summary, out);
    auto& os = sink.stream();
    os << "method,count,failures,mean,variance,bin_lower,bin_upper,bin_count\n";
    for (std::size_t k = 0; k < r.summaries.size(); ++k) {
      const auto& s = r.summaries[k];
      for (std::size_t b = 0; b < r.counts[k].size(); ++b) {
        os << to_string(s.method) << ',' << s.count << ',' << s.failures << ',' << num(s.mean) << ','
           << num(s.variance) << ',' << num(r.bin_edges[b]) << ',' << num(r.bin_edges[b + 1]) << ','
           << r.counts[k][b] << '\n';
      }
    }
    sink.finish();
  }
  if (!quiet) {
    for (const auto& s : r.summaries) {
      err << to_string(s.method) << ": mean " << num(s.mean) << ", variance " << num(s.variance) << ", failures "
          << s.failures << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- app

// Flat key=value scenario file; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  static const std::vector<std::string> known = {"d", "lambda", "kind", "t", "z", "m", "epsilon0"};
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError(path + ":" + std::to_string(line_no) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw IoError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw UsageError("invalid value for " + key + ": '" + text + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_number(key, item));
  if (v.empty()) throw UsageError("empty list for " + key);
  return v;
}

struct AppOptions {
  std::string config;
  std::string d, lambda, kind, t, z, m, epsilon0;
  long long count = 1000;
  std::optional<std::uint64_t> seed;
  double t_from = 0.01;
  double t_to = 100.0;
  int points = 100;
  std::string output;
};

// Flags take precedence over the config file; fall back to def.
std::string setting(const AppOptions& o, const std::map<std::string, std::string>& cfg, const std::string& key,
                    const std::string& flag, const std::string& def) {
  if (!flag.empty()) return flag;
  if (auto it = cfg.find(key); it != cfg.end()) return it->second;
  return def;
}

apps::GridKind parse_kind(const std::string& s) {
  if (s == "constant") return apps::GridKind::constant_spacing;
  if (s == "sqrt") return apps::GridKind::sqrt_spacing;
  throw UsageError("kind must be 'constant' or 'sqrt', got '" + s + "'");
}

long long parse_count(const std::string& key, const std::string& text) {
  const double v = parse_number(key, text);
  if (v < 1.0 || v != std::floor(v)) throw UsageError(key + " must be a positive integer");
  return static_cast<long long>(v);
}

int cmd_app(const std::string& which, const AppOptions& o, std::ostream& out) {
  const auto cfg = o.config.empty() ? std::map<std::string, std::string>{} : read_config(o.config);
  auto get = [&](const std::string& key, const std::string& flag, const std::string& def) {
    return setting(o, cfg, key, flag, def);
  };
  const double d = parse_number("d", get("d", o.d, "1"));
  const double lambda = parse_number("lambda", get("lambda", o.lambda, "1"));

  Table table;
  if (which == "rf") {
    const auto kind = parse_kind(get("kind", o.kind, "constant"));
    table.columns = {"quantity", "value"};
    const ThetaParam p = apps::interference_param(d, lambda);
    const auto st = stats(p);
    Sink sink(o.output, out);
    auto& os = sink.stream();
    os << "quantity,value\n";
    os << "m," << num(p.m()) << '\n';
    os << "mean," << num(st.mean) << '\n';
    os << "variance," << num(st.variance) << '\n';
    if (kind == apps::GridKind::sqrt_spacing) {
      const long long t = parse_count("t", get("t", o.t, "1000"));
      const auto mo = apps::altered_grid_moments({d, lambda, kind, t});
      os << "altered_mean," << num(mo.mean) << '\n';
      os << "altered_variance," << num(mo.variance) << '\n';
    }
    sink.finish();
    return kOk;
  }
  if (which == "efield") {
    const double eps0 = parse_number("epsilon0", get("epsilon0", o.epsilon0, "8.8541878128e-12"));
    const ThetaParam p = apps::electric_field_param(lambda, d, eps0);
    const auto st = stats(p);
    Sink sink(o.output, out);
    sink.stream() << "quantity,value\nm," << num(p.m()) << "\nmean," << num(st.mean) << "\nvariance,"
                  << num(st.variance) << '\n';
    sink.finish();
    return kOk;
  }
  if (which == "gravity") {
    const ThetaParam p = apps::gravity_trade_param(lambda, d);
    const auto st = stats(p);
    Sink sink(o.output, out);
    sink.stream() << "quantity,value\nm," << num(p.m()) << "\nmean," << num(st.mean) << "\nvariance,"
                  << num(st.variance) << '\n';
    sink.finish();
    return kOk;
  }
  if (which == "points") {
    const auto kind = parse_kind(get("kind", o.kind, "constant"));
    const long long t = kind == apps::GridKind::sqrt_spacing ? parse_count("t", get("t", o.t, std::to_string(o.count))) : 0;
    if (o.count < 1) throw UsageError("--count must be a positive integer");
    Rng rng(o.seed.value_or(default_seed()));
    const auto pts = apps::place_points(rng, o.count, kind, d, t);
    Sink sink(o.output, out);
    auto& os = sink.stream();
    os << "x,y\n";
    for (const auto& pt : pts) os << num(pt.x) << ',' << num(pt.y) << '\n';
    sink.finish();
    return kOk;
  }
  // coverage
  const double z = parse_number("z", get("z", o.z, "1"));
  const auto ms = parse_list("m", get("m", o.m, "3,5,7,9"));
  if (!(o.t_from > 0.0)) throw UsageError("--t-from must be positive");
  const auto grid = make_grid(o.t_from, o.t_to, o.points, true);
  table.columns = {"m", "t", "probability"};
  for (double m : ms) {
    const apps::SinrScenario sc{z, m, d, lambda};
    for (double t : grid) table.rows.push_back({m, t, apps::coverage_probability(sc, t)});
  }
  Sink sink(o.output, out);
  write_csv(sink.stream(), table);
  sink.finish();
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jacobi theta distribution toolkit"};
  app.name("jtheta");
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet,-q", quiet, "Suppress non-data output");

  EvalOptions eval;
  auto* ev = app.add_subcommand("eval", "Tabulate a distribution function on a grid");
  ev->add_option("--m", eval.m, "Scale parameter")->required();
  ev->add_option("--what", eval.what, "Function to evaluate")
      ->check(CLI::IsMember({"pdf", "cdf", "quantile", "laplace", "mgf", "spectrum"}));
  ev->add_option("--from", eval.from, "Grid start");
  ev->add_option("--to", eval.to, "Grid end");
  ev->add_option("--points", eval.points, "Number of grid points");
  ev->add_flag("--log-grid", eval.log_grid, "Log-spaced grid");
  ev->add_flag("--with-asymptotic", eval.with_asymptotic, "Add the small-x asymptotic column");
  ev->add_flag("--with-lognormal", eval.with_lognormal, "Add the log-normal approximation column");
  ev->add_option("--format", eval.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  ev->add_option("--output,-o", eval.output, "Output file (default: stdout)");

  SampleOptions sample;
  auto* sa = app.add_subcommand("sample", "Draw variates, one per line");
  sa->add_option("--m", sample.m, "Scale parameter");
  sa->add_option("--n", sample.n, "Number of draws");
  sa->add_option("--method", sample.method)->check(CLI::IsMember({"series", "inverse"}));
  sa->add_option("--seed", sample.seed, "Seed (default: $JTHETA_SEED or 1)");
  sa->add_option("--k", sample.k, "Series truncation");
  sa->add_option("--tail", sample.tail, "Series tail policy")->check(CLI::IsMember({"drop", "compensate"}));
  sa->add_option("--output,-o", sample.output, "Output file (default: stdout)");

  FitOptions fit;
  auto* fi = app.add_subcommand("fit", "Estimate m from a file of values");
  fi->add_option("--input,-i", fit.input, "Input file, '-' for stdin");
  fi->add_option("--method", fit.method)->check(CLI::IsMember({"exact", "asymptotic", "lognormal", "all"}));
  fi->add_option("--u", fit.u, "Quantile level for the quantile-based estimators");
  fi->add_option("--output,-o", fit.output, "Output file (default: stdout)");

  StudyOptions study;
  auto* st = app.add_subcommand("study", "Monte Carlo comparison of the three estimators");
  st->add_option("--m", study.cfg.true_m, "True scale parameter");
  st->add_option("--n", study.cfg.n_per_sample, "Draws per replicate");
  st->add_option("--replicates", study.cfg.replicates);
  st->add_option("--seed", study.seed, "Seed (default: $JTHETA_SEED or 1)");
  st->add_option("--u", study.cfg.u);
  st->add_option("--bins", study.cfg.bins);
  st->add_option("--sampler", study.sampler)->check(CLI::IsMember({"series", "inverse"}));
  st->add_option("--k", study.cfg.series.truncation_k, "Series truncation");
  st->add_option("--threads", study.cfg.threads, "Worker threads (0: all cores)");
  st->add_option("--raw", study.raw, "Raw estimates CSV");
  st->add_option("--summary", study.summary, "Summary CSV");

  AppOptions ao;
  std::string which;
  auto* ap = app.add_subcommand("app", "Application scenarios");
  ap->add_option("scenario", which, "rf, coverage, points, gravity or efield")
      ->required()
      ->check(CLI::IsMember({"rf", "coverage", "points", "gravity", "efield"}));
  ap->add_option("--config", ao.config, "key=value scenario file");
  ap->add_option("--d", ao.d);
  ap->add_option("--lambda", ao.lambda);
  ap->add_option("--kind", ao.kind, "constant or sqrt");
  ap->add_option("--t", ao.t, "Horizon for sqrt spacing");
  ap->add_option("--z", ao.z);
  ap->add_option("--m", ao.m, "Comma-separated list");
  ap->add_option("--epsilon0", ao.epsilon0);
  ap->add_option("--count", ao.count);
  ap->add_option("--seed", ao.seed);
  ap->add_option("--t-from", ao.t_from);
  ap->add_option("--t-to", ao.t_to);
  ap->add_option("--points", ao.points);
  ap->add_option("--output,-o", ao.output);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "jtheta: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (ev->parsed()) return cmd_eval(eval, out);
    if (sa->parsed()) return cmd_sample(sample, out);
    if (fi->parsed()) return cmd_fit(fit, in, out, err);
    if (st->parsed()) return cmd_study(study, out, err, quiet);
    return cmd_app(which, ao, out);
  } catch (const UsageError& e) {
    err << "jtheta: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "jtheta: domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << "jtheta: convergence error: " << e.what() << '\n';
    return kConvergence;
  } catch (const IoError& e) {
    err << "jtheta: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    err << "jtheta: " << e.what() << '\n';
    return kOther;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, std::cin, out, err);
}

}  // namespace jtheta::cli
