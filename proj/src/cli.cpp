#include "rbs/cli.hpp"

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rbs/errors.hpp"
#include "rbs/geometry.hpp"
#include "rbs/gr_analysis.hpp"
#include "rbs/samplers.hpp"
#include "rbs/stats.hpp"
#include "rbs/version.hpp"

namespace rbs {

namespace {

using ordered_json = nlohmann::ordered_json;

// File-level failures get their own type so the exit-code mapping can
// distinguish them from numeric errors.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json make_manifest(const std::string& command, ordered_json flags,
                           std::uint64_t seed) {
  ordered_json m;
  m["command"] = command;
  m["flags"] = std::move(flags);
  m["seed"] = seed;
  m["version"] = kVersion;
  m["timestamp"] = iso_timestamp();
  return m;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << content;
  os.flush();
  if (!os) throw IoError("write to '" + path + "' failed");
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

struct CsvData {
  int n = 0;
  std::vector<std::vector<double>> rows;
};

// Reads a sample CSV: '#' comment lines, a header x1..xn, then numeric
// rows. Throws ParseError (with the 1-based line number) on malformed
// input, including an empty file and a file without data rows.
CsvData parse_csv(std::istream& in) {
  CsvData data;
  std::string line;
  long lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = split(line, ',');
    if (!have_header) {
      for (size_t i = 0; i < fields.size(); ++i)
        if (fields[i] != "x" + std::to_string(i + 1))
          throw ParseError("malformed header: expected x1..xn", lineno);
      if (fields.size() < 2)
        throw ParseError("header must declare at least 2 coordinates", lineno);
      data.n = static_cast<int>(fields.size());
      have_header = true;
      continue;
    }
    if (fields.size() != static_cast<size_t>(data.n))
      throw ParseError("expected " + std::to_string(data.n) + " fields, got " +
                           std::to_string(fields.size()),
                       lineno);
    std::vector<double> row(fields.size());
    for (size_t i = 0; i < fields.size(); ++i) {
      try {
        size_t pos = 0;
        row[i] = std::stod(fields[i], &pos);
        if (pos != fields[i].size()) throw std::invalid_argument(fields[i]);
      } catch (const std::exception&) {
        throw ParseError("bad number '" + fields[i] + "'", lineno);
      }
    }
    data.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("empty input: no header row", lineno);
  if (data.rows.empty()) throw ParseError("no data rows", lineno);
  return data;
}

CsvData read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return parse_csv(in);
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

struct SampleFlags {
  int n = 0;
  std::string method = "auto";
  long count = 0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string g;
};

int cmd_sample(const SampleFlags& f, std::ostream& out) {
  SamplerConfig cfg;
  cfg.n = f.n;
  cfg.method = parse_method(f.method);
  cfg.seed = f.seed;
  if (!f.g.empty()) cfg.g = DensitySpec::parse(f.g);
  cfg.validate();
  if (f.count < 1) throw std::invalid_argument("--count must be >= 1");

  const SampleBatch batch = sample_batch(cfg, static_cast<int>(f.count));

  ordered_json flags;
  flags["n"] = f.n;
  flags["method"] = f.method;
  flags["resolved_method"] = method_name(cfg.resolved_method());
  flags["count"] = f.count;
  flags["seed"] = f.seed;
  flags["out"] = f.out_path;
  if (!f.g.empty()) flags["g"] = f.g;

  std::string text = "# manifest " +
                     make_manifest("sample", std::move(flags), f.seed).dump() +
                     "\n";
  for (int k = 1; k <= f.n; ++k)
    text += (k == 1 ? "x" : ",x") + std::to_string(k);
  text += "\n";
  for (const auto& v : batch.items) {
    for (size_t k = 0; k < v.x.size(); ++k) {
      if (k) text += ',';
      text += fmt17(v.x[k]);
    }
    text += '\n';
  }
  write_text_file(f.out_path, text);
  out << "wrote " << f.count << " samples (n=" << f.n << ", method="
      << method_name(cfg.resolved_method()) << ") to " << f.out_path << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify-gr
// ---------------------------------------------------------------------------

struct VerifyFlags {
  int from = 0;
  int to = 0;
  std::string out_path;
  int jobs = 1;
};

ordered_json gr_report_json(const GrReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["degree"] = r.degree;
  j["distinct_real_root_count"] = r.distinct_real_root_count;
  j["squarefree"] = r.squarefree;
  j["sign_at_minus3"] = r.sign_at_minus3;
  j["sign_at_minus2"] = r.sign_at_minus2;
  if (r.a0_interval) {
    ordered_json iv;
    iv["lo"] = r.a0_interval->lo.to_string();
    iv["hi"] = r.a0_interval->hi.to_string();
    j["a0_interval"] = iv;
  } else {
    j["a0_interval"] = nullptr;
  }
  j["verdict"] = verdict_name(r.verdict);
  j["reason"] = r.reason;
  return j;
}

int cmd_verify_gr(const VerifyFlags& f, std::ostream& out) {
  if (f.from < 3) throw std::invalid_argument("--from must be >= 3");
  if (f.to < f.from) throw std::invalid_argument("--to must be >= --from");
  if (f.jobs < 1) throw std::invalid_argument("--jobs must be >= 1");

  const int count = f.to - f.from + 1;
  std::vector<GrReport> reports(static_cast<size_t>(count));
  {
    std::atomic<int> next{0};
    const auto worker = [&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        reports[static_cast<size_t>(i)] = verify_no_gr_density(f.from + i);
    };
    const int pool = std::min(f.jobs, count);
    std::vector<std::thread> threads;
    for (int j = 1; j < pool; ++j) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
  }

  int exists = 0, proven = 0, inconclusive = 0;
  ordered_json results = ordered_json::array();
  for (const auto& r : reports) {
    results.push_back(gr_report_json(r));
    switch (r.verdict) {
      case GrVerdict::density_exists_robson:
      case GrVerdict::density_exists_gerow: ++exists; break;
      case GrVerdict::no_density_proven: ++proven; break;
      case GrVerdict::inconclusive: ++inconclusive; break;
    }
  }

  ordered_json flags;
  flags["from"] = f.from;
  flags["to"] = f.to;
  flags["out"] = f.out_path;
  flags["jobs"] = f.jobs;
  ordered_json doc;
  doc["manifest"] = make_manifest("verify-gr", std::move(flags), 0);
  doc["results"] = std::move(results);
  ordered_json summary;
  summary["from"] = f.from;
  summary["to"] = f.to;
  summary["density_exists"] = exists;
  summary["no_density_proven"] = proven;
  summary["inconclusive"] = inconclusive;
  doc["summary"] = summary;
  write_text_file(f.out_path, doc.dump(2) + "\n");

  out << "verified n=" << f.from << ".." << f.to << ": " << exists
      << " existence, " << proven << " no-density, " << inconclusive
      << " inconclusive -> " << f.out_path << "\n";
  return inconclusive == 0 ? kExitOk : kExitVerification;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

struct StatsFlags {
  std::string in_path;
  std::string report_path;
};

int cmd_stats(const StatsFlags& f, std::ostream& out, std::ostream& err) {
  const CsvData data = read_csv_file(f.in_path);

  SampleBatch batch;
  batch.config.n = data.n;
  batch.config.method = Method::auto_select;
  batch.config.seed = 0;
  batch.items.reserve(data.rows.size());
  for (const auto& row : data.rows)
    batch.items.push_back(BalancedVector::unchecked(row));

  ordered_json results = ordered_json::array();
  double min_p = 1.0;
  {
    ordered_json uni;
    uni["type"] = "uniformity";
    ordered_json coords = ordered_json::array();
    for (int k = 0; k < data.n; ++k) {
      const UniformityResult u = ks_uniformity(batch, k);
      min_p = std::min(min_p, u.p_value);
      ordered_json c;
      c["coordinate"] = u.coordinate;
      c["statistic"] = u.statistic;
      c["p_value"] = u.p_value;
      c["count"] = u.count;
      c["chi_square_64"] = chi_square_uniformity(batch, k, 64);
      coords.push_back(c);
    }
    uni["coordinates"] = coords;
    results.push_back(uni);
  }

  const bool covariance_included = batch.count() >= 1000;
  if (covariance_included) {
    const CovarianceSummary s = covariance_summary(batch);
    ordered_json cov;
    cov["type"] = "covariance";
    cov["n"] = s.n;
    cov["count"] = s.count;
    cov["alpha_hat"] = s.alpha_hat;
    cov["alpha_target"] = s.alpha_target;
    cov["alpha_se"] = s.alpha_se;
    cov["sum_identity_hat"] = s.sum_identity_hat;
    cov["sum_identity_target"] = s.sum_identity_target;
    cov["sum_identity_se"] = s.sum_identity_se;
    cov["matrix"] = s.covariance;
    cov["standard_error"] = s.standard_error;
    results.push_back(cov);
  }

  const double worst = balance_report(batch);
  const double threshold = kBalanceTolPerCoord * data.n;
  const bool balance_ok = worst <= threshold;
  {
    ordered_json bal;
    bal["type"] = "balance";
    bal["max_abs_sum"] = worst;
    bal["threshold"] = threshold;
    bal["ok"] = balance_ok;
    results.push_back(bal);
  }

  ordered_json flags;
  flags["in"] = f.in_path;
  flags["report"] = f.report_path;
  ordered_json doc;
  doc["manifest"] = make_manifest("stats", std::move(flags), 0);
  doc["results"] = std::move(results);
  ordered_json summary;
  summary["n"] = data.n;
  summary["count"] = batch.count();
  summary["min_p_value"] = min_p;
  summary["all_marginals_pass_1pct"] = min_p > 0.01;
  summary["balance_ok"] = balance_ok;
  summary["covariance_included"] = covariance_included;
  doc["summary"] = summary;
  write_text_file(f.report_path, doc.dump(2) + "\n");

  out << "analyzed " << batch.count() << " rows (n=" << data.n << ") -> "
      << f.report_path << "\n";
  if (!balance_ok) {
    err << "verification error: balance violation, max |sum| = "
        << fmt17(worst) << " > " << fmt17(threshold) << "\n";
    return kExitVerification;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// demo-variance
// ---------------------------------------------------------------------------

struct DemoFlags {
  int n = 0;
  std::string fn;
  long trials = 0;
  std::uint64_t seed = 0;
  std::string out_path;  // empty = stdout
};

std::vector<double> parse_poly_descriptor(const std::string& text) {
  const std::string prefix = "poly:";
  if (text.rfind(prefix, 0) != 0)
    throw std::invalid_argument("--fn must look like poly:c0,c1,...");
  std::vector<double> coeffs;
  for (const std::string& part : split(text.substr(prefix.size()), ',')) {
    try {
      size_t pos = 0;
      coeffs.push_back(std::stod(part, &pos));
      if (pos != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw std::invalid_argument("--fn: bad coefficient '" + part + "'");
    }
  }
  if (coeffs.empty())
    throw std::invalid_argument("--fn needs at least one coefficient");
  return coeffs;
}

int cmd_demo_variance(const DemoFlags& f, std::ostream& out) {
  const std::vector<double> coeffs = parse_poly_descriptor(f.fn);
  SeededGenerator gen(f.seed);
  const VarianceReduction v =
      variance_reduction_experiment(coeffs, f.n, f.trials, gen);

  ordered_json flags;
  flags["n"] = f.n;
  flags["fn"] = f.fn;
  flags["trials"] = f.trials;
  flags["seed"] = f.seed;
  if (!f.out_path.empty()) flags["out"] = f.out_path;
  ordered_json doc;
  doc["manifest"] = make_manifest("demo-variance", std::move(flags), f.seed);
  ordered_json result;
  result["var_iid"] = v.var_iid;
  result["var_rbs"] = v.var_rbs;
  result["mean_rbs"] = v.mean_rbs;
  result["max_abs_trial_mean_rbs"] = v.max_abs_trial_mean_rbs;
  doc["results"] = ordered_json::array({result});
  ordered_json summary;
  summary["variance_ratio"] =
      v.var_iid > 0.0 ? ordered_json(v.var_rbs / v.var_iid) : ordered_json();
  summary["linear_component_eliminated"] = v.max_abs_trial_mean_rbs <= 1e-12;
  doc["summary"] = summary;

  const std::string text = doc.dump(2) + "\n";
  if (f.out_path.empty()) {
    out << text;
  } else {
    write_text_file(f.out_path, text);
    out << "wrote variance report to " << f.out_path << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// embed
// ---------------------------------------------------------------------------

struct EmbedFlags {
  std::string in_path;
  std::string out_path;
};

int cmd_embed(const EmbedFlags& f, std::ostream& out, std::ostream& err) {
  const CsvData data = read_csv_file(f.in_path);
  const SimplexModel model = build_simplex_model(data.n);

  ordered_json flags;
  flags["in"] = f.in_path;
  flags["out"] = f.out_path;
  std::string text =
      "# manifest " + make_manifest("embed", std::move(flags), 0).dump() + "\n";
  for (int k = 1; k <= data.n; ++k)
    text += (k == 1 ? "x" : ",x") + std::to_string(k);
  for (int k = 1; k <= data.n - 1; ++k) text += ",e" + std::to_string(k);
  text += "\n";

  for (size_t i = 0; i < data.rows.size(); ++i) {
    std::vector<double> v;
    try {
      v = embed(model, data.rows[i]);
    } catch (const std::invalid_argument& e) {
      err << "verification error: row " << (i + 1) << ": " << e.what() << "\n";
      return kExitVerification;
    }
    for (size_t k = 0; k < data.rows[i].size(); ++k) {
      if (k) text += ',';
      text += fmt17(data.rows[i][k]);
    }
    for (double c : v) text += "," + fmt17(c);
    text += '\n';
  }
  write_text_file(f.out_path, text);
  out << "embedded " << data.rows.size() << " rows (n=" << data.n << ") -> "
      << f.out_path << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"balanced-sample generators and exact radial-density verification"};
  app.name("rbs");
  app.require_subcommand(1);

  SampleFlags sf;
  CLI::App* sample = app.add_subcommand("sample", "generate balanced samples as CSV");
  sample->add_option("--n", sf.n, "dimension (n >= 2)")->required();
  sample->add_option("--method", sf.method,
                     "auto|degenerate|redistributed|symmetrized|gr");
  sample->add_option("--count", sf.count, "number of samples")->required();
  sample->add_option("--seed", sf.seed, "PRNG seed");
  sample->add_option("--out", sf.out_path, "output CSV path")->required();
  sample->add_option("--g", sf.g, "gr radial density, power:P or poly:c0,c1,...");

  VerifyFlags vf;
  CLI::App* verify = app.add_subcommand(
      "verify-gr", "classify existence of max-norm radial densities");
  verify->add_option("--from", vf.from, "first n (>= 3)")->required();
  verify->add_option("--to", vf.to, "last n")->required();
  verify->add_option("--out", vf.out_path, "output JSON path")->required();
  verify->add_option("--jobs", vf.jobs, "worker threads");

  StatsFlags tf;
  CLI::App* stats = app.add_subcommand("stats", "analyze a sample CSV");
  stats->add_option("--in", tf.in_path, "input CSV path")->required();
  stats->add_option("--report", tf.report_path, "output JSON path")->required();

  DemoFlags df;
  CLI::App* demo = app.add_subcommand(
      "demo-variance", "variance of i.i.d. vs balanced sample means");
  demo->add_option("--n", df.n, "block size (n >= 2)")->required();
  demo->add_option("--fn", df.fn, "integrand, poly:c0,c1,...")->required();
  demo->add_option("--trials", df.trials, "trial count (>= 100)")->required();
  demo->add_option("--seed", df.seed, "PRNG seed");
  demo->add_option("--out", df.out_path, "output JSON path (default stdout)");

  EmbedFlags ef;
  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "append simplex-frame coordinates to a sample CSV");
  embed_cmd->add_option("--in", ef.in_path, "input CSV path")->required();
  embed_cmd->add_option("--out", ef.out_path, "output CSV path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (sample->parsed()) return cmd_sample(sf, out);
    if (verify->parsed()) return cmd_verify_gr(vf, out);
    if (stats->parsed()) return cmd_stats(tf, out, err);
    if (demo->parsed()) return cmd_demo_variance(df, out);
    if (embed_cmd->parsed()) return cmd_embed(ef, out, err);
    err << "error: no command selected\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NotInvertibleError& e) {
    err << "verification error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerification;
  }
}

}  // namespace rbs
