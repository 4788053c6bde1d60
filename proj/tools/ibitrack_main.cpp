// ibitrack command line front end: simulate -> corrupt -> filter -> eval/roc
// pipelines over plain beat-timestamp files, emitting CSV or NDJSON.
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ibitrack/errors.hpp"
#include "ibitrack/filter.hpp"
#include "ibitrack/ig_math.hpp"
#include "ibitrack/metrics.hpp"
#include "ibitrack/synth.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ibitrack;

constexpr int kExitOk = 0;
constexpr int kExitMalformedInput = 2;
constexpr int kExitBadConfig = 3;

// Malformed input file; reports the first offending line.
struct MalformedInput : std::runtime_error {
  MalformedInput(const std::string& path, std::size_t line,
                 const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(line) + ": " + what) {}
};

std::string fmt(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_skippable(std::string_view line) {
  const std::string_view t = trimmed(line);
  return t.empty() || t.front() == '#';
}

double parse_double(std::string_view token, const std::string& path,
                    std::size_t line_no) {
  const std::string_view t = trimmed(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc{} || ptr != t.data() + t.size()) {
    throw MalformedInput(path, line_no,
                         "expected a number, got '" + std::string(t) + "'");
  }
  return value;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput(path, 0, "cannot open file");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  return out;
}

// One timestamp per line, strictly increasing, first >= 0. Blank lines and
// '#' comments are skipped.
BeatSeries read_beats(const std::string& path) {
  std::ifstream in = open_input(path);
  BeatSeries beats;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const double t = parse_double(line, path, line_no);
    if (!std::isfinite(t)) throw MalformedInput(path, line_no, "non-finite time");
    if (beats.times.empty()) {
      if (t < 0.0) throw MalformedInput(path, line_no, "first beat before 0");
    } else if (t <= beats.times.back()) {
      throw MalformedInput(path, line_no, "beat times must strictly increase");
    }
    beats.times.push_back(t);
  }
  return beats;
}

// One interval per line; beat times are the cumulative sums with an origin
// beat at t = 0, so the intervals round-trip exactly.
BeatSeries read_ibis_as_beats(const std::string& path) {
  std::ifstream in = open_input(path);
  BeatSeries beats;
  beats.times.push_back(0.0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const double r = parse_double(line, path, line_no);
    if (!std::isfinite(r) || r <= 0.0) {
      throw MalformedInput(path, line_no, "intervals must be positive");
    }
    beats.times.push_back(beats.times.back() + r);
  }
  return beats;
}

enum class Format { Csv, Ndjson };

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::Csv;
  if (name == "ndjson") return Format::Ndjson;
  throw InvalidConfig("format must be csv or ndjson");
}

// Column-oriented record writer so CSV and NDJSON stay field-for-field
// identical.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format,
               std::vector<std::string> columns)
      : out_(out), format_(format), columns_(std::move(columns)) {
    if (format_ == Format::Csv) {
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << columns_[i];
      }
      out_ << '\n';
    }
  }

  void comment(const std::string& text) {
    if (format_ == Format::Csv) out_ << "# " << text << '\n';
  }

  void meta(const ordered_json& meta) {
    if (format_ == Format::Ndjson) {
      ordered_json j;
      j["meta"] = meta;
      out_ << j.dump() << '\n';
    }
  }

  void row(const std::vector<ordered_json>& values) {
    if (format_ == Format::Csv) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out_ << ',';
        if (values[i].is_number_float()) {
          out_ << fmt(values[i].get<double>());
        } else if (values[i].is_string()) {
          out_ << values[i].get<std::string>();
        } else {
          out_ << values[i].dump();
        }
      }
      out_ << '\n';
    } else {
      ordered_json j;
      for (std::size_t i = 0; i < values.size(); ++i) j[columns_[i]] = values[i];
      out_ << j.dump() << '\n';
    }
  }

 private:
  std::ostream& out_;
  Format format_;
  std::vector<std::string> columns_;
};

// Reads one named column back from a CSV or NDJSON record file; the format
// is sniffed from the first data line. NDJSON meta objects and CSV comments
// are skipped.
std::vector<ordered_json> read_column(const std::string& path,
                                      const std::string& column) {
  std::ifstream in = open_input(path);
  std::vector<ordered_json> out;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> csv_index;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const std::string_view t = trimmed(line);
    if (t.front() == '{') {
      ordered_json j;
      try {
        j = ordered_json::parse(t);
      } catch (const ordered_json::parse_error&) {
        throw MalformedInput(path, line_no, "invalid JSON record");
      }
      if (!j.contains(column)) {
        if (j.contains("meta")) continue;
        throw MalformedInput(path, line_no, "record lacks field '" + column + "'");
      }
      out.push_back(j.at(column));
      continue;
    }
    // CSV: first non-comment line is the header.
    std::vector<std::string> cells;
    std::size_t start = 0;
    const std::string row(t);
    while (true) {
      const std::size_t comma = row.find(',', start);
      cells.push_back(row.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!saw_header) {
      saw_header = true;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == column) csv_index = i;
      }
      if (!csv_index) {
        throw MalformedInput(path, line_no, "no column named '" + column + "'");
      }
      continue;
    }
    if (*csv_index >= cells.size()) {
      throw MalformedInput(path, line_no, "row has too few columns");
    }
    out.push_back(parse_double(cells[*csv_index], path, line_no));
  }
  return out;
}

struct FilterFlags {
  FilterConfig config;
  std::optional<double> seed_ibi;
  std::string mode = "analytic";

  void attach(CLI::App* cmd) {
    cmd->add_option("--gamma", config.gamma,
                    "Forgetting factor, strictly inside (0,1)")
        ->capture_default_str();
    cmd->add_option("--p-e", config.p_e, "Prior anomaly probability in [0,1)")
        ->capture_default_str();
    cmd->add_option("--lambda-e", config.lambda_e,
                    "Rate of the exponential anomaly model (1/s)")
        ->capture_default_str();
    cmd->add_option("--mode", mode, "Mode formula: analytic|paper")
        ->capture_default_str();
    cmd->add_option("--warmup", config.warmup_beats,
                    "Beats absorbed at full weight before trusting the state")
        ->capture_default_str();
    cmd->add_option("--lambda-min", config.lambda_min,
                    "Lower clamp for lambda*")
        ->capture_default_str();
    cmd->add_option("--lambda-max", config.lambda_max,
                    "Upper clamp for lambda*")
        ->capture_default_str();
    cmd->add_option("--r-min", config.r_min,
                    "Shortest admissible interval (s); shorter ones are gated")
        ->capture_default_str();
    cmd->add_option("--r-max", config.r_max,
                    "Longest admissible interval (s); longer ones are gated")
        ->capture_default_str();
    cmd->add_option("--seed-ibi", seed_ibi,
                    "Nominal interval used to seed the state (default 0.8)");
  }

  FilterConfig resolve() const {
    FilterConfig out = config;
    if (mode == "analytic") {
      out.mode_variant = ModeVariant::Analytic;
    } else if (mode == "paper") {
      out.mode_variant = ModeVariant::PaperVerbatim;
    } else {
      throw InvalidConfig("--mode must be analytic or paper");
    }
    out.validate();
    return out;
  }
};

const std::vector<std::string> kTraceColumns = {
    "index",   "end_time",    "ibi",      "beta0",
    "mu_star", "lambda_star", "mean_ibi", "std_ibi"};

// Streams intervals through the filter and writes one trace row per
// interval; memory use does not grow with the input.
void run_filter_stream(std::istream& in, const std::string& path, bool as_ibis,
                       const FilterConfig& config,
                       std::optional<double> seed_ibi, RecordWriter& writer) {
  IbiFilter filter(config, seed_ibi);
  std::string line;
  std::size_t line_no = 0;
  std::size_t index = 0;
  std::optional<double> prev_time;
  double end_time = 0.0;
  bool any = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const double value = parse_double(line, path, line_no);
    if (!std::isfinite(value)) {
      throw MalformedInput(path, line_no, "non-finite value");
    }
    double r;
    if (as_ibis) {
      if (value <= 0.0) {
        throw MalformedInput(path, line_no, "intervals must be positive");
      }
      r = value;
      end_time += value;
    } else {
      if (!prev_time) {
        if (value < 0.0) throw MalformedInput(path, line_no, "first beat before 0");
        prev_time = value;
        continue;
      }
      if (value <= *prev_time) {
        throw MalformedInput(path, line_no, "beat times must strictly increase");
      }
      r = value - *prev_time;
      prev_time = value;
      end_time = value;
    }
    const StepOutput out = filter.step(r);
    writer.row({static_cast<std::uint64_t>(index), end_time, r, out.beta0,
                out.mu_star, out.lambda_star, out.mean_ibi, out.std_ibi});
    ++index;
    any = true;
  }
  if (!any) {
    throw MalformedInput(path, line_no, as_ibis ? "no intervals in input"
                                                : "need at least two beats");
  }
}

void write_beats(const BeatSeries& beats, const std::string& path) {
  std::ofstream out = open_output(path);
  for (double t : beats.times) out << fmt(t) << '\n';
}

int run_simulate(std::size_t n, double mu, double lambda,
                 std::optional<double> mu_end,
                 std::optional<double> lambda_end, std::uint64_t seed,
                 const std::string& out_path) {
  Rng rng(seed);
  BeatSeries beats;
  if (mu_end || lambda_end) {
    std::vector<double> mu_path(n);
    std::vector<double> lambda_path(n);
    const double mu1 = mu_end.value_or(mu);
    const double lambda1 = lambda_end.value_or(lambda);
    for (std::size_t i = 0; i < n; ++i) {
      const double f =
          n > 1 ? static_cast<double>(i) / static_cast<double>(n - 1) : 0.0;
      mu_path[i] = mu + (mu1 - mu) * f;
      lambda_path[i] = lambda + (lambda1 - lambda) * f;
    }
    beats = gen_drifting(mu_path, lambda_path, rng);
  } else {
    beats = gen_stationary(IGParams(mu, lambda), n, rng);
  }
  write_beats(beats, out_path);
  return kExitOk;
}

int run_corrupt(const std::string& in_path, bool as_ibis, double p_m,
                double p_f, std::uint64_t seed, const std::string& out_beats,
                const std::string& out_labels, Format format) {
  const BeatSeries beats =
      as_ibis ? read_ibis_as_beats(in_path) : read_beats(in_path);
  if (beats.times.size() < 2) {
    throw MalformedInput(in_path, 0, "need at least two beats");
  }
  Rng rng(seed);
  const CorruptionResult result = corrupt(beats, p_m, p_f, rng);
  write_beats(result.beats, out_beats);

  if (!out_labels.empty()) {
    std::ofstream out = open_output(out_labels);
    RecordWriter writer(out, format, {"index", "end_time", "ibi", "anomalous"});
    ordered_json meta;
    meta["deletion"] = "bernoulli_per_beat";
    meta["p_m"] = p_m;
    meta["deleted"] = result.deleted;
    meta["insertion"] = "floor_fraction_uniform";
    meta["p_f"] = p_f;
    meta["inserted"] = result.inserted;
    meta["seed"] = seed;
    writer.comment("deletion=bernoulli_per_beat p_m=" + fmt(p_m) +
                   " deleted=" + std::to_string(result.deleted));
    writer.comment("insertion=floor_fraction_uniform p_f=" + fmt(p_f) +
                   " inserted=" + std::to_string(result.inserted) +
                   " seed=" + std::to_string(seed));
    writer.meta(meta);
    for (std::size_t i = 0; i < result.ibis.ibis.size(); ++i) {
      writer.row({static_cast<std::uint64_t>(i), result.beats.times[i + 1],
                  result.ibis.ibis[i],
                  result.ibis.labels[i] == IbiLabel::Anomalous ? 1 : 0});
    }
  }
  return kExitOk;
}

int run_eval(const std::string& clean_path, const std::string& corrupted_path,
             const FilterConfig& config, std::optional<double> seed_ibi,
             double window, const std::string& out_path, Format format) {
  const BeatSeries clean = read_beats(clean_path);
  const BeatSeries corrupted = read_beats(corrupted_path);
  if (clean.times.size() < 2 || corrupted.times.size() < 2) {
    throw MalformedInput(clean.times.size() < 2 ? clean_path : corrupted_path,
                         0, "need at least two beats");
  }

  const Curve clean_sdnn = sliding_sdnn(clean, window);
  const Curve corrupted_sdnn = sliding_sdnn(corrupted, window);

  Curve filter_std;
  IbiFilter filter(config, seed_ibi);
  const std::vector<double> ibis = intervals(corrupted);
  for (std::size_t i = 0; i < ibis.size(); ++i) {
    const StepOutput out = filter.step(ibis[i]);
    filter_std.times.push_back(corrupted.times[i + 1]);
    filter_std.values.push_back(out.std_ibi);
  }

  std::ofstream out = open_output(out_path);
  RecordWriter writer(out, format, {"curve", "time", "value"});
  auto emit = [&](const std::string& name, const Curve& curve) {
    for (std::size_t i = 0; i < curve.times.size(); ++i) {
      writer.row({name, curve.times[i], curve.values[i]});
    }
  };
  emit("clean_sdnn", clean_sdnn);
  emit("corrupted_sdnn", corrupted_sdnn);
  emit("filter_std", filter_std);

  RecordWriter summary(std::cout, format, {"pair", "mad"});
  summary.row({"filter_vs_clean", mad(filter_std, clean_sdnn)});
  summary.row({"corrupted_vs_clean", mad(corrupted_sdnn, clean_sdnn)});
  summary.row({"filter_vs_corrupted", mad(filter_std, corrupted_sdnn)});
  return kExitOk;
}

int run_roc(const std::string& scores_path, const std::string& labels_path,
            const std::string& out_path, Format format) {
  const std::vector<ordered_json> score_cells =
      read_column(scores_path, "beta0");
  const std::vector<ordered_json> label_cells =
      read_column(labels_path, "anomalous");
  if (score_cells.size() != label_cells.size()) {
    throw MalformedInput(labels_path, 0,
                         "trace and labels disagree on interval count (" +
                             std::to_string(score_cells.size()) + " vs " +
                             std::to_string(label_cells.size()) + ")");
  }
  std::vector<double> scores;
  std::vector<IbiLabel> labels;
  for (std::size_t i = 0; i < score_cells.size(); ++i) {
    scores.push_back(score_cells[i].get<double>());
    labels.push_back(label_cells[i].get<double>() != 0.0 ? IbiLabel::Anomalous
                                                         : IbiLabel::Normal);
  }
  const RocResult result = roc(scores, labels);

  std::ofstream out = open_output(out_path);
  RecordWriter writer(out, format,
                      {"threshold", "false_alarm_rate", "detection_rate"});
  for (const RocPoint& p : result.points) {
    writer.row({p.threshold, p.false_alarm_rate, p.detection_rate});
  }
  RecordWriter summary(std::cout, format, {"auc"});
  summary.row({result.auc});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Streaming inter-beat interval filter: tracks a time-varying inverse "
      "Gaussian interval distribution, flags anomalous intervals, and "
      "evaluates HRV robustness on synthetic corruptions."};
  app.require_subcommand(1);

  std::string format_name = "csv";
  app.add_option("--format", format_name, "Output format: csv|ndjson")
      ->capture_default_str();

  // simulate
  auto* simulate = app.add_subcommand(
      "simulate", "Generate beat timestamps from the interval model "
                  "(one time in seconds per line)");
  std::size_t sim_n = 1000;
  double sim_mu = 0.8;
  double sim_lambda = 400.0;
  std::optional<double> sim_mu_end;
  std::optional<double> sim_lambda_end;
  std::uint64_t sim_seed = 0;
  std::string sim_out;
  simulate->add_option("--n", sim_n, "Number of beats")->capture_default_str();
  simulate->add_option("--mu", sim_mu, "Mean interval (s)")
      ->capture_default_str();
  simulate->add_option("--lambda", sim_lambda, "Shape parameter (s)")
      ->capture_default_str();
  simulate->add_option("--mu-end", sim_mu_end,
                       "Drift mu linearly to this value");
  simulate->add_option("--lambda-end", sim_lambda_end,
                       "Drift lambda linearly to this value");
  simulate->add_option("--seed", sim_seed, "RNG seed")->required();
  simulate->add_option("--out", sim_out, "Output beat file")->required();

  // corrupt
  auto* corrupt_cmd = app.add_subcommand(
      "corrupt", "Inject missed/false detections into a beat file and emit "
                 "per-interval anomaly labels");
  std::string cor_in;
  bool cor_ibis = false;
  std::optional<double> cor_p;
  double cor_pm = 0.0;
  double cor_pf = 0.0;
  std::uint64_t cor_seed = 0;
  std::string cor_out_beats;
  std::string cor_out_labels;
  corrupt_cmd->add_option("--in", cor_in, "Input beat file")->required();
  corrupt_cmd->add_flag("--ibis", cor_ibis,
                        "Input holds intervals, not timestamps");
  corrupt_cmd->add_option("--p", cor_p,
                          "Sets both error probabilities at once");
  corrupt_cmd->add_option("--p-m", cor_pm, "Missed-detection probability")
      ->capture_default_str();
  corrupt_cmd->add_option("--p-f", cor_pf, "False-detection probability")
      ->capture_default_str();
  corrupt_cmd->add_option("--seed", cor_seed, "RNG seed")->required();
  corrupt_cmd->add_option("--out-beats", cor_out_beats,
                          "Corrupted beat file")->required();
  corrupt_cmd->add_option(
      "--out-labels", cor_out_labels,
      "Per-interval label file (columns: index,end_time,ibi,anomalous)");

  // filter
  auto* filter_cmd = app.add_subcommand(
      "filter", "Run the interval filter over a beat file; one row per "
                "interval with columns index,end_time,ibi,beta0,mu_star,"
                "lambda_star,mean_ibi,std_ibi");
  std::string fil_in;
  bool fil_ibis = false;
  std::string fil_out;
  FilterFlags fil_flags;
  filter_cmd->add_option("--in", fil_in, "Input beat file")->required();
  filter_cmd->add_flag("--ibis", fil_ibis,
                       "Input holds intervals, not timestamps");
  filter_cmd->add_option("--out", fil_out,
                         "Output trace file (default: stdout)");
  fil_flags.attach(filter_cmd);

  // eval
  auto* eval_cmd = app.add_subcommand(
      "eval", "Emit aligned clean/corrupted/filter HRV curves (columns "
              "curve,time,value) and their pairwise MAD on stdout");
  std::string ev_clean;
  std::string ev_corrupted;
  std::string ev_out;
  double ev_window = 300.0;
  FilterFlags ev_flags;
  eval_cmd->add_option("--clean", ev_clean, "Clean beat file")->required();
  eval_cmd->add_option("--corrupted", ev_corrupted, "Corrupted beat file")
      ->required();
  eval_cmd->add_option("--out", ev_out, "Output curve file")->required();
  eval_cmd->add_option("--window", ev_window, "SDNN window (s)")
      ->capture_default_str();
  ev_flags.attach(eval_cmd);

  // roc
  auto* roc_cmd = app.add_subcommand(
      "roc", "Sweep thresholds over a filter trace against corruption labels "
             "(columns threshold,false_alarm_rate,detection_rate; AUC on "
             "stdout)");
  std::string roc_scores;
  std::string roc_labels;
  std::string roc_out;
  roc_cmd->add_option("--scores", roc_scores,
                      "Filter trace file (beta0 column)")->required();
  roc_cmd->add_option("--labels", roc_labels,
                      "Label file from corrupt (anomalous column)")->required();
  roc_cmd->add_option("--out", roc_out, "Output ROC point file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  try {
    const Format format = parse_format(format_name);
    if (*simulate) {
      if (sim_n < 1) throw InvalidConfig("--n must be at least 1");
      IGParams(sim_mu, sim_lambda);  // range check
      if (sim_mu_end) IGParams(*sim_mu_end, sim_lambda);
      if (sim_lambda_end) IGParams(sim_mu, *sim_lambda_end);
      return run_simulate(sim_n, sim_mu, sim_lambda, sim_mu_end,
                          sim_lambda_end, sim_seed, sim_out);
    }
    if (*corrupt_cmd) {
      if (cor_p) cor_pm = cor_pf = *cor_p;
      if (cor_pm < 0.0 || cor_pm >= 1.0 || cor_pf < 0.0 || cor_pf >= 1.0) {
        throw InvalidConfig("corruption probabilities must lie in [0, 1)");
      }
      return run_corrupt(cor_in, cor_ibis, cor_pm, cor_pf, cor_seed,
                         cor_out_beats, cor_out_labels, format);
    }
    if (*filter_cmd) {
      const FilterConfig config = fil_flags.resolve();
      std::ifstream in = open_input(fil_in);
      if (fil_out.empty()) {
        RecordWriter writer(std::cout, format, kTraceColumns);
        run_filter_stream(in, fil_in, fil_ibis, config, fil_flags.seed_ibi,
                          writer);
      } else {
        std::ofstream out = open_output(fil_out);
        RecordWriter writer(out, format, kTraceColumns);
        run_filter_stream(in, fil_in, fil_ibis, config, fil_flags.seed_ibi,
                          writer);
      }
      return kExitOk;
    }
    if (*eval_cmd) {
      if (!(ev_window > 0.0)) throw InvalidConfig("--window must be positive");
      return run_eval(ev_clean, ev_corrupted, ev_flags.resolve(),
                      ev_flags.seed_ibi, ev_window, ev_out, format);
    }
    if (*roc_cmd) {
      return run_roc(roc_scores, roc_labels, roc_out, format);
    }
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  } catch (const InvalidConfig& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const EmptyInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  } catch (const SingleClass& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  } catch (const LengthMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  } catch (const NoOverlap& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformedInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
