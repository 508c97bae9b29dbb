// Command-line front end. Talks to the library only through sqsample.h.

#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sqsample/sqsample.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitIo = 3;

constexpr double kPi = 3.14159265358979323846;

// Exit code for a failed library call.
int exit_code(sq_status status) { return status == SQ_ERR_IO ? kExitIo : kExitInput; }

int report(const char* what, sq_status status) {
  std::fprintf(stderr, "error: %s: %s: %s\n", what, sq_status_string(status), sq_last_error());
  return exit_code(status);
}

// Shape options shared by `sample` and the metrics --params file. Option names
// double as config-file keys.
struct ShapeOptions {
  std::string kind = "se";
  std::vector<double> a{1.0, 1.0, 1.0};
  std::vector<double> eps{1.0, 1.0};
  std::vector<double> euler{0.0, 0.0, 0.0};
  std::vector<double> pos{0.0, 0.0, 0.0};
  std::vector<double> taper{0.0, 0.0};
  double bend = 0.0;
  bool degrees = false;
  CLI::Option* bend_opt = nullptr;

  void add_to(CLI::App& app) {
    app.add_option("--kind", kind, "se (superellipsoid) or sp (superparaboloid)")
        ->check(CLI::IsMember({"se", "sp"}))
        ->capture_default_str();
    app.add_option("--a", a, "scale a1,a2,a3")->delimiter(',')->expected(3);
    app.add_option("--eps", eps, "shape exponents e1,e2")->delimiter(',')->expected(2);
    app.add_option("--euler", euler, "ZYZ angles theta,phi,psi")->delimiter(',')->expected(3);
    app.add_option("--pos", pos, "position x,y,z")->delimiter(',')->expected(3);
    app.add_option("--taper", taper, "taper factors kx,ky in [-1,1]")->delimiter(',')->expected(2);
    bend_opt = app.add_option("--bend", bend, "bend radius k (>= a3); omit for no bending");
    app.add_flag("--degrees", degrees, "euler angles are in degrees");
  }

  sq_params to_params() const {
    sq_params p;
    sq_params_default(&p);
    p.kind = kind == "sp" ? SQ_SUPERPARABOLOID : SQ_SUPERELLIPSOID;
    p.a1 = a[0];
    p.a2 = a[1];
    p.a3 = a[2];
    p.eps1 = eps[0];
    p.eps2 = eps[1];
    const double unit = degrees ? kPi / 180.0 : 1.0;
    for (int i = 0; i < 3; ++i) {
      p.euler[i] = euler[i] * unit;
      p.position[i] = pos[i];
    }
    p.taper[0] = taper[0];
    p.taper[1] = taper[1];
    p.bend_enabled = bend_opt && bend_opt->count() > 0 ? 1 : 0;
    p.bend_k = bend;
    return p;
  }
};

// Prints one line per violated invariant; returns false when invalid.
bool check_params(const sq_params& p) {
  unsigned issues = 0;
  const sq_status status = sq_validate(&p, &issues);
  if (status == SQ_OK) return true;
  if (status != SQ_ERR_VALIDATION) {
    report("validation", status);
    return false;
  }
  std::fprintf(stderr, "error: invalid parameters: %s\n", sq_last_error());
  for (unsigned bit = 1; bit != 0 && bit <= issues; bit <<= 1) {
    if (issues & bit) std::fprintf(stderr, "  %s\n", sq_issue_name(bit));
  }
  return false;
}

// ---------------------------------------------------------------------------
// sample

struct SampleOptions {
  ShapeOptions shape;
  double spacing = 0.05;
  double theta_singular = 0.01;
  std::size_t max_samples = std::size_t{1} << 20;
  std::string naive;
  std::string format;
  std::string output = "-";
  std::string config;

  void add_to(CLI::App& app) {
    shape.add_to(app);
    app.add_option("--d", spacing, "target spacing D")->capture_default_str();
    app.add_option("--theta-singular", theta_singular, "near-pole switch angle")->capture_default_str();
    app.add_option("--max-samples", max_samples, "per-curve sample cap")->capture_default_str();
    app.add_option("--naive", naive, "uniform NxM parameter grid instead");
    app.add_option("--format", format, "ply, obj or csv (default: from -o, else ply)")
        ->check(CLI::IsMember({"ply", "obj", "csv"}, CLI::ignore_case));
    app.add_option("-o,--output", output, "output path, - for stdout")->capture_default_str();
  }
};

// CLI11 only reads config files on the top-level app, so the sample command
// parses its --config file into a scratch app with the same options and then
// copies over every value the command line left unset.
bool merge_sample_config(CLI::App& cmd, const std::string& path) {
  CLI::App file_app{"config"};
  SampleOptions scratch;
  scratch.add_to(file_app);
  file_app.allow_config_extras(CLI::config_extras_mode::error);
  file_app.set_config("--config-file", path, "", true);
  try {
    file_app.parse(std::vector<std::string>{});
    for (CLI::Option* from : file_app.get_options()) {
      if (from->count() == 0 || from->get_lnames().empty()) continue;
      CLI::Option* to = cmd.get_option_no_throw("--" + from->get_lnames().front());
      if (to == nullptr || to->count() > 0) continue;
      to->add_result(from->results());
      to->run_callback();
    }
  } catch (const CLI::Error& e) {
    std::fprintf(stderr, "error: --config %s: %s\n", path.c_str(), e.what());
    return false;
  }
  return true;
}

bool parse_naive(const std::string& text, std::size_t& n, std::size_t& m) {
  const auto x = text.find_first_of("xX");
  if (x == std::string::npos) return false;
  try {
    std::size_t used = 0;
    const std::string lhs = text.substr(0, x), rhs = text.substr(x + 1);
    n = std::stoul(lhs, &used);
    if (used != lhs.size()) return false;
    m = std::stoul(rhs, &used);
    return used == rhs.size();
  } catch (const std::exception&) {
    return false;
  }
}

std::optional<sq_format> format_from_name(std::string name) {
  for (auto& c : name) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (name == "ply") return SQ_FORMAT_PLY;
  if (name == "obj") return SQ_FORMAT_OBJ;
  if (name == "csv") return SQ_FORMAT_CSV;
  return std::nullopt;
}

int run_sample(const SampleOptions& opt) {
  const sq_params params = opt.shape.to_params();
  if (!check_params(params)) return kExitInput;

  // Explicit --format wins; otherwise the extension of -o; otherwise PLY.
  sq_format format = SQ_FORMAT_PLY;
  if (!opt.format.empty()) {
    format = *format_from_name(opt.format);
  } else if (const auto dot = opt.output.rfind('.'); opt.output != "-" && dot != std::string::npos) {
    if (auto f = format_from_name(opt.output.substr(dot + 1))) format = *f;
  }

  sq_cloud* cloud = nullptr;
  const auto start = std::chrono::steady_clock::now();
  sq_status status;
  if (!opt.naive.empty()) {
    std::size_t n = 0, m = 0;
    if (!parse_naive(opt.naive, n, m)) {
      std::fprintf(stderr, "error: --naive expects NxM, got '%s'\n", opt.naive.c_str());
      return kExitInput;
    }
    status = sq_generate_naive(&params, n, m, &cloud);
  } else {
    sq_config config;
    sq_config_default(&config, opt.spacing);
    config.theta_singular = opt.theta_singular;
    config.max_samples_per_curve = opt.max_samples;
    status = sq_generate(&params, &config, &cloud);
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (status != SQ_OK) return report("sampling failed", status);

  std::fprintf(stderr, "%zu points in %.3f ms\n", sq_cloud_size(cloud), ms);
  status = sq_cloud_write(cloud, format, opt.output.c_str());
  sq_cloud_free(cloud);
  if (status != SQ_OK) return report("writing output", status);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// metrics

struct MetricsOptions {
  std::vector<std::string> inputs;
  std::string params_file;
  bool csv = false;
};

// Reads shape keys from a key=value file; keys are the `sample` option names.
// Keys that only matter to sampling (d, format, ...) are ignored.
bool load_params_file(const std::string& path, sq_params& out) {
  CLI::App app{"params"};
  ShapeOptions shape;
  shape.add_to(app);
  app.allow_config_extras(CLI::config_extras_mode::ignore);
  app.set_config("--params-file", path, "", true);
  try {
    app.parse(std::vector<std::string>{});
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: --params %s: %s\n", path.c_str(), e.what());
    return false;
  }
  out = shape.to_params();
  return check_params(out);
}

void print_row(const char* key, double value) { std::printf("%-22s %.9g\n", key, value); }

int run_metrics(const MetricsOptions& opt) {
  sq_params params;
  const bool with_params = !opt.params_file.empty();
  if (with_params && !load_params_file(opt.params_file, params)) return kExitInput;

  std::vector<sq_cloud*> clouds;
  auto release = [&clouds] {
    for (auto* c : clouds) sq_cloud_free(c);
  };
  for (const auto& path : opt.inputs) {
    sq_cloud* cloud = nullptr;
    const sq_status status = sq_cloud_read(path.c_str(), &cloud);
    if (status != SQ_OK) {
      release();
      std::fprintf(stderr, "error: reading '%s': %s: %s\n", path.c_str(), sq_status_string(status),
                   sq_last_error());
      return kExitInput;
    }
    clouds.push_back(cloud);
  }

  sq_metrics m;
  sq_status status = sq_cloud_metrics(clouds[0], with_params ? &params : nullptr, &m);
  if (status != SQ_OK) {
    release();
    report("metrics", status);
    return kExitInput;
  }
  double directed = 0.0, symmetric = 0.0;
  if (clouds.size() == 2) {
    status = sq_cloud_distance(clouds[0], clouds[1], &directed, &symmetric);
    if (status != SQ_OK) {
      release();
      report("cloud distance", status);
      return kExitInput;
    }
  }
  release();

  const bool two = opt.inputs.size() == 2;
  if (opt.csv) {
    std::printf("points,nn_mean,nn_cv,nn_max_min_ratio%s%s\n",
                m.has_residual ? ",implicit_residual_max" : "",
                two ? ",cloud_distance,cloud_distance_symmetric" : "");
    std::printf("%zu,%.9g,%.9g,%.9g", m.point_count, m.nn_mean, m.nn_cv, m.nn_max_min_ratio);
    if (m.has_residual) std::printf(",%.9g", m.implicit_residual_max);
    if (two) std::printf(",%.9g,%.9g", directed, symmetric);
    std::printf("\n");
  } else {
    std::printf("%-22s %zu\n", "points", m.point_count);
    print_row("nn_mean", m.nn_mean);
    print_row("nn_cv", m.nn_cv);
    print_row("nn_max_min_ratio", m.nn_max_min_ratio);
    if (m.has_residual) print_row("implicit_residual_max", m.implicit_residual_max);
    if (two) {
      print_row("cloud_distance", directed);
      print_row("cloud_distance_sym", symmetric);
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

struct BenchOptions {
  std::string kind = "se";
  std::vector<double> eps;
  std::vector<double> spacings;
  unsigned reps = 0;
  bool full_grid = false;
  std::string output = "-";
};

void print_progress(const sq_bench_row* row, void*) {
  if (row->failed) {
    std::fprintf(stderr, "eps=%-5g D=%-6g failed\n", row->eps1, row->spacing);
  } else {
    std::fprintf(stderr, "eps=%-5g D=%-6g %8zu points %10.4f ms\n", row->eps1, row->spacing,
                 row->points, row->median_ms);
  }
}

int run_bench(const BenchOptions& opt) {
  const sq_kind kind = opt.kind == "sp" ? SQ_SUPERPARABOLOID : SQ_SUPERELLIPSOID;
  sq_bench* bench = nullptr;
  sq_status status;
  if (opt.eps.empty() && opt.spacings.empty()) {
    status = sq_bench_run_preset(kind, opt.full_grid ? 1 : 0, opt.reps, print_progress, nullptr, &bench);
  } else {
    // A missing axis falls back to the desk grid's values.
    std::vector<double> eps = opt.eps, spacings = opt.spacings;
    if (eps.empty())
      for (int i = 0; i < 10; ++i) eps.push_back(0.1 + 0.2 * i);
    if (spacings.empty()) spacings = {0.01, 0.02, 0.05, 0.1, 0.2};
    sq_bench_grid grid{};
    grid.kind = kind;
    grid.eps_values = eps.data();
    grid.eps_count = eps.size();
    grid.spacings = spacings.data();
    grid.spacing_count = spacings.size();
    grid.repetitions = opt.reps > 0 ? opt.reps : 31;
    grid.progress = print_progress;
    status = sq_bench_run(&grid, &bench);
  }
  if (status != SQ_OK) return report("bench", status);
  status = sq_bench_write_csv(bench, opt.output.c_str());
  sq_bench_free(bench);
  if (status != SQ_OK) return report("writing bench csv", status);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform point clouds on superellipsoids and superparaboloids"};
  app.set_version_flag("--version", std::string(sq_version()));
  app.require_subcommand(1);

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "sample a superquadric and write a point cloud");
  sample.add_to(*sample_cmd);
  sample_cmd->add_option("--config", sample.config,
                         "key=value file with the same keys; command-line flags win");

  MetricsOptions metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "spacing statistics for one or two clouds");
  metrics_cmd->add_option("inputs", metrics.inputs, "A [B]")->required()->expected(1, 2);
  metrics_cmd->add_option("--params", metrics.params_file,
                          "key=value shape file; adds the implicit residual");
  metrics_cmd->add_flag("--csv", metrics.csv, "CSV instead of aligned text");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "time sampling over an (eps, D) grid");
  bench_cmd->add_option("--kind", bench.kind)->check(CLI::IsMember({"se", "sp"}))->capture_default_str();
  bench_cmd->add_option("--eps", bench.eps, "comma-separated eps values")->delimiter(',');
  bench_cmd->add_option("--d", bench.spacings, "comma-separated spacings")->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "repetitions per cell");
  bench_cmd->add_flag("--full-grid,--full-paper-grid", bench.full_grid,
                      "eps step 0.05, D step 0.001, 1000 repetitions");
  bench_cmd->add_option("-o,--output", bench.output, "CSV path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*sample_cmd) {
    if (!sample.config.empty() && !merge_sample_config(*sample_cmd, sample.config)) return kExitInput;
    return run_sample(sample);
  }
  if (*metrics_cmd) return run_metrics(metrics);
  return run_bench(bench);
}
