#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fris/errors.hpp"
#include "fris/harness/config.hpp"
#include "fris/harness/csv.hpp"
#include "fris/harness/sweep.hpp"

namespace {

using namespace fris;
using namespace fris::harness;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;

struct Flags {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  std::optional<int> workers;
  std::optional<std::string> policy;
  std::string out;
  bool root = false;
};

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ExperimentConfig resolve(const Flags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig::defaults() : load_config(f.config);
  if (f.seed) c.seed = *f.seed;
  if (f.trials) c.trials = *f.trials;
  if (f.workers) c.workers = *f.workers;
  if (!f.out.empty()) c.out = f.out;
  c.validate();
  return c;
}

template <typename Rows>
std::size_t count_failed(const Rows& rows) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.status == "ok" ? 0 : 1;
  return n;
}

int run(const std::string& command, const Flags& flags, int argc, char** argv) {
  const auto started = utc_now();
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig config = resolve(flags);

  Table table;
  std::size_t failed = 0;
  nlohmann::json extra = nlohmann::json::object();
  if (command == "sweep-asc" || command == "sweep-sop" || command == "sweep-size") {
    if (flags.policy) apply_policy_override(config, parse_policy(*flags.policy));
    const auto rows = command == "sweep-size" ? run_size_sweep(config) : run_snr_sweep(config);
    failed = count_failed(rows);
    table = sweep_table(rows);
  } else if (command == "validate-fits") {
    const Policy policy = flags.policy ? parse_policy(*flags.policy) : Policy::kFixedUniform;
    if (policy != Policy::kFixedUniform && policy != Policy::kFixedRandom) {
      throw ConfigError("validate-fits needs a fixed policy (fixed-uniform | fixed-random)");
    }
    const auto checks = run_fit_checks(config, policy);
    failed = count_failed(checks);
    table = fit_table(checks, config.ks_threshold);
  } else if (command == "validate-bounds") {
    if (flags.policy) apply_policy_override(config, parse_policy(*flags.policy));
    const auto checks = run_bound_checks(config);
    failed = count_failed(checks);
    table = bound_table(checks);
  } else if (command == "dump-correlation") {
    const auto c = build_correlation(config.surface());
    table = correlation_table(c, flags.root);
    extra["correlation"] = {{"size", c.size()},
                            {"rank", c.rank},
                            {"eigen_floor", c.eigen_floor},
                            {"clamped_mass", c.clamped_mass},
                            {"sqrt_residual", c.sqrt_residual}};
  }

  if (config.out.empty()) {
    write_csv(std::cout, table);
  } else {
    write_csv_file(config.out, table);
    nlohmann::json argv_json = nlohmann::json::array();
    for (int i = 0; i < argc; ++i) argv_json.push_back(argv[i]);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    nlohmann::json manifest = {{"subcommand", command},
                                {"argv", argv_json},
                                {"version", code_version()},
                                {"started_utc", started},
                                {"elapsed_seconds", elapsed},
                                {"rows", table.rows.size()},
                                {"failed_rows", failed},
                                {"config", config_to_json(config)}};
    manifest.update(extra);
    write_manifest(config.out, manifest);
  }
  if (failed > 0) {
    std::cerr << "fris_sim: " << failed << " row(s) failed, see the status column\n";
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FRIS secrecy simulator"};
  app.require_subcommand(1);
  Flags flags;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"sweep-asc", "ASC versus Bob's mean SNR"},
      {"sweep-sop", "SOP versus Bob's mean SNR"},
      {"sweep-size", "ASC and SOP versus surface size at fixed M_ON"},
      {"validate-fits", "Moment and KS checks of the Gamma / Exponential fits"},
      {"validate-bounds", "Closed forms against numerical references"},
      {"dump-correlation", "Write the surface correlation matrix"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--config", flags.config, "JSON configuration file")->check(CLI::ExistingFile);
    sub->add_option("--seed", flags.seed, "Base seed (u64)");
    sub->add_option("--trials", flags.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    sub->add_option("--workers", flags.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--policy", flags.policy, "greedy | fixed-uniform | fixed-random | conventional");
    sub->add_option("--out", flags.out, "Output CSV path (stdout if omitted)");
    if (name == "dump-correlation") sub->add_flag("--root", flags.root, "Dump J^{1/2} instead of J");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, flags, argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "fris_sim: config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "fris_sim: numeric error: " << e.what() << '\n';
    return kExitNumeric;
  }
}
