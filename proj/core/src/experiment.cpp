#include "hriot/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "hriot/fog_tree.hpp"

namespace hriot {

std::string format_double(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
  return buf;
}

std::string format_optional(std::optional<double> value, int precision) {
  return value ? format_double(*value, precision) : "na";
}

RunResult run_one(const ScenarioConfig& config, Protocol protocol,
                  std::uint64_t seed) {
  Simulation sim(config, protocol, seed);
  RunResult result;
  result.protocol = protocol;
  result.seed = seed;

  while (!sim.finished()) {
    sim.run_round();
    const MetricsLedger& led = sim.ledger();
    RoundRow row;
    row.protocol = protocol;
    row.seed = seed;
    row.round = sim.round() - 1;
    row.alive = led.alive_curve.back();
    row.sent = led.sent;
    row.delivered = led.delivered;
    result.rounds.push_back(row);
    result.round_pdr.push_back(
        led.sent ? double(led.delivered) / double(led.sent)
                 : std::numeric_limits<double>::quiet_NaN());
    result.round_mean_delay_s.push_back(
        led.delivered ? led.sum_delay_s / double(led.delivered)
                      : std::numeric_limits<double>::quiet_NaN());
    result.round_mean_response_s.push_back(
        led.delivered ? led.sum_response_s / double(led.delivered)
                      : std::numeric_limits<double>::quiet_NaN());
    result.round_energy_j.push_back(led.energy_consumed_j);
  }
  result.summary = finalize_metrics(sim.ledger());
  return result;
}

namespace {

std::string nan_as_na(double v, int precision) {
  return std::isnan(v) ? "na" : format_double(v, precision);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path.string());
  out << content;
  if (!out) throw std::ios_base::failure("failed writing " + path.string());
}

std::string tree_report(const ScenarioConfig& config) {
  // Build the same tree a run would use, for the report's parent list.
  Simulation sim(config, Protocol::HRIOT, config.seed);
  const FogTree& tree = sim.tree();
  std::ostringstream out;
  out << "fog tree (root = cloud node " << tree.root << ", branching "
      << tree.branching << ")\n";
  for (NodeId fog : tree.order) {
    out << "  fog " << fog << " -> parent " << tree.parent.at(fog) << " (depth "
        << tree.depth.at(fog) << ")\n";
  }
  return out.str();
}

}  // namespace

std::vector<RunResult> run_experiment(const ScenarioConfig& config,
                                      const std::vector<Protocol>& protocols,
                                      const std::vector<std::uint64_t>& seeds,
                                      const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  // Fail on an unwritable destination before simulating anything.
  {
    std::ofstream probe(out_dir / "rounds.csv", std::ios::binary);
    if (!probe) {
      throw std::ios_base::failure("cannot write into " + out_dir.string());
    }
  }

  std::vector<RunResult> results;
  for (Protocol protocol : protocols) {
    for (std::uint64_t seed : seeds) {
      results.push_back(run_one(config, protocol, seed));
    }
  }
  std::sort(results.begin(), results.end(), [](const RunResult& a, const RunResult& b) {
    const std::string pa = protocol_name(a.protocol);
    const std::string pb = protocol_name(b.protocol);
    if (pa != pb) return pa < pb;
    return a.seed < b.seed;
  });

  std::ostringstream rounds_csv;
  rounds_csv << "protocol,seed,round,alive,sent,delivered,pdr,mean_delay_s,"
                "mean_response_s,energy_j\n";
  for (const RunResult& r : results) {
    for (std::size_t i = 0; i < r.rounds.size(); ++i) {
      const RoundRow& row = r.rounds[i];
      rounds_csv << protocol_name(row.protocol) << ',' << row.seed << ','
                 << row.round << ',' << row.alive << ',' << row.sent << ','
                 << row.delivered << ',' << nan_as_na(r.round_pdr[i], 6) << ','
                 << nan_as_na(r.round_mean_delay_s[i], 9) << ','
                 << nan_as_na(r.round_mean_response_s[i], 9) << ','
                 << format_double(r.round_energy_j[i], 9) << '\n';
    }
  }

  std::ostringstream summary_csv;
  summary_csv << "protocol,seed,pdr,mean_delay_s,mean_response_s,first_death_round\n";
  for (const RunResult& r : results) {
    summary_csv << protocol_name(r.protocol) << ',' << r.seed << ','
                << format_optional(r.summary.pdr, 6) << ','
                << format_optional(r.summary.mean_delay_s, 9) << ','
                << format_optional(r.summary.mean_response_s, 9) << ',';
    if (r.summary.first_node_death_round) {
      summary_csv << *r.summary.first_node_death_round;
    } else {
      summary_csv << "none";
    }
    summary_csv << '\n';
  }

  std::ostringstream report;
  report << "hriot-sim experiment report\n\n";
  report << "effective configuration:\n";
  {
    ScenarioConfig echo = config;
    echo.validate();
    std::istringstream cfg(serialize_config(echo));
    std::string line;
    while (std::getline(cfg, line)) report << "  " << line << "\n";
  }
  report << "\n" << tree_report(config) << "\n";
  report << "runs:\n";
  for (const RunResult& r : results) {
    report << "  " << protocol_name(r.protocol) << " seed " << r.seed << ": sent "
           << r.summary.sent << ", delivered " << r.summary.delivered << ", pdr "
           << format_optional(r.summary.pdr, 6) << ", mean delay "
           << format_optional(r.summary.mean_delay_s, 9) << " s, mean response "
           << format_optional(r.summary.mean_response_s, 9) << " s, first death ";
    if (r.summary.first_node_death_round) {
      report << *r.summary.first_node_death_round;
    } else {
      report << "none";
    }
    report << ", energy " << format_double(r.summary.energy_consumed_j, 9) << " J\n";
  }

  write_file(out_dir / "rounds.csv", rounds_csv.str());
  write_file(out_dir / "summary.csv", summary_csv.str());
  write_file(out_dir / "report.txt", report.str());
  return results;
}

}  // namespace hriot
