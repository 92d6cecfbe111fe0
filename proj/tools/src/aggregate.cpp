#include "apqaoa/bench/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace apqaoa::bench {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of empty data");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

namespace {

double mean(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / v.size(); }

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records) {
  std::map<std::pair<int, std::string>, std::pair<std::vector<double>, std::vector<double>>> groups;
  for (const RunRecord& r : records) {
    if (!r.ok()) continue;
    auto& g = groups[{r.n, r.strategy}];
    g.first.push_back(static_cast<double>(r.cost_evals));
    g.second.push_back(r.target_prob);
  }
  if (groups.empty()) throw std::invalid_argument("no successful records to aggregate");

  std::vector<AggregateRow> rows;
  for (const auto& [key, g] : groups) {
    AggregateRow row;
    row.n = key.first;
    row.strategy = key.second;
    row.count = g.first.size();
    row.cost_mean = mean(g.first);
    row.cost_median = quantile(g.first, 0.5);
    row.cost_q1 = quantile(g.first, 0.25);
    row.cost_q3 = quantile(g.first, 0.75);
    row.prob_mean = mean(g.second);
    row.prob_median = quantile(g.second, 0.5);
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "n,strategy,count,cost_mean,cost_median,cost_q1,cost_q3,prob_mean,prob_median\n";
  out.precision(10);
  for (const AggregateRow& r : rows) {
    out << r.n << ',' << r.strategy << ',' << r.count << ',' << r.cost_mean << ',' << r.cost_median << ','
        << r.cost_q1 << ',' << r.cost_q3 << ',' << r.prob_mean << ',' << r.prob_median << '\n';
  }
}

void write_probability_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "n,strategy,instance,target_prob,baseline_prob\n";
  out.precision(10);
  for (const RunRecord& r : records) {
    if (!r.ok()) continue;
    out << r.n << ',' << r.strategy << ',' << r.instance << ',' << r.target_prob << ',' << r.baseline_prob << '\n';
  }
}

void write_cost_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "n,strategy,instance,cost_evals,stage_evals\n";
  for (const RunRecord& r : records) {
    if (!r.ok()) continue;
    out << r.n << ',' << r.strategy << ',' << r.instance << ',' << r.cost_evals << ',';
    for (std::size_t i = 0; i < r.stages.size(); ++i) out << (i ? ";" : "") << r.stages[i].evals;
    out << '\n';
  }
}

void write_params_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "n,strategy,instance,d,theta,tau\n";
  out.precision(12);
  for (const RunRecord& r : records) {
    if (!r.ok() || r.native_space != "theta_tau") continue;
    const std::size_t len = r.native_params.size() / 2;
    for (std::size_t d = 0; d < len; ++d) {
      out << r.n << ',' << r.strategy << ',' << r.instance << ',' << d + 1 << ',' << r.native_params[d] << ','
          << r.native_params[len + d] << '\n';
    }
  }
}

void write_figure_data(const std::string& dir, const std::vector<RunRecord>& records) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto open = [&](const char* name) {
    std::ofstream f(fs::path(dir) / name);
    if (!f) throw std::runtime_error("cannot write " + (fs::path(dir) / name).string());
    return f;
  };
  {
    auto f = open("aggregate.csv");
    write_aggregate_csv(f, aggregate(records));
  }
  {
    auto f = open("probability.csv");
    write_probability_csv(f, records);
  }
  {
    auto f = open("cost.csv");
    write_cost_csv(f, records);
  }
  {
    auto f = open("params.csv");
    write_params_csv(f, records);
  }
}

}  // namespace apqaoa::bench
