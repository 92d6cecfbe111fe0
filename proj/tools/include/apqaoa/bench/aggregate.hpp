#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "apqaoa/bench/records.hpp"

namespace apqaoa::bench {

struct AggregateRow {
  int n = 0;
  std::string strategy;
  std::size_t count = 0;
  double cost_mean = 0.0;
  double cost_median = 0.0;
  double cost_q1 = 0.0;
  double cost_q3 = 0.0;
  double prob_mean = 0.0;
  double prob_median = 0.0;
};

/// Linearly interpolated quantile of unsorted data, q in [0, 1].
double quantile(std::vector<double> values, double q);

/// Per-(n, strategy) statistics over successful records, sorted by n then
/// strategy name. Throws std::invalid_argument if no record succeeded.
std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records);

void write_aggregate_csv(std::ostream& out, const std::vector<AggregateRow>& rows);
/// n,strategy,instance,target_prob,baseline_prob
void write_probability_csv(std::ostream& out, const std::vector<RunRecord>& records);
/// n,strategy,instance,cost_evals,stage_evals (stage costs joined by ";")
void write_cost_csv(std::ostream& out, const std::vector<RunRecord>& records);
/// n,strategy,instance,d,theta,tau for every theta_tau record
void write_params_csv(std::ostream& out, const std::vector<RunRecord>& records);

/// Writes aggregate.csv, probability.csv, cost.csv and params.csv into `dir`.
void write_figure_data(const std::string& dir, const std::vector<RunRecord>& records);

}  // namespace apqaoa::bench
