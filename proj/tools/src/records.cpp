#include "apqaoa/bench/records.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace apqaoa::bench {

using nlohmann::json;

json to_json(const RunRecord& r) {
  json stages = json::array();
  for (const StageReport& s : r.stages) {
    stages.push_back({{"label", s.label},
                      {"num_params", s.num_params},
                      {"evals", s.evals},
                      {"iterations", s.iterations},
                      {"best_value", s.best_value},
                      {"stop_reason", s.stop_reason},
                      {"converged", s.converged}});
  }
  json j = {{"schema_version", r.schema_version},
            {"artifact_version", r.artifact_version},
            {"config_hash", r.config_hash},
            {"n", r.n},
            {"m", r.m},
            {"k", r.k},
            {"instance", r.instance},
            {"seed", r.seed},
            {"model", r.model},
            {"satisfiable", r.satisfiable},
            {"interpretations", r.interpretations},
            {"strategy", r.strategy},
            {"p", r.p},
            {"normalization", r.normalization},
            {"G_E", r.G_E},
            {"G_0", r.G_0 ? json(*r.G_0) : json(nullptr)},
            {"status", r.status},
            {"error", r.error},
            {"expectation", r.expectation},
            {"target_prob", r.target_prob},
            {"baseline_prob", r.baseline_prob},
            {"cost_evals", r.cost_evals},
            {"wall_time_s", r.wall_time_s},
            {"converged", r.converged},
            {"native_space", r.native_space},
            {"native_params", r.native_params},
            {"gamma", r.gamma},
            {"beta", r.beta},
            {"stages", stages}};
  return j;
}

RunRecord record_from_json(const json& j) {
  RunRecord r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version != kSchemaVersion) {
    throw std::runtime_error("unsupported results schema version " + std::to_string(r.schema_version));
  }
  r.artifact_version = j.at("artifact_version").get<std::string>();
  r.config_hash = j.at("config_hash").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.k = j.at("k").get<int>();
  r.instance = j.at("instance").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.model = j.at("model").get<std::string>();
  r.satisfiable = j.at("satisfiable").get<bool>();
  r.interpretations = j.at("interpretations").get<std::uint64_t>();
  r.strategy = j.at("strategy").get<std::string>();
  r.p = j.at("p").get<int>();
  r.normalization = j.at("normalization").get<std::string>();
  r.G_E = j.at("G_E").get<double>();
  if (!j.at("G_0").is_null()) r.G_0 = j.at("G_0").get<double>();
  r.status = j.at("status").get<std::string>();
  r.error = j.value("error", "");
  r.expectation = j.at("expectation").get<double>();
  r.target_prob = j.at("target_prob").get<double>();
  r.baseline_prob = j.at("baseline_prob").get<double>();
  r.cost_evals = j.at("cost_evals").get<std::uint64_t>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  r.converged = j.at("converged").get<bool>();
  r.native_space = j.at("native_space").get<std::string>();
  r.native_params = j.at("native_params").get<std::vector<double>>();
  r.gamma = j.at("gamma").get<std::vector<double>>();
  r.beta = j.at("beta").get<std::vector<double>>();
  for (const json& s : j.at("stages")) {
    StageReport st;
    st.label = s.at("label").get<std::string>();
    st.num_params = s.at("num_params").get<int>();
    st.evals = s.at("evals").get<std::uint64_t>();
    st.iterations = s.at("iterations").get<int>();
    st.best_value = s.at("best_value").get<double>();
    st.stop_reason = s.at("stop_reason").get<std::string>();
    st.converged = s.at("converged").get<bool>();
    r.stages.push_back(std::move(st));
  }
  return r;
}

std::vector<RunRecord> read_records(std::istream& in) {
  std::vector<RunRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(record_from_json(json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("results line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

std::vector<RunRecord> read_records_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open results file " + path);
  return read_records(in);
}

std::vector<RunKey> canonical_runs(const ExperimentConfig& config) {
  std::vector<RunKey> keys;
  for (int n : config.n_values) {
    for (int i = 0; i < config.suite_size; ++i) {
      for (int s = 0; s < static_cast<int>(config.strategies.size()); ++s) keys.push_back({n, i, s});
    }
  }
  return keys;
}

namespace {

RunReport dispatch(const ExperimentConfig& config, const Problem& problem, const SuiteInstance& inst,
                   StrategyKind kind, const std::optional<TqaPrior>& prior) {
  const int p = config.depth_for(inst.n);
  EvalCounter counter;
  RunReport report;
  switch (kind) {
    case StrategyKind::QaaInit: report = run_qaa_init(problem, p); break;
    case StrategyKind::QaaSetting: report = qaa_setting(problem, p, config.strategy, counter); break;
    case StrategyKind::Tqa:
      if (!prior) throw std::logic_error("tqa run without a prior");
      report = tqa_run(problem, p, *prior, config.strategy, counter);
      break;
    case StrategyKind::Interp: {
      Rng rng(strategy_seed(inst.spec.seed, kind));
      report = interp_heuristic(problem, p, rng, config.strategy, counter);
      break;
    }
    case StrategyKind::Fourier: {
      Rng rng(strategy_seed(inst.spec.seed, kind));
      report = fourier_heuristic(problem, p, rng, config.strategy, counter);
      break;
    }
    case StrategyKind::ApBased: report = ap_setting(problem, p, config.strategy, counter); break;
  }
  if (counter.count() != report.cost_evals) {
    throw std::logic_error("evaluation audit failed: counter " + std::to_string(counter.count()) + " vs reported " +
                           std::to_string(report.cost_evals));
  }
  return report;
}

}  // namespace

RunRecord execute_run(const ExperimentConfig& config, const SuiteInstance& inst, StrategyKind kind,
                      const std::optional<TqaPrior>& prior) {
  RunRecord r;
  r.artifact_version = artifact_version();
  r.config_hash = config_hash(config);
  r.n = inst.n;
  r.m = inst.spec.m;
  r.k = inst.spec.k;
  r.instance = inst.index;
  r.seed = inst.spec.seed;
  r.model = to_string(inst.spec.kind);
  r.interpretations = inst.generated.interpretations.size();
  r.satisfiable = r.interpretations > 0;
  r.strategy = to_string(kind);
  r.p = config.depth_for(inst.n);
  r.normalization = normalization_name(config.normalization);
  try {
    const Problem problem = Problem::from_formula(inst.generated.formula, config.normalization, config.c0);
    r.G_E = problem.norm.G_E;
    r.G_0 = problem.norm.G_0;
    r.baseline_prob = static_cast<double>(problem.table.maximizers().size()) / static_cast<double>(problem.table.size());
    const RunReport rep = dispatch(config, problem, inst, kind, prior);
    r.expectation = rep.expectation;
    r.target_prob = rep.target_prob;
    r.cost_evals = rep.cost_evals;
    r.wall_time_s = rep.wall_time_s;
    r.converged = rep.converged;
    r.native_space = to_string(rep.native_space);
    r.native_params = rep.native_params;
    r.gamma = rep.final_params.gamma;
    r.beta = rep.final_params.beta;
    r.stages = rep.stages;
  } catch (const std::exception& e) {
    r.status = "error";
    r.error = e.what();
  }
  return r;
}

std::string tqa_prior_path(const std::string& dir, int n) {
  return (std::filesystem::path(dir) / ("tqa_prior_n" + std::to_string(n) + ".json")).string();
}

TqaPrior compute_tqa_prior(const ExperimentConfig& config, int n) {
  return tqa_precompute(config.model_for(n, tqa_template_seed(config.base_seed, n)), config.tqa_samples,
                        config.depth_for(n), config.normalization, config.c0, config.strategy);
}

void write_tqa_prior(const std::string& path, const ExperimentConfig& config, int n, const TqaPrior& prior) {
  const json j = {{"schema_version", kSchemaVersion},
                  {"artifact_version", artifact_version()},
                  {"config_hash", config_hash(config)},
                  {"n", n},
                  {"p", config.depth_for(n)},
                  {"theta_bar", prior.theta_bar},
                  {"rho_bar", prior.rho_bar},
                  {"samples_used", prior.samples_used},
                  {"evals", prior.evals}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

std::optional<TqaPrior> read_tqa_prior(const std::string& path, const ExperimentConfig& config, int n) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const json j = json::parse(in);
  if (j.at("config_hash").get<std::string>() != config_hash(config) || j.at("n").get<int>() != n) {
    return std::nullopt;
  }
  TqaPrior prior;
  prior.theta_bar = j.at("theta_bar").get<double>();
  prior.rho_bar = j.at("rho_bar").get<double>();
  prior.samples_used = j.at("samples_used").get<int>();
  prior.evals = j.at("evals").get<std::uint64_t>();
  return prior;
}

TqaPrior tqa_prior_for(const ExperimentConfig& config, int n) {
  if (!config.tqa_prior_dir.empty()) {
    if (auto loaded = read_tqa_prior(tqa_prior_path(config.tqa_prior_dir, n), config, n)) return *loaded;
  }
  return compute_tqa_prior(config, n);
}

SuiteSummary run_suite(const ExperimentConfig& config, const std::function<void(const RunRecord&)>& sink) {
  config.validate();
  const std::vector<RunKey> keys = canonical_runs(config);

  // A failed pre-computation turns every TQA run at that n into an error
  // record rather than aborting the suite.
  std::map<int, TqaPrior> priors;
  std::map<int, std::string> prior_errors;
  for (StrategyKind s : config.strategies) {
    if (s != StrategyKind::Tqa) continue;
    for (int n : config.n_values) {
      try {
        priors.emplace(n, tqa_prior_for(config, n));
      } catch (const std::exception& e) {
        prior_errors.emplace(n, std::string("tqa pre-computation failed: ") + e.what());
      }
    }
  }

  std::vector<std::optional<RunRecord>> done(keys.size());
  std::size_t next_to_emit = 0;
  SuiteSummary summary;
  std::mutex mu;
  std::atomic<std::size_t> next_key{0};

  // Instances are generated once per (n, index) by the worker that picks up
  // the first strategy of that instance; the remaining strategies of the same
  // instance run in that worker too.
  const std::size_t per_instance = config.strategies.size();
  const std::size_t instances = keys.size() / per_instance;

  auto worker = [&] {
    for (;;) {
      const std::size_t slot = next_key.fetch_add(1);
      if (slot >= instances) return;
      const RunKey& first = keys[slot * per_instance];
      std::optional<SuiteInstance> inst;
      std::string gen_error;
      try {
        inst = make_instance(config, first.n, first.instance);
      } catch (const std::exception& e) {
        gen_error = e.what();
      }
      for (std::size_t s = 0; s < per_instance; ++s) {
        const StrategyKind kind = config.strategies[s];
        RunRecord rec;
        if (inst) {
          std::optional<TqaPrior> prior;
          if (auto it = priors.find(first.n); it != priors.end()) prior = it->second;
          rec = execute_run(config, *inst, kind, prior);
          if (kind == StrategyKind::Tqa && !prior && prior_errors.count(first.n)) {
            rec.error = prior_errors.at(first.n);
          }
        } else {
          rec.artifact_version = artifact_version();
          rec.config_hash = config_hash(config);
          rec.n = first.n;
          rec.instance = first.instance;
          rec.seed = instance_seed(config.base_seed, first.n, first.instance);
          rec.model = to_string(config.model);
          rec.strategy = to_string(kind);
          rec.status = "error";
          rec.error = gen_error;
        }
        std::lock_guard<std::mutex> lock(mu);
        done[slot * per_instance + s] = std::move(rec);
        while (next_to_emit < done.size() && done[next_to_emit]) {
          sink(*done[next_to_emit]);
          ++summary.runs;
          if (!done[next_to_emit]->ok()) ++summary.failures;
          done[next_to_emit].reset();
          ++next_to_emit;
        }
      }
    }
  };

  const int threads = std::min<int>(config.jobs, static_cast<int>(instances));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return summary;
}

}  // namespace apqaoa::bench
