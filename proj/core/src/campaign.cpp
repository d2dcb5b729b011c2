#include "etmof/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "etmof/dynamics.hpp"
#include "etmof/io.hpp"
#include "etmof/rng.hpp"

namespace etmof {
namespace {

std::string trim(const std::string& s) {
  const std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  return out;
}

std::filesystem::path run_dir(const std::filesystem::path& root, int instance,
                              const std::string& optimizer, std::uint64_t seed) {
  return root / "runs" / ("ETMOF" + std::to_string(instance)) / optimizer /
         std::to_string(seed);
}

std::string csv_value(double v) { return format_double(v); }

} // namespace

CampaignConfig parse_campaign_config(const std::string& text) {
  CampaignConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  OptimizerSpec* current = nullptr;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      if (section.rfind("optimizer", 0) == 0) {
        OptimizerSpec spec;
        spec.name = trim(section.substr(9));
        if (spec.name.empty()) spec.name = "optimizer" + std::to_string(cfg.optimizers.size());
        cfg.optimizers.push_back(spec);
        current = &cfg.optimizers.back();
      } else {
        current = nullptr;
      }
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("campaign config: expected 'key = value', got: " + t);
    }
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (section == "campaign") {
      if (key == "master_seed") cfg.master_seed = std::stoull(value);
      else if (key == "runs") cfg.runs = std::stoi(value);
      else if (key == "output") cfg.output = value;
      else if (key == "workers") cfg.workers = std::stoi(value);
      else if (key == "budget") cfg.budget_override = std::stoll(value);
      else throw std::runtime_error("campaign config: unknown key " + key);
    } else if (section == "instances") {
      if (key == "ids") {
        for (const std::string& id : split(value, ',')) {
          if (!id.empty()) cfg.instances.push_back(std::stoi(id));
        }
      } else {
        throw std::runtime_error("campaign config: unknown key " + key);
      }
    } else if (current != nullptr) {
      if (key == "mode") {
        if (value == "transfer") current->mode = SolverMode::Transfer;
        else if (value == "independent") current->mode = SolverMode::Independent;
        else throw std::runtime_error("campaign config: unknown mode " + value);
      } else if (key == "population") current->config.population = std::stoi(value);
      else if (key == "dynamic_population") current->config.dynamic_population = std::stoi(value);
      else if (key == "rmp") current->config.rmp = std::stod(value);
      else if (key == "sbx_index") current->config.sbx_index = std::stod(value);
      else if (key == "mutation_index") current->config.mutation_index = std::stod(value);
      else if (key == "mutation_rate") current->config.mutation_rate = std::stod(value);
      else if (key == "budget") current->config.budget_per_task = std::stoll(value);
      else throw std::runtime_error("campaign config: unknown key " + key);
    } else {
      throw std::runtime_error("campaign config: key outside a section: " + key);
    }
  }
  if (cfg.instances.empty()) throw std::runtime_error("campaign config: no instances");
  if (cfg.optimizers.empty()) throw std::runtime_error("campaign config: no optimizers");
  if (cfg.runs < 1) throw std::runtime_error("campaign config: runs must be >= 1");
  return cfg;
}

CampaignConfig load_campaign_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open campaign config: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_campaign_config(buf.str());
}

std::uint64_t derive_run_seed(std::uint64_t master_seed, int instance_id,
                              const std::string& optimizer_name, int run_index) {
  std::uint64_t h = mix64(master_seed);
  h = hash_combine(h, static_cast<std::uint64_t>(instance_id));
  h = hash_combine(h, fnv1a64(optimizer_name));
  h = hash_combine(h, static_cast<std::uint64_t>(run_index));
  return h;
}

const ReferenceFront& ReferenceFrontCache::front_for(const TaskSpec& task,
                                                     int change_index) {
  const std::string key = std::to_string(task.instance_id) + ":" +
                          std::to_string(task.task_index) + ":" +
                          std::to_string(change_index);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = fronts_.find(key);
  if (it != fronts_.end()) return it->second;
  ReferenceFront front =
      task.is_dynamic()
          ? dynamic_front(task,
                          static_cast<double>(std::max(change_index, 0)) /
                              task.dynamics->severity,
                          default_front_size(task.m))
          : sample_reference_front(task.shape, task.m, default_front_size(task.m));
  return fronts_.emplace(key, std::move(front)).first->second;
}

void write_run_record(const std::filesystem::path& dir, const RunRecord& rec,
                      const std::string& optimizer_name, int run_index,
                      const MultiTaskProblem& problem) {
  HeaderFields meta;
  meta.emplace_back("instance", std::to_string(rec.instance_id));
  meta.emplace_back("optimizer", optimizer_name);
  meta.emplace_back("mode", std::string(solver_mode_tag(rec.mode)));
  meta.emplace_back("run_index", std::to_string(run_index));
  meta.emplace_back("seed", std::to_string(rec.config.seed));
  meta.emplace_back("population", std::to_string(rec.config.population));
  meta.emplace_back("dynamic_population", std::to_string(rec.config.dynamic_population));
  meta.emplace_back("rmp", format_double(rec.config.rmp));
  meta.emplace_back("sbx_index", format_double(rec.config.sbx_index));
  meta.emplace_back("mutation_index", format_double(rec.config.mutation_index));
  meta.emplace_back("mutation_rate", format_double(rec.config.mutation_rate));
  meta.emplace_back("budget", std::to_string(rec.budget));
  meta.emplace_back("tasks", std::to_string(rec.tasks.size()));
  meta.emplace_back("changes", std::to_string(rec.changes));
  meta.emplace_back("cross_task_matings", std::to_string(rec.cross_task_matings));
  for (std::size_t k = 0; k < rec.tasks.size(); ++k) {
    meta.emplace_back("evals_T" + std::to_string(k + 1),
                      std::to_string(rec.tasks[k].evaluations));
    meta.emplace_back("audit_evals_T" + std::to_string(k + 1),
                      std::to_string(problem.eval_count(static_cast<int>(k + 1))));
  }
  write_key_values(dir / "meta", meta);

  for (std::size_t k = 0; k < rec.tasks.size(); ++k) {
    const std::filesystem::path tdir = dir / ("T" + std::to_string(k + 1));
    const auto& task = rec.tasks[k];
    HeaderFields header;
    header.emplace_back("instance", std::to_string(rec.instance_id));
    header.emplace_back("task", std::to_string(k + 1));
    write_front_file(tdir / "final.front", task.final_front, header);
    for (const auto& cp : task.checkpoints) {
      HeaderFields h = header;
      h.emplace_back("evaluations", std::to_string(cp.evaluations));
      write_front_file(tdir / ("checkpoint_" + std::to_string(cp.percent) + ".front"),
                       cp.points, h);
    }
    for (std::size_t c = 0; c < task.change_fronts.size(); ++c) {
      write_front_file(tdir / ("change_" + std::to_string(c) + ".front"),
                       task.change_fronts[c], header);
    }
  }
}

std::vector<MetricRow> score_run(const RunRecord& rec, const MultiTaskProblem& problem,
                                 const std::string& optimizer_name, int run_index,
                                 ReferenceFrontCache& cache) {
  std::vector<MetricRow> rows;
  for (int k = 1; k <= problem.task_count(); ++k) {
    const TaskSpec& task = problem.task(k);
    const auto& result = rec.tasks[static_cast<std::size_t>(k - 1)];
    MetricRow row;
    row.optimizer = optimizer_name;
    row.instance = rec.instance_id;
    row.task = k;
    row.run = run_index;
    row.seed = rec.config.seed;
    if (task.is_dynamic()) {
      std::vector<double> series;
      for (std::size_t c = 0; c < result.change_fronts.size(); ++c) {
        series.push_back(
            igd(result.change_fronts[c], cache.front_for(task, static_cast<int>(c))));
      }
      row.metric = "migd";
      row.value = migd(series, static_cast<int>(series.size()));
    } else {
      row.metric = "igd";
      row.value = igd(result.final_front, cache.front_for(task));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<MssRow> mss_from_metrics(const std::vector<MetricRow>& rows) {
  std::vector<MssRow> out;
  std::vector<int> instances;
  for (const auto& r : rows) {
    if (std::find(instances.begin(), instances.end(), r.instance) == instances.end()) {
      instances.push_back(r.instance);
    }
  }
  std::sort(instances.begin(), instances.end());

  for (const int inst : instances) {
    std::vector<std::string> optimizers;
    std::vector<int> runs;
    int tasks = 0;
    for (const auto& r : rows) {
      if (r.instance != inst) continue;
      if (std::find(optimizers.begin(), optimizers.end(), r.optimizer) == optimizers.end()) {
        optimizers.push_back(r.optimizer);
      }
      if (std::find(runs.begin(), runs.end(), r.run) == runs.end()) runs.push_back(r.run);
      tasks = std::max(tasks, r.task);
    }
    std::sort(optimizers.begin(), optimizers.end());
    std::sort(runs.begin(), runs.end());

    std::vector<std::vector<std::vector<double>>> values(
        optimizers.size(),
        std::vector<std::vector<double>>(runs.size(), std::vector<double>(tasks, 0.0)));
    std::vector<std::vector<std::vector<bool>>> seen(
        optimizers.size(),
        std::vector<std::vector<bool>>(runs.size(), std::vector<bool>(tasks, false)));
    for (const auto& r : rows) {
      if (r.instance != inst) continue;
      const std::size_t o = static_cast<std::size_t>(
          std::find(optimizers.begin(), optimizers.end(), r.optimizer) - optimizers.begin());
      const std::size_t ri = static_cast<std::size_t>(
          std::find(runs.begin(), runs.end(), r.run) - runs.begin());
      values[o][ri][static_cast<std::size_t>(r.task - 1)] = r.value;
      seen[o][ri][static_cast<std::size_t>(r.task - 1)] = true;
    }
    for (const auto& o : seen) {
      for (const auto& r : o) {
        for (const bool s : r) {
          if (!s) throw std::runtime_error("mss: incomplete metric table for ETMOF" +
                                           std::to_string(inst));
        }
      }
    }
    const std::vector<std::vector<double>> scores = mean_standard_scores(values);
    for (std::size_t o = 0; o < optimizers.size(); ++o) {
      for (std::size_t ri = 0; ri < runs.size(); ++ri) {
        out.push_back({optimizers[o], inst, runs[ri], scores[o][ri]});
      }
    }
  }
  return out;
}

void write_metrics_csv(const std::filesystem::path& path,
                       const std::vector<MetricRow>& rows) {
  std::vector<MetricRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(), [](const MetricRow& a, const MetricRow& b) {
    return std::tie(a.optimizer, a.instance, a.task, a.run) <
           std::tie(b.optimizer, b.instance, b.task, b.run);
  });
  std::ostringstream os;
  os << "optimizer,instance,task,run,seed,metric_name,value\n";
  for (const auto& r : sorted) {
    os << r.optimizer << "," << r.instance << "," << r.task << "," << r.run << ","
       << r.seed << "," << r.metric << "," << csv_value(r.value) << "\n";
  }
  write_text_file(path, os.str());
}

std::vector<MetricRow> read_metrics_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open metrics csv: " + path.string());
  std::vector<MetricRow> rows;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (first) {
      first = false;
      continue;
    }
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split(line, ',');
    if (f.size() != 7) throw std::runtime_error("metrics csv: bad row: " + line);
    MetricRow r;
    r.optimizer = f[0];
    r.instance = std::stoi(f[1]);
    r.task = std::stoi(f[2]);
    r.run = std::stoi(f[3]);
    r.seed = std::stoull(f[4]);
    r.metric = f[5];
    r.value = std::stod(f[6]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_mss_csv(const std::filesystem::path& path, const std::vector<MssRow>& rows) {
  std::vector<MssRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(), [](const MssRow& a, const MssRow& b) {
    return std::tie(a.optimizer, a.instance, a.run) <
           std::tie(b.optimizer, b.instance, b.run);
  });
  std::ostringstream os;
  os << "optimizer,instance,run,mss\n";
  for (const auto& r : sorted) {
    os << r.optimizer << "," << r.instance << "," << r.run << "," << csv_value(r.value)
       << "\n";
  }
  write_text_file(path, os.str());
}

CampaignResult run_campaign(const CampaignConfig& cfg, bool force) {
  const std::filesystem::path root = resolve_output_path(cfg.output);
  if (std::filesystem::exists(root / "runs") && !force) {
    throw CampaignExistsError("campaign output already holds runs: " +
                              (root / "runs").string() + " (use --force to overwrite)");
  }
  std::filesystem::create_directories(root);

  struct Cell {
    int instance;
    std::size_t optimizer;
    int run;
  };
  std::vector<Cell> cells;
  for (const int inst : cfg.instances) {
    for (std::size_t o = 0; o < cfg.optimizers.size(); ++o) {
      for (int r = 0; r < cfg.runs; ++r) cells.push_back({inst, o, r});
    }
  }

  struct CellOutcome {
    bool ok = false;
    std::string error;
    std::uint64_t seed = 0;
    std::vector<MetricRow> rows;
  };
  std::vector<CellOutcome> outcomes(cells.size());
  ReferenceFrontCache cache;
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      CellOutcome& out = outcomes[i];
      const OptimizerSpec& spec = cfg.optimizers[cell.optimizer];
      try {
        SolverConfig sc = spec.config;
        sc.seed = derive_run_seed(cfg.master_seed, cell.instance, spec.name, cell.run);
        if (cfg.budget_override > 0) sc.budget_per_task = cfg.budget_override;
        out.seed = sc.seed;
        const MultiTaskProblem problem = instantiate(cell.instance);
        const RunRecord rec = run_solver(problem, sc, spec.mode);
        write_run_record(run_dir(root, cell.instance, spec.name, sc.seed), rec, spec.name,
                         cell.run, problem);
        out.rows = score_run(rec, problem, spec.name, cell.run, cache);
        out.ok = true;
      } catch (const std::exception& e) {
        out.error = e.what();
      }
    }
  };

  const int workers = std::max(1, cfg.workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CampaignResult result;
  result.root = root;
  std::ostringstream seeds;
  std::ostringstream status;
  status << "optimizer,instance,run,status\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    const CellOutcome& out = outcomes[i];
    const std::string& name = cfg.optimizers[cell.optimizer].name;
    seeds << name << " ETMOF" << cell.instance << " run" << cell.run << " seed "
          << out.seed << "\n";
    status << name << "," << cell.instance << "," << cell.run << ","
           << (out.ok ? "ok" : "failed: " + out.error) << "\n";
    if (out.ok) {
      result.metrics.insert(result.metrics.end(), out.rows.begin(), out.rows.end());
    } else {
      ++result.failed_cells;
    }
  }
  write_text_file(root / "seeds.log", seeds.str());
  write_text_file(root / "cells.csv", status.str());
  write_metrics_csv(root / "metrics.csv", result.metrics);
  if (result.failed_cells == 0) {
    result.mss = mss_from_metrics(result.metrics);
    write_mss_csv(root / "mss.csv", result.mss);
  }
  return result;
}

std::vector<MetricRow> compute_metrics_from_tree(const std::filesystem::path& root) {
  const std::filesystem::path runs = root / "runs";
  if (!std::filesystem::exists(runs)) {
    throw std::runtime_error("no runs directory under " + root.string());
  }
  ReferenceFrontCache cache;
  std::vector<MetricRow> rows;
  for (const auto& inst_dir : std::filesystem::directory_iterator(runs)) {
    for (const auto& opt_dir : std::filesystem::directory_iterator(inst_dir)) {
      for (const auto& seed_dir : std::filesystem::directory_iterator(opt_dir)) {
        const auto meta = read_key_values(seed_dir.path() / "meta");
        const int instance = std::stoi(meta.at("instance"));
        const int tasks = std::stoi(meta.at("tasks"));
        const int changes = std::stoi(meta.at("changes"));
        const MultiTaskProblem problem = instantiate(instance);
        for (int k = 1; k <= tasks; ++k) {
          const TaskSpec& task = problem.task(k);
          const std::filesystem::path tdir =
              seed_dir.path() / ("T" + std::to_string(k));
          MetricRow row;
          row.optimizer = meta.at("optimizer");
          row.instance = instance;
          row.task = k;
          row.run = std::stoi(meta.at("run_index"));
          row.seed = std::stoull(meta.at("seed"));
          if (task.is_dynamic()) {
            std::vector<double> series;
            for (int c = 0; c < changes; ++c) {
              series.push_back(
                  igd(read_front_file(tdir / ("change_" + std::to_string(c) + ".front")),
                      cache.front_for(task, c)));
            }
            row.metric = "migd";
            row.value = migd(series, changes);
          } else {
            row.metric = "igd";
            row.value = igd(read_front_file(tdir / "final.front"), cache.front_for(task));
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

void emit_plot_data(const std::filesystem::path& run_dir,
                    const std::filesystem::path& out_dir) {
  const auto meta = read_key_values(run_dir / "meta");
  const int instance = std::stoi(meta.at("instance"));
  const int tasks = std::stoi(meta.at("tasks"));
  const int changes = std::stoi(meta.at("changes"));
  const MultiTaskProblem problem = instantiate(instance);
  ReferenceFrontCache cache;
  std::filesystem::create_directories(out_dir);

  for (int k = 1; k <= tasks; ++k) {
    const TaskSpec& task = problem.task(k);
    const std::filesystem::path tdir = run_dir / ("T" + std::to_string(k));
    std::ostringstream igd_series;
    for (int pct = 10; pct <= 100; pct += 10) {
      const std::filesystem::path cp =
          tdir / ("checkpoint_" + std::to_string(pct) + ".front");
      if (!std::filesystem::exists(cp)) continue;
      const std::vector<Objectives> points = read_front_file(cp);
      std::ostringstream scatter;
      for (const auto& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
          if (i) scatter << " ";
          scatter << format_double(p[i]);
        }
        scatter << "\n";
      }
      write_text_file(out_dir / ("scatter_T" + std::to_string(k) + "_cp" +
                                 std::to_string(pct) + ".dat"),
                      scatter.str());
      if (!task.is_dynamic()) {
        const auto kv = read_key_values(cp); // header lines are skipped; use meta budget
        (void)kv;
        const std::int64_t evals =
            std::stoll(meta.at("budget")) * pct / 100; // checkpoint grid by contract
        igd_series << evals << " " << format_double(igd(points, cache.front_for(task)))
                   << "\n";
      }
    }
    if (!task.is_dynamic()) {
      write_text_file(out_dir / ("igd_T" + std::to_string(k) + ".dat"), igd_series.str());
    } else {
      std::ostringstream migd_series;
      for (int c = 0; c < changes; ++c) {
        const std::vector<Objectives> points =
            read_front_file(tdir / ("change_" + std::to_string(c) + ".front"));
        migd_series << c << " " << format_double(igd(points, cache.front_for(task, c)))
                    << "\n";
      }
      write_text_file(out_dir / ("migd_T" + std::to_string(k) + ".dat"),
                      migd_series.str());
    }
  }
}

std::filesystem::path resolve_output_path(const std::filesystem::path& p) {
  if (p.is_absolute()) return p;
  const char* root = std::getenv("ETMOF_OUTPUT_ROOT");
  if (root == nullptr || *root == '\0') return p;
  return std::filesystem::path(root) / p;
}

} // namespace etmof
