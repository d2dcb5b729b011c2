#include "etmof/optimizer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "etmof/rng.hpp"

namespace etmof {
namespace {

struct Individual {
  std::vector<double> genes;
  int skill = 0; // 0-based task index
  Objectives objectives;
  int rank = 0;
  double crowding = 0.0;
};

std::vector<Objectives> collect_objectives(const std::vector<Individual>& pop) {
  std::vector<Objectives> objs;
  objs.reserve(pop.size());
  for (const auto& ind : pop) objs.push_back(ind.objectives);
  return objs;
}

void rank_and_crowd(std::vector<Individual>& pop) {
  const std::vector<Objectives> objs = collect_objectives(pop);
  const std::vector<int> ranks = nondominated_ranks(objs);
  const int max_rank = *std::max_element(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < pop.size(); ++i) pop[i].rank = ranks[i];
  for (int r = 0; r <= max_rank; ++r) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (ranks[i] == r) members.push_back(i);
    }
    const std::vector<double> d = crowding_distances(objs, members);
    for (std::size_t j = 0; j < members.size(); ++j) pop[members[j]].crowding = d[j];
  }
}

// NSGA-II environmental selection of the pool down to `size`.
std::vector<Individual> select(std::vector<Individual> pool, std::size_t size) {
  const std::vector<Objectives> objs = collect_objectives(pool);
  const std::vector<int> ranks = nondominated_ranks(objs);
  const int max_rank = *std::max_element(ranks.begin(), ranks.end());
  std::vector<Individual> next;
  next.reserve(size);
  for (int r = 0; r <= max_rank && next.size() < size; ++r) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (ranks[i] == r) members.push_back(i);
    }
    const std::vector<double> d = crowding_distances(objs, members);
    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return d[a] > d[b]; });
    for (const std::size_t j : order) {
      if (next.size() == size) break;
      Individual ind = std::move(pool[members[j]]);
      ind.rank = r;
      ind.crowding = d[j];
      next.push_back(std::move(ind));
    }
  }
  return next;
}

const Individual& tournament(const std::vector<Individual>& pop, SplitMix64& rng) {
  const std::size_t i = static_cast<std::size_t>(rng.next_below(pop.size()));
  const std::size_t j = static_cast<std::size_t>(rng.next_below(pop.size()));
  const Individual& a = pop[i];
  const Individual& b = pop[j];
  if (a.rank != b.rank) return a.rank < b.rank ? a : b;
  if (a.crowding != b.crowding) return a.crowding > b.crowding ? a : b;
  return i <= j ? a : b;
}

// Simulated binary crossover in the unit box, per-variable with the usual
// 0.5 application and child-swap draws.
void sbx(const std::vector<double>& p1, const std::vector<double>& p2, double eta,
         SplitMix64& rng, std::vector<double>& c1, std::vector<double>& c2) {
  const std::size_t d = p1.size();
  c1 = p1;
  c2 = p2;
  for (std::size_t j = 0; j < d; ++j) {
    if (rng.next_double() > 0.5) continue;
    const double x1 = std::min(p1[j], p2[j]);
    const double x2 = std::max(p1[j], p2[j]);
    if (x2 - x1 < 1e-14) continue;
    const double u = rng.next_double();
    const auto spread = [&](double beta) {
      const double alpha = 2.0 - std::pow(beta, -(eta + 1.0));
      if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta + 1.0));
      return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta + 1.0));
    };
    const double b1 = 1.0 + 2.0 * x1 / (x2 - x1);
    const double b2 = 1.0 + 2.0 * (1.0 - x2) / (x2 - x1);
    double y1 = 0.5 * ((x1 + x2) - spread(b1) * (x2 - x1));
    double y2 = 0.5 * ((x1 + x2) + spread(b2) * (x2 - x1));
    y1 = std::clamp(y1, 0.0, 1.0);
    y2 = std::clamp(y2, 0.0, 1.0);
    if (rng.next_double() <= 0.5) std::swap(y1, y2);
    c1[j] = y1;
    c2[j] = y2;
  }
}

void polynomial_mutation(std::vector<double>& genes, double rate, double eta,
                         SplitMix64& rng) {
  for (double& y : genes) {
    if (rng.next_double() > rate) continue;
    const double u = rng.next_double();
    double deltaq;
    if (u < 0.5) {
      const double xy = 1.0 - y;
      const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
      deltaq = std::pow(val, 1.0 / (eta + 1.0)) - 1.0;
    } else {
      const double xy = y;
      const double val = 2.0 * (1.0 - u) + (2.0 * u - 1.0) * std::pow(xy, eta + 1.0);
      deltaq = 1.0 - std::pow(val, 1.0 / (eta + 1.0));
    }
    y = std::clamp(y + deltaq, 0.0, 1.0);
  }
}

} // namespace

std::string_view solver_mode_tag(SolverMode m) {
  return m == SolverMode::Transfer ? "transfer" : "independent";
}

std::int64_t default_budget(const MultiTaskProblem& problem, const SolverConfig& cfg) {
  if (problem.is_dynamic()) {
    const int tau_t = problem.task(1).dynamics->frequency;
    return static_cast<std::int64_t>(cfg.dynamic_population) * 31 * tau_t;
  }
  return 100000;
}

std::vector<double> decode_genes(std::span<const double> genes, const TaskSpec& task) {
  if (static_cast<int>(genes.size()) < task.n) {
    throw std::invalid_argument("decode_genes: unified vector shorter than task dimension");
  }
  std::vector<double> x(static_cast<std::size_t>(task.n));
  for (int j = 0; j < task.n; ++j) {
    x[j] = task.lower[j] + genes[j] * (task.upper[j] - task.lower[j]);
  }
  return x;
}

RunRecord run_solver(const MultiTaskProblem& problem, const SolverConfig& cfg,
                     SolverMode mode) {
  const bool dynamic = problem.is_dynamic();
  const int T = problem.task_count();
  const int P = dynamic ? cfg.dynamic_population : cfg.population;
  if (P < 4 || P % 2 != 0) {
    throw std::invalid_argument("run_solver: population must be even and >= 4");
  }
  const std::int64_t B =
      cfg.budget_per_task > 0 ? cfg.budget_per_task : default_budget(problem, cfg);
  if (B < P) throw std::invalid_argument("run_solver: budget smaller than one population");
  const int D = problem.unified_dim();
  const double pm = cfg.mutation_rate > 0.0 ? cfg.mutation_rate : 1.0 / D;
  const std::size_t cap = static_cast<std::size_t>(cfg.archive_cap_factor) *
                          static_cast<std::size_t>(P);

  RunRecord rec;
  rec.instance_id = problem.instance_id();
  rec.mode = mode;
  rec.config = cfg;
  rec.budget = B;
  rec.tasks.resize(static_cast<std::size_t>(T));

  SplitMix64 rng(cfg.seed);
  std::vector<std::vector<Individual>> pops(static_cast<std::size_t>(T));
  std::vector<std::int64_t> counted(static_cast<std::size_t>(T), 0);
  std::vector<ParetoArchive> archives;
  archives.reserve(static_cast<std::size_t>(T));
  for (int k = 0; k < T; ++k) archives.emplace_back(cap);
  std::vector<std::array<bool, 11>> saved(static_cast<std::size_t>(T),
                                          std::array<bool, 11>{});

  const DynamicsSpec dyn_spec =
      dynamic ? *problem.task(1).dynamics : DynamicsSpec{};
  long change_index = 0;
  double t_now = 0.0;

  const auto evaluate_individual = [&](Individual& ind, int task_index_0) {
    const TaskSpec& ts = problem.task(task_index_0 + 1);
    const std::vector<double> x = decode_genes(ind.genes, ts);
    ind.objectives = dynamic ? problem.evaluate(task_index_0 + 1, x, t_now)
                             : problem.evaluate(task_index_0 + 1, x);
    ind.skill = task_index_0;
  };

  const auto snapshot_checkpoints = [&](int k) {
    for (int c = 1; c <= 10; ++c) {
      const std::int64_t threshold = B * c / 10;
      auto& done = saved[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
      if (!done && counted[static_cast<std::size_t>(k)] >= threshold) {
        done = true;
        rec.tasks[static_cast<std::size_t>(k)].checkpoints.push_back(
            {c * 10, counted[static_cast<std::size_t>(k)],
             archives[static_cast<std::size_t>(k)].points()});
      }
    }
  };

  // Generation 0: seeded initial populations, evaluated task by task.
  for (int k = 0; k < T; ++k) {
    auto& pop = pops[static_cast<std::size_t>(k)];
    pop.resize(static_cast<std::size_t>(P));
    for (auto& ind : pop) {
      ind.genes.resize(static_cast<std::size_t>(D));
      for (double& g : ind.genes) g = rng.next_double();
      evaluate_individual(ind, k);
      ++counted[static_cast<std::size_t>(k)];
      archives[static_cast<std::size_t>(k)].insert(ind.objectives);
    }
    rank_and_crowd(pop);
    snapshot_checkpoints(k);
  }

  std::vector<std::vector<Individual>> offspring(static_cast<std::size_t>(T));
  long gen = 1;
  while (std::any_of(counted.begin(), counted.end(),
                     [&](std::int64_t c) { return c < B; })) {
    if (dynamic) {
      const TimeInstant ti = time_instant(gen, dyn_spec);
      if (ti.change_index != change_index) {
        // Snapshot the pre-change fronts, then re-evaluate the populations
        // under the new environment (bookkeeping, not budgeted).
        for (int k = 0; k < T; ++k) {
          rec.tasks[static_cast<std::size_t>(k)].change_fronts.push_back(
              archives[static_cast<std::size_t>(k)].points());
          archives[static_cast<std::size_t>(k)].clear();
        }
        change_index = ti.change_index;
        t_now = ti.t;
        ++rec.changes;
        for (int k = 0; k < T; ++k) {
          for (auto& ind : pops[static_cast<std::size_t>(k)]) {
            const TaskSpec& ts = problem.task(k + 1);
            ind.objectives = problem.evaluate(k + 1, decode_genes(ind.genes, ts), t_now);
            archives[static_cast<std::size_t>(k)].insert(ind.objectives);
          }
          rank_and_crowd(pops[static_cast<std::size_t>(k)]);
        }
      }
    }

    for (auto& list : offspring) list.clear();
    for (int k = 0; k < T; ++k) {
      if (counted[static_cast<std::size_t>(k)] >= B) continue;
      for (int pair = 0; pair < P / 2; ++pair) {
        bool cross = false;
        int partner = k;
        if (mode == SolverMode::Transfer && T > 1 && rng.next_double() < cfg.rmp) {
          cross = true;
          partner = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(T - 1)));
          if (partner >= k) ++partner;
          ++rec.cross_task_matings;
        }
        const Individual& p1 = tournament(pops[static_cast<std::size_t>(k)], rng);
        const Individual& p2 = tournament(pops[static_cast<std::size_t>(partner)], rng);
        Individual c1, c2;
        sbx(p1.genes, p2.genes, cfg.sbx_index, rng, c1.genes, c2.genes);
        polynomial_mutation(c1.genes, pm, cfg.mutation_index, rng);
        polynomial_mutation(c2.genes, pm, cfg.mutation_index, rng);
        // Dynamic runs keep offspring on the generating task so every task
        // advances in lockstep with the change schedule; static runs assign
        // a parent's skill uniformly at random.
        int s1 = k;
        int s2 = k;
        if (cross && !dynamic) {
          s1 = rng.next_double() < 0.5 ? k : partner;
          s2 = rng.next_double() < 0.5 ? k : partner;
        }
        offspring[static_cast<std::size_t>(s1)].push_back(std::move(c1));
        offspring[static_cast<std::size_t>(s2)].push_back(std::move(c2));
      }
    }

    for (int k = 0; k < T; ++k) {
      auto& list = offspring[static_cast<std::size_t>(k)];
      const std::int64_t room = B - counted[static_cast<std::size_t>(k)];
      if (static_cast<std::int64_t>(list.size()) > room) {
        list.resize(static_cast<std::size_t>(room));
      }
      if (list.empty()) continue;
      for (auto& ind : list) {
        evaluate_individual(ind, k);
        ++counted[static_cast<std::size_t>(k)];
        archives[static_cast<std::size_t>(k)].insert(ind.objectives);
      }
      auto& pop = pops[static_cast<std::size_t>(k)];
      std::vector<Individual> pool;
      pool.reserve(pop.size() + list.size());
      for (auto& ind : pop) pool.push_back(std::move(ind));
      for (auto& ind : list) pool.push_back(std::move(ind));
      pop = select(std::move(pool), static_cast<std::size_t>(P));
      snapshot_checkpoints(k);
    }
    ++gen;
  }

  for (int k = 0; k < T; ++k) {
    rec.tasks[static_cast<std::size_t>(k)].final_front =
        archives[static_cast<std::size_t>(k)].points();
    rec.tasks[static_cast<std::size_t>(k)].evaluations =
        counted[static_cast<std::size_t>(k)];
  }
  return rec;
}

std::vector<std::vector<Objectives>> random_sampling_fronts(
    const MultiTaskProblem& problem, std::uint64_t seed, std::int64_t budget_per_task,
    int archive_cap) {
  SplitMix64 rng(seed);
  std::vector<std::vector<Objectives>> fronts;
  std::vector<double> genes(static_cast<std::size_t>(problem.unified_dim()));
  for (int k = 1; k <= problem.task_count(); ++k) {
    const TaskSpec& ts = problem.task(k);
    ParetoArchive archive(static_cast<std::size_t>(archive_cap));
    for (std::int64_t e = 0; e < budget_per_task; ++e) {
      for (int j = 0; j < ts.n; ++j) genes[static_cast<std::size_t>(j)] = rng.next_double();
      archive.insert(problem.evaluate(k, decode_genes(genes, ts)));
    }
    fronts.push_back(archive.points());
  }
  return fronts;
}

} // namespace etmof
