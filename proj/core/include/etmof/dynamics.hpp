#pragma once

#include <optional>
#include <span>
#include <string>

#include "etmof/basic_functions.hpp"
#include "etmof/pareto.hpp"
#include "etmof/shape.hpp"

namespace etmof {

struct TaskSpec;

/// Closed-form templates behind the dynamic tasks. DF5/DF6 additionally
/// carry a basic-function core (g_core); DF6 has a |G(t)|-weighted
/// Rastrigin-style core variant (g_time_weighted).
enum class DynamicFamily : int {
  DMOP2 = 1,
  ZJZ,
  DF2,
  DF5,
  DF6,
  DF8,
  DF10,
  DF11,
  DF12,
};

struct DynamicsSpec {
  int severity = 10;        // n_t: controls change severity
  int frequency = 20;       // tau_t: generations per environment window
  DynamicFamily family = DynamicFamily::DMOP2;
  BasicFn g_core = BasicFn::Sphere;
  bool g_time_weighted = false;

  std::string label() const; // e.g. "dMOP2", "DF5/b8", "DF6w"
};

/// Environment time derived from the generation counter:
/// t = floor(tau / tau_t) / n_t, constant within each window.
struct TimeInstant {
  double t = 0.0;
  long tau = 0;
  long change_index = 0;
};

TimeInstant time_instant(long tau, const DynamicsSpec& spec);

/// Objectives of a dynamic task at time t (from time_instant).
Objectives evaluate_dynamic(const TaskSpec& task, std::span<const double> x, double t);

/// Samples the analytic time-t front: the landscape term is put at its
/// time-t minimum over the feasible box, the position parameters swept, and
/// the image filtered for dominance where the template is nonconvex or
/// disconnected.
ReferenceFront dynamic_front(const TaskSpec& task, double t, int target_count);

} // namespace etmof
