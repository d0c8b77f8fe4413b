#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncg/models.hpp"
#include "ncg/report.hpp"

namespace ncg {

enum class Target { Validate, Centrality, SolveS, Christoffel, Riemann, Ricci, Einstein };

struct PipelineOptions {
  bool strict = false;        // escalate algebra warnings (Jacobi) to errors
  int christoffel_order = 1;  // 0: classical connection only
};

struct PipelineRun {
  TensorReport report;
  // Wall-clock stage timings, for diagnostics only; never part of the report.
  std::vector<std::pair<std::string, double>> timings_ms;
  // False when a requested verification gave a negative verdict (model
  // invalid, metric not central, no compatible symmetric part).
  bool success = true;
};

// Computes the requested target and its dependencies: a missing symmetric
// part is solved from the metric, a missing classical connection is derived
// from the metric, and each substitution is recorded as a report note.
// Throws Error when a dependency cannot be met at all.
PipelineRun run_pipeline(const ModelSpec& spec, Target target,
                         const PipelineOptions& options = {});

}  // namespace ncg
