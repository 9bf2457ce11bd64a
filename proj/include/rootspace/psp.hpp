#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "rootspace/roots.hpp"

namespace rootspace {

/// beta = gamma_1 + ... + gamma_m with every gamma_t of unit I-height and every
/// left partial sum a positive root.
struct PspDecomposition {
  Root beta;
  NodeMask I = 0;
  std::vector<Root> gammas;

  std::vector<Root> partial_sums() const;
};

struct PspVerdict {
  bool ok = true;
  /// Index of the first offending gamma / partial sum, or -1 for whole-list failures.
  int index = -1;
  std::string reason;
};

/// Counters for the affine case, where the one-step peel may get stuck.
struct PspTelemetry {
  std::atomic<long> one_step_failures{0};
  std::atomic<long> fallback_searches{0};
};

/// gamma in Delta_{I,1} with beta - gamma in Delta^+, smallest in canonical order.
/// Requires ht_I(beta) > 1. Throws NoSingleStep when none exists.
Root one_step(const Root& beta, NodeMask I, const RootSystem& rs);

/// Parabolic partial-sum decomposition. Finite type: repeated one_step.
/// Affine: the same greedy peel with an exhaustive memoised search as fallback.
PspDecomposition decompose(const Root& beta, NodeMask I, const RootSystem& rs,
                           PspTelemetry* telemetry = nullptr);

PspVerdict verify(const PspDecomposition& d, const RootSystem& rs);

}  // namespace rootspace
