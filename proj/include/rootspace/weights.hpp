#pragma once

#include <optional>
#include <vector>

#include "rootspace/polyhedron.hpp"
#include "rootspace/rational.hpp"
#include "rootspace/roots.hpp"

namespace rootspace {

/// lambda, known only through its coroot pairings <lambda, alpha_i^vee>.
struct HighestWeight {
  RationalVec pairings;
};

/// Depth vector d of mu = lambda - sum d_i alpha_i.
using Depth = std::vector<int>;

int total_depth(const Depth& d);
/// <mu, alpha_j^vee> for mu = lambda - d.
Rational weight_pairing(const CartanData& c, const HighestWeight& lambda, const Depth& d, int j);
RationalVec weight_pairings(const CartanData& c, const HighestWeight& lambda, const Depth& d);

struct WeightSetWindow {
  HighestWeight anchor;
  int max_depth = 0;
  /// Sorted lexicographically on depth.
  std::vector<Depth> weights;
  /// True when the whole weight set is finite and lies inside the window.
  bool exact = false;

  bool contains(const Depth& d) const;
  /// The sub-window of depth <= D.
  WeightSetWindow truncated(int D) const;
};

enum class ModuleKind { Simple, Verma, GivenTopPart };

struct ModuleSpec {
  ModuleKind kind = ModuleKind::Simple;
  HighestWeight lambda;
  /// GivenTopPart only.
  std::optional<WeightSetWindow> top_part;
  /// GivenTopPart only: the integrability set I_V.
  NodeMask given_integrability = 0;
};

/// J_lambda = {j : <lambda, alpha_j^vee> in Z_{>=0}}.
NodeMask integrability(const CartanData& c, const HighestWeight& lambda);
NodeMask integrability_of_module(const CartanData& c, const ModuleSpec& spec);

/// Weights of the simple g_J-module of highest weight lambda, depth <= D.
/// Throws NotDominantIntegralOnJ.
WeightSetWindow integrable_weights(const CartanData& c, NodeMask J, const HighestWeight& lambda, int D);

/// Delta_{J^c,1}; throws JEqualsWholeSet when J is everything.
std::vector<Root> minimal_generators(const RootSystem& rs, NodeMask J);

/// wt_{J_lambda} V truncated to depth D.
WeightSetWindow top_part(const CartanData& c, const ModuleSpec& spec, int D);

/// wt V = wt_{J_lambda} V - Z_{>=0} Delta_{J_lambda^c,1}, truncated to depth D.
WeightSetWindow weights_of_module(const CartanData& c, const ModuleSpec& spec, int D);

/// Same top part minus Z_{>=0}(Delta^+ \ Delta_{J_lambda}^+) instead.
WeightSetWindow weights_via_positive_roots(const CartanData& c, const ModuleSpec& spec, int D);

bool weights_two_ways_agree(const CartanData& c, const ModuleSpec& spec, int D);

/// Lattice points of conv(wt L(lambda)) of depth <= D equal to the weight window.
/// Finite type only.
bool hull_lattice_recover(const CartanData& c, const HighestWeight& lambda, int D);

/// s_j acting on a depth vector.
Depth reflect_weight(const CartanData& c, const HighestWeight& lambda, const Depth& d, int j);

std::vector<RationalVec> to_points(const std::vector<Depth>& ds);

}  // namespace rootspace
