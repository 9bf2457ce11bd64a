#include "rootspace/weights.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "rootspace/error.hpp"

namespace rootspace {

namespace {

constexpr std::size_t kEnumerationCap = 4'000'000;

// Calls fn on every d supported on `support` with total depth <= D.
void for_each_depth(int n, NodeMask support, int D, const std::function<void(const Depth&)>& fn) {
  std::vector<int> pos;
  for (int i = 0; i < n; ++i)
    if (contains(support, i)) pos.push_back(i);
  Depth d(n, 0);
  std::size_t visited = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int budget) {
    if (k == pos.size()) {
      if (++visited > kEnumerationCap) throw Error(ErrorKind::TooLarge, "depth window too large to enumerate");
      fn(d);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      d[pos[k]] = v;
      rec(k + 1, budget - v);
    }
    d[pos[k]] = 0;
  };
  rec(0, D);
}

bool is_dominant_on(const CartanData& c, const HighestWeight& lambda, const Depth& d, NodeMask J) {
  for (int j = 0; j < c.size(); ++j)
    if (contains(J, j) && weight_pairing(c, lambda, d, j) < 0) return false;
  return true;
}

// Depth of the lowest weight w_0 lambda of a finite g_J-module.
int lowest_depth(const CartanData& c, NodeMask J, const HighestWeight& lambda) {
  Depth d(c.size(), 0);
  for (bool moved = true; moved;) {
    moved = false;
    for (int j = 0; j < c.size(); ++j) {
      if (contains(J, j) && weight_pairing(c, lambda, d, j) > 0) {
        d = reflect_weight(c, lambda, d, j);
        moved = true;
      }
    }
  }
  return total_depth(d);
}

WeightSetWindow make_window(const HighestWeight& lambda, int D, const std::set<Depth>& s, bool exact) {
  WeightSetWindow w;
  w.anchor = lambda;
  w.max_depth = D;
  w.weights.assign(s.begin(), s.end());
  w.exact = exact;
  return w;
}

void subtract_cone(std::set<Depth>& s, const std::vector<Root>& gens, int D) {
  std::vector<Depth> todo(s.begin(), s.end());
  while (!todo.empty()) {
    Depth d = std::move(todo.back());
    todo.pop_back();
    const int t = total_depth(d);
    for (const auto& g : gens) {
      if (t + height(g) > D) continue;
      Depth e = d;
      for (int i = 0; i < g.size(); ++i) e[i] += g[i];
      if (s.insert(e).second) todo.push_back(std::move(e));
    }
  }
}

RootSystem system_for_depth(const CartanData& c, int D) {
  if (c.is_finite()) return generate_finite(c);
  const auto& marks = c.marks();
  const int ht_delta = std::accumulate(marks.begin(), marks.end(), 0);
  return generate_affine_window(c, std::max(D, ht_delta));
}

}  // namespace

int total_depth(const Depth& d) { return std::accumulate(d.begin(), d.end(), 0); }

Rational weight_pairing(const CartanData& c, const HighestWeight& lambda, const Depth& d, int j) {
  return lambda.pairings.at(j) - c.pairing(d, j);
}

RationalVec weight_pairings(const CartanData& c, const HighestWeight& lambda, const Depth& d) {
  RationalVec out;
  for (int j = 0; j < c.size(); ++j) out.push_back(weight_pairing(c, lambda, d, j));
  return out;
}

bool WeightSetWindow::contains(const Depth& d) const { return std::binary_search(weights.begin(), weights.end(), d); }

WeightSetWindow WeightSetWindow::truncated(int D) const {
  WeightSetWindow w = *this;
  w.max_depth = D;
  w.weights.clear();
  for (const auto& d : weights)
    if (total_depth(d) <= D) w.weights.push_back(d);
  w.exact = exact && (weights.size() == w.weights.size());
  return w;
}

NodeMask integrability(const CartanData& c, const HighestWeight& lambda) {
  if (static_cast<int>(lambda.pairings.size()) != c.size())
    throw Error(ErrorKind::InvalidArgument, "lambda needs " + std::to_string(c.size()) + " pairings");
  NodeMask J = 0;
  for (int j = 0; j < c.size(); ++j)
    if (is_nonneg_integer(lambda.pairings[j])) J |= 1u << j;
  return J;
}

NodeMask integrability_of_module(const CartanData& c, const ModuleSpec& spec) {
  switch (spec.kind) {
    case ModuleKind::Simple:
      return integrability(c, spec.lambda);
    case ModuleKind::Verma:
      integrability(c, spec.lambda);
      return 0;
    case ModuleKind::GivenTopPart:
      return spec.given_integrability;
  }
  return 0;
}

Depth reflect_weight(const CartanData& c, const HighestWeight& lambda, const Depth& d, int j) {
  const Rational p = weight_pairing(c, lambda, d, j);
  if (!is_integer(p)) throw Error(ErrorKind::InvalidArgument, "reflection needs an integral pairing");
  Depth e = d;
  e[j] += static_cast<int>(p.numerator());
  return e;
}

WeightSetWindow integrable_weights(const CartanData& c, NodeMask J, const HighestWeight& lambda, int D) {
  if (static_cast<int>(lambda.pairings.size()) != c.size())
    throw Error(ErrorKind::InvalidArgument, "lambda needs " + std::to_string(c.size()) + " pairings");
  if (D < 0) throw Error(ErrorKind::InvalidArgument, "depth must be nonnegative");
  for (int j = 0; j < c.size(); ++j)
    if (contains(J, j) && !is_nonneg_integer(lambda.pairings[j]))
      throw Error(ErrorKind::NotDominantIntegralOnJ,
                  "pairing at node " + std::to_string(c.labels()[j]) + " is not a nonnegative integer");
  const int n = c.size();
  bool all_zero = true;
  for (int j = 0; j < n; ++j)
    if (contains(J, j) && lambda.pairings[j] != 0) all_zero = false;
  if (all_zero) return make_window(lambda, D, {Depth(n, 0)}, true);

  const bool finite = J == 0 || subsystem(c, J).is_finite();
  int bound = D;
  bool exact = false;
  if (finite) {
    const int low = lowest_depth(c, J, lambda);
    exact = low <= D;
    bound = std::min(D, low);
  }

  // wt L_J(lambda) = W_J . {dominant weights below lambda}; every orbit element
  // is reached from its dominant representative by depth-increasing reflections.
  std::set<Depth> s;
  for_each_depth(n, J, bound, [&](const Depth& d) {
    if (!is_dominant_on(c, lambda, d, J) || s.count(d)) return;
    std::vector<Depth> todo{d};
    s.insert(d);
    while (!todo.empty()) {
      Depth x = std::move(todo.back());
      todo.pop_back();
      for (int j = 0; j < n; ++j) {
        if (!contains(J, j) || weight_pairing(c, lambda, x, j) <= 0) continue;
        Depth y = reflect_weight(c, lambda, x, j);
        if (total_depth(y) > bound) continue;
        if (s.insert(y).second) todo.push_back(std::move(y));
      }
    }
  });
  return make_window(lambda, D, s, exact);
}

std::vector<Root> minimal_generators(const RootSystem& rs, NodeMask J) {
  const NodeMask all = rs.cartan().all_nodes();
  if ((J & all) == all) throw Error(ErrorKind::JEqualsWholeSet, "J is the whole node set; no generators");
  return unit_I_height_set(rs, all & ~J);
}

WeightSetWindow top_part(const CartanData& c, const ModuleSpec& spec, int D) {
  const NodeMask J = integrability(c, spec.lambda);
  switch (spec.kind) {
    case ModuleKind::Simple:
      return integrable_weights(c, J, spec.lambda, D);
    case ModuleKind::Verma: {
      std::set<Depth> s;
      for_each_depth(c.size(), J, D, [&](const Depth& d) { s.insert(d); });
      return make_window(spec.lambda, D, s, J == 0);
    }
    case ModuleKind::GivenTopPart: {
      if (!spec.top_part) throw Error(ErrorKind::InvalidArgument, "GivenTopPart needs a top part");
      std::set<Depth> s;
      for (const auto& d : spec.top_part->weights) {
        if (static_cast<int>(d.size()) != c.size()) throw Error(ErrorKind::InvalidArgument, "top part depth size");
        for (int i = 0; i < c.size(); ++i)
          if (d[i] < 0 || (d[i] != 0 && !contains(J, i)))
            throw Error(ErrorKind::InvalidArgument, "top part must lie in lambda - Z>=0 Pi_J");
        if (total_depth(d) <= D) s.insert(d);
      }
      if (!s.count(Depth(c.size(), 0))) throw Error(ErrorKind::InvalidArgument, "top part must contain lambda");
      const bool exact = spec.top_part->exact && spec.top_part->max_depth <= D;
      return make_window(spec.lambda, D, s, exact);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown module kind");
}

WeightSetWindow weights_of_module(const CartanData& c, const ModuleSpec& spec, int D) {
  const NodeMask J = integrability(c, spec.lambda);
  WeightSetWindow top = top_part(c, spec, D);
  if (J == c.all_nodes()) return top;
  const RootSystem rs = system_for_depth(c, D);
  std::vector<Root> gens;
  for (auto& g : minimal_generators(rs, J))
    if (height(g) <= D) gens.push_back(std::move(g));
  std::set<Depth> s(top.weights.begin(), top.weights.end());
  subtract_cone(s, gens, D);
  return make_window(spec.lambda, D, s, false);
}

WeightSetWindow weights_via_positive_roots(const CartanData& c, const ModuleSpec& spec, int D) {
  const NodeMask J = integrability(c, spec.lambda);
  WeightSetWindow top = top_part(c, spec, D);
  if (J == c.all_nodes()) return top;
  const RootSystem rs = system_for_depth(c, D);
  std::vector<Root> gens;
  for (const auto& b : rs.positive_roots()) {
    bool inside_J = true;
    for (int i = 0; i < b.size(); ++i)
      if (b[i] != 0 && !contains(J, i)) inside_J = false;
    if (!inside_J && height(b) <= D) gens.push_back(b);
  }
  std::set<Depth> s(top.weights.begin(), top.weights.end());
  subtract_cone(s, gens, D);
  return make_window(spec.lambda, D, s, false);
}

bool weights_two_ways_agree(const CartanData& c, const ModuleSpec& spec, int D) {
  return weights_of_module(c, spec, D).weights == weights_via_positive_roots(c, spec, D).weights;
}

bool hull_lattice_recover(const CartanData& c, const HighestWeight& lambda, int D) {
  if (!c.is_finite()) throw Error(ErrorKind::NotFiniteType, "hull recovery needs finite type");
  const NodeMask J = integrability(c, lambda);
  const auto top = integrable_weights(c, J, lambda, lowest_depth(c, J, lambda));
  std::vector<RationalVec> rays;
  if (J != c.all_nodes()) {
    const RootSystem rs = generate_finite(c);
    for (const auto& g : minimal_generators(rs, J)) rays.push_back(to_rational(g));
  }
  const Polyhedron P = hull(to_points(top.weights), rays);
  ModuleSpec spec{ModuleKind::Simple, lambda, std::nullopt, 0};
  const auto window = weights_of_module(c, spec, D);
  bool ok = true;
  for_each_depth(c.size(), c.all_nodes(), D, [&](const Depth& d) {
    if (P.contains(to_rational(d)) != window.contains(d)) ok = false;
  });
  return ok;
}

std::vector<RationalVec> to_points(const std::vector<Depth>& ds) {
  std::vector<RationalVec> out;
  for (const auto& d : ds) out.push_back(to_rational(d));
  return out;
}

}  // namespace rootspace
