#include <set>

#include "doctest.h"
#include "rootspace/cartan.hpp"
#include "rootspace/error.hpp"
#include "rootspace/roots.hpp"
#include "rootspace/weights.hpp"

using namespace rootspace;

namespace {

HighestWeight hw(std::vector<Rational> p) { return HighestWeight{std::move(p)}; }

// Oracle for dominant integral lambda: mu = lambda - d is a weight of L(lambda)
// iff every W-conjugate of mu lies in lambda - Q+.
bool saturated(const CartanData& c, const HighestWeight& lambda, const Depth& d) {
  const int n = c.size();
  std::set<Depth> seen;
  std::vector<Depth> stack{d};
  while (!stack.empty()) {
    Depth x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    for (int v : x)
      if (v < 0) return false;
    for (int j = 0; j < n; ++j) {
      Rational p = lambda.pairings[j];
      for (int i = 0; i < n; ++i) p -= Rational(x[i] * c.entry(j, i));
      REQUIRE(p.denominator() == 1);
      Depth y = x;
      y[j] += static_cast<int>(p.numerator());
      stack.push_back(y);
    }
  }
  return true;
}

std::vector<Depth> all_depths(int n, int D) {
  std::vector<Depth> out;
  Depth d(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      out.push_back(d);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      d[i] = v;
      self(self, i + 1, left - v);
    }
    d[i] = 0;
  };
  rec(rec, 0, D);
  std::sort(out.begin(), out.end());
  return out;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("integrability") {
  const auto c = build_cartan("A2");
  CHECK(integrability(c, hw({1, 1})) == c.mask_from_labels({1, 2}));
  CHECK(integrability(c, hw({1, Rational(-1, 2)})) == c.mask_from_labels({1}));
  CHECK(integrability(c, hw({Rational(-1, 2), Rational(-1, 2)})) == 0);
  CHECK(integrability(c, hw({-1, 3})) == c.mask_from_labels({2}));
}

TEST_CASE("adjoint representation of A2") {
  const auto c = build_cartan("A2");
  const auto w = integrable_weights(c, c.all_nodes(), hw({1, 1}), 10);
  CHECK(w.exact);
  REQUIRE(w.weights.size() == 7);
  // theta - d runs over Delta and 0.
  std::set<Root> got;
  for (const auto& d : w.weights) got.insert(Root({1, 1}) - Root(d));
  std::set<Root> expected{Root({0, 0})};
  for (const auto& r : generate(c).all_roots()) expected.insert(r);
  CHECK(got == expected);
  CHECK_FALSE(integrable_weights(c, c.all_nodes(), hw({1, 1}), 3).exact);
  CHECK(integrable_weights(c, c.all_nodes(), hw({1, 1}), 4).exact);
}

TEST_CASE("small modules") {
  const auto c = build_cartan("A2");
  CHECK(integrable_weights(c, c.all_nodes(), hw({1, 0}), 6).weights.size() == 3);
  const auto zero = integrable_weights(c, c.all_nodes(), hw({0, 0}), 6);
  CHECK(zero.weights == std::vector<Depth>{{0, 0}});
  CHECK(zero.exact);
  CHECK_THROWS_AS(integrable_weights(c, c.all_nodes(), hw({1, -1}), 6), Error);
}

TEST_CASE("saturation oracle") {
  for (const char* label : {"A2", "B2", "G2", "A3", "C3"}) {
    const auto c = build_cartan(label);
    const int n = c.size();
    std::vector<HighestWeight> lambdas;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> p(n, Rational(0));
      p[i] = 1;
      lambdas.push_back(hw(p));
      p[(i + 1) % n] += 1;
      lambdas.push_back(hw(p));
    }
    for (const auto& lambda : lambdas) {
      const int D = 12;
      const auto w = integrable_weights(c, c.all_nodes(), lambda, D);
      std::vector<Depth> expected;
      for (const auto& d : all_depths(n, D))
        if (saturated(c, lambda, d)) expected.push_back(d);
      CHECK_MESSAGE(w.weights == expected, label);
    }
  }
}

TEST_CASE("Verma modules") {
  for (const char* label : {"A2", "B3"}) {
    const auto c = build_cartan(label);
    const int n = c.size();
    for (const auto& p : {std::vector<Rational>(n, Rational(1)), std::vector<Rational>(n, Rational(-1, 2))}) {
      ModuleSpec m{ModuleKind::Verma, hw(p), std::nullopt, 0};
      CHECK(integrability_of_module(c, m) == 0);
      const auto w = weights_of_module(c, m, 3);
      CHECK(static_cast<long>(w.weights.size()) == binomial(3 + n, n));
      CHECK(w.weights == all_depths(n, 3));
    }
  }
}

TEST_CASE("minimal generators") {
  const auto a6 = build_cartan("A6");
  const auto rs = generate(a6);
  CHECK(minimal_generators(rs, 0).size() == 6);
  CHECK(minimal_generators(rs, a6.mask_from_labels({1, 3, 6})) == unit_I_height_set(rs, a6.mask_from_labels({2, 4, 5})));
  CHECK(minimal_generators(rs, a6.mask_from_labels({1, 3, 6})).size() == 8);
  CHECK_THROWS_AS(minimal_generators(rs, a6.all_nodes()), Error);

  const auto aff = build_cartan("A2~1");
  const auto ars = generate(aff, 9);
  const auto gens = minimal_generators(ars, aff.mask_from_labels({1, 2}));
  CHECK(gens == unit_I_height_set(generate(aff, 15), aff.mask_from_labels({0})));
  for (const auto& g : gens) CHECK(g[0] == 1);
}

TEST_CASE("two cone formulas") {
  struct Case {
    const char* type;
    std::vector<Rational> p;
  };
  const Case cases[] = {{"A2", {1, Rational(-1, 2)}},
                        {"B2", {Rational(-1, 3), 2}},
                        {"A2", {1, 1}},
                        {"B2", {Rational(-1, 2), Rational(-1, 2)}},
                        {"G2", {0, Rational(1, 2)}}};
  for (const auto& k : cases) {
    const auto c = build_cartan(k.type);
    for (auto kind : {ModuleKind::Simple, ModuleKind::Verma}) {
      ModuleSpec m{kind, hw(k.p), std::nullopt, 0};
      CHECK_MESSAGE(weights_two_ways_agree(c, m, 6), k.type);
      CHECK(weights_of_module(c, m, 6).weights == weights_via_positive_roots(c, m, 6).weights);
    }
  }
}

TEST_CASE("partially integrable simple module") {
  // J = {1}: the top part is the sl2 string {0, 1}, then everything below it.
  const auto c = build_cartan("A2");
  ModuleSpec m{ModuleKind::Simple, hw({1, Rational(-1, 2)}), std::nullopt, 0};
  const auto top = top_part(c, m, 6);
  CHECK(top.weights == std::vector<Depth>{{0, 0}, {1, 0}});
  const auto w = weights_of_module(c, m, 4);
  for (const auto& d : w.weights) CHECK(d[0] <= d[1] + 1);
  CHECK(w.contains({1, 0}));
  CHECK_FALSE(w.contains({2, 0}));
  CHECK(w.contains({2, 1}));
}

TEST_CASE("hull recovery") {
  const auto a2 = build_cartan("A2");
  CHECK(hull_lattice_recover(a2, hw({1, 1}), 6));
  CHECK(hull_lattice_recover(a2, hw({1, 0}), 6));
  CHECK(hull_lattice_recover(a2, hw({2, 1}), 8));
  CHECK(hull_lattice_recover(build_cartan("B2"), hw({1, 1}), 8));
  CHECK(hull_lattice_recover(build_cartan("G2"), hw({1, 0}), 10));
}

TEST_CASE("reflections on weights") {
  const auto c = build_cartan("A2");
  const auto l = hw({1, 1});
  CHECK(reflect_weight(c, l, {0, 0}, 0) == Depth{1, 0});
  CHECK(reflect_weight(c, l, reflect_weight(c, l, {1, 2}, 1), 1) == Depth{1, 2});
  CHECK(weight_pairings(c, l, {2, 2}) == RationalVec{Rational(-1), Rational(-1)});
  CHECK(total_depth({1, 2}) == 3);
}
