#include <map>
#include <set>

#include "doctest.h"
#include "rootspace/cartan.hpp"
#include "rootspace/error.hpp"
#include "rootspace/psp.hpp"
#include "rootspace/roots.hpp"

using namespace rootspace;

namespace {

// Independent certificate check: sums, unit I-heights and positive partial sums.
bool certificate_ok(const PspDecomposition& d, const RootSystem& rs) {
  if (d.gammas.empty()) return false;
  Root s = Root::zero(rs.rank());
  for (const auto& g : d.gammas) {
    if (height(g, d.I) != 1 || !rs.contains_positive(g)) return false;
    s += g;
    if (!rs.contains_positive(s)) return false;
  }
  return s == d.beta;
}

// Exhaustive oracle: does any ordered list over Delta_{I,1} with root partial sums reach beta?
bool exists_decomposition(const Root& beta, NodeMask I, const RootSystem& rs) {
  const auto gens = unit_I_height_set(rs, I);
  std::map<Root, bool> memo;
  auto reach = [&](auto&& self, const Root& s) -> bool {
    if (s == beta) return true;
    if (const auto it = memo.find(s); it != memo.end()) return it->second;
    bool ok = false;
    for (const auto& g : gens) {
      const Root t = s + g;
      if (t.dominated_by(beta) && rs.contains_positive(t) && self(self, t)) {
        ok = true;
        break;
      }
    }
    return memo[s] = ok;
  };
  for (const auto& g : gens)
    if (g.dominated_by(beta) && reach(reach, g)) return true;
  return false;
}

}  // namespace

TEST_CASE("A6 example") {
  const auto c = build_cartan("A6");
  const auto rs = generate(c);
  const NodeMask I = c.mask_from_labels({2, 4, 5});
  const Root beta({1, 1, 1, 1, 1, 1});
  const Root g = one_step(beta, I, rs);
  CHECK(height(g, I) == 1);
  CHECK(rs.contains_positive(beta - g));

  PspDecomposition listed{beta, I, {Root({1, 1, 0, 0, 0, 0}), Root({0, 0, 1, 1, 0, 0}), Root({0, 0, 0, 0, 1, 1})}};
  CHECK(verify(listed, rs).ok);
  CHECK(certificate_ok(listed, rs));
  PspDecomposition shuffled{beta, I, {Root({0, 0, 0, 0, 1, 1}), Root({1, 1, 0, 0, 0, 0}), Root({0, 0, 1, 1, 0, 0})}};
  const auto v = verify(shuffled, rs);
  CHECK_FALSE(v.ok);
  CHECK(v.index == 1);

  const auto d = decompose(beta, I, rs);
  CHECK(d.gammas.size() == 3);
  CHECK(verify(d, rs).ok);
  CHECK(certificate_ok(d, rs));
}

TEST_CASE("small cases") {
  const auto c = build_cartan("A2");
  const auto rs = generate(c);
  CHECK(one_step(Root({1, 1}), c.all_nodes(), rs) == Root({1, 0}));
  CHECK_THROWS_AS(one_step(Root({1, 0}), c.all_nodes(), rs), Error);
  const auto d = decompose(Root({1, 1}), c.mask_from_labels({1}), rs);
  CHECK(d.gammas == std::vector<Root>{Root({1, 1})});
  PspDecomposition simple{Root({1, 1}), c.all_nodes(), {Root({1, 0}), Root({0, 1})}};
  CHECK(verify(simple, rs).ok);
  CHECK_THROWS_AS(decompose(Root({2, 1}), c.all_nodes(), rs), Error);
  CHECK_THROWS_AS(decompose(Root({0, 1}), c.mask_from_labels({1}), rs), Error);
}

TEST_CASE("finite sweep agrees with the exhaustive oracle") {
  for (const char* label : {"A3", "B3", "C3", "G2", "D4"}) {
    const auto c = build_cartan(label);
    const auto rs = generate(c);
    for (NodeMask I = 1; I <= c.all_nodes(); ++I)
      for (const auto& beta : rs.positive_roots()) {
        if (height(beta, I) <= 0) continue;
        REQUIRE(exists_decomposition(beta, I, rs));
        const auto d = decompose(beta, I, rs);
        CHECK_MESSAGE(certificate_ok(d, rs), label);
        CHECK(verify(d, rs).ok);
        CHECK(d.gammas.size() == static_cast<std::size_t>(height(beta, I)));
      }
  }
}

TEST_CASE("affine windows") {
  for (const char* label : {"A1~1", "A2~1", "A2~2", "C2~1"}) {
    const auto c = build_cartan(label);
    const auto rs = generate(c, 14);
    PspTelemetry tel;
    for (NodeMask I = 1; I <= c.all_nodes(); ++I)
      for (const auto& beta : rs.positive_roots()) {
        if (height(beta, I) <= 0) continue;
        const auto d = decompose(beta, I, rs, &tel);
        CHECK_MESSAGE(certificate_ok(d, rs), label);
      }
  }
}

TEST_CASE("verify rejects malformed lists") {
  const auto c = build_cartan("B2");
  const auto rs = generate(c);
  const NodeMask I = c.mask_from_labels({2});
  CHECK_FALSE(verify(PspDecomposition{Root({1, 2}), I, {Root({1, 1})}}, rs).ok);
  CHECK_FALSE(verify(PspDecomposition{Root({1, 2}), I, {Root({1, 1}), Root({1, 1})}}, rs).ok);
  CHECK_FALSE(verify(PspDecomposition{Root({1, 2}), I, {}}, rs).ok);
  CHECK(verify(PspDecomposition{Root({1, 2}), I, {Root({1, 1}), Root({0, 1})}}, rs).ok);
}
