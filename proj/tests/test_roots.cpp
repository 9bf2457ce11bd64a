#include <set>

#include "doctest.h"
#include "rootspace/cartan.hpp"
#include "rootspace/error.hpp"
#include "rootspace/roots.hpp"

using namespace rootspace;

namespace {

// Brute-force oracle: Delta = W . Pi for finite types, via explicit reflections.
std::set<std::vector<int>> weyl_orbit_of_simple_roots(const CartanData& c) {
  const int n = c.size();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> stack;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    stack.push_back(e);
  }
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += x[j] * c.entry(i, j);
      auto y = x;
      y[i] -= p;
      stack.push_back(y);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("positive root counts") {
  const std::pair<const char*, std::size_t> table[] = {
      {"A1", 1},  {"A2", 3},  {"A3", 6},  {"A6", 21}, {"B2", 4},  {"B3", 9},  {"C4", 16},
      {"D4", 12}, {"D5", 20}, {"E6", 36}, {"E7", 63}, {"E8", 120}, {"F4", 24}, {"G2", 6}};
  for (const auto& [label, count] : table)
    CHECK_MESSAGE(generate_finite(build_cartan(label)).positive_roots().size() == count, label);
}

TEST_CASE("finite roots equal the Weyl orbit of the simple roots") {
  for (const char* label : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    const auto c = build_cartan(label);
    const auto rs = generate_finite(c);
    std::set<std::vector<int>> got;
    for (const auto& r : rs.all_roots()) got.insert(r.coeffs());
    CHECK_MESSAGE(got == weyl_orbit_of_simple_roots(c), label);
  }
}

TEST_CASE("A2 and A6 roots") {
  const auto rs = generate_finite(build_cartan("A2"));
  CHECK(rs.positive_roots() == std::vector<Root>{Root({1, 1}), Root({1, 0}), Root({0, 1})});
  CHECK(rs.all_roots().size() == 6);
  const auto a6 = generate_finite(build_cartan("A6"));
  for (const auto& r : a6.positive_roots()) {
    int first = -1, last = -1;
    for (int i = 0; i < 6; ++i) {
      CHECK(r[i] <= 1);
      if (r[i]) {
        if (first < 0) first = i;
        last = i;
      }
    }
    CHECK(height(r) == last - first + 1);
  }
}

TEST_CASE("heights") {
  const auto c = build_cartan("A6");
  const Root beta({1, 1, 1, 1, 1, 1});
  CHECK(height(beta) == 6);
  CHECK(height(beta, c.mask_from_labels({2, 4, 5})) == 3);
}

TEST_CASE("canonical order") {
  std::vector<Root> v{Root({0, 1}), Root({-1, 0}), Root({1, 0}), Root({1, 1})};
  canonical_sort(v);
  CHECK(v == std::vector<Root>{Root({1, 1}), Root({1, 0}), Root({0, 1}), Root({-1, 0})});
}

TEST_CASE("unit I-height set, A6 example") {
  const auto c = build_cartan("A6");
  const auto rs = generate(c);
  const auto got = unit_I_height_set(rs, c.mask_from_labels({2, 4, 5}));
  std::vector<Root> expected{Root({0, 1, 0, 0, 0, 0}), Root({1, 1, 0, 0, 0, 0}), Root({0, 1, 1, 0, 0, 0}),
                             Root({1, 1, 1, 0, 0, 0}), Root({0, 0, 0, 1, 0, 0}), Root({0, 0, 1, 1, 0, 0}),
                             Root({0, 0, 0, 0, 1, 0}), Root({0, 0, 0, 0, 1, 1})};
  canonical_sort(expected);
  CHECK(got == expected);
}

TEST_CASE("unit I-height set with I everything is Pi") {
  for (const char* label : {"B3", "G2", "A2~1", "A2~2"}) {
    const auto c = build_cartan(label);
    const auto rs = generate(c, 8);
    std::vector<Root> pi;
    for (int i = 0; i < c.size(); ++i) pi.push_back(Root::simple(c.size(), i));
    canonical_sort(pi);
    CHECK_MESSAGE(unit_I_height_set(rs, c.all_nodes()) == pi, label);
  }
}

TEST_CASE("affine A1: roots and unit height") {
  // Oracle: real roots are +-alpha_1 + n delta, imaginary roots n delta, delta = (1, 1).
  const auto c = build_cartan("A1~1");
  for (int H : {10, 20}) {
    const auto rs = generate(c, H);
    std::set<Root> expected;
    for (int n = 0; 2 * n + 1 <= H; ++n) {
      expected.insert(Root({n, n + 1}));
      expected.insert(Root({n + 1, n}));
    }
    for (int n = 1; 2 * n <= H; ++n) expected.insert(Root({n, n}));
    CHECK(std::set<Root>(rs.positive_roots().begin(), rs.positive_roots().end()) == expected);
    const auto unit = unit_I_height_set(rs, c.mask_from_labels({1}));
    CHECK(std::set<Root>(unit.begin(), unit.end()) == std::set<Root>{Root({0, 1}), Root({1, 1}), Root({2, 1})});
  }
}

TEST_CASE("empty I") {
  const auto rs = generate(build_cartan("A2"));
  try {
    unit_I_height_set(rs, 0);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EmptyI);
  }
  CHECK_THROWS_AS(generate_affine_window(build_cartan("A2~1"), 2), Error);
}

TEST_CASE("classification") {
  const auto rs = generate(build_cartan("A2~1"), 9);
  CHECK(classify_root(rs, Root({1, 1, 1})).reality == Reality::Imaginary);
  CHECK(classify_root(rs, Root({1, 1, 0})).reality == Reality::Real);
  CHECK(rs.contains(Root({-2, -2, -2})));
  CHECK_FALSE(rs.contains(Root({0, 0, 0})));
  const auto fp = finite_part_sets(rs);
  CHECK(fp.all.size() == 6);
  CHECK(fp.long_roots.size() == 6);

  const auto b2 = generate(build_cartan("C2~1"), 12);
  const auto fb = finite_part_sets(b2);
  CHECK(fb.short_roots.size() == 4);
  CHECK(fb.long_roots.size() == 4);

  const auto tw = finite_part_sets(generate(build_cartan("A2~2"), 12));
  CHECK(tw.all.size() == 2);
  CHECK(tw.long_roots.size() == 2);
  CHECK(tw.short_roots.empty());

  const auto g2 = generate_finite(build_cartan("G2"));
  CHECK(classify_root(g2, Root({1, 0})).length == LengthClass::Short);
  CHECK(classify_root(g2, Root({0, 1})).length == LengthClass::Long);
}

TEST_CASE("window checks") {
  const auto rs = generate(build_cartan("A1~1"), 4);
  CHECK_THROWS_AS(rs.contains_checked(Root({5, 5})), Error);
  CHECK(rs.contains_checked(Root({2, 2})));
}

TEST_CASE("Weyl groups") {
  const std::pair<const char*, std::size_t> table[] = {{"A2", 6}, {"B2", 8}, {"G2", 12}, {"A3", 24}, {"B3", 48}};
  for (const auto& [label, order] : table) {
    const auto c = build_cartan(label);
    CHECK_MESSAGE(weyl_group(c, c.all_nodes()).size() == order, label);
  }
  const auto c = build_cartan("B3");
  const Root x({1, 2, 2});
  for (int i = 0; i < 3; ++i) CHECK(reflect(c, i, reflect(c, i, x)) == x);
  CHECK(orbit(c, c.all_nodes(), Root({1, 0, 0})).size() == 12);  // long roots of B3
  const auto aff = build_cartan("A1~1");
  CHECK_THROWS_AS(orbit(aff, aff.all_nodes(), Root({0, 1}), 20), Error);
}
