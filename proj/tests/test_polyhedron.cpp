#include <random>

#include "doctest.h"
#include "rootspace/cartan.hpp"
#include "rootspace/error.hpp"
#include "rootspace/polyhedron.hpp"
#include "rootspace/roots.hpp"

using namespace rootspace;

namespace {

RationalVec pt(std::initializer_list<int> v) {
  RationalVec out;
  for (int x : v) out.emplace_back(x);
  return out;
}

std::vector<RationalVec> root_points(const RootSystem& rs, bool with_zero) {
  std::vector<RationalVec> out;
  for (const auto& r : rs.all_roots()) out.push_back(to_rational(r));
  if (with_zero) out.push_back(RationalVec(rs.rank(), Rational(0)));
  return out;
}

// Oracle: number of strict vertices of a planar integer point set (monotone chain).
int hull_vertex_count(std::vector<std::pair<long, long>> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return static_cast<int>(p.size());
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i - 1]) <= 0) --k;
    h[k++] = p[i - 1];
  }
  return static_cast<int>(k - 1);
}

}  // namespace

TEST_CASE("A2 hexagon") {
  const auto rs = generate(build_cartan("A2"));
  const auto P = hull(root_points(rs, true));
  CHECK(P.dimension() == 2);
  CHECK(P.affine_dimension() == 2);
  CHECK(P.facets().size() == 6);
  CHECK(P.round_trip_ok());
  CHECK(P.contains(pt({0, 0})));
  CHECK(P.contains(pt({1, 1})));
  CHECK_FALSE(P.contains(pt({2, 1})));
  CHECK(P.contains(RationalVec{Rational(1, 2), Rational(1, 2)}));
  for (const auto& f : P.facets()) CHECK(f.offset == 1);
}

TEST_CASE("degenerate inputs") {
  const auto one = hull({pt({1, 2, 3})});
  CHECK(one.affine_dimension() == 0);
  CHECK(one.contains(pt({1, 2, 3})));
  CHECK_FALSE(one.contains(pt({1, 2, 4})));
  const auto seg = hull({pt({0, 0}), pt({2, 2}), pt({1, 1})});
  CHECK(seg.affine_dimension() == 1);
  CHECK(seg.contains(pt({1, 1})));
  CHECK_FALSE(seg.contains(pt({1, 0})));
  CHECK(seg.facets().size() == 2);
  CHECK_THROWS_AS(hull({}), Error);
  CHECK_THROWS_AS(hull({pt({1, 0, 0, 0, 0})}), Error);
}

TEST_CASE("higher dimensions") {
  std::vector<RationalVec> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(pt({m & 1, (m >> 1) & 1, (m >> 2) & 1}));
  CHECK(hull(cube).facets().size() == 6);
  std::vector<RationalVec> cross;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      RationalVec v(4, Rational(0));
      v[i] = s;
      cross.push_back(v);
    }
  const auto P = hull(cross);
  CHECK(P.facets().size() == 16);
  CHECK(P.round_trip_ok());
  // The A3 root polytope (cuboctahedron in root coordinates): 8 triangles + 6 squares.
  CHECK(hull(root_points(generate(build_cartan("A3")), false)).facets().size() == 14);
}

TEST_CASE("rays") {
  const auto P = hull({pt({0, 0})}, {pt({1, 0}), pt({0, 1})});
  CHECK(P.facets().size() == 2);
  CHECK(P.contains(pt({100, 3})));
  CHECK_FALSE(P.contains(pt({-1, 3})));
  const auto half = hull({pt({0, 0}), pt({1, 0})}, {pt({0, -1})});
  CHECK(half.contains(pt({1, -50})));
  CHECK_FALSE(half.contains(pt({2, -50})));
}

TEST_CASE("random planar sets against monotone chain") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> coord(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RationalVec> X;
    std::vector<std::pair<long, long>> raw;
    const int k = 3 + trial % 9;
    for (int i = 0; i < k; ++i) {
      const int a = coord(gen), b = coord(gen);
      X.push_back(pt({a, b}));
      raw.emplace_back(a, b);
    }
    const auto P = hull(X);
    if (P.affine_dimension() < 2) continue;
    CHECK(static_cast<int>(P.facets().size()) == hull_vertex_count(raw));
    CHECK(P.round_trip_ok());
    for (const auto& x : X) CHECK(P.contains(x));
  }
}

TEST_CASE("exposed faces") {
  const auto rs = generate(build_cartan("A2"));
  const auto X = root_points(rs, true);  // canonical roots then 0
  auto at = [&](const std::vector<int>& idx) {
    std::vector<RationalVec> out;
    for (int i : idx) out.push_back(X[i]);
    return out;
  };
  // (omega_1, x) is the alpha_1 coefficient of x.
  const LinearFunctional w1{RationalVec{Rational(1), Rational(0)}};
  CHECK(at(exposed_face(X, w1)) == std::vector<RationalVec>{pt({1, 1}), pt({1, 0})});
  CHECK(exposed_face(X, LinearFunctional{RationalVec{Rational(0), Rational(0)}}).size() == X.size());
  CHECK(exposed_face(X, {pt({0, -1})}, w1).size() == 2);
  CHECK(exposed_face(X, {pt({1, 0})}, w1).empty());
}

TEST_CASE("smallest faces") {
  const auto rs = generate(build_cartan("A2"));
  const auto D = root_points(rs, false);
  const auto D0 = root_points(rs, true);
  const int a1 = 1, a2 = 2;
  CHECK(smallest_face_containing({a1}, D) == std::vector<int>{a1});
  CHECK(is_maximizer({a1}, D));
  CHECK(smallest_face_containing({6}, D0).size() == 7);
  CHECK_FALSE(is_maximizer({6}, D0));
  CHECK(smallest_face_containing({a1, a2}, D).size() == 6);
  CHECK(smallest_face_containing({0, a1}, D) == std::vector<int>{0, a1});
  const FaceIndex F(D);
  CHECK(F.all_faces().size() == 13);  // 6 vertices, 6 edges, the hexagon
}

TEST_CASE("standard functionals") {
  const auto c = build_cartan("A2");
  const auto rs = generate(c);
  const auto X = root_points(rs, true);
  const auto e = WeylElement::identity(2);
  auto argmax = [&](const LinearFunctional& psi) {
    std::vector<RationalVec> out;
    for (int i : exposed_face(X, psi)) out.push_back(X[i]);
    return out;
  };
  CHECK(argmax(standard_functional(c, e, c.mask_from_labels({1}))) == std::vector<RationalVec>{pt({1, 1}), pt({0, 1})});
  CHECK(argmax(standard_functional(c, e, 0)) == std::vector<RationalVec>{pt({1, 1})});
  const auto s1 = WeylElement::simple_reflection(c, 0);
  CHECK(argmax(standard_functional(c, s1, 0)) == std::vector<RationalVec>{pt({0, 1})});
  CHECK_THROWS_AS(standard_functional(c, e, c.all_nodes()), Error);
  CHECK_THROWS_AS(standard_functional(build_cartan("A1~1"), WeylElement::identity(2), 0), Error);
}
