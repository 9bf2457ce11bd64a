#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rootspace/rational.hpp"
#include "rootspace/roots.hpp"

namespace rootspace {

using IntVec = std::vector<std::int64_t>;

/// Facet as the inequality normal . x <= offset (outer normal), primitive integers.
struct Facet {
  IntVec normal;
  std::int64_t offset = 0;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// conv(points) + cone(rays) with its irredundant H-representation.
class Polyhedron {
 public:
  int dimension() const { return ambient_dim_; }
  /// Dimension of the affine hull.
  int affine_dimension() const { return affine_dim_; }
  const std::vector<RationalVec>& points() const { return points_; }
  const std::vector<RationalVec>& rays() const { return rays_; }
  /// Canonically sorted.
  const std::vector<Facet>& facets() const { return facets_; }
  /// Linear equations e . x = e0 cutting out the affine hull, stored as (e, e0).
  const std::vector<Facet>& equations() const { return equations_; }

  bool contains(const RationalVec& x) const;
  bool on_facet(const RationalVec& x, std::size_t facet) const;

  /// Regenerates each facet from the generators tight on it and compares.
  bool round_trip_ok() const;

 private:
  friend Polyhedron hull(const std::vector<RationalVec>& points, const std::vector<RationalVec>& rays);

  int ambient_dim_ = 0;
  int affine_dim_ = 0;
  std::vector<RationalVec> points_;
  std::vector<RationalVec> rays_;
  std::vector<Facet> facets_;
  std::vector<Facet> equations_;
};

/// Exact hull by double description on homogenised integer generators.
/// Throws DimensionTooLarge above dimension 4, InvalidArgument without points.
Polyhedron hull(const std::vector<RationalVec>& points, const std::vector<RationalVec>& rays = {});

struct LinearFunctional {
  RationalVec normal;
  Rational operator()(const RationalVec& x) const;
};

/// Indices of the maximisers of psi over X (sorted).
std::vector<int> exposed_face(const std::vector<RationalVec>& X, const LinearFunctional& psi);
/// Same over conv(X) + cone(rays): empty when psi is unbounded above on a ray.
std::vector<int> exposed_face(const std::vector<RationalVec>& X, const std::vector<RationalVec>& rays,
                              const LinearFunctional& psi);

/// Face structure of a finite point set X (|X| <= 64) as bitmasks over X.
class FaceIndex {
 public:
  explicit FaceIndex(std::vector<RationalVec> X);

  int size() const { return static_cast<int>(X_.size()); }
  std::uint64_t all() const { return size() == 64 ? ~0ull : ((1ull << size()) - 1); }
  const Polyhedron& polyhedron() const { return poly_; }
  const std::vector<std::uint64_t>& facet_masks() const { return facet_masks_; }

  /// X-points of the smallest face of conv(X) containing Y.
  std::uint64_t smallest_face(std::uint64_t Y) const;
  bool is_maximizer(std::uint64_t Y) const { return Y != 0 && smallest_face(Y) == Y; }
  /// X-point sets of all nonempty faces, including X itself; sorted.
  std::vector<std::uint64_t> all_faces() const;

 private:
  std::vector<RationalVec> X_;
  Polyhedron poly_;
  std::vector<std::uint64_t> facet_masks_;
};

/// Index-based conveniences over an explicit X.
std::vector<int> smallest_face_containing(const std::vector<int>& Y, const std::vector<RationalVec>& X);
bool is_maximizer(const std::vector<int>& Y, const std::vector<RationalVec>& X);

/// (w sum_{j not in I} omega_j, -) in simple-root coordinates. Finite type only.
LinearFunctional standard_functional(const CartanData& c, const WeylElement& w, NodeMask I);

RationalVec to_rational(const Root& r);
RationalVec to_rational(const std::vector<int>& v);

}  // namespace rootspace
