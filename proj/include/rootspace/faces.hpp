#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rootspace/polyhedron.hpp"
#include "rootspace/roots.hpp"
#include "rootspace/weights.hpp"

namespace rootspace {

enum class AmbientKind { Roots, RootsWithZero, WeightWindow, HullSample };

const char* to_string(AmbientKind k);

/// Subsets are index lists into `elements`, or bitmasks when |X| <= 64.
struct AmbientSet {
  AmbientKind kind = AmbientKind::Roots;
  std::vector<RationalVec> elements;
  /// Height window (affine roots) or depth bound (weights).
  std::optional<int> window;

  int size() const { return static_cast<int>(elements.size()); }
  /// Roots ambients only consider proper subsets.
  bool proper_only() const { return kind == AmbientKind::Roots || kind == AmbientKind::RootsWithZero; }
  std::optional<int> index_of(const RationalVec& x) const;
  std::uint64_t mask_of(const std::vector<RationalVec>& Y) const;
  std::uint64_t all() const { return size() >= 64 ? ~0ull : ((1ull << size()) - 1); }
};

/// Delta (finite, or |ht| <= window for affine systems), optionally with 0.
AmbientSet roots_ambient(const RootSystem& rs, bool with_zero);
/// Delta° or Delta° with 0, for an affine system.
AmbientSet finite_part_ambient(const RootSystem& rs, bool with_zero);
AmbientSet weights_ambient(const WeightSetWindow& w);
AmbientSet explicit_ambient(AmbientKind kind, std::vector<RationalVec> elements);

/// An exact identity sum lhs_i * X[i] = sum rhs_j * X[j] with sum lhs = sum rhs > 0,
/// lhs supported in Y and some rhs term outside Y.
struct ViolationWitness {
  std::vector<std::pair<int, int>> lhs;  // (index, coefficient)
  std::vector<std::pair<int, int>> rhs;
};

bool witness_holds(const AmbientSet& X, std::uint64_t Y, const ViolationWitness& w);

/// For each value of x1 + x2 (x1, x2 in X, unordered, repetition allowed), all pairs attaining it.
class PairSumIndex {
 public:
  explicit PairSumIndex(const AmbientSet& X);

  bool is_closed(std::uint64_t Y) const;
  std::optional<ViolationWitness> violation(std::uint64_t Y) const;
  /// Smallest superset closed under the 212 rule.
  std::uint64_t closure(std::uint64_t Y) const;
  std::size_t class_count() const { return classes_.size(); }

 private:
  struct Pair {
    int a, b;
    std::uint64_t mask;
  };
  std::vector<std::vector<Pair>> classes_;  // only sums attained by >= 2 pairs
};

struct ClosedResult {
  bool closed = false;
  std::optional<ViolationWitness> witness;
};

ClosedResult is_212_closed(const AmbientSet& X, std::uint64_t Y);
std::uint64_t closure_212(const AmbientSet& X, std::uint64_t Y);

/// All nonempty 212-closed subsets (proper ones for root ambients), sorted by
/// size then by index list. Throws TooLarge when |X| > 20.
std::vector<std::uint64_t> enumerate_212(const AmbientSet& X);

struct WeakFaceBounds {
  int max_terms = 6;  // bound on sum r_i = sum t_j
  int max_coeff = 3;
};

/// Bounded search for sum r_i y_i = sum t_j x_j refuting Y as a weak Z-face.
std::optional<ViolationWitness> weak_face_refutation(const AmbientSet& X, std::uint64_t Y, WeakFaceBounds b = {});

/// Sets of X that are maximizers of a linear functional (faces of conv X),
/// proper ones only for root ambients; same order as enumerate_212.
std::vector<std::uint64_t> maximizer_sets(const AmbientSet& X);

std::vector<int> mask_to_indices(std::uint64_t m);
std::vector<RationalVec> subset_points(const AmbientSet& X, std::uint64_t m);
void sort_subsets(std::vector<std::uint64_t>& v);

// Descriptors ---------------------------------------------------------------

struct StandardRoots {
  std::vector<int> w;  // Weyl word (node positions)
  NodeMask I;
};
struct StandardWeights {
  std::vector<int> w;
  NodeMask I;
};
enum class ExceptionalTag { Pi, DeltaPlus, AltTriple };
const char* to_string(ExceptionalTag t);
struct ExceptionalA2 {
  ExceptionalTag tag;
  std::vector<int> w;
};
struct AffineLift {
  std::vector<Root> Z;
};
using FaceDescriptor = std::variant<StandardRoots, StandardWeights, ExceptionalA2, AffineLift>;

std::string describe(const FaceDescriptor& f, const CartanData& c);

/// w[(theta - Z>=0 Pi_I) cap (Delta + {0})], finite type, I proper.
std::vector<Root> realize_standard_roots(const RootSystem& rs, const WeylElement& w, NodeMask I);
/// w[(lambda - Z>=0 Pi_I) cap wt V] in depth coordinates.
std::vector<Depth> realize_standard_weights(const CartanData& c, const WeightSetWindow& wt, const WeylElement& w,
                                            NodeMask I);
/// The 14 sets of W-conjugates of Pi, Delta^+ and {a1, a2, -theta} in A2.
std::vector<std::pair<ExceptionalA2, std::vector<Root>>> exceptional_a2_sets(const RootSystem& rs);

struct RealizedFamily {
  std::map<std::uint64_t, FaceDescriptor> sets;  // mask over X -> first descriptor found
};

RealizedFamily standard_root_family(const RootSystem& rs, const AmbientSet& X);
RealizedFamily exceptional_family(const RootSystem& rs, const AmbientSet& X);
RealizedFamily standard_weight_family(const CartanData& c, const WeightSetWindow& wt, NodeMask I_V,
                                      const AmbientSet& X);

struct Classification {
  enum class Status { Classified, NotClosed, Unclassified } status;
  std::optional<FaceDescriptor> descriptor;
  std::optional<ViolationWitness> witness;
};

Classification classify(const AmbientSet& X, std::uint64_t Y, const std::vector<const RealizedFamily*>& families);

// Affine lift ---------------------------------------------------------------

/// (Z cap short) + Z delta union (Z cap long) + r Z delta, within |ht| <= H.
std::vector<Root> affine_lift(const RootSystem& rs, const std::vector<Root>& Z, int H);

struct AffineReport {
  int H = 0;
  bool with_zero = false;
  bool real_only = false;
  std::size_t subsets_checked = 0;
  std::size_t closed_finite = 0;  // Z closed in the finite part
  std::size_t closed_lifts = 0;   // lift closed in the window
  std::size_t mismatches = 0;
  std::vector<std::vector<Root>> closed_Z;  // sorted
  bool ok() const { return mismatches == 0 && closed_finite == closed_lifts; }
};

/// For every nonempty proper Z of the finite part (with or without 0): the
/// lift is window-212-closed iff Z is 212-closed. Window is |ht| <= H.
/// With real_only the ambient drops the imaginary roots.
AffineReport affine_212_equivalence_check(const CartanData& c, int H, bool with_zero, bool real_only = false);

}  // namespace rootspace
