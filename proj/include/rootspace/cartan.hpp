#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rootspace/rational.hpp"

namespace rootspace {

enum class Family { A, B, C, D, E, F, G };

/// X_N for finite types, X_N^{(r)} for affine types (Kac's labelling; N is the
/// rank of the finite type X_N, so D4^(3) has N = 4 and three nodes).
struct LieType {
  Family family = Family::A;
  int rank = 1;
  std::optional<int> twist;

  bool is_affine() const { return twist.has_value(); }
  /// Number of nodes of the finite part: N for r = 1, the folded rank otherwise.
  int finite_rank() const;
  std::string label() const;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Throws Error(IllegalType) for combinations outside Kac's finite and affine lists.
void validate(const LieType& type);

/// Parses "A6", "A2~1", "A2~2", "D4~3".
LieType parse_lie_type(std::string_view text);

using Matrix = std::vector<std::vector<int>>;
/// Subsets of nodes are bitmasks over positions (not labels).
using NodeMask = std::uint32_t;

inline int popcount(NodeMask m) { return __builtin_popcount(m); }
inline bool contains(NodeMask m, int pos) { return (m >> pos) & 1u; }

/// A validated generalized Cartan matrix, a_ij = <alpha_j, alpha_i^vee>.
///
/// Positions are 0..n-1; `labels` carries the node names (0..l for affine,
/// 1..l for finite, arbitrary for subsystems). The invariant form is
/// (alpha_i, alpha_j) = d_i a_ij with d the minimal positive integer
/// symmetrizer, so the shortest simple roots of each component have squared
/// length 2.
class CartanData {
 public:
  enum class Kind { Finite, Affine };

  CartanData(Matrix matrix, std::vector<int> labels, RationalVec symmetrizer,
             std::optional<LieType> type);

  int size() const { return static_cast<int>(matrix_.size()); }
  int entry(int i, int j) const { return matrix_[i][j]; }
  const Matrix& matrix() const { return matrix_; }
  const std::vector<int>& labels() const { return labels_; }
  const RationalVec& symmetrizer() const { return symmetrizer_; }
  const std::optional<LieType>& type() const { return type_; }
  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_affine() const { return kind_ == Kind::Affine; }
  /// Coefficients of delta (affine only; empty otherwise).
  const std::vector<int>& marks() const { return marks_; }
  int twist() const { return type_ && type_->twist ? *type_->twist : 1; }

  NodeMask all_nodes() const { return size() >= 32 ? ~0u : ((1u << size()) - 1u); }
  int position_of(int label) const;
  NodeMask mask_from_labels(const std::vector<int>& labels) const;
  std::vector<int> labels_of(NodeMask mask) const;
  std::string name() const;

  /// (alpha_i, alpha_j).
  Rational bilinear_form(int i, int j) const { return symmetrizer_[i] * matrix_[i][j]; }
  /// Bilinear extension to integer coefficient vectors.
  Rational bilinear_form(const std::vector<int>& x, const std::vector<int>& y) const;
  /// <x, alpha_i^vee> = sum_j x_j a_ij.
  int pairing(const std::vector<int>& x, int i) const;

  std::int64_t determinant() const;

 private:
  void validate_or_throw();

  Matrix matrix_;
  std::vector<int> labels_;
  RationalVec symmetrizer_;
  std::optional<LieType> type_;
  Kind kind_ = Kind::Finite;
  std::vector<int> marks_;
};

CartanData build_cartan(const LieType& type);
inline CartanData build_cartan(std::string_view label) { return build_cartan(parse_lie_type(label)); }

/// Principal submatrix on J with the inherited symmetrizer.
CartanData subsystem(const CartanData& c, NodeMask J);

/// Minimal positive integer symmetrizer (per connected component).
RationalVec minimal_symmetrizer(const Matrix& m);

/// Exact determinant (fraction-free elimination).
std::int64_t determinant(const Matrix& m);

}  // namespace rootspace
