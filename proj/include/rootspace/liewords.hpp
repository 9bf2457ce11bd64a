#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rootspace/roots.hpp"

namespace rootspace {

/// Chevalley structure constants [e_a, e_b] = N(a, b) e_{a+b} of a finite type,
/// fixed by N = +(p+1) on extraspecial pairs for the order (height, then lex).
class StructureTable {
 public:
  const CartanData& cartan() const { return rs_.cartan(); }
  const RootSystem& roots() const { return rs_; }
  /// Positive roots in the chosen total order.
  const std::vector<Root>& order() const { return order_; }
  const std::vector<std::pair<Root, Root>>& extraspecial_pairs() const { return extraspecial_; }

  bool is_root(const Root& a) const { return rs_.contains(a); }
  /// Requires a + b in Delta; throws InvalidArgument otherwise.
  std::int64_t N(const Root& a, const Root& b) const;
  /// All pairs with a + b a root, keyed (a, b).
  const std::map<std::pair<Root, Root>, std::int64_t>& constants() const { return all_; }

  /// |N(a,b)| = p+1, antisymmetry and N(-a,-b) = -N(a,b) on every pair.
  bool check_invariants() const;
  /// Jacobi identity on all triples of basis elements of the full algebra.
  bool check_jacobi() const;
  /// Copy with N(a, b) = n and N(b, a) = -n, other constants untouched.
  StructureTable with_override(const Root& a, const Root& b, std::int64_t n) const;

 private:
  friend StructureTable build_constants(const CartanData& c);
  explicit StructureTable(RootSystem rs) : rs_(std::move(rs)) {}

  RootSystem rs_;
  std::vector<Root> order_;
  std::vector<std::pair<Root, Root>> extraspecial_;
  std::map<std::pair<Root, Root>, std::int64_t> all_;
};

/// Finite type of rank <= 6. Throws NotFiniteType / NotSupported. The
/// invariants and the Jacobi identity are verified before returning.
StructureTable build_constants(const CartanData& c);

/// The coefficient c with [e_{g_m}, [..., [e_{g_2}, e_{g_1}]...]] = c e_{sum}; 0
/// as soon as a partial sum is not a root. Throws InvalidArgument for an empty
/// word or a zero partial sum.
std::int64_t evaluate(const std::vector<Root>& word, const StructureTable& t);

struct LieWordWitness {
  std::vector<Root> word;
  std::int64_t coefficient = 0;
};

/// Nonzero right-normed word in Delta_{I,1} with sum beta. Throws NoWordFound.
LieWordWitness verify_spanning(const Root& beta, NodeMask I, const StructureTable& t);

}  // namespace rootspace
