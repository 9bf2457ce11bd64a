#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "rootspace/cartan.hpp"

namespace rootspace {

/// Integer coefficient vector over the simple roots, in node-position order.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : c_(std::move(coeffs)) {}
  static Root zero(int n) { return Root(std::vector<int>(n, 0)); }
  static Root simple(int n, int i) {
    Root r = zero(n);
    r.c_[i] = 1;
    return r;
  }

  int size() const { return static_cast<int>(c_.size()); }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  const std::vector<int>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Nonzero with all entries >= 0.
  bool is_positive() const;
  bool is_negative() const { return (-*this).is_positive(); }
  /// y - x >= 0 entrywise.
  bool dominated_by(const Root& y) const;

  Root& operator+=(const Root& o);
  Root& operator-=(const Root& o);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator-(Root a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Root operator*(int k, Root a) {
    for (auto& v : a.c_) v *= k;
    return a;
  }

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;

 private:
  std::vector<int> c_;
};

struct RootHash {
  std::size_t operator()(const Root& r) const noexcept;
};

using RootSet = std::unordered_set<Root, RootHash>;

int height(const Root& x);
int height(const Root& x, NodeMask I);

/// Canonical order: descending lexicographic on coefficient vectors, so
/// alpha_1 precedes alpha_2 and positive roots precede negative ones.
struct CanonicalOrder {
  bool operator()(const Root& a, const Root& b) const { return a.coeffs() > b.coeffs(); }
};
void canonical_sort(std::vector<Root>& roots);

enum class Reality { Real, Imaginary };
enum class LengthClass { Short, Intermediate, Long, None };

struct RootClass {
  Reality reality;
  LengthClass length;
};

/// Positive roots of a finite system, or of an affine system up to a height window.
class RootSystem {
 public:
  RootSystem(CartanData cartan, std::optional<int> window, std::vector<Root> positive);

  const CartanData& cartan() const { return cartan_; }
  int rank() const { return cartan_.size(); }
  bool is_finite() const { return cartan_.is_finite(); }
  /// Height bound; empty for finite type (all of Delta^+).
  std::optional<int> window() const { return window_; }
  const std::optional<Root>& delta() const { return delta_; }

  /// Canonically sorted.
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// Delta^+ and -Delta^+ (within the window), canonically sorted.
  std::vector<Root> all_roots() const;

  /// Membership; for affine systems callers must stay within |ht| <= window.
  bool contains(const Root& x) const;
  bool contains_positive(const Root& x) const { return index_.count(x) > 0; }
  /// Like contains, but throws WindowTooSmall when |ht(x)| exceeds the window.
  bool contains_checked(const Root& x) const;

  Rational norm(const Root& x) const { return cartan_.bilinear_form(x.coeffs(), x.coeffs()); }
  bool is_real(const Root& x) const { return norm(x) > 0; }

 private:
  CartanData cartan_;
  std::optional<int> window_;
  std::optional<Root> delta_;
  std::vector<Root> positive_;
  RootSet index_;
};

RootSystem generate_finite(const CartanData& c);
RootSystem generate_affine_window(const CartanData& c, int H);
/// Finite: all of Delta^+; affine: window H.
RootSystem generate(const CartanData& c, int H = 0);

RootClass classify_root(const RootSystem& rs, const Root& beta);

/// Finite part Delta° on nodes 1..l (embedded with alpha_0 coefficient 0) and
/// its short and long classes. In the twisted affine case with a single-length
/// finite part (A_2^(2)), the finite part is classified as long.
struct FinitePartSets {
  std::vector<Root> all;
  std::vector<Root> short_roots;
  std::vector<Root> long_roots;
};
FinitePartSets finite_part_sets(const RootSystem& rs);

/// Delta_{I,1}: all roots of I-height one. For affine systems the result is
/// complete: the search window is derived from delta and extended as needed.
std::vector<Root> unit_I_height_set(const RootSystem& rs, NodeMask I);

/// Height window that contains every root of I-height one (affine), or 0 for finite type.
int unit_height_window(const CartanData& c, NodeMask I);

/// Element of the Weyl group acting on root coordinates: x -> M x.
class WeylElement {
 public:
  static WeylElement identity(int n);
  static WeylElement simple_reflection(const CartanData& c, int i);

  const std::vector<int>& word() const { return word_; }
  const Matrix& matrix() const { return m_; }
  Root apply(const Root& x) const;
  /// (this * s_i): apply s_i first.
  WeylElement times_reflection(const CartanData& c, int i) const;
  WeylElement compose(const WeylElement& rhs) const;  // this after rhs

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }

 private:
  std::vector<int> word_;
  Matrix m_;
};

Root reflect(const CartanData& c, int i, const Root& x);

/// All elements of W_J (finite), shortest words first. Throws InfiniteOrbit
/// if more than `cap` elements are generated.
std::vector<WeylElement> weyl_group(const CartanData& c, NodeMask J, std::size_t cap = 200000);

/// W_J-orbit of x, canonically sorted. Throws InfiniteOrbit if the height of
/// an orbit element exceeds `height_bound`.
std::vector<Root> orbit(const CartanData& c, NodeMask J, const Root& x, int height_bound = 4096);

}  // namespace rootspace
