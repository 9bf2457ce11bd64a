#include "rootspace/roots.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "rootspace/error.hpp"

namespace rootspace {

bool Root::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int v) { return v == 0; });
}

bool Root::is_positive() const {
  bool any = false;
  for (int v : c_) {
    if (v < 0) return false;
    any |= v > 0;
  }
  return any;
}

bool Root::dominated_by(const Root& y) const {
  for (int i = 0; i < size(); ++i)
    if (c_[i] > y.c_[i]) return false;
  return true;
}

Root& Root::operator+=(const Root& o) {
  for (int i = 0; i < size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Root& Root::operator-=(const Root& o) {
  for (int i = 0; i < size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

std::size_t RootHash::operator()(const Root& r) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int v : r.coeffs()) h = (h ^ static_cast<std::size_t>(v + 0x51ed)) * 0x100000001b3ull;
  return h;
}

int height(const Root& x) {
  int s = 0;
  for (int v : x.coeffs()) s += v;
  return s;
}

int height(const Root& x, NodeMask I) {
  int s = 0;
  for (int i = 0; i < x.size(); ++i)
    if (contains(I, i)) s += x[i];
  return s;
}

void canonical_sort(std::vector<Root>& roots) { std::sort(roots.begin(), roots.end(), CanonicalOrder{}); }

RootSystem::RootSystem(CartanData cartan, std::optional<int> window, std::vector<Root> positive)
    : cartan_(std::move(cartan)), window_(window), positive_(std::move(positive)) {
  canonical_sort(positive_);
  index_.insert(positive_.begin(), positive_.end());
  if (cartan_.is_affine()) delta_ = Root(cartan_.marks());
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_;
  for (const auto& r : positive_) out.push_back(-r);
  canonical_sort(out);
  return out;
}

bool RootSystem::contains(const Root& x) const {
  if (x.is_positive()) return index_.count(x) > 0;
  if (x.is_negative()) return index_.count(-x) > 0;
  return false;
}

bool RootSystem::contains_checked(const Root& x) const {
  if (window_ && std::abs(height(x)) > *window_)
    throw Error(ErrorKind::WindowTooSmall, "membership query beyond height window " + std::to_string(*window_));
  return contains(x);
}

Root reflect(const CartanData& c, int i, const Root& x) {
  Root y = x;
  y[i] -= c.pairing(x.coeffs(), i);
  return y;
}

namespace {

// Positive real roots up to height H (unbounded if H <= 0) by upward reflection closure.
std::vector<Root> real_positive_closure(const CartanData& c, int H) {
  const int n = c.size();
  RootSet seen;
  std::queue<Root> todo;
  for (int i = 0; i < n; ++i) {
    Root e = Root::simple(n, i);
    seen.insert(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    Root b = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      const int k = c.pairing(b.coeffs(), i);
      if (k >= 0) continue;
      Root up = b;
      up[i] -= k;
      if (H > 0 && height(up) > H) continue;
      if (seen.insert(up).second) todo.push(std::move(up));
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

RootSystem generate_finite(const CartanData& c) {
  if (!c.is_finite()) throw Error(ErrorKind::NotFiniteType, c.name());
  return RootSystem(c, std::nullopt, real_positive_closure(c, 0));
}

RootSystem generate_affine_window(const CartanData& c, int H) {
  if (!c.is_affine()) throw Error(ErrorKind::NotAffineType, c.name());
  const Root delta(c.marks());
  const int hd = height(delta);
  if (H < hd) throw Error(ErrorKind::WindowTooSmall, "window " + std::to_string(H) + " < ht(delta) = " + std::to_string(hd));
  auto roots = real_positive_closure(c, H);
  for (int k = 1; k * hd <= H; ++k) roots.push_back(k * delta);
  return RootSystem(c, H, std::move(roots));
}

RootSystem generate(const CartanData& c, int H) {
  if (c.is_finite()) return generate_finite(c);
  return generate_affine_window(c, H);
}

RootClass classify_root(const RootSystem& rs, const Root& beta) {
  const Rational nb = rs.norm(beta);
  if (nb <= 0) return {Reality::Imaginary, LengthClass::None};
  Rational lo = -1, hi = -1;
  for (const auto& r : rs.positive_roots()) {
    const Rational nr = rs.norm(r);
    if (nr <= 0) continue;
    if (lo < 0 || nr < lo) lo = nr;
    if (hi < 0 || nr > hi) hi = nr;
  }
  if (nb == hi) return {Reality::Real, LengthClass::Long};
  if (nb == lo) return {Reality::Real, LengthClass::Short};
  return {Reality::Real, LengthClass::Intermediate};
}

FinitePartSets finite_part_sets(const RootSystem& rs) {
  const auto& c = rs.cartan();
  if (!c.is_affine()) throw Error(ErrorKind::NotAffineType, c.name());
  const NodeMask finite_nodes = c.all_nodes() & ~1u;
  const auto sub = generate_finite(subsystem(c, finite_nodes));
  FinitePartSets out;
  for (const auto& r : sub.positive_roots()) {
    std::vector<int> v(c.size(), 0);
    for (int i = 0; i < sub.rank(); ++i) v[i + 1] = r[i];
    out.all.push_back(Root(v));
    out.all.push_back(-Root(v));
  }
  canonical_sort(out.all);
  Rational lo = -1, hi = -1;
  for (const auto& r : out.all) {
    const auto n = rs.norm(r);
    if (lo < 0 || n < lo) lo = n;
    if (hi < 0 || n > hi) hi = n;
  }
  const bool single_length = lo == hi;
  for (const auto& r : out.all) {
    const auto n = rs.norm(r);
    if (n == hi) out.long_roots.push_back(r);
    if (n == lo && !(single_length && c.twist() > 1)) out.short_roots.push_back(r);
  }
  return out;
}

int unit_height_window(const CartanData& c, NodeMask I) {
  if (c.is_finite()) return 0;
  const Root delta(c.marks());
  const int hd = height(delta);
  const int hId = height(delta, I);
  // Every real root is gamma + n delta with |ht(gamma)|, |ht_I(gamma)| <= ht(delta).
  int imax = hId;
  const auto sub = generate_finite(subsystem(c, c.all_nodes() & ~1u));
  for (const auto& r : sub.positive_roots()) {
    int hi = 0;
    for (int i = 0; i < sub.rank(); ++i)
      if (contains(I, i + 1)) hi += r[i];
    imax = std::max(imax, hi);
  }
  return hd + ((1 + imax) / hId + 1) * hd;
}

std::vector<Root> unit_I_height_set(const RootSystem& rs, NodeMask I) {
  if (I == 0) throw Error(ErrorKind::EmptyI, "I must be nonempty");
  std::optional<RootSystem> bigger;
  const RootSystem* src = &rs;
  if (!rs.is_finite()) {
    const int need = unit_height_window(rs.cartan(), I);
    if (*rs.window() < need) {
      bigger.emplace(generate_affine_window(rs.cartan(), need));
      src = &*bigger;
    }
  }
  std::vector<Root> out;
  for (const auto& r : src->positive_roots())
    if (height(r, I) == 1) out.push_back(r);
  canonical_sort(out);
  return out;
}

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.m_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) w.m_[i][i] = 1;
  return w;
}

WeylElement WeylElement::simple_reflection(const CartanData& c, int i) {
  return identity(c.size()).times_reflection(c, i);
}

Root WeylElement::apply(const Root& x) const {
  const int n = x.size();
  Root y = Root::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += m_[i][j] * x[j];
  return y;
}

WeylElement WeylElement::times_reflection(const CartanData& c, int i) const {
  // (M s_i) e_j = M (e_j - a_ij e_i)
  WeylElement w = *this;
  const int n = c.size();
  for (int r = 0; r < n; ++r) {
    const int mi = m_[r][i];
    for (int j = 0; j < n; ++j) w.m_[r][j] = m_[r][j] - c.entry(i, j) * mi;
  }
  w.word_.push_back(i);
  return w;
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  WeylElement w;
  const int n = static_cast<int>(m_.size());
  w.m_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (m_[i][k])
        for (int j = 0; j < n; ++j) w.m_[i][j] += m_[i][k] * rhs.m_[k][j];
  w.word_ = rhs.word_;
  w.word_.insert(w.word_.begin(), word_.begin(), word_.end());
  return w;
}

std::vector<WeylElement> weyl_group(const CartanData& c, NodeMask J, std::size_t cap) {
  std::vector<WeylElement> out{WeylElement::identity(c.size())};
  std::set<Matrix> seen{out.front().matrix()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < c.size(); ++i) {
      if (!contains(J, i)) continue;
      auto w = out[k].times_reflection(c, i);
      if (seen.insert(w.matrix()).second) {
        out.push_back(std::move(w));
        if (out.size() > cap) throw Error(ErrorKind::InfiniteOrbit, "Weyl group W_J exceeds cap");
      }
    }
  }
  return out;
}

std::vector<Root> orbit(const CartanData& c, NodeMask J, const Root& x, int height_bound) {
  RootSet seen{x};
  std::vector<Root> out{x};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int j = 0; j < c.size(); ++j) {
      if (!contains(J, j)) continue;
      Root y = reflect(c, j, out[k]);
      if (std::abs(height(y)) > height_bound)
        throw Error(ErrorKind::InfiniteOrbit, "orbit height exceeds " + std::to_string(height_bound));
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  canonical_sort(out);
  return out;
}

}  // namespace rootspace
