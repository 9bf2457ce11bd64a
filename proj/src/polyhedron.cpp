#include "rootspace/polyhedron.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rootspace/error.hpp"

namespace rootspace {

namespace {

using i128 = __int128;

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

void make_primitive(IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = gcd64(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorKind::TooLarge, "integer overflow in hull computation");
  return static_cast<std::int64_t>(v);
}

i128 dot(const IntVec& a, const IntVec& b) {
  i128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
  return s;
}

int rank_of(const std::vector<IntVec>& vs) {
  if (vs.empty()) return 0;
  std::vector<std::vector<i128>> a;
  for (const auto& v : vs) a.emplace_back(v.begin(), v.end());
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a.front().size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = rank;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const i128 f = a[i][col], p = a[rank][col];
      i128 g = 0;
      for (int j = 0; j < cols; ++j) {
        a[i][j] = a[i][j] * p - a[rank][j] * f;
        i128 x = a[i][j] < 0 ? -a[i][j] : a[i][j];
        while (x) { const i128 t = g % x; g = x; x = t; }
      }
      if (g > 1)
        for (int j = 0; j < cols; ++j) a[i][j] /= g;
    }
    ++rank;
  }
  return rank;
}

i128 det128(std::vector<std::vector<i128>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Vector orthogonal to r-1 independent vectors in Z^r (generalised cross product).
IntVec cross(const std::vector<IntVec>& rows, int r) {
  IntVec y(r);
  for (int k = 0; k < r; ++k) {
    std::vector<std::vector<i128>> m;
    for (const auto& row : rows) {
      std::vector<i128> rr;
      for (int j = 0; j < r; ++j)
        if (j != k) rr.push_back(row[j]);
      m.push_back(std::move(rr));
    }
    const i128 d = det128(std::move(m));
    y[k] = narrow((k % 2 ? -d : d));
  }
  make_primitive(y);
  return y;
}

// Integer basis of {e : e . v = 0 for all v in vs}, vectors of length k.
std::vector<IntVec> nullspace(const std::vector<IntVec>& vs, int k) {
  std::vector<RationalVec> a;
  for (const auto& v : vs) {
    RationalVec row(k);
    for (int j = 0; j < k; ++j) row[j] = v[j];
    a.push_back(std::move(row));
  }
  std::vector<int> pivots;
  int row = 0;
  const int rows = static_cast<int>(a.size());
  std::vector<int> free_cols;
  for (int col = 0; col < k; ++col) {
    int piv = row;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(a[piv], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (int j = 0; j < k; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<IntVec> out;
  for (int fc : free_cols) {
    RationalVec x(k, Rational(0));
    x[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][fc];
    std::int64_t den = 1;
    for (const auto& v : x) den = std::lcm(den, v.denominator());
    IntVec e(k);
    for (int j = 0; j < k; ++j) e[j] = (x[j] * den).numerator();
    make_primitive(e);
    out.push_back(std::move(e));
  }
  return out;
}

struct Ray {
  IntVec y;
  std::vector<bool> tight;  // over processed constraints
};

// Extreme rays of {y in R^r : c . y >= 0 for all c}, constraints spanning R^r.
std::vector<IntVec> double_description(const std::vector<IntVec>& cons, int r) {
  std::vector<int> basis;
  {
    std::vector<IntVec> picked;
    for (int i = 0; i < static_cast<int>(cons.size()) && static_cast<int>(picked.size()) < r; ++i) {
      picked.push_back(cons[i]);
      if (rank_of(picked) == static_cast<int>(picked.size())) {
        basis.push_back(i);
      } else {
        picked.pop_back();
      }
    }
  }
  std::vector<int> processed = basis;
  std::vector<Ray> rays;
  for (int j = 0; j < r; ++j) {
    std::vector<IntVec> others;
    for (int i = 0; i < r; ++i)
      if (i != j) others.push_back(cons[basis[i]]);
    IntVec y = r == 1 ? IntVec{1} : cross(others, r);
    if (dot(cons[basis[j]], y) < 0)
      for (auto& v : y) v = -v;
    std::vector<bool> tight(r);
    for (int i = 0; i < r; ++i) tight[i] = (i != j);
    rays.push_back({std::move(y), std::move(tight)});
  }
  std::vector<bool> in_basis(cons.size(), false);
  for (int b : basis) in_basis[b] = true;

  for (std::size_t ci = 0; ci < cons.size(); ++ci) {
    if (in_basis[ci]) continue;
    const auto& c = cons[ci];
    std::vector<i128> s(rays.size());
    bool any_neg = false;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(c, rays[k].y);
      any_neg |= s[k] < 0;
    }
    if (!any_neg) {
      for (std::size_t k = 0; k < rays.size(); ++k) rays[k].tight.push_back(s[k] == 0);
      processed.push_back(static_cast<int>(ci));
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (s[k] >= 0) {
        Ray keep = rays[k];
        keep.tight.push_back(s[k] == 0);
        next.push_back(std::move(keep));
      }
    }
    const std::size_t m = rays.front().tight.size();
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (s[q] >= 0) continue;
        std::vector<bool> common(m);
        int count = 0;
        for (std::size_t t = 0; t < m; ++t) {
          common[t] = rays[p].tight[t] && rays[q].tight[t];
          count += common[t];
        }
        if (count < r - 2) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == q) continue;
          bool superset = true;
          for (std::size_t t = 0; t < m && superset; ++t)
            if (common[t] && !rays[o].tight[t]) superset = false;
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec y(r);
        for (int j = 0; j < r; ++j) y[j] = narrow(s[p] * rays[q].y[j] - s[q] * rays[p].y[j]);
        make_primitive(y);
        common.push_back(true);
        next.push_back({std::move(y), std::move(common)});
      }
    }
    rays = std::move(next);
    processed.push_back(static_cast<int>(ci));
  }
  std::set<IntVec> uniq;
  for (auto& ray : rays) uniq.insert(ray.y);
  return {uniq.begin(), uniq.end()};
}

IntVec scale_to_int(const RationalVec& v, std::int64_t L, std::int64_t last) {
  IntVec out;
  for (const auto& x : v) {
    const Rational y = x * L;
    if (!is_integer(y)) throw Error(ErrorKind::InvalidArgument, "denominator mismatch");
    out.push_back(y.numerator());
  }
  out.push_back(last);
  return out;
}

Rational eval(const IntVec& normal, const RationalVec& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += x[i] * normal[i];
  return s;
}

}  // namespace

Polyhedron hull(const std::vector<RationalVec>& points, const std::vector<RationalVec>& rays) {
  if (points.empty()) throw Error(ErrorKind::InvalidArgument, "hull needs at least one point");
  const int n = static_cast<int>(points.front().size());
  if (n > 4) throw Error(ErrorKind::DimensionTooLarge, "hull supports dimension <= 4, got " + std::to_string(n));
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != n) throw Error(ErrorKind::InvalidArgument, "mixed point dimensions");
  for (const auto& r : rays)
    if (static_cast<int>(r.size()) != n) throw Error(ErrorKind::InvalidArgument, "mixed ray dimensions");

  std::int64_t L = 1;
  for (const auto& p : points)
    for (const auto& x : p) L = std::lcm(L, x.denominator());
  std::vector<IntVec> gens;
  for (const auto& p : points) gens.push_back(scale_to_int(p, L, L));
  const std::size_t point_count = gens.size();
  for (const auto& r : rays) {
    std::int64_t Lr = 1;
    for (const auto& x : r) Lr = std::lcm(Lr, x.denominator());
    IntVec g = scale_to_int(r, Lr, 0);
    if (std::all_of(g.begin(), g.end(), [](auto v) { return v == 0; })) continue;
    make_primitive(g);
    gens.push_back(std::move(g));
  }
  const int k = n + 1;

  std::vector<IntVec> basis;
  for (const auto& g : gens) {
    basis.push_back(g);
    if (rank_of(basis) != static_cast<int>(basis.size())) basis.pop_back();
    if (static_cast<int>(basis.size()) == k) break;
  }
  const int r = static_cast<int>(basis.size());

  std::vector<IntVec> reduced;
  for (const auto& g : gens) {
    IntVec v(r);
    for (int j = 0; j < r; ++j) v[j] = narrow(dot(basis[j], g));
    reduced.push_back(std::move(v));
  }

  Polyhedron P;
  P.ambient_dim_ = n;
  P.affine_dim_ = r - 1;
  P.points_ = points;
  P.rays_ = rays;

  for (const auto& y : double_description(reduced, r)) {
    IntVec a(k, 0);
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < k; ++i) a[i] = narrow(static_cast<i128>(a[i]) + static_cast<i128>(y[j]) * basis[j][i]);
    bool touches_point = false;
    for (std::size_t g = 0; g < point_count && !touches_point; ++g) touches_point = dot(a, gens[g]) == 0;
    if (!touches_point) continue;
    Facet f;
    for (int i = 0; i < n; ++i) f.normal.push_back(-a[i]);
    f.offset = a[n];
    IntVec all = f.normal;
    all.push_back(f.offset);
    std::int64_t g = 0;
    for (auto v : all) g = gcd64(g, v);
    if (g > 1) {
      for (auto& v : f.normal) v /= g;
      f.offset /= g;
    }
    P.facets_.push_back(std::move(f));
  }
  std::sort(P.facets_.begin(), P.facets_.end());
  P.facets_.erase(std::unique(P.facets_.begin(), P.facets_.end()), P.facets_.end());

  for (auto& e : nullspace(gens, k)) {
    Facet eq;
    eq.normal.assign(e.begin(), e.begin() + n);
    eq.offset = -e[n];
    P.equations_.push_back(std::move(eq));
  }
  return P;
}

bool Polyhedron::contains(const RationalVec& x) const {
  for (const auto& e : equations_)
    if (eval(e.normal, x) != e.offset) return false;
  for (const auto& f : facets_)
    if (eval(f.normal, x) > f.offset) return false;
  return true;
}

bool Polyhedron::on_facet(const RationalVec& x, std::size_t facet) const {
  return eval(facets_[facet].normal, x) == facets_[facet].offset;
}

bool Polyhedron::round_trip_ok() const {
  for (const auto& p : points_)
    if (!contains(p)) return false;
  for (const auto& f : facets_) {
    // The tight generators must span a hyperplane of the affine hull whose
    // homogeneous normal is this facet (up to the equations).
    std::vector<IntVec> tight;
    std::vector<IntVec> all;
    std::int64_t L = 1;
    for (const auto& p : points_)
      for (const auto& x : p) L = std::lcm(L, x.denominator());
    for (const auto& p : points_) {
      IntVec g = scale_to_int(p, L, L);
      all.push_back(g);
      if (eval(f.normal, p) == f.offset) tight.push_back(g);
    }
    for (const auto& r : rays_) {
      std::int64_t Lr = 1;
      for (const auto& x : r) Lr = std::lcm(Lr, x.denominator());
      IntVec g = scale_to_int(r, Lr, 0);
      all.push_back(g);
      if (eval(f.normal, r) == 0) tight.push_back(g);
    }
    if (rank_of(tight) != rank_of(all) - 1) return false;
    IntVec h = f.normal;
    for (auto& v : h) v = -v;
    h.push_back(f.offset);
    for (const auto& t : tight)
      if (dot(h, t) != 0) return false;
  }
  return true;
}

Rational LinearFunctional::operator()(const RationalVec& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) s += normal[i] * x[i];
  return s;
}

std::vector<int> exposed_face(const std::vector<RationalVec>& X, const LinearFunctional& psi) {
  return exposed_face(X, {}, psi);
}

std::vector<int> exposed_face(const std::vector<RationalVec>& X, const std::vector<RationalVec>& rays,
                              const LinearFunctional& psi) {
  for (const auto& r : rays)
    if (psi(r) > 0) return {};
  std::vector<int> out;
  std::optional<Rational> best;
  for (int i = 0; i < static_cast<int>(X.size()); ++i) {
    const Rational v = psi(X[i]);
    if (!best || v > *best) {
      best = v;
      out.clear();
    }
    if (v == *best) out.push_back(i);
  }
  return out;
}

FaceIndex::FaceIndex(std::vector<RationalVec> X) : X_(std::move(X)), poly_(hull(X_)) {
  if (X_.size() > 64) throw Error(ErrorKind::TooLarge, "FaceIndex supports at most 64 points");
  for (std::size_t f = 0; f < poly_.facets().size(); ++f) {
    std::uint64_t m = 0;
    for (int i = 0; i < size(); ++i)
      if (poly_.on_facet(X_[i], f)) m |= 1ull << i;
    facet_masks_.push_back(m);
  }
}

std::uint64_t FaceIndex::smallest_face(std::uint64_t Y) const {
  std::uint64_t m = all();
  for (auto f : facet_masks_)
    if ((Y & f) == Y) m &= f;
  return m;
}

std::vector<std::uint64_t> FaceIndex::all_faces() const {
  std::set<std::uint64_t> seen{all()};
  std::vector<std::uint64_t> todo{all()};
  while (!todo.empty()) {
    const auto F = todo.back();
    todo.pop_back();
    for (auto f : facet_masks_) {
      const auto g = F & f;
      if (g != 0 && seen.insert(g).second) todo.push_back(g);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> smallest_face_containing(const std::vector<int>& Y, const std::vector<RationalVec>& X) {
  const auto P = hull(X);
  std::vector<bool> in(X.size(), true);
  for (std::size_t f = 0; f < P.facets().size(); ++f) {
    const bool holds = std::all_of(Y.begin(), Y.end(), [&](int y) { return P.on_facet(X[y], f); });
    if (!holds) continue;
    for (std::size_t i = 0; i < X.size(); ++i)
      if (!P.on_facet(X[i], f)) in[i] = false;
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < X.size(); ++i)
    if (in[i]) out.push_back(static_cast<int>(i));
  return out;
}

bool is_maximizer(const std::vector<int>& Y, const std::vector<RationalVec>& X) {
  if (Y.empty()) return false;
  std::vector<int> y = Y;
  std::sort(y.begin(), y.end());
  y.erase(std::unique(y.begin(), y.end()), y.end());
  return smallest_face_containing(y, X) == y;
}

LinearFunctional standard_functional(const CartanData& c, const WeylElement& w, NodeMask I) {
  if (!c.is_finite()) throw Error(ErrorKind::NotFiniteType, "standard functionals need a finite Cartan matrix");
  if (I == c.all_nodes()) throw Error(ErrorKind::InvalidArgument, "I must be a proper subset");
  const int n = c.size();
  // Pairings <mu, alpha_j^vee> of mu = sum_{j not in I} omega_j, then apply w right to left.
  std::vector<Rational> m(n);
  for (int j = 0; j < n; ++j) m[j] = contains(I, j) ? 0 : 1;
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const Rational mi = m[i];
    for (int j = 0; j < n; ++j) m[j] -= mi * c.entry(j, i);
  }
  LinearFunctional psi;
  for (int i = 0; i < n; ++i) psi.normal.push_back(m[i] * c.symmetrizer()[i]);
  return psi;
}

RationalVec to_rational(const Root& r) { return to_rational(r.coeffs()); }

RationalVec to_rational(const std::vector<int>& v) {
  RationalVec out;
  for (int x : v) out.emplace_back(x);
  return out;
}

}  // namespace rootspace
