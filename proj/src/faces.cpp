#include "rootspace/faces.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>

#include "rootspace/error.hpp"
#include "rootspace/parallel.hpp"

namespace rootspace {

namespace {

RationalVec add(const RationalVec& a, const RationalVec& b) {
  RationalVec s = a;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b[i];
  return s;
}

void add_scaled(RationalVec& acc, const RationalVec& v, int k) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i] * k;
}

std::vector<std::pair<int, int>> pair_terms(int a, int b) {
  if (a == b) return {{a, 2}};
  return {{a, 1}, {b, 1}};
}

}  // namespace

const char* to_string(AmbientKind k) {
  switch (k) {
    case AmbientKind::Roots:
      return "roots";
    case AmbientKind::RootsWithZero:
      return "roots0";
    case AmbientKind::WeightWindow:
      return "weights";
    case AmbientKind::HullSample:
      return "hull-sample";
  }
  return "?";
}

const char* to_string(ExceptionalTag t) {
  switch (t) {
    case ExceptionalTag::Pi:
      return "Pi";
    case ExceptionalTag::DeltaPlus:
      return "DeltaPlus";
    case ExceptionalTag::AltTriple:
      return "AltTriple";
  }
  return "?";
}

std::optional<int> AmbientSet::index_of(const RationalVec& x) const {
  const auto it = std::find(elements.begin(), elements.end(), x);
  if (it == elements.end()) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

std::uint64_t AmbientSet::mask_of(const std::vector<RationalVec>& Y) const {
  if (size() > 64) throw Error(ErrorKind::TooLarge, "bitmask subsets need |X| <= 64");
  std::uint64_t m = 0;
  for (const auto& y : Y) {
    const auto i = index_of(y);
    if (!i) throw Error(ErrorKind::InvalidArgument, "element outside the ambient set");
    m |= 1ull << *i;
  }
  return m;
}

AmbientSet explicit_ambient(AmbientKind kind, std::vector<RationalVec> elements) {
  AmbientSet X;
  X.kind = kind;
  for (auto& e : elements)
    if (std::find(X.elements.begin(), X.elements.end(), e) == X.elements.end()) X.elements.push_back(std::move(e));
  return X;
}

AmbientSet roots_ambient(const RootSystem& rs, bool with_zero) {
  std::vector<Root> all = rs.all_roots();
  if (with_zero) all.push_back(Root::zero(rs.rank()));
  canonical_sort(all);
  AmbientSet X;
  X.kind = with_zero ? AmbientKind::RootsWithZero : AmbientKind::Roots;
  X.window = rs.window();
  for (const auto& r : all) X.elements.push_back(to_rational(r));
  return X;
}

AmbientSet finite_part_ambient(const RootSystem& rs, bool with_zero) {
  std::vector<Root> all = finite_part_sets(rs).all;
  if (with_zero) all.push_back(Root::zero(rs.rank()));
  canonical_sort(all);
  AmbientSet X;
  X.kind = with_zero ? AmbientKind::RootsWithZero : AmbientKind::Roots;
  for (const auto& r : all) X.elements.push_back(to_rational(r));
  return X;
}

AmbientSet weights_ambient(const WeightSetWindow& w) {
  AmbientSet X;
  X.kind = AmbientKind::WeightWindow;
  X.window = w.max_depth;
  X.elements = to_points(w.weights);
  return X;
}

bool witness_holds(const AmbientSet& X, std::uint64_t Y, const ViolationWitness& w) {
  if (X.size() == 0) return false;
  const std::size_t dim = X.elements.front().size();
  RationalVec l(dim, Rational(0)), r(dim, Rational(0));
  int sl = 0, sr = 0;
  bool outside = false;
  for (auto [i, k] : w.lhs) {
    if (k <= 0 || !(Y >> i & 1)) return false;
    add_scaled(l, X.elements[i], k);
    sl += k;
  }
  for (auto [j, k] : w.rhs) {
    if (k <= 0) return false;
    add_scaled(r, X.elements[j], k);
    sr += k;
    if (!(Y >> j & 1)) outside = true;
  }
  return sl == sr && sl > 0 && l == r && outside;
}

PairSumIndex::PairSumIndex(const AmbientSet& X) {
  if (X.size() > 64) throw Error(ErrorKind::TooLarge, "pair-sum index needs |X| <= 64");
  std::map<RationalVec, std::vector<Pair>> by_sum;
  for (int a = 0; a < X.size(); ++a)
    for (int b = a; b < X.size(); ++b)
      by_sum[add(X.elements[a], X.elements[b])].push_back({a, b, (1ull << a) | (1ull << b)});
  for (auto& [sum, pairs] : by_sum)
    if (pairs.size() >= 2) classes_.push_back(std::move(pairs));
}

bool PairSumIndex::is_closed(std::uint64_t Y) const {
  for (const auto& cls : classes_) {
    bool inside = false, outside = false;
    for (const auto& p : cls) {
      if ((p.mask & Y) == p.mask) {
        inside = true;
      } else {
        outside = true;
      }
      if (inside && outside) return false;
    }
  }
  return true;
}

std::optional<ViolationWitness> PairSumIndex::violation(std::uint64_t Y) const {
  for (const auto& cls : classes_) {
    const Pair* in = nullptr;
    const Pair* out = nullptr;
    for (const auto& p : cls) {
      if ((p.mask & Y) == p.mask) {
        if (!in) in = &p;
      } else if (!out) {
        out = &p;
      }
    }
    if (in && out) return ViolationWitness{pair_terms(in->a, in->b), pair_terms(out->a, out->b)};
  }
  return std::nullopt;
}

std::uint64_t PairSumIndex::closure(std::uint64_t Y) const {
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& cls : classes_) {
      bool inside = false;
      std::uint64_t all = 0;
      for (const auto& p : cls) {
        inside |= (p.mask & Y) == p.mask;
        all |= p.mask;
      }
      if (inside && (all & ~Y)) {
        Y |= all;
        grew = true;
      }
    }
  }
  return Y;
}

ClosedResult is_212_closed(const AmbientSet& X, std::uint64_t Y) {
  const PairSumIndex idx(X);
  ClosedResult r;
  r.witness = idx.violation(Y);
  r.closed = !r.witness;
  return r;
}

std::uint64_t closure_212(const AmbientSet& X, std::uint64_t Y) { return PairSumIndex(X).closure(Y); }

std::vector<int> mask_to_indices(std::uint64_t m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::vector<RationalVec> subset_points(const AmbientSet& X, std::uint64_t m) {
  std::vector<RationalVec> out;
  for (int i : mask_to_indices(m)) out.push_back(X.elements[i]);
  return out;
}

void sort_subsets(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return mask_to_indices(a) < mask_to_indices(b);
  });
}

std::vector<std::uint64_t> enumerate_212(const AmbientSet& X) {
  if (X.size() > 20) throw Error(ErrorKind::TooLarge, "enumeration needs |X| <= 20, got " + std::to_string(X.size()));
  const PairSumIndex idx(X);
  const std::uint64_t n = 1ull << X.size();
  std::vector<std::uint64_t> out;
  std::mutex m;
  parallel_blocks(n, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> local;
    for (std::uint64_t Y = std::max<std::uint64_t>(lo, 1); Y < hi; ++Y) {
      if (X.proper_only() && Y == X.all()) continue;
      if (idx.is_closed(Y)) local.push_back(Y);
    }
    std::lock_guard<std::mutex> lock(m);
    out.insert(out.end(), local.begin(), local.end());
  });
  sort_subsets(out);
  return out;
}

std::optional<ViolationWitness> weak_face_refutation(const AmbientSet& X, std::uint64_t Y, WeakFaceBounds b) {
  if (X.size() == 0 || Y == 0) return std::nullopt;
  const std::size_t dim = X.elements.front().size();
  const std::vector<int> ys = mask_to_indices(Y);
  // Left-hand sides: sum -> coefficients, keyed with the coefficient total.
  std::map<std::pair<RationalVec, int>, std::vector<std::pair<int, int>>> lhs;
  std::vector<std::pair<int, int>> terms;
  RationalVec acc(dim, Rational(0));
  std::function<void(std::size_t, int)> left = [&](std::size_t k, int total) {
    if (k == ys.size()) {
      if (total > 0) lhs.emplace(std::make_pair(acc, total), terms);
      return;
    }
    left(k + 1, total);
    int used = 0;
    for (int c = 1; c <= b.max_coeff && total + c <= b.max_terms; ++c) {
      add_scaled(acc, X.elements[ys[k]], 1);
      ++used;
      terms.emplace_back(ys[k], c);
      left(k + 1, total + c);
      terms.pop_back();
    }
    add_scaled(acc, X.elements[ys[k]], -used);
  };
  left(0, 0);

  std::optional<ViolationWitness> found;
  std::function<void(int, int, bool)> right = [&](int k, int total, bool outside) {
    if (found) return;
    if (k == X.size()) {
      if (outside && total > 0) {
        const auto it = lhs.find({acc, total});
        if (it != lhs.end()) found = ViolationWitness{it->second, terms};
      }
      return;
    }
    right(k + 1, total, outside);
    int used = 0;
    for (int c = 1; c <= b.max_coeff && total + c <= b.max_terms && !found; ++c) {
      add_scaled(acc, X.elements[k], 1);
      ++used;
      terms.emplace_back(k, c);
      right(k + 1, total + c, outside || !(Y >> k & 1));
      terms.pop_back();
    }
    add_scaled(acc, X.elements[k], -used);
  };
  terms.clear();
  acc.assign(dim, Rational(0));
  right(0, 0, false);
  return found;
}

std::vector<std::uint64_t> maximizer_sets(const AmbientSet& X) {
  const FaceIndex fi(X.elements);
  std::vector<std::uint64_t> out;
  for (auto f : fi.all_faces())
    if (!(X.proper_only() && f == fi.all())) out.push_back(f);
  sort_subsets(out);
  return out;
}

namespace {

std::string word_string(const std::vector<int>& w, const CartanData& c) {
  if (w.empty()) return "e";
  std::string s;
  for (int i : w) s += "s" + std::to_string(c.labels()[i]);
  return s;
}

std::string mask_string(NodeMask I, const CartanData& c) {
  std::string s = "{";
  bool first = true;
  for (int l : c.labels_of(I)) {
    if (!first) s += ",";
    s += std::to_string(l);
    first = false;
  }
  return s + "}";
}

std::uint64_t mask_in(const AmbientSet& X, const std::vector<RationalVec>& pts) {
  std::uint64_t m = 0;
  for (const auto& p : pts) {
    const auto i = X.index_of(p);
    if (!i) return 0;
    m |= 1ull << *i;
  }
  return m;
}

const Root& highest_root(const RootSystem& rs) {
  const auto& pos = rs.positive_roots();
  return *std::max_element(pos.begin(), pos.end(),
                           [](const Root& a, const Root& b) { return height(a) < height(b); });
}

}  // namespace

std::string describe(const FaceDescriptor& f, const CartanData& c) {
  std::ostringstream os;
  if (const auto* s = std::get_if<StandardRoots>(&f)) {
    os << "StandardRoots(w=" << word_string(s->w, c) << ", I=" << mask_string(s->I, c) << ")";
  } else if (const auto* s = std::get_if<StandardWeights>(&f)) {
    os << "StandardWeights(w=" << word_string(s->w, c) << ", I=" << mask_string(s->I, c) << ")";
  } else if (const auto* s = std::get_if<ExceptionalA2>(&f)) {
    os << "ExceptionalA2(" << to_string(s->tag) << ", w=" << word_string(s->w, c) << ")";
  } else if (const auto* s = std::get_if<AffineLift>(&f)) {
    os << "AffineLift(|Z|=" << s->Z.size() << ")";
  }
  return os.str();
}

std::vector<Root> realize_standard_roots(const RootSystem& rs, const WeylElement& w, NodeMask I) {
  const auto& c = rs.cartan();
  if (!c.is_finite()) throw Error(ErrorKind::NotFiniteType, "standard root faces need finite type");
  if ((I & c.all_nodes()) == c.all_nodes()) throw Error(ErrorKind::InvalidArgument, "I must be a proper subset");
  const Root& theta = highest_root(rs);
  std::vector<Root> candidates = rs.all_roots();
  candidates.push_back(Root::zero(rs.rank()));
  std::vector<Root> out;
  for (const auto& x : candidates) {
    const Root diff = theta - x;
    bool ok = true;
    for (int i = 0; i < diff.size() && ok; ++i)
      if (diff[i] < 0 || (diff[i] > 0 && !contains(I, i))) ok = false;
    if (ok) out.push_back(w.apply(x));
  }
  canonical_sort(out);
  return out;
}

std::vector<Depth> realize_standard_weights(const CartanData& c, const WeightSetWindow& wt, const WeylElement& w,
                                            NodeMask I) {
  std::vector<Depth> out;
  for (const auto& d : wt.weights) {
    bool ok = true;
    for (int i = 0; i < c.size() && ok; ++i)
      if (d[i] != 0 && !contains(I, i)) ok = false;
    if (!ok) continue;
    Depth e = d;
    for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) e = reflect_weight(c, wt.anchor, e, *it);
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<ExceptionalA2, std::vector<Root>>> exceptional_a2_sets(const RootSystem& rs) {
  const auto& c = rs.cartan();
  const auto t = c.type();
  if (!t || t->is_affine() || t->family != Family::A || t->rank != 2)
    throw Error(ErrorKind::NotSupported, "exceptional sets exist only in type A2");
  const Root a1 = Root::simple(2, 0), a2 = Root::simple(2, 1), th = a1 + a2;
  const std::vector<std::pair<ExceptionalTag, std::vector<Root>>> bases{
      {ExceptionalTag::Pi, {a1, a2}}, {ExceptionalTag::DeltaPlus, {a1, a2, th}}, {ExceptionalTag::AltTriple, {a1, a2, -th}}};
  std::vector<std::pair<ExceptionalA2, std::vector<Root>>> out;
  const auto W = weyl_group(c, c.all_nodes());
  for (const auto& [tag, base] : bases) {
    std::set<std::vector<Root>> seen;
    for (const auto& w : W) {
      std::vector<Root> s;
      for (const auto& b : base) s.push_back(w.apply(b));
      canonical_sort(s);
      if (seen.insert(s).second) out.push_back({ExceptionalA2{tag, w.word()}, s});
    }
  }
  return out;
}

RealizedFamily standard_root_family(const RootSystem& rs, const AmbientSet& X) {
  const auto& c = rs.cartan();
  RealizedFamily fam;
  const auto W = weyl_group(c, c.all_nodes());
  for (NodeMask I = 0; I < c.all_nodes(); ++I) {
    for (const auto& w : W) {
      std::vector<RationalVec> pts;
      for (const auto& r : realize_standard_roots(rs, w, I)) pts.push_back(to_rational(r));
      const auto m = mask_in(X, pts);
      if (m) fam.sets.emplace(m, StandardRoots{w.word(), I});
    }
  }
  return fam;
}

RealizedFamily exceptional_family(const RootSystem& rs, const AmbientSet& X) {
  RealizedFamily fam;
  for (const auto& [desc, roots] : exceptional_a2_sets(rs)) {
    std::vector<RationalVec> pts;
    for (const auto& r : roots) pts.push_back(to_rational(r));
    const auto m = mask_in(X, pts);
    if (m) fam.sets.emplace(m, desc);
  }
  return fam;
}

RealizedFamily standard_weight_family(const CartanData& c, const WeightSetWindow& wt, NodeMask I_V,
                                      const AmbientSet& X) {
  RealizedFamily fam;
  const auto W = weyl_group(c, I_V);
  for (NodeMask I = 0; I <= c.all_nodes(); ++I) {
    for (const auto& w : W) {
      const auto m = mask_in(X, to_points(realize_standard_weights(c, wt, w, I)));
      if (m) fam.sets.emplace(m, StandardWeights{w.word(), I});
    }
  }
  return fam;
}

Classification classify(const AmbientSet& X, std::uint64_t Y, const std::vector<const RealizedFamily*>& families) {
  Classification out{Classification::Status::Unclassified, std::nullopt, std::nullopt};
  const auto closed = is_212_closed(X, Y);
  if (!closed.closed) {
    out.status = Classification::Status::NotClosed;
    out.witness = closed.witness;
    return out;
  }
  for (const auto* fam : families) {
    const auto it = fam->sets.find(Y);
    if (it != fam->sets.end()) {
      out.status = Classification::Status::Classified;
      out.descriptor = it->second;
      return out;
    }
  }
  return out;
}

std::vector<Root> affine_lift(const RootSystem& rs, const std::vector<Root>& Z, int H) {
  const auto& c = rs.cartan();
  if (!c.is_affine()) throw Error(ErrorKind::NotAffineType, c.name());
  const Root delta(c.marks());
  if (H < height(delta)) throw Error(ErrorKind::WindowTooSmall, "window below height of delta");
  const auto parts = finite_part_sets(rs);
  const int r = c.twist();
  std::set<Root> out;
  for (const auto& z : Z) {
    const bool is_short = std::find(parts.short_roots.begin(), parts.short_roots.end(), z) != parts.short_roots.end();
    const bool is_long = std::find(parts.long_roots.begin(), parts.long_roots.end(), z) != parts.long_roots.end();
    if (!is_short && !is_long) throw Error(ErrorKind::InvalidArgument, "lift needs elements of the finite part");
    const int step = is_short ? 1 : r;
    const int hd = height(delta) * step;
    for (int k = -(H + std::abs(height(z))) / hd - 1; k <= (H + std::abs(height(z))) / hd + 1; ++k) {
      const Root y = z + (k * step) * delta;
      if (std::abs(height(y)) <= H) out.insert(y);
    }
  }
  std::vector<Root> v(out.begin(), out.end());
  canonical_sort(v);
  return v;
}

AffineReport affine_212_equivalence_check(const CartanData& c, int H, bool with_zero, bool real_only) {
  if (!c.is_affine()) throw Error(ErrorKind::NotAffineType, c.name());
  const RootSystem rs = generate_affine_window(c, H);
  const AmbientSet F = finite_part_ambient(rs, with_zero);
  const PairSumIndex finite_index(F);
  RootSet window;
  std::vector<Root> window_list;
  for (const auto& x : rs.all_roots())
    if (!real_only || rs.is_real(x)) window_list.push_back(x);
  if (with_zero) window_list.push_back(Root::zero(c.size()));
  for (const auto& x : window_list) window.insert(x);

  auto window_closed = [&](const std::vector<Root>& Y) {
    const RootSet in(Y.begin(), Y.end());
    for (std::size_t a = 0; a < Y.size(); ++a) {
      for (std::size_t b = a; b < Y.size(); ++b) {
        const Root s = Y[a] + Y[b];
        for (const auto& x1 : window_list) {
          const Root x2 = s - x1;
          if (!window.count(x2)) continue;
          if (!in.count(x1) || !in.count(x2)) return false;
        }
      }
    }
    return true;
  };

  std::vector<Root> finite_roots;
  std::vector<int> finite_pos;
  for (int i = 0; i < F.size(); ++i) {
    Root r(std::vector<int>(c.size()));
    for (int j = 0; j < c.size(); ++j) r[j] = static_cast<int>(F.elements[i][j].numerator());
    if (r.is_zero()) continue;
    finite_roots.push_back(r);
    finite_pos.push_back(i);
  }
  AffineReport rep;
  rep.H = H;
  rep.with_zero = with_zero;
  rep.real_only = real_only;
  const std::uint64_t n = 1ull << finite_roots.size();
  for (std::uint64_t s = 1; s < n; ++s) {
    if (!with_zero && s == n - 1) continue;
    std::vector<Root> Z;
    std::uint64_t fmask = 0;
    for (std::size_t k = 0; k < finite_roots.size(); ++k) {
      if (s >> k & 1) {
        Z.push_back(finite_roots[k]);
        fmask |= 1ull << finite_pos[k];
      }
    }
    ++rep.subsets_checked;
    const bool fin = finite_index.is_closed(fmask);
    const bool lifted = window_closed(affine_lift(rs, Z, H));
    rep.closed_finite += fin;
    rep.closed_lifts += lifted;
    if (fin != lifted) ++rep.mismatches;
    if (lifted) {
      canonical_sort(Z);
      rep.closed_Z.push_back(Z);
    }
  }
  std::sort(rep.closed_Z.begin(), rep.closed_Z.end());
  return rep;
}

}  // namespace rootspace
