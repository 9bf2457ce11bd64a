#include "rootspace/liewords.hpp"

#include <algorithm>
#include <functional>

#include "rootspace/error.hpp"

namespace rootspace {

namespace {

bool precedes(const Root& a, const Root& b) {
  const int ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  return a.coeffs() > b.coeffs();
}

std::int64_t as_integer(const Rational& r) {
  if (!is_integer(r)) throw Error(ErrorKind::InvalidArgument, "non-integral structure constant");
  return r.numerator();
}

using Sparse = std::map<int, std::int64_t>;

void axpy(Sparse& acc, std::int64_t k, const Sparse& v) {
  for (const auto& [i, x] : v) {
    auto& slot = acc[i];
    slot += k * x;
    if (slot == 0) acc.erase(i);
  }
}

}  // namespace

std::int64_t StructureTable::N(const Root& a, const Root& b) const {
  const auto it = all_.find({a, b});
  if (it == all_.end()) throw Error(ErrorKind::InvalidArgument, "N(a,b) needs a + b to be a root");
  return it->second;
}

StructureTable build_constants(const CartanData& c) {
  if (!c.is_finite()) throw Error(ErrorKind::NotFiniteType, "structure constants need finite type");
  if (c.size() > 6) throw Error(ErrorKind::NotSupported, "structure constants supported up to rank 6");
  StructureTable t(generate_finite(c));
  const RootSystem& rs = t.rs_;
  t.order_ = rs.positive_roots();
  std::sort(t.order_.begin(), t.order_.end(), precedes);

  auto string_p = [&](const Root& a, const Root& b) {
    int p = 0;
    while (rs.contains(b - (p + 1) * a)) ++p;
    return p;
  };
  auto norm = [&](const Root& x) { return rs.norm(x); };

  // Positive pairs a < b with a + b a root.
  std::map<std::pair<Root, Root>, std::int64_t> pos;
  std::function<std::int64_t(const Root&, const Root&)> n_of = [&](const Root& x, const Root& y) -> std::int64_t {
    const Root z = x + y;
    if (z.is_zero() || !rs.contains(z)) return 0;
    if (x.is_positive() && y.is_positive()) {
      if (precedes(x, y)) return pos.at({x, y});
      return -pos.at({y, x});
    }
    if (x.is_negative() && y.is_negative()) return -n_of(-x, -y);
    // x + y + w = 0 with w = -z: N(x,y)/(w,w) = N(y,w)/(x,x) = N(w,x)/(y,y).
    const Root w = -z;
    if (y.is_positive() == w.is_positive()) return as_integer(norm(z) / norm(x) * n_of(y, w));
    return as_integer(norm(z) / norm(y) * n_of(w, x));
  };

  for (const auto& xi : t.order_) {
    std::vector<std::pair<Root, Root>> pairs;
    for (const auto& a : t.order_) {
      if (!precedes(a, xi)) break;
      const Root b = xi - a;
      if (rs.contains_positive(b) && precedes(a, b)) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    const auto& [g, d] = pairs.front();
    t.extraspecial_.push_back(pairs.front());
    pos[{g, d}] = string_p(g, d) + 1;
    const std::int64_t n_neg = -pos[{g, d}];
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const auto& [a, b] = pairs[k];
      Rational s = 0;
      if (rs.contains(b - g)) s += Rational(n_of(b, -g) * n_of(a, -d)) / norm(b - g);
      if (rs.contains(a - g)) s += Rational(n_of(-g, a) * n_of(b, -d)) / norm(a - g);
      pos[{a, b}] = as_integer(-norm(xi) * s / n_neg);
    }
  }

  const auto all = rs.all_roots();
  for (const auto& a : all)
    for (const auto& b : all) {
      const Root s = a + b;
      if (!s.is_zero() && rs.contains(s)) t.all_[{a, b}] = n_of(a, b);
    }
  if (!t.check_invariants()) throw Error(ErrorKind::Unclassified, "structure constant invariants failed");
  if (!t.check_jacobi()) throw Error(ErrorKind::Unclassified, "Jacobi identity failed");
  return t;
}

bool StructureTable::check_invariants() const {
  for (const auto& [ab, n] : all_) {
    const auto& [a, b] = ab;
    int p = 0;
    while (rs_.contains(b - (p + 1) * a)) ++p;
    if (n != p + 1 && n != -(p + 1)) return false;
    const auto rev = all_.find({b, a});
    if (rev == all_.end() || rev->second != -n) return false;
    const auto neg = all_.find({-a, -b});
    if (neg == all_.end() || neg->second != -n) return false;
  }
  return true;
}

bool StructureTable::check_jacobi() const {
  const auto& c = cartan();
  const int n = c.size();
  const auto roots = rs_.all_roots();
  const int dim = n + static_cast<int>(roots.size());
  std::map<Root, int> index;
  for (std::size_t k = 0; k < roots.size(); ++k) index[roots[k]] = n + static_cast<int>(k);

  auto basis_bracket = [&](int i, int j) -> Sparse {
    Sparse out;
    if (i < n && j < n) return out;
    if (i < n) {
      const Root& b = roots[j - n];
      if (const int k = c.pairing(b.coeffs(), i)) out[j] = k;
      return out;
    }
    if (j < n) {
      const Root& a = roots[i - n];
      if (const int k = c.pairing(a.coeffs(), j)) out[i] = -k;
      return out;
    }
    const Root& a = roots[i - n];
    const Root& b = roots[j - n];
    const Root s = a + b;
    if (s.is_zero()) {
      // h_a = sum_k a_k (alpha_k, alpha_k)/(a, a) h_k.
      const Rational na = rs_.norm(a);
      for (int k = 0; k < n; ++k)
        if (a[k] != 0) out[k] = as_integer(Rational(a[k]) * c.bilinear_form(k, k) / na);
      return out;
    }
    const auto it = index.find(s);
    if (it != index.end()) out[it->second] = N(a, b);
    return out;
  };

  std::vector<std::vector<Sparse>> table(dim, std::vector<Sparse>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) table[i][j] = basis_bracket(i, j);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Sparse s = table[i][j];
      axpy(s, 1, table[j][i]);
      if (!s.empty()) return false;
    }
  auto bracket_with = [&](int x, const Sparse& v) {
    Sparse out;
    for (const auto& [k, coeff] : v) axpy(out, coeff, table[x][k]);
    return out;
  };
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        Sparse s = bracket_with(i, table[j][k]);
        axpy(s, 1, bracket_with(j, table[k][i]));
        axpy(s, 1, bracket_with(k, table[i][j]));
        if (!s.empty()) return false;
      }
  return true;
}

StructureTable StructureTable::with_override(const Root& a, const Root& b, std::int64_t n) const {
  if (!all_.count({a, b})) throw Error(ErrorKind::InvalidArgument, "a + b is not a root");
  StructureTable out = *this;
  out.all_[{a, b}] = n;
  out.all_[{b, a}] = -n;
  return out;
}

std::int64_t evaluate(const std::vector<Root>& word, const StructureTable& t) {
  if (word.empty()) throw Error(ErrorKind::InvalidArgument, "empty Lie word");
  if (!t.is_root(word.front())) return 0;
  Root s = word.front();
  std::int64_t coeff = 1;
  for (std::size_t k = 1; k < word.size(); ++k) {
    const Root next = s + word[k];
    if (next.is_zero()) throw Error(ErrorKind::InvalidArgument, "Lie word with a zero partial sum");
    if (!t.is_root(word[k]) || !t.is_root(next)) return 0;
    coeff *= t.N(word[k], s);
    s = next;
  }
  return coeff;
}

LieWordWitness verify_spanning(const Root& beta, NodeMask I, const StructureTable& t) {
  const RootSystem& rs = t.roots();
  if (!rs.contains_positive(beta)) throw Error(ErrorKind::NotAPositiveRoot, "beta is not a positive root");
  const int m = height(beta, I);
  if (m <= 0) throw Error(ErrorKind::InvalidArgument, "ht_I(beta) must be positive");
  const auto gens = unit_I_height_set(rs, I);
  LieWordWitness out;
  std::vector<Root> word;
  std::function<bool(const Root&)> dfs = [&](const Root& sum) {
    if (static_cast<int>(word.size()) == m) {
      if (sum != beta) return false;
      const auto c = evaluate(word, t);
      if (c == 0) return false;
      out.word = word;
      out.coefficient = c;
      return true;
    }
    for (const auto& g : gens) {
      const Root next = word.empty() ? g : sum + g;
      if (!next.dominated_by(beta) || !rs.contains_positive(next)) continue;
      word.push_back(g);
      if (dfs(next)) return true;
      word.pop_back();
    }
    return false;
  };
  if (!dfs(Root::zero(rs.rank()))) throw Error(ErrorKind::NoWordFound, "no nonzero Lie word found");
  return out;
}

}  // namespace rootspace
