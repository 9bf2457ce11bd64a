#include "rootspace/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "rootspace/error.hpp"

namespace rootspace {

namespace {

char family_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

[[noreturn]] void illegal(const LieType& t) { throw Error(ErrorKind::IllegalType, t.label()); }

Matrix tridiagonal(int n) {
  Matrix m(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = -1;
  }
  return m;
}

// Bourbaki numbering; a_ij = <alpha_j, alpha_i^vee>.
Matrix finite_matrix(Family family, int n) {
  Matrix m = tridiagonal(n);
  switch (family) {
    case Family::A:
      break;
    case Family::B:  // alpha_n short
      m[n - 1][n - 2] = -2;
      break;
    case Family::C:  // alpha_n long
      if (n >= 2) m[n - 2][n - 1] = -2;
      break;
    case Family::D:
      m[n - 2][n - 1] = m[n - 1][n - 2] = 0;
      m[n - 3][n - 1] = m[n - 1][n - 3] = -1;
      break;
    case Family::E:
      // chain 1-3-4-5-...; node 2 attached to 4
      m = Matrix(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) m[i][i] = 2;
      {
        auto link = [&](int a, int b) { m[a - 1][b - 1] = m[b - 1][a - 1] = -1; };
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (int k = 4; k < n; ++k) link(k, k + 1);
      }
      break;
    case Family::F:  // alpha_1, alpha_2 long
      m[2][1] = -2;
      break;
    case Family::G:  // alpha_1 short
      m[0][1] = -3;
      break;
  }
  return m;
}

bool finite_legal(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 2;
    case Family::D: return n >= 4;
    case Family::E: return n >= 6 && n <= 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

using Coeffs = std::vector<int>;

int pairing_with(const Matrix& m, const Coeffs& x, int i) {
  int s = 0;
  for (std::size_t j = 0; j < x.size(); ++j) s += x[j] * m[i][j];
  return s;
}

// Positive roots of a finite-type matrix by upward reflection closure.
std::vector<Coeffs> finite_positive_roots(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::set<Coeffs> seen;
  std::queue<Coeffs> todo;
  for (int i = 0; i < n; ++i) {
    Coeffs e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    Coeffs b = todo.front();
    todo.pop();
    for (int i = 0; i < n; ++i) {
      const int k = pairing_with(m, b, i);
      if (k >= 0) continue;
      Coeffs up = b;
      up[i] -= k;
      if (seen.insert(up).second) todo.push(up);
    }
  }
  return {seen.begin(), seen.end()};
}

Rational form(const Matrix& m, const RationalVec& d, const Coeffs& x, const Coeffs& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      if (x[i] && y[j]) s += d[i] * m[i][j] * x[i] * y[j];
  return s;
}

int height(const Coeffs& x) { return std::accumulate(x.begin(), x.end(), 0); }

// theta_like: highest root (long) or highest short root of the finite part.
Coeffs highest(const Matrix& m, bool short_root) {
  const auto d = minimal_symmetrizer(m);
  const auto roots = finite_positive_roots(m);
  Rational min_len = -1;
  for (const auto& r : roots) {
    const auto len = form(m, d, r, r);
    if (min_len < 0 || len < min_len) min_len = len;
  }
  Coeffs best;
  for (const auto& r : roots) {
    if (short_root && form(m, d, r, r) != min_len) continue;
    if (best.empty() || height(r) > height(best)) best = r;
  }
  return best;
}

struct AffineRecipe {
  Family finite_family;
  int finite_rank;
  bool short_root;  // extend by the highest short root
  bool half;        // alpha_0 = (delta - theta)/2  (A_{2l}^{(2)})
};

AffineRecipe recipe_for(const LieType& t) {
  const int r = *t.twist;
  const int n = t.rank;
  if (r == 1) return {t.family, n, false, false};
  if (r == 3) return {Family::G, 2, true, false};
  switch (t.family) {
    case Family::A:
      if (n % 2 == 0) return {Family::C, n / 2, false, true};
      return {Family::C, (n + 1) / 2, true, false};
    case Family::D: return {Family::B, n - 1, true, false};
    case Family::E: return {Family::F, 4, true, false};
    default: illegal(t);
  }
}

Matrix finite_C_or_A(Family f, int l) {
  if (f == Family::C && l == 1) return Matrix{{2}};
  return finite_matrix(f, l);
}

Matrix extend_affine(const AffineRecipe& rec, std::vector<int>& marks) {
  const Matrix fin = finite_C_or_A(rec.finite_family, rec.finite_rank);
  const auto d = minimal_symmetrizer(fin);
  const Coeffs theta = highest(fin, rec.short_root);
  const int l = static_cast<int>(fin.size());
  const Rational c = rec.half ? Rational(1, 2) : Rational(1);
  const Rational tt = form(fin, d, theta, theta);

  Matrix m(l + 1, std::vector<int>(l + 1, 0));
  m[0][0] = 2;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m[i + 1][j + 1] = fin[i][j];
  for (int j = 0; j < l; ++j) {
    Coeffs e(l, 0);
    e[j] = 1;
    const Rational tj = form(fin, d, theta, e);
    const Rational jj = form(fin, d, e, e);
    const Rational a0j = -2 * tj / (c * tt);
    const Rational aj0 = -2 * c * tj / jj;
    if (!is_integer(a0j) || !is_integer(aj0)) throw Error(ErrorKind::IllegalType, "non-integral affine extension");
    m[0][j + 1] = static_cast<int>(a0j.numerator());
    m[j + 1][0] = static_cast<int>(aj0.numerator());
  }
  marks.assign(l + 1, 0);
  marks[0] = static_cast<int>((Rational(1) / c).numerator());
  for (int j = 0; j < l; ++j) marks[j + 1] = theta[j];
  return m;
}

// Kernel of m when it is one-dimensional, normalised to a primitive vector with
// positive entries; empty otherwise.
std::vector<int> positive_null_vector(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<RationalVec> a(n, RationalVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  std::vector<int> pivot_col;
  int row = 0;
  std::vector<int> free_cols;
  for (int col = 0; col < n; ++col) {
    int piv = row;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) {
      free_cols.push_back(col);
      continue;
    }
    std::swap(a[piv], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& v : a[row]) v *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (free_cols.size() != 1) return {};
  RationalVec x(n, Rational(0));
  x[free_cols[0]] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -a[r][free_cols[0]];
  std::int64_t den = 1;
  for (const auto& v : x) den = std::lcm(den, v.denominator());
  std::vector<int> out(n);
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>((x[i] * den).numerator());
    g = std::gcd(g, static_cast<std::int64_t>(std::abs(out[i])));
  }
  const int sign = out[0] < 0 ? -1 : 1;
  for (auto& v : out) {
    v = sign * v / static_cast<int>(g);
    if (v <= 0) return {};
  }
  return out;
}

}  // namespace

int LieType::finite_rank() const {
  if (!twist || *twist == 1) return rank;
  if (*twist == 3) return 2;
  switch (family) {
    case Family::A: return rank % 2 == 0 ? rank / 2 : (rank + 1) / 2;
    case Family::D: return rank - 1;
    case Family::E: return 4;
    default: return rank;
  }
}

std::string LieType::label() const {
  std::string s(1, family_char(family));
  s += std::to_string(rank);
  if (twist) s += "~" + std::to_string(*twist);
  return s;
}

void validate(const LieType& t) {
  const int n = t.rank;
  if (!t.twist) {
    if (!finite_legal(t.family, n)) illegal(t);
    return;
  }
  switch (*t.twist) {
    case 1: {
      const bool ok = (t.family == Family::B) ? n >= 3 : finite_legal(t.family, n);
      if (!ok) illegal(t);
      return;
    }
    case 2: {
      const bool ok = (t.family == Family::A && n >= 2 && n != 3) || (t.family == Family::D && n >= 3) ||
                      (t.family == Family::E && n == 6);
      if (!ok) illegal(t);
      return;
    }
    case 3:
      if (!(t.family == Family::D && n == 4) && !(t.family == Family::G && n == 2)) illegal(t);
      return;
    default:
      illegal(t);
  }
}

LieType parse_lie_type(std::string_view text) {
  auto fail = [&](const std::string& why) -> LieType {
    throw Error(ErrorKind::Parse, "type label '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2) return fail("too short");
  const std::string fams = "ABCDEFG";
  const auto f = fams.find(text[0]);
  if (f == std::string::npos) return fail("unknown family");
  LieType t;
  t.family = static_cast<Family>(f);
  const auto tilde = text.find('~');
  const auto rank_text = text.substr(1, tilde == std::string_view::npos ? std::string_view::npos : tilde - 1);
  try {
    t.rank = std::stoi(std::string(rank_text));
    if (std::to_string(t.rank) != rank_text) return fail("bad rank");
    if (tilde != std::string_view::npos) {
      const auto tw = text.substr(tilde + 1);
      t.twist = std::stoi(std::string(tw));
      if (std::to_string(*t.twist) != tw) return fail("bad twist");
    }
  } catch (const std::logic_error&) {
    return fail("bad number");
  }
  validate(t);
  return t;
}

RationalVec minimal_symmetrizer(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  RationalVec d(n, Rational(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    std::vector<int> comp{start};
    d[start] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const int i = comp[k];
      for (int j = 0; j < n; ++j) {
        if (j == i || m[i][j] == 0) continue;
        if (m[j][i] == 0) throw Error(ErrorKind::IllegalType, "zero pattern not symmetric");
        const Rational dj = d[i] * m[i][j] / m[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
        } else if (d[j] != dj) {
          throw Error(ErrorKind::IllegalType, "matrix not symmetrizable");
        }
      }
    }
    std::int64_t lcm_den = 1;
    for (int i : comp) lcm_den = std::lcm(lcm_den, d[i].denominator());
    std::int64_t g = 0;
    for (int i : comp) {
      d[i] *= lcm_den;
      g = std::gcd(g, d[i].numerator());
    }
    for (int i : comp) d[i] /= g;
  }
  return d;
}

std::int64_t determinant(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  __int128 prev = 1;
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
  return static_cast<std::int64_t>(sign * a[n - 1][n - 1]);
}

CartanData::CartanData(Matrix matrix, std::vector<int> labels, RationalVec symmetrizer,
                       std::optional<LieType> type)
    : matrix_(std::move(matrix)), labels_(std::move(labels)), symmetrizer_(std::move(symmetrizer)),
      type_(std::move(type)) {
  validate_or_throw();
}

void CartanData::validate_or_throw() {
  const int n = size();
  if (n == 0) throw Error(ErrorKind::EmptySubset, "empty Cartan matrix");
  if (n > 31) throw Error(ErrorKind::TooLarge, "at most 31 nodes");
  if (static_cast<int>(labels_.size()) != n || static_cast<int>(symmetrizer_.size()) != n)
    throw Error(ErrorKind::InvalidArgument, "label/symmetrizer size mismatch");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(matrix_[i].size()) != n) throw Error(ErrorKind::InvalidArgument, "matrix not square");
    if (matrix_[i][i] != 2) throw Error(ErrorKind::IllegalType, "diagonal entry != 2");
    if (symmetrizer_[i] <= 0) throw Error(ErrorKind::IllegalType, "symmetrizer not positive");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix_[i][j] > 0) throw Error(ErrorKind::IllegalType, "positive off-diagonal entry");
      if ((matrix_[i][j] == 0) != (matrix_[j][i] == 0)) throw Error(ErrorKind::IllegalType, "zero pattern");
      if (symmetrizer_[i] * matrix_[i][j] != symmetrizer_[j] * matrix_[j][i])
        throw Error(ErrorKind::IllegalType, "symmetrizer mismatch");
    }
  }
  // Sylvester's criterion on the symmetrized matrix decides finite type.
  bool posdef = true;
  for (int k = 1; k <= n && posdef; ++k) {
    Matrix minor(k, std::vector<int>(k));
    // Scale rows by d_i (integers after clearing denominators) to obtain a symmetric matrix.
    std::int64_t den = 1;
    for (int i = 0; i < k; ++i) den = std::lcm(den, symmetrizer_[i].denominator());
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        minor[i][j] = static_cast<int>((symmetrizer_[i] * den).numerator() * matrix_[i][j]);
    if (rootspace::determinant(minor) <= 0) posdef = false;
  }
  if (posdef) {
    kind_ = Kind::Finite;
    if (type_ && type_->is_affine()) throw Error(ErrorKind::IllegalType, "affine label on finite matrix");
    return;
  }
  if (!type_ || !type_->is_affine()) throw Error(ErrorKind::IllegalType, "matrix is not of finite type");
  kind_ = Kind::Affine;
  if (rootspace::determinant(matrix_) != 0) throw Error(ErrorKind::IllegalType, "affine matrix not singular");
  marks_ = positive_null_vector(matrix_);
  if (marks_.empty()) throw Error(ErrorKind::IllegalType, "affine matrix without corank-1 positive kernel");
}

int CartanData::position_of(int label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::InvalidArgument, "unknown node " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

NodeMask CartanData::mask_from_labels(const std::vector<int>& labels) const {
  NodeMask m = 0;
  for (int l : labels) m |= 1u << position_of(l);
  return m;
}

std::vector<int> CartanData::labels_of(NodeMask mask) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (contains(mask, i)) out.push_back(labels_[i]);
  return out;
}

std::string CartanData::name() const {
  if (type_) return type_->label();
  std::string s = "sub{";
  for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(labels_[i]);
  return s + "}";
}

Rational CartanData::bilinear_form(const std::vector<int>& x, const std::vector<int>& y) const {
  Rational s = 0;
  for (int i = 0; i < size(); ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < size(); ++j)
      if (y[j] && matrix_[i][j]) s += symmetrizer_[i] * (matrix_[i][j] * x[i] * y[j]);
  }
  return s;
}

int CartanData::pairing(const std::vector<int>& x, int i) const { return pairing_with(matrix_, x, i); }

std::int64_t CartanData::determinant() const { return rootspace::determinant(matrix_); }

CartanData build_cartan(const LieType& requested) {
  validate(requested);
  // G2~3 names the same algebra as D4~3 (its finite part is G2).
  const LieType type = requested.family == Family::G && requested.twist == 3 ? LieType{Family::D, 4, 3} : requested;
  if (!type.is_affine()) {
    Matrix m = finite_matrix(type.family, type.rank);
    std::vector<int> labels(type.rank);
    std::iota(labels.begin(), labels.end(), 1);
    auto d = minimal_symmetrizer(m);
    return CartanData(std::move(m), std::move(labels), std::move(d), type);
  }
  std::vector<int> marks;
  Matrix m = extend_affine(recipe_for(type), marks);
  std::vector<int> labels(m.size());
  std::iota(labels.begin(), labels.end(), 0);
  auto d = minimal_symmetrizer(m);
  CartanData c(std::move(m), std::move(labels), std::move(d), type);
  if (c.marks() != marks) throw Error(ErrorKind::IllegalType, "null vector disagrees with affine extension");
  return c;
}

CartanData subsystem(const CartanData& c, NodeMask J) {
  if (J == 0) throw Error(ErrorKind::EmptySubset, "subsystem needs a nonempty node set");
  std::vector<int> pos;
  for (int i = 0; i < c.size(); ++i)
    if (contains(J, i)) pos.push_back(i);
  const int k = static_cast<int>(pos.size());
  Matrix m(k, std::vector<int>(k));
  std::vector<int> labels(k);
  RationalVec d(k);
  for (int a = 0; a < k; ++a) {
    labels[a] = c.labels()[pos[a]];
    d[a] = c.symmetrizer()[pos[a]];
    for (int b = 0; b < k; ++b) m[a][b] = c.entry(pos[a], pos[b]);
  }
  std::optional<LieType> t;
  if (J == c.all_nodes()) t = c.type();
  return CartanData(std::move(m), std::move(labels), std::move(d), t);
}

}  // namespace rootspace
