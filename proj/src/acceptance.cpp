#include "rootspace/acceptance.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <sstream>

#include "rootspace/error.hpp"
#include "rootspace/faces.hpp"
#include "rootspace/liewords.hpp"
#include "rootspace/psp.hpp"
#include "rootspace/weights.hpp"

namespace rootspace {

namespace {

using PointSet = std::vector<RationalVec>;
using FaceFamily = std::set<PointSet>;

CartanData cartan(const char* label) { return build_cartan(std::string_view(label)); }

int delta_height(const CartanData& c) {
  int h = 0;
  for (int m : c.marks()) h += m;
  return h;
}

FaceFamily as_family(const AmbientSet& X, const std::vector<std::uint64_t>& masks) {
  FaceFamily f;
  for (auto m : masks) {
    auto pts = subset_points(X, m);
    std::sort(pts.begin(), pts.end());
    f.insert(std::move(pts));
  }
  return f;
}

FaceFamily as_family(const AmbientSet& X, const RealizedFamily& fam) {
  std::vector<std::uint64_t> masks;
  for (const auto& [m, d] : fam.sets)
    if (!(X.proper_only() && m == X.all())) masks.push_back(m);
  return as_family(X, masks);
}

std::vector<std::string> finite_types(int max_rank) {
  std::vector<std::string> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back("D" + std::to_string(n));
  out.push_back("G2");
  if (max_rank >= 4) out.push_back("F4");
  return out;
}

struct Check {
  bool ok = true;
  std::ostringstream msg;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      msg << "FAILED: " << what << "; ";
    }
  }
};

// 1 -------------------------------------------------------------------------
CriterionResult crit_a6(bool) {
  CriterionResult r{1, "example-A6", false, "", 0};
  Check ck;
  const auto c = cartan("A6");
  const auto rs = generate(c);
  const NodeMask I = c.mask_from_labels({2, 4, 5});
  auto got = unit_I_height_set(rs, I);
  auto R = [](std::vector<int> v) { return Root(std::move(v)); };
  std::vector<Root> expected{R({0, 1, 0, 0, 0, 0}), R({1, 1, 0, 0, 0, 0}), R({0, 1, 1, 0, 0, 0}),
                             R({1, 1, 1, 0, 0, 0}), R({0, 0, 0, 1, 0, 0}), R({0, 0, 1, 1, 0, 0}),
                             R({0, 0, 0, 0, 1, 0}), R({0, 0, 0, 0, 1, 1})};
  canonical_sort(expected);
  ck.require(got == expected, "Delta_{I,1} differs from the 8 listed roots");
  const Root beta = R({1, 1, 1, 1, 1, 1});
  ck.require(height(beta) == 6, "ht(beta) = 6");
  ck.require(height(beta, I) == 3, "ht_I(beta) = 3");
  PspDecomposition d{beta, I, {R({1, 1, 0, 0, 0, 0}), R({0, 0, 1, 1, 0, 0}), R({0, 0, 0, 0, 1, 1})}};
  ck.require(verify(d, rs).ok, "(a1+a2, a3+a4, a5+a6) verifies");
  ck.require(verify(decompose(beta, I, rs), rs).ok, "decompose(beta) verifies");
  r.pass = ck.ok;
  r.detail = ck.ok ? "|Delta_{I,1}|=8 as listed, ht=6, ht_I=3, certificate verified" : ck.msg.str();
  return r;
}

// 2 -------------------------------------------------------------------------
CriterionResult crit_finite_psp(bool quick) {
  CriterionResult r{2, "finite-psp", false, "", 0};
  long checked = 0, failed = 0;
  std::string first_failure;
  for (const auto& t : finite_types(quick ? 5 : 6)) {
    const auto c = build_cartan(t);
    const auto rs = generate(c);
    for (NodeMask I = 1; I <= c.all_nodes(); ++I)
      for (const auto& b : rs.positive_roots()) {
        if (height(b, I) <= 0) continue;
        ++checked;
        bool ok = false;
        try {
          ok = verify(decompose(b, I, rs), rs).ok;
        } catch (const Error& e) {
          if (first_failure.empty()) first_failure = t + ": " + e.what();
        }
        if (!ok) ++failed;
      }
  }
  r.pass = failed == 0 && checked > 0;
  r.detail = std::to_string(checked) + " (type, I, beta) cases, " + std::to_string(failed) + " failures" +
             (first_failure.empty() ? "" : " (" + first_failure + ")");
  return r;
}

// 3 -------------------------------------------------------------------------
CriterionResult crit_affine_psp(bool quick) {
  CriterionResult r{3, "affine-psp", false, "", 0};
  const int H = quick ? 15 : 30;
  long checked = 0, failed = 0;
  std::ostringstream os;
  for (const char* t : {"A1~1", "A2~1", "A2~2"}) {
    const auto c = cartan(t);
    const auto rs = generate_affine_window(c, H);
    PspTelemetry tel;
    for (NodeMask I = 1; I <= c.all_nodes(); ++I)
      for (const auto& b : rs.positive_roots()) {
        if (height(b, I) <= 0) continue;
        ++checked;
        bool ok = false;
        try {
          ok = verify(decompose(b, I, rs, &tel), rs).ok;
        } catch (const Error&) {
        }
        if (!ok) ++failed;
      }
    os << t << " one-step failures " << tel.one_step_failures << "; ";
  }
  r.pass = failed == 0 && checked > 0;
  r.detail = "H=" + std::to_string(H) + ", " + std::to_string(checked) + " cases, " + std::to_string(failed) +
             " failures; " + os.str();
  return r;
}

// 4 -------------------------------------------------------------------------
// Is g a nonnegative integer combination of gens other than g itself?
bool is_combination(const Root& g, const std::vector<Root>& gens) {
  std::function<bool(const Root&, std::size_t, int)> rec = [&](const Root& rest, std::size_t from, int used) {
    if (rest.is_zero()) return used > 0;
    for (std::size_t k = from; k < gens.size(); ++k) {
      if (gens[k] == g || !gens[k].dominated_by(rest)) continue;
      if (rec(rest - gens[k], k, used + 1)) return true;
    }
    return false;
  };
  return rec(g, 0, 0);
}

CriterionResult crit_minimal_generation(bool quick) {
  CriterionResult r{4, "minimal-generation", false, "", 0};
  long pairs = 0, witnessed = 0, minimal_fail = 0, gen_fail = 0;
  auto types = finite_types(quick ? 5 : 6);
  if (!quick) types.push_back("E6");
  for (const auto& t : types) {
    const auto c = build_cartan(t);
    const auto rs = generate(c);
    for (NodeMask J = 0; J < c.all_nodes(); ++J) {
      ++pairs;
      const NodeMask Jc = c.all_nodes() & ~J;
      const auto gens = minimal_generators(rs, J);
      for (const auto& b : rs.positive_roots()) {
        if (height(b, Jc) == 0) continue;
        bool ok = false;
        try {
          const auto d = decompose(b, Jc, rs);
          ok = verify(d, rs).ok;
          for (const auto& g : d.gammas) ok = ok && std::find(gens.begin(), gens.end(), g) != gens.end();
        } catch (const Error&) {
        }
        ok ? ++witnessed : ++gen_fail;
      }
      for (const auto& g : gens)
        if (is_combination(g, gens)) ++minimal_fail;
    }
  }
  r.pass = gen_fail == 0 && minimal_fail == 0;
  r.detail = std::to_string(pairs) + " (type, J) pairs; " + std::to_string(witnessed) + " roots witnessed, " +
             std::to_string(gen_fail) + " generation failures, " + std::to_string(minimal_fail) +
             " redundant generators";
  return r;
}

// 5 -------------------------------------------------------------------------
CriterionResult crit_bump(bool) {
  CriterionResult r{5, "hull-lattice-recovery", false, "", 0};
  long cases = 0, failed = 0;
  for (const char* t : {"A2", "B2", "A3"}) {
    const auto c = cartan(t);
    const int n = c.size();
    std::vector<int> p(n, 0);
    std::function<void(int)> rec = [&](int k) {
      if (k == n) {
        HighestWeight lambda;
        for (int v : p) lambda.pairings.emplace_back(v);
        const auto full = integrable_weights(c, c.all_nodes(), lambda, 1000);
        int D = 0;
        for (const auto& d : full.weights) D = std::max(D, total_depth(d));
        ++cases;
        if (!full.exact || !hull_lattice_recover(c, lambda, D + 2)) ++failed;
        return;
      }
      for (int v = 0; v <= 2; ++v) {
        p[k] = v;
        rec(k + 1);
      }
    };
    rec(0);
  }
  r.pass = failed == 0;
  r.detail = std::to_string(cases) + " dominant integral weights, " + std::to_string(failed) + " failures";
  return r;
}

// 6 -------------------------------------------------------------------------
CriterionResult crit_two_cones(bool) {
  CriterionResult r{6, "two-cones", false, "", 0};
  const int D = 8;
  long cases = 0, failed = 0;
  for (const char* t : {"A2", "B2"}) {
    const auto c = cartan(t);
    for (NodeMask J = 0; J <= c.all_nodes(); ++J) {
      HighestWeight lambda;
      for (int j = 0; j < c.size(); ++j) lambda.pairings.push_back(contains(J, j) ? Rational(1) : Rational(-1, 2));
      if (integrability(c, lambda) != J) ++failed;
      for (ModuleKind kind : {ModuleKind::Simple, ModuleKind::Verma}) {
        ModuleSpec spec{kind, lambda, std::nullopt, 0};
        ++cases;
        if (!weights_two_ways_agree(c, spec, D)) ++failed;
        if (kind == ModuleKind::Verma) {
          // Verma weights are all of lambda - Z>=0 Pi.
          std::size_t all = 0;
          for (int a = 0; a <= D; ++a) all += a + 1;
          if (weights_of_module(c, spec, D).weights.size() != all) ++failed;
        }
      }
    }
  }
  r.pass = failed == 0;
  r.detail = std::to_string(cases) + " (type, J_lambda, kind) cases at D=8, " + std::to_string(failed) + " failures";
  return r;
}

// 7 -------------------------------------------------------------------------
CriterionResult crit_finite_faces(bool) {
  CriterionResult r{7, "finite-212-classification", false, "", 0};
  Check ck;
  std::ostringstream os;
  for (const char* t : {"A1", "A2", "B2", "G2", "A3"}) {
    const auto c = cartan(t);
    const auto rs = generate(c);
    const auto XD = roots_ambient(rs, false);
    const auto XZ = roots_ambient(rs, true);
    const auto eD = as_family(XD, enumerate_212(XD));
    const auto eZ = as_family(XZ, enumerate_212(XZ));
    const auto mD = as_family(XD, maximizer_sets(XD));
    const auto mZ = as_family(XZ, maximizer_sets(XZ));
    const auto sD = as_family(XD, standard_root_family(rs, XD));
    const std::string name(t);
    ck.require(eZ == mD && mD == mZ && mZ == sD, name + ": 212(Delta+0), maximizers and standard list agree");
    if (name != "A2") {
      ck.require(eD == eZ, name + ": 212(Delta) equals 212(Delta+0)");
      os << name << " " << eD.size() << "; ";
      continue;
    }
    const auto ex = exceptional_family(rs, XD);
    const auto xD = as_family(XD, ex);
    FaceFamily both;
    std::set_intersection(sD.begin(), sD.end(), xD.begin(), xD.end(), std::inserter(both, both.begin()));
    FaceFamily uni = sD;
    uni.insert(xD.begin(), xD.end());
    ck.require(eD.size() == 26, "A2: 26 closed subsets of Delta");
    ck.require(sD.size() == 12 && xD.size() == 14, "A2: 12 standard and 14 exceptional sets");
    ck.require(both.empty(), "A2: lists disjoint");
    ck.require(uni == eD, "A2: 212(Delta) = standard + exceptional");
    int refuted = 0;
    for (const auto& [m, d] : ex.sets) {
      const auto w = weak_face_refutation(XD, m, {6, 3});
      if (w && witness_holds(XD, m, *w)) ++refuted;
    }
    ck.require(refuted == 14, "A2: every exceptional set refuted as a weak Z-face");
    os << "A2 " << eD.size() << " = " << sD.size() << " + " << xD.size() << " (refuted " << refuted << "); ";
  }
  r.pass = ck.ok;
  r.detail = ck.ok ? os.str() : ck.msg.str();
  return r;
}

// 8 -------------------------------------------------------------------------
CriterionResult crit_affine_lift(bool) {
  CriterionResult r{8, "affine-lift", false, "", 0};
  Check ck;
  std::ostringstream os;
  for (const char* t : {"A1~1", "A2~1", "A2~2"}) {
    const auto c = cartan(t);
    const int H = 3 * delta_height(c);
    const std::string name(t);
    auto run = [&](bool with_zero, bool real_only) {
      const auto a = affine_212_equivalence_check(c, H, with_zero, real_only);
      const auto b = affine_212_equivalence_check(c, 2 * H, with_zero, real_only);
      ck.require(a.closed_Z == b.closed_Z && a.closed_lifts == b.closed_lifts, name + ": stable under H -> 2H");
      return std::make_pair(a, b);
    };
    const auto [re, re2] = run(false, true);
    const auto [re0, re02] = run(true, true);
    const auto [full0, full02] = run(true, false);
    const auto [full, full2] = run(false, false);
    ck.require(re.ok() && re2.ok(), name + ": lifts over real roots");
    ck.require(re0.ok() && re02.ok(), name + ": lifts over real roots + 0");
    ck.require(full0.ok() && full02.ok(), name + ": lifts over Delta + 0");
    os << name << " H=" << H << "/" << 2 * H << ": closed " << re.closed_lifts << " (re), " << re0.closed_lifts
       << " (re+0), " << full0.closed_lifts << " (Delta+0)";
    if (name == "A2~1") {
      // Extras over the real roots are exactly the exceptional A2 sets.
      std::vector<std::vector<Root>> extras;
      std::set_difference(re.closed_Z.begin(), re.closed_Z.end(), re0.closed_Z.begin(), re0.closed_Z.end(),
                          std::back_inserter(extras));
      std::vector<std::vector<Root>> expected;
      for (const auto& [d, roots] : exceptional_a2_sets(generate(cartan("A2")))) {
        std::vector<Root> z;
        for (const auto& x : roots) z.push_back(Root({0, x[0], x[1]}));
        canonical_sort(z);
        expected.push_back(z);
      }
      std::sort(expected.begin(), expected.end());
      ck.require(extras == expected, "A2~1: extras equal the 14 exceptional sets");
      // With imaginary roots in the ambient, (a1)+(a2) = (theta-delta)+(delta) breaks those 14 lifts.
      ck.require(full.mismatches == 14 && full.closed_Z == re0.closed_Z, "A2~1: Delta diagnostic");
      os << ", extras " << extras.size() << " = exceptional; over Delta with imaginary roots the " << full.mismatches
         << " exceptional lifts are not closed";
    } else {
      ck.require(full.ok(), name + ": lifts over Delta");
    }
    os << "; ";
  }
  r.pass = ck.ok;
  r.detail = ck.ok ? os.str() : ck.msg.str();
  return r;
}

// 9 -------------------------------------------------------------------------
CriterionResult crit_weight_faces(bool) {
  CriterionResult r{9, "weight-faces", false, "", 0};
  Check ck;
  std::ostringstream os;
  const std::vector<std::pair<const char*, RationalVec>> cases{
      {"A2", {1, 1}}, {"A2", {1, 0}}, {"B2", {1, 1}}};
  for (const auto& [t, p] : cases) {
    const auto c = cartan(t);
    const HighestWeight lambda{p};
    const auto wt = integrable_weights(c, c.all_nodes(), lambda, 1000);
    const auto X = weights_ambient(wt);
    const auto e = as_family(X, enumerate_212(X));
    const auto m = as_family(X, maximizer_sets(X));
    const auto s = as_family(X, standard_weight_family(c, wt, integrability(c, lambda), X));
    const std::string name = std::string(t) + "(" + to_string(p[0]) + "," + to_string(p[1]) + ")";
    ck.require(wt.exact, name + ": exact weight set");
    ck.require(e == m && m == s, name + ": 212 = maximizers = standard faces");
    os << name << " |wt|=" << X.size() << " faces " << e.size() << "; ";
  }
  r.pass = ck.ok;
  r.detail = ck.ok ? os.str() : ck.msg.str();
  return r;
}

// 10 ------------------------------------------------------------------------
CriterionResult crit_liewords(bool) {
  CriterionResult r{10, "lie-words", false, "", 0};
  long words = 0, failed = 0;
  std::string first;
  for (const char* t : {"A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"}) {
    try {
      const auto c = cartan(t);
      const auto table = build_constants(c);
      const auto& rs = table.roots();
      for (NodeMask I = 1; I <= c.all_nodes(); ++I)
        for (const auto& b : rs.positive_roots()) {
          if (height(b, I) <= 0) continue;
          ++words;
          const auto w = verify_spanning(b, I, table);
          if (w.coefficient == 0 || !verify(PspDecomposition{b, I, w.word}, rs).ok) ++failed;
        }
    } catch (const Error& e) {
      ++failed;
      if (first.empty()) first = std::string(t) + ": " + e.what();
    }
  }
  r.pass = failed == 0;
  r.detail = "Jacobi verified for 8 types; " + std::to_string(words) + " (beta, I) words, " + std::to_string(failed) +
             " failures" + (first.empty() ? "" : " (" + first + ")");
  return r;
}

// 11 ------------------------------------------------------------------------
CriterionResult crit_properties(bool) {
  CriterionResult r{11, "property-suite", false, "", 0};
  Check ck;
  std::vector<AmbientSet> ambients;
  for (const char* t : {"A1", "A2", "B2", "G2", "A3"}) {
    const auto rs = generate(cartan(t));
    ambients.push_back(roots_ambient(rs, false));
    ambients.push_back(roots_ambient(rs, true));
  }
  for (const auto& [t, p] : std::vector<std::pair<const char*, RationalVec>>{{"A2", {1, 1}}, {"A2", {1, 0}}, {"B2", {1, 1}}}) {
    const auto c = cartan(t);
    ambients.push_back(weights_ambient(integrable_weights(c, c.all_nodes(), HighestWeight{p}, 1000)));
  }
  long subsets = 0, maximizers = 0, refuted = 0;
  for (const auto& X : ambients) {
    const PairSumIndex idx(X);
    const FaceIndex fi(X.elements);
    std::optional<int> zero;
    for (int i = 0; i < X.size(); ++i)
      if (std::all_of(X.elements[i].begin(), X.elements[i].end(), [](const Rational& v) { return v == 0; })) zero = i;
    for (std::uint64_t Y = 1; Y <= X.all(); ++Y) {
      ++subsets;
      const bool closed = idx.is_closed(Y);
      if (fi.is_maximizer(Y)) {
        ++maximizers;
        ck.require(closed, "maximizer is 212-closed");
        ck.require(!weak_face_refutation(X, Y, {6, 3}), "maximizer not refuted at (6,3)");
      }
      if (!closed) {
        const auto w = weak_face_refutation(X, Y, {2, 2});
        ck.require(w && witness_holds(X, Y, *w), "non-closed set refuted");
        ++refuted;
      }
      if (closed && X.proper_only() && Y != X.all()) {
        ck.require(!(zero && (Y >> *zero & 1)), "0 not in a proper closed set");
        for (int i : mask_to_indices(Y)) {
          RationalVec neg = X.elements[i];
          for (auto& v : neg) v = -v;
          const auto j = X.index_of(neg);
          ck.require(!(j && *j != i && (Y >> *j & 1)), "no antipodal pair");
        }
      }
    }
  }
  long imaginary_checks = 0;
  for (const char* t : {"A1~1", "A2~1", "A2~2"}) {
    const auto c = cartan(t);
    const int H = 3 * delta_height(c);
    const auto rs = generate_affine_window(c, H);
    const auto rep = affine_212_equivalence_check(c, H, false, false);
    for (const auto& Z : rep.closed_Z)
      for (const auto& y : affine_lift(rs, Z, H)) ck.require(rs.is_real(y), std::string(t) + ": no imaginary root");
    for (const auto& x : rs.positive_roots()) {
      if (rs.is_real(x) || 3 * height(x) > H) continue;
      // 2(eta) = (3 eta) + (-eta).
      ck.require(rs.contains(3 * x) && rs.contains(-x), std::string(t) + ": imaginary singleton refuted");
      ++imaginary_checks;
    }
  }
  r.pass = ck.ok;
  r.detail = ck.ok ? std::to_string(ambients.size()) + " ambients, " + std::to_string(subsets) + " subsets (" +
                         std::to_string(maximizers) + " maximizers unrefuted, " + std::to_string(refuted) +
                         " non-closed refuted), " + std::to_string(imaginary_checks) + " imaginary singletons refuted"
                   : ck.msg.str();
  return r;
}

}  // namespace

std::vector<int> criterion_ids() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}; }

CriterionResult run_criterion(int id, bool quick) {
  static const std::vector<std::function<CriterionResult(bool)>> table{
      crit_a6,        crit_finite_psp,   crit_affine_psp,  crit_minimal_generation, crit_bump,    crit_two_cones,
      crit_finite_faces, crit_affine_lift, crit_weight_faces, crit_liewords,          crit_properties};
  if (id < 1 || id > static_cast<int>(table.size())) throw Error(ErrorKind::InvalidArgument, "no criterion " + std::to_string(id));
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1](quick);
  } catch (const std::exception& e) {
    r.id = id;
    r.name = "criterion-" + std::to_string(id);
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
  return r;
}

std::vector<CriterionResult> run_acceptance(bool quick) {
  std::vector<CriterionResult> out;
  for (int id : criterion_ids()) out.push_back(run_criterion(id, quick));
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << r.seconds << "s): " << r.detail;
  return os.str();
}

}  // namespace rootspace
