#include "rootspace/json_io.hpp"

#include "rootspace/error.hpp"

namespace rootspace {

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const RationalVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json to_json(const Root& r) { return Json(r.coeffs()); }

Json to_json(const std::vector<Root>& rs) {
  Json j = Json::array();
  for (const auto& r : rs) j.push_back(to_json(r));
  return j;
}

Json to_json(const Facet& f) {
  Json j;
  RationalVec n;
  for (auto v : f.normal) n.emplace_back(v);
  j["normal"] = to_json(n);
  j["offset"] = to_string(Rational(f.offset));
  return j;
}

Json to_json(const Polyhedron& p) {
  Json j;
  j["dimension"] = p.dimension();
  j["affineDimension"] = p.affine_dimension();
  Json pts = Json::array();
  for (const auto& x : p.points()) pts.push_back(to_json(x));
  j["points"] = pts;
  Json rays = Json::array();
  for (const auto& x : p.rays()) rays.push_back(to_json(x));
  j["rays"] = rays;
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back(to_json(f));
  j["facets"] = facets;
  Json eqs = Json::array();
  for (const auto& f : p.equations()) eqs.push_back(to_json(f));
  j["equations"] = eqs;
  return j;
}

Json to_json(const CartanData& c) {
  Json j;
  j["type"] = c.name();
  j["kind"] = c.is_finite() ? "finite" : "affine";
  j["labels"] = c.labels();
  j["matrix"] = c.matrix();
  j["symmetrizer"] = to_json(c.symmetrizer());
  j["determinant"] = c.determinant();
  if (c.is_affine()) {
    j["marks"] = c.marks();
    j["twist"] = c.twist();
  }
  return j;
}

Json to_json(const PspDecomposition& d) {
  Json j;
  j["beta"] = to_json(d.beta);
  j["gammas"] = to_json(d.gammas);
  j["partialSums"] = to_json(d.partial_sums());
  return j;
}

Json weight_json(const CartanData& c, const HighestWeight& lambda, const Depth& d) {
  Json j;
  j["depth"] = d;
  j["pairings"] = to_json(weight_pairings(c, lambda, d));
  return j;
}

Json to_json(const CartanData& c, const WeightSetWindow& w) {
  Json j;
  j["lambda"] = to_json(w.anchor.pairings);
  j["maxDepth"] = w.max_depth;
  j["exact"] = w.exact;
  j["count"] = w.weights.size();
  Json ws = Json::array();
  for (const auto& d : w.weights) ws.push_back(weight_json(c, w.anchor, d));
  j["weights"] = ws;
  return j;
}

Json to_json(const AmbientSet& X, std::uint64_t Y) {
  Json j = Json::array();
  for (const auto& p : subset_points(X, Y)) j.push_back(to_json(p));
  return j;
}

Json to_json(const AmbientSet& X, const ViolationWitness& w) {
  auto side = [&](const std::vector<std::pair<int, int>>& terms) {
    Json s = Json::array();
    for (auto [i, k] : terms) s.push_back(Json{{"coefficient", k}, {"element", to_json(X.elements[i])}});
    return s;
  };
  return Json{{"lhs", side(w.lhs)}, {"rhs", side(w.rhs)}};
}

Json to_json(const LieWordWitness& w) {
  Json j;
  j["word"] = to_json(w.word);
  j["coefficient"] = w.coefficient;
  return j;
}

Json to_json(const AffineReport& r) {
  Json j;
  j["window"] = r.H;
  j["withZero"] = r.with_zero;
  j["realOnly"] = r.real_only;
  j["subsetsChecked"] = r.subsets_checked;
  j["closedInFinitePart"] = r.closed_finite;
  j["closedLifts"] = r.closed_lifts;
  j["mismatches"] = r.mismatches;
  j["ok"] = r.ok();
  return j;
}

Json labels_json(const CartanData& c, NodeMask m) { return Json(c.labels_of(m)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected an integer or a \"p/q\" string, got " + j.dump());
}

std::vector<RationalVec> points_from_json(const Json& j) {
  const Json& arr = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!arr.is_array()) throw Error(ErrorKind::Parse, "expected an array of points");
  std::vector<RationalVec> out;
  for (const auto& p : arr) {
    if (!p.is_array()) throw Error(ErrorKind::Parse, "each point must be an array");
    RationalVec v;
    for (const auto& x : p) v.push_back(rational_from_json(x));
    out.push_back(std::move(v));
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rootspace
