// rootspace command-line interface.
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rootspace/acceptance.hpp"
#include "rootspace/error.hpp"
#include "rootspace/json_io.hpp"

using namespace rootspace;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string I, J, lambda, beta, Y, X, input, kind = "simple", ambient = "roots", format = "json", plot;
  int depth = 6;
  int window = 0;
  bool quick = false;
};

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": expected an integer at position " + std::to_string(pos) + ", got '" + item + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

RationalVec parse_rationals(const std::string& text, const std::string& flag) {
  try {
    return parse_rational_list(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

// "1,0;0,1" -> two points.
std::vector<RationalVec> parse_points(const std::string& text, const std::string& flag) {
  std::vector<RationalVec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_rationals(item, flag));
  return out;
}

CartanData need_type(const Options& o) {
  if (o.type.empty()) throw UsageError("--type is required");
  return build_cartan(std::string_view(o.type));
}

NodeMask mask_flag(const CartanData& c, const std::string& text, const std::string& flag) {
  const auto labels = parse_int_list(text, flag);
  try {
    return c.mask_from_labels(labels);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

int default_window(const CartanData& c, int requested) {
  if (c.is_finite()) return 0;
  int hd = 0;
  for (int m : c.marks()) hd += m;
  return requested > 0 ? requested : 3 * hd;
}

void emit(const Options& o, const Json& j, const std::string& table) {
  if (o.format == "table") {
    std::cout << table;
  } else {
    std::cout << dump(j);
  }
}

std::string root_row(const Root& r) {
  std::string s;
  for (int i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
  return s;
}

std::string point_row(const RationalVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& x = v[i];
    s += (i ? " " : "") + (x.denominator() == 1 ? std::to_string(x.numerator()) : to_string(x));
  }
  return s;
}

// Euclidean picture of rank-2 root coordinates, or raw coordinates without a type.
std::string svg_plot(const std::vector<RationalVec>& pts, const Polyhedron& P, const CartanData* c) {
  auto embed = [&](const RationalVec& v) -> std::pair<double, double> {
    const double x0 = boost::rational_cast<double>(v[0]), x1 = boost::rational_cast<double>(v[1]);
    if (!c) return {x0, x1};
    const double n0 = std::sqrt(boost::rational_cast<double>(c->bilinear_form(0, 0)));
    const double n1 = std::sqrt(boost::rational_cast<double>(c->bilinear_form(1, 1)));
    const double cs = boost::rational_cast<double>(c->bilinear_form(0, 1)) / (n0 * n1);
    const double sn = std::sqrt(std::max(0.0, 1 - cs * cs));
    return {x0 * n0 + x1 * n1 * cs, x1 * n1 * sn};
  };
  double lim = 1;
  for (const auto& p : pts) {
    const auto [x, y] = embed(p);
    lim = std::max({lim, std::abs(x), std::abs(y)});
  }
  const double scale = 180 / lim;
  auto sx = [&](double x) { return 200 + scale * x; };
  auto sy = [&](double y) { return 200 - scale * y; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  os << "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
  // Boundary: points on each facet, ordered along it.
  for (std::size_t f = 0; f < P.facets().size(); ++f) {
    std::vector<std::pair<double, double>> on;
    for (const auto& p : pts)
      if (P.on_facet(p, f)) on.push_back(embed(p));
    if (on.size() < 2) continue;
    std::sort(on.begin(), on.end());
    os << "<line x1=\"" << sx(on.front().first) << "\" y1=\"" << sy(on.front().second) << "\" x2=\""
       << sx(on.back().first) << "\" y2=\"" << sy(on.back().second) << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const auto& p : pts) {
    const auto [x, y] = embed(p);
    os << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"5\" fill=\"steelblue\"/>\n";
    os << "<text x=\"" << sx(x) + 7 << "\" y=\"" << sy(y) - 7 << "\" font-size=\"11\">(" << point_row(p) << ")</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

struct Ambient {
  AmbientSet X;
  std::optional<RootSystem> rs;
  std::optional<WeightSetWindow> wt;
  NodeMask I_V = 0;
};

Ambient make_ambient(const CartanData& c, const Options& o) {
  Ambient a;
  if (o.ambient == "roots" || o.ambient == "roots0") {
    a.rs = generate(c, default_window(c, o.window));
    a.X = roots_ambient(*a.rs, o.ambient == "roots0");
  } else if (o.ambient == "weights") {
    if (o.lambda.empty()) throw UsageError("--ambient weights needs --lambda");
    ModuleSpec spec{o.kind == "verma" ? ModuleKind::Verma : ModuleKind::Simple,
                    HighestWeight{parse_rationals(o.lambda, "--lambda")}, std::nullopt, 0};
    a.wt = weights_of_module(c, spec, o.depth);
    a.I_V = integrability_of_module(c, spec);
    a.X = weights_ambient(*a.wt);
  } else {
    throw UsageError("--ambient must be roots, roots0 or weights");
  }
  return a;
}

std::vector<RealizedFamily> families_for(const CartanData& c, const Ambient& a) {
  std::vector<RealizedFamily> out;
  if (!c.is_finite()) return out;
  if (a.rs) {
    out.push_back(standard_root_family(*a.rs, a.X));
    const auto t = c.type();
    if (t && t->family == Family::A && t->rank == 2) out.push_back(exceptional_family(*a.rs, a.X));
  } else if (a.wt) {
    out.push_back(standard_weight_family(c, *a.wt, a.I_V, a.X));
  }
  return out;
}

int cmd_cartan(const Options& o) {
  const auto c = need_type(o);
  std::ostringstream t;
  for (const auto& row : c.matrix()) {
    for (std::size_t j = 0; j < row.size(); ++j) t << (j ? " " : "") << row[j];
    t << "\n";
  }
  Json j = envelope("cartan");
  j["cartan"] = to_json(c);
  emit(o, j, t.str());
  return 0;
}

int cmd_roots(const Options& o) {
  const auto c = need_type(o);
  const auto rs = generate(c, default_window(c, o.window));
  Json j = envelope("roots");
  j["type"] = c.name();
  if (rs.window()) j["window"] = *rs.window();
  j["count"] = rs.positive_roots().size();
  Json list = Json::array();
  std::ostringstream t;
  for (const auto& r : rs.positive_roots()) {
    const auto cls = classify_root(rs, r);
    const bool real = cls.reality == Reality::Real;
    list.push_back(Json{{"root", to_json(r)}, {"height", height(r)}, {"real", real}, {"norm", to_string(rs.norm(r))}});
    t << root_row(r) << "  ht=" << height(r) << (real ? "" : " imaginary") << "\n";
  }
  j["positiveRoots"] = list;
  emit(o, j, t.str());
  return 0;
}

int cmd_unit_height(const Options& o) {
  const auto c = need_type(o);
  if (o.I.empty() == o.J.empty()) throw UsageError("give exactly one of --I and --J");
  // --J asks for the minimal generators Delta_{J^c,1}.
  const NodeMask I = o.I.empty() ? c.all_nodes() & ~mask_flag(c, o.J, "--J") : mask_flag(c, o.I, "--I");
  if (I == 0) throw Error(ErrorKind::JEqualsWholeSet, "--J covers every node");
  const auto rs = generate(c, default_window(c, o.window));
  const auto set = unit_I_height_set(rs, I);
  Json j = envelope("unit-height");
  j["type"] = c.name();
  j["I"] = labels_json(c, I);
  j["count"] = set.size();
  j["roots"] = to_json(set);
  std::ostringstream t;
  for (const auto& r : set) t << root_row(r) << "\n";
  emit(o, j, t.str());
  return 0;
}

Root need_beta(const CartanData& c, const Options& o) {
  if (o.beta.empty()) throw UsageError("--beta is required");
  const auto v = parse_int_list(o.beta, "--beta");
  if (static_cast<int>(v.size()) != c.size())
    throw UsageError("--beta: expected " + std::to_string(c.size()) + " coefficients");
  return Root(v);
}

int cmd_psp(const Options& o) {
  const auto c = need_type(o);
  const NodeMask I = mask_flag(c, o.I, "--I");
  const Root beta = need_beta(c, o);
  const auto rs = generate(c, std::max(default_window(c, o.window), c.is_finite() ? 0 : height(beta)));
  PspTelemetry tel;
  const auto d = decompose(beta, I, rs, &tel);
  const auto v = verify(d, rs);
  Json j = envelope("psp decompose");
  j["type"] = c.name();
  j["I"] = labels_json(c, I);
  const Json dj = to_json(d);
  for (const auto& [key, value] : dj.items()) j[key] = value;
  j["verified"] = v.ok;
  j["oneStepFailures"] = tel.one_step_failures.load();
  std::ostringstream t;
  for (const auto& g : d.gammas) t << root_row(g) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_weights(const Options& o, bool check) {
  const auto c = need_type(o);
  if (o.lambda.empty()) throw UsageError("--lambda is required");
  if (o.kind != "simple" && o.kind != "verma") throw UsageError("--kind must be simple or verma");
  ModuleSpec spec{o.kind == "verma" ? ModuleKind::Verma : ModuleKind::Simple,
                  HighestWeight{parse_rationals(o.lambda, "--lambda")}, std::nullopt, 0};
  const auto w = weights_of_module(c, spec, o.depth);
  Json j = envelope("weights");
  j["type"] = c.name();
  j["kind"] = o.kind;
  j["J_lambda"] = labels_json(c, integrability(c, spec.lambda));
  j["I_V"] = labels_json(c, integrability_of_module(c, spec));
  j["window"] = to_json(c, w);
  if (check) {
    j["twoWaysAgree"] = weights_two_ways_agree(c, spec, o.depth);
    if (spec.kind == ModuleKind::Simple && c.is_finite()) j["hullRecovers"] = hull_lattice_recover(c, spec.lambda, o.depth);
  }
  std::ostringstream t;
  for (const auto& d : w.weights) t << root_row(Root(d)) << "  <mu,a^v>=" << point_row(weight_pairings(c, spec.lambda, d)) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_hull(const Options& o) {
  std::vector<RationalVec> points, rays;
  std::optional<CartanData> c;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw UsageError("--input: cannot open " + o.input);
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--input: ") + e.what());
    }
    points = points_from_json(doc);
    if (doc.is_object() && doc.contains("rays")) rays = points_from_json(doc.at("rays"));
  } else {
    c = need_type(o);
    points = make_ambient(*c, o).X.elements;
  }
  const auto P = hull(points, rays);
  if (o.format == "svg" || o.plot == "svg") {
    if (P.dimension() != 2) throw UsageError("--plot svg needs two-dimensional points");
    std::cout << svg_plot(points, P, c && c->size() == 2 ? &*c : nullptr);
    return 0;
  }
  Json j = envelope("hull");
  j["polyhedron"] = to_json(P);
  j["roundTrip"] = P.round_trip_ok();
  std::ostringstream t;
  for (const auto& f : P.facets()) {
    RationalVec n;
    for (auto v : f.normal) n.emplace_back(v);
    t << point_row(n) << " <= " << f.offset << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

Json subset_entry(const CartanData& c, const AmbientSet& X, std::uint64_t Y, const std::vector<RealizedFamily>& fams) {
  std::vector<const RealizedFamily*> ptrs;
  for (const auto& f : fams) ptrs.push_back(&f);
  const auto cl = classify(X, Y, ptrs);
  Json e;
  e["elements"] = to_json(X, Y);
  if (cl.descriptor) e["descriptor"] = describe(*cl.descriptor, c);
  else e["descriptor"] = nullptr;
  return e;
}

int cmd_faces_enumerate(const Options& o) {
  const auto c = need_type(o);
  const auto a = make_ambient(c, o);
  const auto sets = enumerate_212(a.X);
  const auto fams = families_for(c, a);
  Json j = envelope("faces enumerate");
  j["type"] = c.name();
  j["ambient"] = to_string(a.X.kind);
  j["ambientSize"] = a.X.size();
  j["count"] = sets.size();
  Json list = Json::array();
  std::ostringstream t;
  for (auto Y : sets) {
    list.push_back(subset_entry(c, a.X, Y, fams));
    t << "{";
    bool first = true;
    for (const auto& p : subset_points(a.X, Y)) {
      t << (first ? "" : "; ") << "(" << point_row(p) << ")";
      first = false;
    }
    t << "}\n";
  }
  j["subsets"] = list;
  emit(o, j, t.str());
  return 0;
}

int cmd_faces_check(const Options& o) {
  if (o.Y.empty()) throw UsageError("--Y is required");
  std::optional<CartanData> c;
  Ambient a;
  if (!o.X.empty()) {
    a.X = explicit_ambient(AmbientKind::HullSample, parse_points(o.X, "--X"));
  } else {
    c = need_type(o);
    a = make_ambient(*c, o);
  }
  std::uint64_t Y = 0;
  try {
    Y = a.X.mask_of(parse_points(o.Y, "--Y"));
  } catch (const Error& e) {
    throw UsageError(std::string("--Y: ") + e.what());
  }
  const auto closed = is_212_closed(a.X, Y);
  Json j = envelope("faces check");
  j["closed"] = closed.closed;
  if (closed.witness) j["witness"] = to_json(a.X, *closed.witness);
  if (a.X.size() > 0 && a.X.elements.front().size() <= 4) {
    j["maximizer"] = FaceIndex(a.X.elements).is_maximizer(Y);
  }
  if (const auto w = weak_face_refutation(a.X, Y)) j["weakFaceRefutation"] = to_json(a.X, *w);
  if (c) {
    const auto fams = families_for(*c, a);
    j["descriptor"] = subset_entry(*c, a.X, Y, fams)["descriptor"];
  }
  emit(o, j, std::string(closed.closed ? "closed\n" : "not closed\n"));
  return 0;
}

int cmd_affine_verify(const Options& o) {
  const auto c = need_type(o);
  if (!c.is_affine()) throw Error(ErrorKind::NotAffineType, c.name());
  const int H = default_window(c, o.window);
  Json j = envelope("faces affine-verify");
  j["type"] = c.name();
  Json reports = Json::array();
  std::ostringstream t;
  for (bool real_only : {true, false})
    for (bool with_zero : {false, true}) {
      const auto r = affine_212_equivalence_check(c, H, with_zero, real_only);
      Json e = to_json(r);
      e["ambient"] = std::string(real_only ? "real roots" : "roots") + (with_zero ? " + 0" : "");
      reports.push_back(e);
      t << e["ambient"].get<std::string>() << ": " << r.closed_finite << " closed Z, " << r.closed_lifts
        << " closed lifts, " << r.mismatches << " mismatches\n";
    }
  j["reports"] = reports;
  emit(o, j, t.str());
  return 0;
}

int cmd_liewords(const Options& o) {
  const auto c = need_type(o);
  const NodeMask I = mask_flag(c, o.I, "--I");
  const Root beta = need_beta(c, o);
  const auto table = build_constants(c);
  const auto w = verify_spanning(beta, I, table);
  Json j = envelope("liewords verify");
  j["type"] = c.name();
  j["I"] = labels_json(c, I);
  j["beta"] = to_json(beta);
  j["word"] = to_json(w.word);
  j["coefficient"] = w.coefficient;
  std::ostringstream t;
  t << "coefficient " << w.coefficient << "\n";
  for (const auto& g : w.word) t << root_row(g) << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_verify_all(const Options& o) {
  bool all = true;
  Json j = envelope("verify-all");
  Json rows = Json::array();
  for (int id : criterion_ids()) {
    const auto r = run_criterion(id, o.quick);
    all = all && r.pass;
    if (o.format == "json") {
      rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    } else {
      std::cout << format_line(r) << std::endl;
    }
  }
  if (o.format == "json") {
    j["criteria"] = rows;
    j["pass"] = all;
    std::cout << dump(j);
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rootspace: exact root-system combinatorics"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* s) {
    s->add_option("--type", o.type, "Lie type, e.g. A2, G2, A2~1, D4~3");
    s->add_option("--format", o.format, "json, table or svg")->check(CLI::IsMember({"json", "table", "svg"}));
  };
  auto window = [&](CLI::App* s) { s->add_option("--window", o.window, "height window for affine types"); };
  auto ambient = [&](CLI::App* s) {
    s->add_option("--ambient", o.ambient, "roots, roots0 or weights")->check(CLI::IsMember({"roots", "roots0", "weights"}));
    s->add_option("--lambda", o.lambda, "coroot pairings for --ambient weights");
    s->add_option("--kind", o.kind, "simple or verma");
    s->add_option("--depth", o.depth, "depth bound for weight windows");
    window(s);
  };

  auto* cartan_cmd = app.add_subcommand("cartan", "Cartan matrix and its data");
  common(cartan_cmd);
  auto* roots_cmd = app.add_subcommand("roots", "positive roots (window for affine types)");
  common(roots_cmd);
  window(roots_cmd);
  auto* unit_cmd = app.add_subcommand("unit-height", "roots of I-height one");
  common(unit_cmd);
  unit_cmd->add_option("--I", o.I, "node labels, comma separated");
  unit_cmd->add_option("--J", o.J, "node labels; uses I = complement of J");
  window(unit_cmd);

  auto* psp_cmd = app.add_subcommand("psp", "parabolic partial sums");
  psp_cmd->require_subcommand(1);
  auto* psp_dec = psp_cmd->add_subcommand("decompose", "decompose beta into unit I-height roots");
  common(psp_dec);
  psp_dec->add_option("--I", o.I, "node labels")->required();
  psp_dec->add_option("--beta", o.beta, "root coefficients")->required();
  window(psp_dec);

  bool check = false;
  auto* weights_cmd = app.add_subcommand("weights", "weights of a highest weight module");
  common(weights_cmd);
  weights_cmd->add_option("--lambda", o.lambda, "coroot pairings, e.g. 1,-1/2")->required();
  weights_cmd->add_option("--kind", o.kind, "simple or verma");
  weights_cmd->add_option("--depth", o.depth, "total depth bound");
  weights_cmd->add_flag("--check", check, "also compare both cone formulas and the hull recovery");

  auto* hull_cmd = app.add_subcommand("hull", "convex hull with facets");
  common(hull_cmd);
  ambient(hull_cmd);
  hull_cmd->add_option("--input", o.input, "JSON file: [[..],..] or {points, rays}");
  hull_cmd->add_option("--plot", o.plot, "svg")->check(CLI::IsMember({"svg"}));

  auto* faces_cmd = app.add_subcommand("faces", "212-closed subsets and faces");
  faces_cmd->require_subcommand(1);
  auto* f_enum = faces_cmd->add_subcommand("enumerate", "all 212-closed subsets");
  common(f_enum);
  ambient(f_enum);
  auto* f_check = faces_cmd->add_subcommand("check", "test one subset");
  common(f_check);
  ambient(f_check);
  f_check->add_option("--Y", o.Y, "subset points, e.g. \"1,0;0,1\"")->required();
  f_check->add_option("--X", o.X, "explicit ambient points instead of --type");
  auto* f_aff = faces_cmd->add_subcommand("affine-verify", "lift check against the finite part");
  common(f_aff);
  window(f_aff);

  auto* lie_cmd = app.add_subcommand("liewords", "right-normed Lie words");
  lie_cmd->require_subcommand(1);
  auto* lie_verify = lie_cmd->add_subcommand("verify", "find a nonzero word for beta");
  common(lie_verify);
  lie_verify->add_option("--I", o.I, "node labels")->required();
  lie_verify->add_option("--beta", o.beta, "root coefficients")->required();

  auto* all_cmd = app.add_subcommand("verify-all", "run the acceptance suite");
  all_cmd->add_flag("--quick", o.quick, "smaller sweeps");
  all_cmd->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"json", "table"}));
  o.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (all_cmd->parsed() && all_cmd->count("--format") == 0) o.format = "table";

  try {
    if (cartan_cmd->parsed()) return cmd_cartan(o);
    if (roots_cmd->parsed()) return cmd_roots(o);
    if (unit_cmd->parsed()) return cmd_unit_height(o);
    if (psp_dec->parsed()) return cmd_psp(o);
    if (weights_cmd->parsed()) return cmd_weights(o, check);
    if (hull_cmd->parsed()) return cmd_hull(o);
    if (f_enum->parsed()) return cmd_faces_enumerate(o);
    if (f_check->parsed()) return cmd_faces_check(o);
    if (f_aff->parsed()) return cmd_affine_verify(o);
    if (lie_verify->parsed()) return cmd_liewords(o);
    if (all_cmd->parsed()) return cmd_verify_all(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
