#include "pairwalls/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace pairwalls {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "pairwalls/1";

struct AltCurve {
  std::string description;
  std::vector<StdSheaf> parts;          // disjoint pieces, untwisted
  std::optional<RatPoly> cm_curve;      // Hilbert polynomial of a CM pure part
};

struct GoldenChart {
  std::string preset;
  std::vector<std::tuple<i64, std::string, std::string>> rows;  // (group, P_A, P_B)
  std::vector<AltCurve> alt_curves;
  std::vector<std::string> notes;
};

const std::vector<GoldenChart>& golden_charts() {
  static const std::vector<GoldenChart> charts = [] {
    std::vector<GoldenChart> g;
    g.push_back({"flag-variety",
                 {{0, "0", "t+1"}},
                 {},
                 {"the collapsing wall is the unique wall; the pair moduli is the flag variety of "
                  "a point on a line"}});
    g.push_back({"null-correlation",
                 {{0, "0", "2*t+2"}, {1, "t+2", "0"}, {1, "t+1", "1"}},
                 {{"two skew lines", {StdSheaf::line(0), StdSheaf::line(0)}, std::nullopt}},
                 {"below the first wall the pair moduli fibers over the null-correlation P^5 with "
                  "P^4 fibers"}});
    g.push_back({"quartic-curves",
                 {{0, "0", "4*t"},
                  {1, "3*t+2", "0"},
                  {1, "3*t+1", "1"},
                  {1, "3*t", "2"},
                  {1, "2*t+1", "t+1"}},
                 {{"elliptic quartic (CM)", {}, RatPoly::from_coeffs({Rat(0), Rat(4)})}},
                 {"the pair moduli over the Gieseker chamber is irreducible of dimension 23"}});
    g.push_back({"three-lines",
                 {{0, "0", "3*t+3"},
                  {1, "2*t+4", "0"},
                  {1, "2*t+3", "1"},
                  {1, "2*t+2", "2"},
                  {1, "2*t+1", "3"},
                  {1, "t+3", "t+1"}},
                 {{"three disjoint lines", {StdSheaf::line(0), StdSheaf::line(0), StdSheaf::line(0)}, std::nullopt},
                  {"conic and a disjoint line", {StdSheaf::planar_curve(2, 0), StdSheaf::line(0)}, std::nullopt},
                  {"twisted cubic with two points", {StdSheaf::points(2)}, RatPoly::from_coeffs({Rat(1), Rat(3)})}},
                 {"the interior walls remove the planar-cubic and non-reduced loci; three "
                  "generically saturated components remain"}});
    g.push_back({"two-components",
                 {{0, "0", "3*t+2"},
                  {1, "2*t+3", "0"},
                  {1, "2*t+2", "1"},
                  {1, "2*t+1", "2"},
                  {1, "t+2", "t+1"}},
                 {{"twisted cubic with a point", {StdSheaf::points(1)}, RatPoly::from_coeffs({Rat(1), Rat(3)})},
                  {"conic and a disjoint line", {StdSheaf::planar_curve(2, 0), StdSheaf::line(0)}, std::nullopt}},
                 {"two generically saturated components remain below the last wall"}});
    return g;
  }();
  return charts;
}

const GoldenChart* find_chart(const std::string& preset) {
  for (const auto& g : golden_charts())
    if (g.preset == preset) return &g;
  return nullptr;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> list = {
      {"flag-variety", "rank 2, chern (-1,1,1): a single wall, the pair moduli is a flag variety",
       NumClass(2, -1, Rat(-1, 2), Rat(5, 6))},
      {"null-correlation", "rank 2, chern (0,1,0): null-correlation sheaves, three walls",
       NumClass(2, 0, -1, 0)},
      {"quartic-curves", "rank 2, chern (0,3,8): quartic curves, five walls with a conic/line wall",
       NumClass(2, 0, -3, 4)},
      {"three-lines", "rank 2, chern (0,2,0): six walls, removes a non-reduced Hilbert component",
       NumClass(2, 0, -2, 0)},
      {"two-components", "rank 2, chern (0,2,2): five walls, two components survive",
       NumClass(2, 0, -2, 1)},
  };
  return list;
}

const Preset* find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

namespace {

std::string scheme_poly_str(const SchemeClass& c) { return c.hilbert().str(); }

std::string planar_member_desc(i64 d, i64 pts) {
  std::string s = "planar: degree-" + std::to_string(d) + " plane curve";
  if (pts > 0) s += " + " + std::to_string(pts) + " point" + (pts == 1 ? "" : "s") + " in the plane";
  return s;
}

i64 stratum_hilb_dim(i64 d, i64 in_plane_pts, i64 off_pts) {
  i64 planar_part = (d == 1 && in_plane_pts == 0) ? 4 : planar_relhilb_dim(d, in_plane_pts);
  return planar_part + 3 * off_pts;
}

void check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("internal inconsistency: " + what);
}

}  // namespace

ChamberReport build_report(const NumClass& v, i64 k, const ReportOptions& opts) {
  if (v.rank() != 2) throw std::invalid_argument("chamber reports cover rank-2 classes");
  if (k < 1) throw std::invalid_argument("twist must be >= 1");

  ChamberReport r;
  r.cls = v;
  r.twist = k;
  for (const auto& p : presets())
    if (p.cls == v) r.preset = p.name;

  r.w_empty = collapsing_wall(v, k);
  r.curve_poly = curve_polynomial(v, k);

  auto records = enumerate_walls(v, k, opts.max_group);
  r.named = named_walls(records, v, k);

  try {
    r.family = zero_dim_family(v, k);
  } catch (const std::invalid_argument&) {
    r.notes.push_back("the planar A0 budget is not realizable: no group-1 wall family");
  }

  FamilyContext ctx{r.family && !r.family->walls.empty() ? r.family->l : -1, k, v.c1()};

  // labels: W_empty for the collapsing record, then W0, W1, ... per distinct
  // critical value in descending order
  std::vector<RatPoly> interior_deltas;
  for (const auto& w : records)
    if (w.kind == WallRecord::Kind::Interior &&
        (interior_deltas.empty() || !(interior_deltas.back() == w.delta)))
      interior_deltas.push_back(w.delta);

  const GoldenChart* chart = r.preset && k == 1 ? find_chart(*r.preset) : nullptr;
  for (const auto& w : records) {
    WallRow row;
    row.record = w;
    if (w.kind == WallRecord::Kind::Collapsing) {
      row.label = "W_empty";
    } else {
      auto it = std::find(interior_deltas.begin(), interior_deltas.end(), w.delta);
      row.label = "W" + std::to_string(it - interior_deltas.begin());
    }
    row.transition = classify_transition(w, ctx);
    if (chart)
      for (const auto& [grp, pa, pb] : chart->rows)
        if (grp == w.group && pa == scheme_poly_str(w.sub_scheme) && pb == scheme_poly_str(w.quot_scheme))
          row.golden_chart = true;
    check(wall_record_consistent(w, v, k), "wall record fails the budget identity");
    r.walls.push_back(std::move(row));
  }

  // chambers, ascending; interior walls are the interior boundaries
  {
    std::vector<RatPoly> asc(interior_deltas.rbegin(), interior_deltas.rend());
    RatPoly lo;  // 0
    for (size_t i = 0; i <= asc.size(); ++i) {
      Chamber c;
      c.lo = lo;
      c.hi = (i < asc.size()) ? asc[i] : r.w_empty;
      if (i == 0) c.gieseker = true;
      if (i == asc.size()) c.hilbert = true;
      lo = c.hi;
      r.chambers.push_back(std::move(c));
      if (i < asc.size()) check(lex_less(r.chambers.back().lo, r.chambers.back().hi) ||
                                    r.chambers.back().lo.is_zero(),
                                "chamber bounds out of order");
    }
    Chamber top;
    top.lo = r.w_empty;
    top.unbounded = true;
    r.chambers.push_back(std::move(top));
  }

  // strata of the planar-family locus in the Hilbert scheme, plus the fiber
  // dimension of the Hilbert-chamber morphism over its general members
  const i64 m = 2 * k + v.c1() - 4;
  try {
    PlanarSplit split = split_planar(r.curve_poly);
    if (r.family) check(r.family->l == split.points, "family length differs from the strata count");
    i64 fiber = hilbert_fiber_dim(
        {StdSheaf::planar_curve(split.degree, 0), StdSheaf::points(split.points)}, m);
    for (i64 i = 0; i <= split.points; ++i) {
      StratumRow srow;
      srow.index = i;
      srow.member = CurveDesc{split.degree, split.pure_euler + (split.points - i), i, false};
      srow.dim = stratum_hilb_dim(split.degree, split.points - i, i);
      srow.pair_dim = srow.dim + fiber - 1;
      r.strata.push_back(std::move(srow));
    }
    r.curve_types.push_back({planar_member_desc(split.degree, split.points), fiber});
  } catch (const std::invalid_argument&) {
    r.notes.push_back("the curve polynomial has no planar member: no strata computed");
  }
  if (chart)
    for (const auto& alt : chart->alt_curves) {
      i64 fiber = alt.cm_curve ? hilbert_fiber_dim_cm(*alt.cm_curve, m) : 0;
      fiber += hilbert_fiber_dim(alt.parts, m);
      r.curve_types.push_back({alt.description, fiber});
    }

  if (v.c1() == 0) {
    ChernClasses c = chern_classes(v);
    if (is_integer(c.c2) && is_integer(c.c3) && to_integer(c.c2) >= 1) {
      SpectrumBlock sb;
      sb.c2 = static_cast<i64>(to_integer(c.c2));
      sb.c3 = static_cast<i64>(to_integer(c.c3));
      sb.spectra = enumerate_spectra(sb.c2, sb.c3);
      for (const auto& spec : sb.spectra) sb.h2.push_back(h2_twist(spec, k));
      sb.h0 = h0_lower_bound(v, k);
      r.spectrum = std::move(sb);
    } else {
      r.notes.push_back("spectrum argument unavailable (it needs integral Chern classes with c2 >= 1)");
    }
  }

  r.notes.push_back(
      "critical values use the chi-consistent twist chi(I_A(s)(t)) = chi(O(s+t)) - chi(O_A(s+t)); "
      "conventions leaving the curve polynomial untwisted give values lower by 2*s*deg(A)");
  bool any_numerical = false;
  for (const auto& row : r.walls)
    any_numerical |= row.record.actual == WallRecord::Actuality::Numerical;
  if (any_numerical)
    r.notes.push_back(
        "walls tagged 'numerical' satisfy the budget identities but carry no extension certificate");
  if (v.c1() == -1 && r.named.w1_shape_checked)
    r.notes.push_back("c1 = -1: the minimum wall is cut out by (O(k-1), 1), as expected");
  if (chart)
    for (const auto& n : chart->notes) r.notes.push_back(n);

  return r;
}

// ---------------------------------------------------------------------------
// serialization

namespace {

json poly_to_json(const RatPoly& p) {
  json arr = json::array();
  for (const Rat& c : p.coeffs())
    arr.push_back({{"num", numerator(c).str()}, {"den", denominator(c).str()}});
  return arr;
}

RatPoly poly_from_json(const json& j) {
  std::vector<Rat> coeffs;
  for (const auto& term : j)
    coeffs.push_back(Rat(Int(term.at("num").get<std::string>()), Int(term.at("den").get<std::string>())));
  return RatPoly::from_coeffs(std::move(coeffs));
}

json scheme_to_json(const SchemeClass& c) {
  return {{"dim", c.dim},
          {"degree", c.degree},
          {"euler", c.euler},
          {"planar_pure", c.planar_pure},
          {"points", c.points}};
}

SchemeClass scheme_from_json(const json& j) {
  SchemeClass c;
  c.dim = j.at("dim").get<int>();
  c.degree = j.at("degree").get<i64>();
  c.euler = j.at("euler").get<i64>();
  c.planar_pure = j.at("planar_pure").get<bool>();
  c.points = j.at("points").get<i64>();
  return c;
}

json curvedesc_to_json(const CurveDesc& c) {
  return {{"planar", {{"d", c.planar_degree}, {"chi", c.planar_euler}}},
          {"off_plane_points", c.off_plane_points},
          {"nonplanar", c.nonplanar}};
}

CurveDesc curvedesc_from_json(const json& j) {
  CurveDesc c;
  c.planar_degree = j.at("planar").at("d").get<i64>();
  c.planar_euler = j.at("planar").at("chi").get<i64>();
  c.off_plane_points = j.at("off_plane_points").get<i64>();
  c.nonplanar = j.at("nonplanar").get<bool>();
  return c;
}

json transition_to_json(const Transition& t) {
  json j;
  j["type"] = transition_str(t.type);
  if (t.ext_plus_dim) j["ext_plus"] = *t.ext_plus_dim;
  if (t.ext_minus_dim) j["ext_minus"] = *t.ext_minus_dim;
  if (!t.ext_minus_case_table.empty()) {
    json cases = json::array();
    for (const auto& [cfg, val] : t.ext_minus_case_table)
      cases.push_back({{"config", static_cast<int>(cfg)},
                       {"config_str", incidence_str(cfg)},
                       {"value", val}});
    j["ext_minus_cases"] = cases;
  }
  if (t.dim_ss) j["dim_ss"] = *t.dim_ss;
  if (t.dim_plus) j["dim_plus"] = *t.dim_plus;
  if (t.dim_minus) j["dim_minus"] = *t.dim_minus;
  return j;
}

Transition transition_from_json(const json& j) {
  Transition t;
  std::string type = j.at("type").get<std::string>();
  for (auto tt : {TransitionType::Flip, TransitionType::DivisorialContraction,
                  TransitionType::Removal, TransitionType::Unclassified})
    if (transition_str(tt) == type) t.type = tt;
  if (j.contains("ext_plus")) t.ext_plus_dim = j["ext_plus"].get<i64>();
  if (j.contains("ext_minus")) t.ext_minus_dim = j["ext_minus"].get<i64>();
  if (j.contains("ext_minus_cases"))
    for (const auto& c : j["ext_minus_cases"])
      t.ext_minus_case_table.emplace_back(static_cast<Incidence>(c.at("config").get<int>()),
                                          c.at("value").get<i64>());
  if (j.contains("dim_ss")) t.dim_ss = j["dim_ss"].get<i64>();
  if (j.contains("dim_plus")) t.dim_plus = j["dim_plus"].get<i64>();
  if (j.contains("dim_minus")) t.dim_minus = j["dim_minus"].get<i64>();
  return t;
}

json wall_row_to_json(const WallRow& row) {
  const WallRecord& w = row.record;
  json j;
  j["label"] = row.label;
  j["delta"] = poly_to_json(w.delta);
  j["delta_str"] = w.delta.str();
  j["group"] = w.group;
  j["sub_twist"] = w.sub_twist;
  j["quot_twist"] = w.quot_twist;
  j["sub"] = scheme_to_json(w.sub_scheme);
  j["quot"] = scheme_to_json(w.quot_scheme);
  if (w.family_index) j["family_index"] = *w.family_index;
  j["actual"] = w.actual == WallRecord::Actuality::Verified ? "verified" : "numerical";
  j["kind"] = w.kind == WallRecord::Kind::Collapsing ? "collapsing" : "interior";
  j["golden_chart"] = row.golden_chart;
  j["transition"] = transition_to_json(row.transition);
  return j;
}

WallRow wall_row_from_json(const json& j) {
  WallRow row;
  WallRecord& w = row.record;
  row.label = j.at("label").get<std::string>();
  w.delta = poly_from_json(j.at("delta"));
  w.group = j.at("group").get<i64>();
  w.sub_twist = j.at("sub_twist").get<i64>();
  w.quot_twist = j.at("quot_twist").get<i64>();
  w.sub_scheme = scheme_from_json(j.at("sub"));
  w.quot_scheme = scheme_from_json(j.at("quot"));
  if (j.contains("family_index")) w.family_index = j["family_index"].get<i64>();
  w.actual = j.at("actual").get<std::string>() == "verified" ? WallRecord::Actuality::Verified
                                                             : WallRecord::Actuality::Numerical;
  w.kind = j.at("kind").get<std::string>() == "collapsing" ? WallRecord::Kind::Collapsing
                                                           : WallRecord::Kind::Interior;
  row.golden_chart = j.at("golden_chart").get<bool>();
  row.transition = transition_from_json(j.at("transition"));
  return row;
}

json class_to_json(const NumClass& v) {
  return json::array({rat_str(v.ch0()), rat_str(v.ch1()), rat_str(v.ch2()), rat_str(v.ch3())});
}

NumClass class_from_json(const json& j) {
  return NumClass(parse_rat(j.at(0).get<std::string>()), parse_rat(j.at(1).get<std::string>()),
                  parse_rat(j.at(2).get<std::string>()), parse_rat(j.at(3).get<std::string>()));
}

json report_to_json(const ChamberReport& r) {
  json j;
  j["schema"] = kSchema;
  j["class"] = class_to_json(r.cls);
  ChernClasses cc = chern_classes(r.cls);
  j["chern"] = {{"rank", cc.rank}, {"c1", cc.c1}, {"c2", rat_str(cc.c2)}, {"c3", rat_str(cc.c3)}};
  j["twist"] = r.twist;
  if (r.preset) j["preset"] = *r.preset;
  j["collapsing_wall"] = poly_to_json(r.w_empty);
  j["curve_poly"] = poly_to_json(r.curve_poly);
  j["named"] = {{"collapse", poly_to_json(r.named.collapse)},
                {"top", poly_to_json(r.named.top)},
                {"first", poly_to_json(r.named.first)},
                {"w1_shape_checked", r.named.w1_shape_checked}};
  json walls = json::array();
  for (const auto& row : r.walls) walls.push_back(wall_row_to_json(row));
  j["walls"] = walls;
  json chambers = json::array();
  for (const auto& c : r.chambers)
    chambers.push_back({{"lo", poly_to_json(c.lo)},
                        {"hi", poly_to_json(c.hi)},
                        {"unbounded", c.unbounded},
                        {"hilbert", c.hilbert},
                        {"gieseker", c.gieseker}});
  j["chambers"] = chambers;
  if (r.family) j["family"] = {{"budget", poly_to_json(r.family->budget)}, {"l", r.family->l}};
  json strata = json::array();
  for (const auto& s : r.strata)
    strata.push_back({{"index", s.index},
                      {"member", curvedesc_to_json(s.member)},
                      {"dim", s.dim},
                      {"pair_dim", s.pair_dim}});
  j["strata"] = strata;
  json types = json::array();
  for (const auto& t : r.curve_types)
    types.push_back({{"description", t.description}, {"fiber_h1", t.fiber_h1}});
  j["curve_types"] = types;
  if (r.spectrum) {
    const auto& sb = *r.spectrum;
    json spectra = json::array();
    for (const auto& s : sb.spectra) spectra.push_back({{"ks", s.ks}, {"s", s.s}});
    json sj = {{"c2", sb.c2}, {"c3", sb.c3}, {"spectra", spectra}, {"h2", sb.h2},
               {"proven_positive", sb.h0.proven_positive}};
    if (sb.h0.bound) sj["h0_bound"] = *sb.h0.bound;
    j["spectrum"] = sj;
  }
  j["notes"] = r.notes;
  return j;
}

}  // namespace

ChamberReport report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  if (j.value("schema", "") != kSchema)
    throw std::invalid_argument("unknown schema: " + j.value("schema", "<missing>"));
  try {
    ChamberReport r;
    r.cls = class_from_json(j.at("class"));
    r.twist = j.at("twist").get<i64>();
    if (j.contains("preset")) r.preset = j["preset"].get<std::string>();
    r.w_empty = poly_from_json(j.at("collapsing_wall"));
    r.curve_poly = poly_from_json(j.at("curve_poly"));
    r.named.collapse = poly_from_json(j.at("named").at("collapse"));
    r.named.top = poly_from_json(j.at("named").at("top"));
    r.named.first = poly_from_json(j.at("named").at("first"));
    r.named.w1_shape_checked = j.at("named").at("w1_shape_checked").get<bool>();
    for (const auto& row : j.at("walls")) r.walls.push_back(wall_row_from_json(row));
    for (const auto& c : j.at("chambers")) {
      Chamber ch;
      ch.lo = poly_from_json(c.at("lo"));
      ch.hi = poly_from_json(c.at("hi"));
      ch.unbounded = c.at("unbounded").get<bool>();
      ch.hilbert = c.at("hilbert").get<bool>();
      ch.gieseker = c.at("gieseker").get<bool>();
      r.chambers.push_back(std::move(ch));
    }
    if (j.contains("family")) {
      ZeroDimFamily fam;
      fam.budget = poly_from_json(j["family"].at("budget"));
      fam.l = j["family"].at("l").get<i64>();
      for (const auto& row : r.walls)
        if (row.record.family_index) fam.walls.push_back(row.record);
      r.family = std::move(fam);
    }
    for (const auto& s : j.at("strata")) {
      StratumRow sr;
      sr.index = s.at("index").get<i64>();
      sr.member = curvedesc_from_json(s.at("member"));
      sr.dim = s.at("dim").get<i64>();
      sr.pair_dim = s.at("pair_dim").get<i64>();
      r.strata.push_back(std::move(sr));
    }
    for (const auto& t : j.at("curve_types"))
      r.curve_types.push_back({t.at("description").get<std::string>(), t.at("fiber_h1").get<i64>()});
    if (j.contains("spectrum")) {
      const auto& sj = j["spectrum"];
      SpectrumBlock sb;
      sb.c2 = sj.at("c2").get<i64>();
      sb.c3 = sj.at("c3").get<i64>();
      for (const auto& s : sj.at("spectra"))
        sb.spectra.push_back({s.at("ks").get<std::vector<i64>>(), s.at("s").get<i64>()});
      sb.h2 = sj.at("h2").get<std::vector<i64>>();
      if (sj.contains("h0_bound")) sb.h0.bound = sj["h0_bound"].get<i64>();
      sb.h0.proven_positive = sj.at("proven_positive").get<bool>();
      r.spectrum = std::move(sb);
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
}

bool reports_equal(const ChamberReport& a, const ChamberReport& b) {
  return a.cls == b.cls && a.twist == b.twist && a.preset == b.preset && a.w_empty == b.w_empty &&
         a.curve_poly == b.curve_poly && a.named == b.named && a.walls == b.walls &&
         a.chambers == b.chambers && a.family == b.family && a.strata == b.strata &&
         a.curve_types == b.curve_types && a.spectrum == b.spectrum && a.notes == b.notes;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string pad(const std::string& s, size_t w) {
  return s + std::string(s.size() < w ? w - s.size() : 0, ' ');
}

void render_wall_table(std::ostream& os, const ChamberReport& r) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"wall", "delta", "grp", "P_A", "P_B", "fam", "ext+", "ext-", "transition",
                  "dim ss/+/-", "status"});
  for (const auto& row : r.walls) {
    const WallRecord& w = row.record;
    const Transition& t = row.transition;
    std::string dims;
    if (t.dim_ss) {
      dims = std::to_string(*t.dim_ss) + "/" +
             (t.dim_plus ? std::to_string(*t.dim_plus) : "-") + "/" +
             (t.dim_minus ? std::to_string(*t.dim_minus) : "-");
    } else {
      dims = "-";
    }
    std::string status = w.actual == WallRecord::Actuality::Verified ? "verified" : "numerical";
    if (row.golden_chart) status += "*";
    rows.push_back({row.label, w.delta.str(), std::to_string(w.group),
                    scheme_poly_str(w.sub_scheme), scheme_poly_str(w.quot_scheme),
                    w.family_index ? std::to_string(*w.family_index) : "-",
                    t.ext_plus_dim ? std::to_string(*t.ext_plus_dim) : "-",
                    t.ext_minus_dim ? std::to_string(*t.ext_minus_dim) : "-",
                    w.kind == WallRecord::Kind::Collapsing ? "collapse" : transition_str(t.type),
                    dims, status});
  }
  std::vector<size_t> widths(rows[0].size(), 0);
  for (const auto& row : rows)
    for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  for (const auto& row : rows) {
    os << " ";
    for (size_t i = 0; i < row.size(); ++i) os << pad(row[i], widths[i] + 2);
    os << "\n";
  }
}

std::string render_table(const ChamberReport& r, bool color) {
  std::ostringstream os;
  auto head = [&](const std::string& s) {
    if (color) os << "\033[1m" << s << "\033[0m\n";
    else os << s << "\n";
  };
  ChernClasses cc = chern_classes(r.cls);
  os << "class " << r.cls.str() << "  (rank 2, chern c1=" << cc.c1 << " c2=" << rat_str(cc.c2)
     << " c3=" << rat_str(cc.c3) << ")  twist k=" << r.twist;
  if (r.preset) os << "  preset=" << *r.preset;
  os << "\n";
  os << "collapsing wall: " << r.w_empty.str() << "\n";
  os << "curve polynomial: " << r.curve_poly.str() << "\n";
  os << "named walls: W_T = " << r.named.top.str() << ", W_1 = " << r.named.first.str() << "\n";
  if (r.family)
    os << "0-dimensional family: budget " << r.family->budget.str() << ", l = " << r.family->l
       << (r.family->walls.empty() ? " (no positive family walls)" : "") << "\n";
  os << "\n";
  head("walls (descending):");
  render_wall_table(os, r);
  bool any_golden = false;
  for (const auto& row : r.walls) any_golden |= row.golden_chart;
  if (any_golden) os << " (* = row matches the stored benchmark chart)\n";

  bool any_cases = false;
  for (const auto& row : r.walls) any_cases |= row.transition.ext_minus_case_table.size() > 1;
  if (any_cases) {
    os << "\n";
    head("ext- incidence cases:");
    for (const auto& row : r.walls) {
      if (row.transition.ext_minus_case_table.size() <= 1) continue;
      os << "  " << row.label << ": ";
      bool first = true;
      for (const auto& [cfg, val] : row.transition.ext_minus_case_table) {
        if (!first) os << "; ";
        os << incidence_str(cfg) << " = " << val;
        first = false;
      }
      os << "\n";
    }
  }

  os << "\n";
  head("chambers (ascending):");
  for (const auto& c : r.chambers) {
    os << "  (" << c.lo.str() << ", " << (c.unbounded ? "inf" : c.hi.str()) << ")";
    if (c.gieseker) os << "  [Gieseker chamber: morphism to the sheaf moduli]";
    if (c.hilbert) os << "  [Hilbert chamber: morphism to the Hilbert scheme]";
    if (c.unbounded) os << "  [no semistable pairs]";
    os << "\n";
  }

  if (!r.strata.empty()) {
    os << "\n";
    head("strata of the planar-family locus:");
    for (const auto& s : r.strata) {
      os << "  Z" << s.index << ": degree-" << s.member.planar_degree << " planar part, chi "
         << s.member.planar_euler << ", " << s.member.off_plane_points
         << " point(s) off the plane; dim " << s.dim << ", pairs " << s.pair_dim << "\n";
    }
  }

  if (!r.curve_types.empty()) {
    os << "\n";
    head("Hilbert-chamber curve types (extension fiber = P^(h1-1)):");
    for (const auto& t : r.curve_types)
      os << "  " << t.description << "  ->  h1 = " << t.fiber_h1 << "\n";
  }

  if (r.spectrum) {
    os << "\n";
    head("spectrum argument (c1 = 0):");
    const auto& sb = *r.spectrum;
    os << "  c2 = " << sb.c2 << ", c3 = " << sb.c3 << "\n";
    for (size_t i = 0; i < sb.spectra.size(); ++i) {
      os << "  (";
      for (size_t j = 0; j < sb.spectra[i].ks.size(); ++j)
        os << (j ? "," : "") << sb.spectra[i].ks[j];
      os << ") s=" << sb.spectra[i].s << "  h2(E(" << r.twist << ")) = " << sb.h2[i] << "\n";
    }
    if (sb.h0.bound)
      os << "  h0(E(" << r.twist << ")) >= " << *sb.h0.bound
         << (sb.h0.proven_positive ? "  (positivity proven)" : "") << "\n";
    else
      os << "  no h0 bound established\n";
  }

  if (!r.notes.empty()) {
    os << "\n";
    head("notes:");
    for (const auto& n : r.notes) os << "  - " << n << "\n";
  }
  return os.str();
}

std::string render_dot(const ChamberReport& r) {
  std::ostringstream os;
  os << "digraph chambers {\n  rankdir=LR;\n  node [shape=box];\n";
  for (size_t i = 0; i < r.chambers.size(); ++i) {
    const Chamber& c = r.chambers[i];
    os << "  c" << i << " [label=\"(" << c.lo.str() << ", " << (c.unbounded ? "inf" : c.hi.str())
       << ")";
    if (c.gieseker) os << "\\nGieseker chamber";
    if (c.hilbert) os << "\\nHilbert chamber";
    if (c.unbounded) os << "\\nno semistable pairs";
    os << "\"];\n";
  }
  // one edge per distinct critical value, crossing downward
  for (size_t i = 0; i + 1 < r.chambers.size(); ++i) {
    const RatPoly& boundary = r.chambers[i].hi;
    std::string label;
    for (const auto& row : r.walls)
      if (row.record.delta == boundary) {
        label = row.label + ": " +
                (row.record.kind == WallRecord::Kind::Collapsing ? "collapse"
                                                                 : transition_str(row.transition.type));
        break;
      }
    os << "  c" << i + 1 << " -> c" << i << " [label=\"" << label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string render_wall_chart(const ChamberReport& r) {
  std::ostringstream os;
  os << "class " << r.cls.str() << "  twist k=" << r.twist << "\n";
  render_wall_table(os, r);
  return os.str();
}

RenderFormat parse_format(const std::string& s) {
  if (s == "table") return RenderFormat::Table;
  if (s == "json") return RenderFormat::Json;
  if (s == "dot") return RenderFormat::Dot;
  throw std::invalid_argument("unknown format: " + s + " (expected table|json|dot)");
}

std::string render(const ChamberReport& r, RenderFormat format, bool color) {
  switch (format) {
    case RenderFormat::Table: return render_table(r, color);
    case RenderFormat::Json: return report_to_json(r).dump(2) + "\n";
    case RenderFormat::Dot: return render_dot(r);
  }
  throw std::logic_error("unreachable format");
}

}  // namespace pairwalls
