#include <CLI11.hpp>
#include <json.hpp>

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "pairwalls/report.hpp"

using namespace pairwalls;
using nlohmann::json;

namespace {

struct ClassArgs {
  std::string cls, chern, preset;
  i64 twist = 1;
  std::string format = "table";
  std::optional<i64> max_group;
};

void add_class_options(CLI::App* cmd, ClassArgs& args) {
  cmd->add_option("--class", args.cls, "numerical class as ch0,ch1,ch2,ch3 (rationals as a/b)");
  cmd->add_option("--chern", args.chern, "class as rank:c1,c2,c3");
  cmd->add_option("--preset", args.preset, "built-in class (see --help of the top command)");
  cmd->add_option("--twist", args.twist, "twist k of the class (default 1)");
  cmd->add_option("--format", args.format, "output format: table|json|dot");
  cmd->add_option("--max-group", args.max_group, "largest wall group to enumerate (default: the twist)");
}

NumClass resolve_class(const ClassArgs& args) {
  int given = !args.cls.empty() + !args.chern.empty() + !args.preset.empty();
  if (given != 1)
    throw std::invalid_argument("give exactly one of --class, --chern, --preset");
  if (!args.cls.empty()) return parse_class_spec(args.cls);
  if (!args.chern.empty()) return parse_chern_spec(args.chern);
  const Preset* p = find_preset(args.preset);
  if (!p) throw std::invalid_argument("unknown preset: " + args.preset);
  return p->cls;
}

bool color_enabled() {
  return std::getenv("PAIRWALLS_NO_COLOR") == nullptr && isatty(fileno(stdout));
}

json wall_records_json(const ChamberReport& r) {
  json out;
  out["schema"] = "pairwalls/1";
  out["class"] = json::array(
      {rat_str(r.cls.ch0()), rat_str(r.cls.ch1()), rat_str(r.cls.ch2()), rat_str(r.cls.ch3())});
  out["twist"] = r.twist;
  json walls = json::array();
  json full = json::parse(render(r, RenderFormat::Json));
  for (const auto& w : full.at("walls")) walls.push_back(w);
  out["walls"] = walls;
  return out;
}

int run_walls(const ClassArgs& args) {
  NumClass v = resolve_class(args);
  ChamberReport r = build_report(v, args.twist, {args.max_group});
  RenderFormat f = parse_format(args.format);
  if (f == RenderFormat::Json) {
    std::cout << wall_records_json(r).dump(2) << "\n";
  } else if (f == RenderFormat::Table) {
    std::cout << render_wall_chart(r);
  } else {
    std::cout << render(r, RenderFormat::Dot);
  }
  return 0;
}

int run_chambers(const ClassArgs& args) {
  NumClass v = resolve_class(args);
  ChamberReport r = build_report(v, args.twist, {args.max_group});
  std::cout << render(r, parse_format(args.format), color_enabled());
  return 0;
}

int run_spectrum(const ClassArgs& args) {
  NumClass v = resolve_class(args);
  ChernClasses cc = chern_classes(v);
  if (v.rank() != 2 || cc.c1 != 0)
    throw std::invalid_argument("the spectrum argument covers rank-2 classes with c1 = 0");
  i64 c2 = static_cast<i64>(to_integer(cc.c2));
  i64 c3 = static_cast<i64>(to_integer(cc.c3));
  auto spectra = enumerate_spectra(c2, c3);
  H0Bound h0 = h0_lower_bound(v, args.twist);
  if (parse_format(args.format) == RenderFormat::Table) {
    std::cout << "spectra for c2=" << c2 << ", c3=" << c3 << ":\n";
    for (const auto& s : spectra) {
      std::cout << "  (";
      for (size_t i = 0; i < s.ks.size(); ++i) std::cout << (i ? "," : "") << s.ks[i];
      std::cout << ") s=" << s.s << "  h2(E(" << args.twist << "))=" << h2_twist(s, args.twist)
                << "\n";
    }
    if (h0.bound)
      std::cout << "h0(E(" << args.twist << ")) >= " << *h0.bound
                << (h0.proven_positive ? " (positive)" : "") << "\n";
    else
      std::cout << "no h0 bound established\n";
    return 0;
  }
  json out;
  out["schema"] = "pairwalls/1";
  out["c2"] = c2;
  out["c3"] = c3;
  json sp = json::array();
  json h2 = json::array();
  for (const auto& s : spectra) {
    sp.push_back({{"ks", s.ks}, {"s", s.s}});
    h2.push_back(h2_twist(s, args.twist));
  }
  out["spectra"] = sp;
  out["h2"] = h2;
  if (h0.bound) out["h0_bound"] = *h0.bound;
  out["proven_positive"] = h0.proven_positive;
  std::cout << out.dump(2) << "\n";
  return 0;
}

// "ideal:d,chi,twist,section"
PairClass parse_sub_spec(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos || s.substr(0, colon) != "ideal")
    throw std::invalid_argument("sub-pair spec is ideal:d,chi,twist,section");
  std::vector<i64> f;
  std::string rest = s.substr(colon + 1);
  size_t i = 0;
  while (i <= rest.size()) {
    size_t j = rest.find(',', i);
    if (j == std::string::npos) j = rest.size();
    f.push_back(std::stoll(rest.substr(i, j - i)));
    i = j + 1;
    if (j == rest.size()) break;
  }
  if (f.size() != 4) throw std::invalid_argument("sub-pair spec needs 4 integers");
  NumClass cls = NumClass::ideal_sheaf(f[0], f[1], f[2]);
  return f[3] ? PairClass::with_section(cls) : PairClass::sheaf_only(cls);
}

int run_stability(const ClassArgs& args, const std::string& delta_s, const std::string& sub_s) {
  NumClass v = resolve_class(args);
  StabilityParameter delta(parse_poly(delta_s));
  PairClass sub = parse_sub_spec(sub_s);
  PairClass whole = PairClass::with_section(v.twist(args.twist));
  CompareResult res = compare_pairs(sub, whole, delta.delta);
  json out;
  out["schema"] = "pairwalls/1";
  out["class"] = v.str();
  out["twist"] = args.twist;
  out["delta"] = delta.delta.str();
  out["sub"] = sub_s;
  out["reduced_sub"] = reduced_hilbert(sub, delta.delta).str();
  out["reduced_whole"] = reduced_hilbert(whole, delta.delta).str();
  out["destabilizes"] = res.destabilizes;
  out["strictly_semistable"] = res.strictly;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_strata(const ClassArgs& args) {
  NumClass v = resolve_class(args);
  ChamberReport r = build_report(v, args.twist, {args.max_group});
  if (parse_format(args.format) == RenderFormat::Table) {
    std::cout << "curve polynomial: " << r.curve_poly.str() << "\n";
    if (r.family)
      std::cout << "family budget: " << r.family->budget.str() << ", l = " << r.family->l << "\n";
    for (const auto& s : r.strata)
      std::cout << "Z" << s.index << ": degree-" << s.member.planar_degree << " planar part, chi "
                << s.member.planar_euler << ", " << s.member.off_plane_points
                << " point(s) off the plane; dim " << s.dim << ", pairs " << s.pair_dim << "\n";
    return 0;
  }
  json out;
  out["schema"] = "pairwalls/1";
  out["curve_poly"] = r.curve_poly.str();
  if (r.family) out["l"] = r.family->l;
  json strata = json::array();
  for (const auto& s : r.strata)
    strata.push_back({{"index", s.index},
                      {"planar", {{"d", s.member.planar_degree}, {"chi", s.member.planar_euler}}},
                      {"off_plane_points", s.member.off_plane_points},
                      {"nonplanar", s.member.nonplanar},
                      {"dim", s.dim},
                      {"pair_dim", s.pair_dim}});
  out["strata"] = strata;
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pairwalls: wall-and-chamber calculator for coherent-pair stability on P^3"};
  app.require_subcommand(1);

  std::string preset_help = "presets:";
  for (const auto& p : presets()) preset_help += "\n  " + p.name + ": " + p.summary;
  app.footer(preset_help);

  ClassArgs walls_args, chambers_args, spectrum_args, stability_args, strata_args;
  std::string delta_s, sub_s;

  auto* walls_cmd = app.add_subcommand("walls", "enumerate all walls for a twisted class");
  add_class_options(walls_cmd, walls_args);

  auto* chambers_cmd = app.add_subcommand("chambers", "full chamber report (walls, strata, transitions)");
  add_class_options(chambers_cmd, chambers_args);

  spectrum_args.format = "json";
  auto* spectrum_cmd = app.add_subcommand("spectrum", "admissible spectra and the h0 positivity bound");
  add_class_options(spectrum_cmd, spectrum_args);

  auto* stability_cmd = app.add_subcommand("stability", "compare a sub-pair against the twisted class");
  add_class_options(stability_cmd, stability_args);
  stability_cmd->add_option("--delta", delta_s, "stability parameter, e.g. \"t+1\"")->required();
  stability_cmd->add_option("--sub", sub_s, "sub-pair as ideal:d,chi,twist,section")->required();

  auto* strata_cmd = app.add_subcommand("strata", "strata of the planar-family locus");
  add_class_options(strata_cmd, strata_args);

  try {
    app.parse(argc, argv);
    if (walls_cmd->parsed()) return run_walls(walls_args);
    if (chambers_cmd->parsed()) return run_chambers(chambers_args);
    if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args);
    if (stability_cmd->parsed()) return run_stability(stability_args, delta_s, sub_s);
    if (strata_cmd->parsed()) return run_strata(strata_args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
