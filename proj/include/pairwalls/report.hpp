#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pairwalls/spectrum.hpp"
#include "pairwalls/walls.hpp"

namespace pairwalls {

struct WallRow {
  WallRecord record;
  std::string label;  // "W_empty", "W0", "W1", ... by descending critical value
  Transition transition;
  bool golden_chart = false;  // row matches a stored benchmark chart
  bool operator==(const WallRow& o) const = default;
};

struct Chamber {
  RatPoly lo, hi;  // lo = 0 for the bottom chamber
  bool unbounded = false;  // the unstable region above the collapsing wall
  bool hilbert = false;    // (W_T, W_empty): morphism to the Hilbert scheme
  bool gieseker = false;   // (0, W_1): morphism to the Gieseker moduli
  bool operator==(const Chamber& o) const = default;
};

struct StratumRow {
  i64 index = 0;
  CurveDesc member;   // general member of Z_index
  i64 dim = 0;        // Hilbert-scheme stratum dimension
  i64 pair_dim = 0;   // dimension of the locus of pairs over it
  bool operator==(const StratumRow& o) const = default;
};

struct CurveTypeRow {
  std::string description;
  i64 fiber_h1 = 0;  // ext^1(I_Y(2k+c1), O) over this curve type
  bool operator==(const CurveTypeRow& o) const = default;
};

struct SpectrumBlock {
  i64 c2 = 0, c3 = 0;
  std::vector<SpectrumCandidate> spectra;
  std::vector<i64> h2;  // h^2(E(k)) per spectrum
  H0Bound h0;
  bool operator==(const SpectrumBlock& o) const = default;
};

struct ChamberReport {
  NumClass cls;  // untwisted class v
  i64 twist = 1;
  std::optional<std::string> preset;
  RatPoly w_empty;
  RatPoly curve_poly;
  NamedWalls named;
  std::vector<WallRow> walls;      // descending by critical value
  std::vector<Chamber> chambers;   // ascending from 0
  std::optional<ZeroDimFamily> family;
  std::vector<StratumRow> strata;  // Z_0..Z_l when the family locus exists
  std::vector<CurveTypeRow> curve_types;
  std::optional<SpectrumBlock> spectrum;
  std::vector<std::string> notes;
};

struct ReportOptions {
  std::optional<i64> max_group;
};

/// Composes enumeration, family, strata, transitions, curve types, and (for
/// c1 = 0) the spectrum argument into one deterministic report.
ChamberReport build_report(const NumClass& v, i64 k, const ReportOptions& opts = {});

enum class RenderFormat { Table, Json, Dot };
RenderFormat parse_format(const std::string& s);

std::string render(const ChamberReport& r, RenderFormat format, bool color = false);

/// Just the wall chart (delta, group, decomposition, family index, transition).
std::string render_wall_chart(const ChamberReport& r);

/// Inverse of render(..., Json). Throws std::invalid_argument on bad input.
ChamberReport report_from_json(const std::string& text);

bool reports_equal(const ChamberReport& a, const ChamberReport& b);

struct Preset {
  std::string name;
  std::string summary;
  NumClass cls;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace pairwalls
