#pragma once

#include <optional>
#include <vector>

#include "pairwalls/cohom.hpp"
#include "pairwalls/numclass.hpp"
#include "pairwalls/stability.hpp"
#include "pairwalls/subscheme.hpp"

namespace pairwalls {

/// One wall for the twisted class v_k, recorded per decomposition
///   0 -> (I_A(s), 1) -> (E(k), s) -> (I_B(2k+c1-s), 0) -> 0
/// with critical value delta = P_{v_k} - 2 P_{I_A(s)}.
struct WallRecord {
  RatPoly delta;
  i64 group = 0;      // s
  i64 sub_twist = 0;  // = group
  i64 quot_twist = 0; // 2k + c1 - s
  SchemeClass sub_scheme;   // A
  SchemeClass quot_scheme;  // B
  std::optional<i64> family_index;  // i when this is W_i of the 0-dimensional family
  enum class Actuality { Verified, Numerical } actual = Actuality::Numerical;
  enum class Kind { Collapsing, Interior } kind = Kind::Interior;
  bool operator==(const WallRecord& o) const = default;
};

/// All numerical walls for v_k in (0, W_empty], sorted descending in lex
/// order (the collapsing record first). One record per decomposition; a
/// critical value shared by several decompositions yields several records.
std::vector<WallRecord> enumerate_walls(const NumClass& v, i64 k,
                                        std::optional<i64> max_group = std::nullopt);

struct ZeroDimFamily {
  RatPoly budget;  // P_{O_{A_0}} = P_O + P_{O(2k-2+c1)} - P_{v_{k-1}}
  i64 l = 0;       // point budget of the planar A_0
  std::vector<WallRecord> walls;  // W_0..W_l; empty when their deltas are not lex-positive
  bool operator==(const ZeroDimFamily& o) const = default;
};

/// The group-1 wall family defined by 0-dimensional quotient schemes.
/// Throws std::invalid_argument when the A_0 budget is not realizable.
ZeroDimFamily zero_dim_family(const NumClass& v, i64 k);

struct W0Existence {
  bool exists = false;
  i64 d_a = 0;
  i64 chi_a = 0;
};

/// Existence of the top interior wall from the curve polynomial:
/// d_A = d_Y - 2k + 1 - c1, chi_A = d_Y(2k-1+c1) + chi_Y - (2k+1+c1)(2k+c1)/2 + 1.
W0Existence w0_exists(const NumClass& v, i64 k);

struct NamedWalls {
  RatPoly collapse;
  RatPoly top;      // W_T: largest interior wall, = collapse when none exists
  RatPoly first;    // W_1: smallest wall
  bool w1_shape_checked = false;  // for c1 = -1: W_1 given by (O(k-1), 1)
  bool operator==(const NamedWalls& o) const = default;
};

NamedWalls named_walls(const std::vector<WallRecord>& walls, const NumClass& v, i64 k);

enum class TransitionType { Flip, DivisorialContraction, Removal, Unclassified };

std::string transition_str(TransitionType t);

struct Transition {
  TransitionType type = TransitionType::Unclassified;
  std::optional<i64> ext_plus_dim;   // ext^1((A-side,1), (B-side,0))
  std::optional<i64> ext_minus_dim;  // reverse direction, disjoint configuration
  std::vector<std::pair<Incidence, i64>> ext_minus_case_table;
  std::optional<i64> dim_ss;     // strictly semistable locus
  std::optional<i64> dim_plus;   // dim_ss + ext_plus - 1
  std::optional<i64> dim_minus;  // dim_ss + ext_minus - 1, when ext_minus > 0
  bool operator==(const Transition& o) const = default;
};

struct FamilyContext {
  i64 l = -1;  // family length; -1 when the family is empty
  i64 k = 1;
  i64 c1 = 0;
};

/// Wall-crossing type as delta decreases through the wall. Family walls
/// follow the index rule (flip / divisorial contraction at l-1 / removal at
/// l); other walls are classified from their extension fibers when a formula
/// or table applies, else Unclassified.
Transition classify_transition(const WallRecord& w, const FamilyContext& ctx);

/// Exact-sequence additivity of a record against its class:
/// P_A(t+s) + P_B(t+2k+c1-s) + P_{v_k} = P_O(t+s) + P_O(t+2k+c1-s).
bool wall_record_consistent(const WallRecord& w, const NumClass& v, i64 k);

}  // namespace pairwalls
