#pragma once

#include "pairwalls/numclass.hpp"

namespace pairwalls {

/// A numerical coherent pair: a class plus the section indicator epsilon.
struct PairClass {
  NumClass cls;
  bool has_section = false;

  static PairClass with_section(NumClass v) { return {std::move(v), true}; }
  static PairClass sheaf_only(NumClass v) { return {std::move(v), false}; }
};

/// Stability parameter delta: a lex-positive rational polynomial.
struct StabilityParameter {
  RatPoly delta;
  explicit StabilityParameter(RatPoly d);
};

/// Reduced delta-Hilbert polynomial (P + epsilon*delta)/rank. Throws for rank 0.
RatPoly reduced_hilbert(const PairClass& p, const RatPoly& delta);

struct CompareResult {
  bool destabilizes = false;  // reduced(sub) >= reduced(whole) in lex order
  bool strictly = false;      // equality: the wall condition
};

CompareResult compare_pairs(const PairClass& sub, const PairClass& whole, const RatPoly& delta);

struct ChamberThresholds {
  Rat gieseker_bound;  // 1/(rank-1): below it, delta-stable pair => semistable sheaf
  Rat converse_bound;  // 1/rank: below it, stable sheaf => delta-stable pair
};

ChamberThresholds chamber_thresholds(i64 rank);  // rank >= 2

}  // namespace pairwalls
