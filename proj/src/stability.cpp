#include "pairwalls/stability.hpp"

#include <stdexcept>

namespace pairwalls {

StabilityParameter::StabilityParameter(RatPoly d) : delta(std::move(d)) {
  if (!lex_positive(delta))
    throw std::invalid_argument("stability parameter must be lex-positive, got " + delta.str());
}

RatPoly reduced_hilbert(const PairClass& p, const RatPoly& delta) {
  i64 r = p.cls.rank();
  if (r == 0) throw std::invalid_argument("reduced Hilbert polynomial needs rank >= 1");
  RatPoly num = hilbert_polynomial(p.cls);
  if (p.has_section) num = num + delta;
  return num.scaled(Rat(1, r));
}

CompareResult compare_pairs(const PairClass& sub, const PairClass& whole, const RatPoly& delta) {
  Ord ord = lex_cmp(reduced_hilbert(sub, delta), reduced_hilbert(whole, delta));
  return {ord != Ord::less, ord == Ord::equal};
}

ChamberThresholds chamber_thresholds(i64 rank) {
  if (rank < 2) throw std::invalid_argument("chamber thresholds need rank >= 2");
  return {Rat(1, rank - 1), Rat(1, rank)};
}

}  // namespace pairwalls
