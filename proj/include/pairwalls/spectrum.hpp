#pragma once

#include <optional>
#include <vector>

#include "pairwalls/numclass.hpp"

namespace pairwalls {

/// Admissible spectrum of a rank-2 semistable sheaf with c1 = 0 on P^3:
/// a nondecreasing integer sequence of length c2 with the auxiliary
/// count s = h^0(Ext^2(E, O)).
struct SpectrumCandidate {
  std::vector<i64> ks;
  i64 s = 0;
  bool operator==(const SpectrumCandidate& o) const = default;
};

/// All spectra for (c2, c3), c1 = 0, splitting type (0,0). Constraints:
///   - length = c2, nondecreasing;
///   - c3 = -2*sum(ks) - 2s with 0 <= s <= (c2^2+c2)/2;
///   - -1 is in the spectrum;
///   - k <= -2 in the spectrum forces every integer in [k,-1];
///   - k >= 1 in the spectrum forces every integer in [1,k].
/// Output sorted lexicographically.
std::vector<SpectrumCandidate> enumerate_spectra(i64 c2, i64 c3);

/// Validates the constraint set above (used independently of the generator).
bool spectrum_admissible(const SpectrumCandidate& cand, i64 c2, i64 c3);

/// h^2(E(t)) = sum_i h^1(O_P1(k_i + t + 1)).
i64 h2_twist(const SpectrumCandidate& spec, i64 t);

struct H0Bound {
  std::optional<i64> bound;
  bool proven_positive = false;
  bool operator==(const H0Bound& o) const = default;
};

/// When every admissible spectrum gives h^2(E(t)) = 0, h^0(E(t)) >= chi(E(t));
/// the bound is proven positive when it is >= 1. Requires rank 2 and c1 = 0.
H0Bound h0_lower_bound(const NumClass& v, i64 t);

}  // namespace pairwalls
