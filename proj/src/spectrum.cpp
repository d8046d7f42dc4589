#include "pairwalls/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pairwalls/cohom.hpp"

namespace pairwalls {

namespace {

bool connected_to_minus_one(const std::vector<i64>& ks) {
  for (i64 k : ks) {
    if (k <= -2)
      for (i64 m = k; m <= -1; ++m)
        if (std::find(ks.begin(), ks.end(), m) == ks.end()) return false;
    if (k >= 1)
      for (i64 m = 1; m <= k; ++m)
        if (std::find(ks.begin(), ks.end(), m) == ks.end()) return false;
  }
  return true;
}

}  // namespace

bool spectrum_admissible(const SpectrumCandidate& cand, i64 c2, i64 c3) {
  if (static_cast<i64>(cand.ks.size()) != c2) return false;
  if (!std::is_sorted(cand.ks.begin(), cand.ks.end())) return false;
  i64 sum = std::accumulate(cand.ks.begin(), cand.ks.end(), i64{0});
  if (c3 != -2 * sum - 2 * cand.s) return false;
  if (cand.s < 0 || 2 * cand.s > c2 * c2 + c2) return false;
  if (std::find(cand.ks.begin(), cand.ks.end(), i64{-1}) == cand.ks.end()) return false;
  return connected_to_minus_one(cand.ks);
}

std::vector<SpectrumCandidate> enumerate_spectra(i64 c2, i64 c3) {
  if (c2 < 1) throw std::invalid_argument("enumerate_spectra needs c2 >= 1");
  const i64 s_max = (c2 * c2 + c2) / 2;
  const i64 lo = -(c2 + s_max + 2);
  const i64 hi = c2 + 2;

  std::vector<SpectrumCandidate> out;
  std::vector<i64> ks(static_cast<size_t>(c2));
  auto rec = [&](auto&& self, size_t idx, i64 from) -> void {
    if (idx == ks.size()) {
      if (c3 % 2 != 0) return;
      i64 s = -c3 / 2 - std::accumulate(ks.begin(), ks.end(), i64{0});
      SpectrumCandidate cand{ks, s};
      if (spectrum_admissible(cand, c2, c3)) out.push_back(std::move(cand));
      return;
    }
    for (i64 k = from; k <= hi; ++k) {
      ks[idx] = k;
      self(self, idx + 1, k);
    }
  };
  rec(rec, 0, lo);
  std::sort(out.begin(), out.end(),
            [](const SpectrumCandidate& a, const SpectrumCandidate& b) { return a.ks < b.ks; });
  return out;
}

i64 h2_twist(const SpectrumCandidate& spec, i64 t) {
  i64 total = 0;
  for (i64 k : spec.ks) total += h(StdSheaf::line(k + t + 1)).h1;
  return total;
}

H0Bound h0_lower_bound(const NumClass& v, i64 t) {
  if (v.rank() != 2 || v.c1() != 0)
    throw std::invalid_argument("h0 bound covers rank-2 classes with c1 = 0 only");
  if (!integral_euler(v))
    throw std::invalid_argument("class has non-integral Euler characteristics: " + v.str());
  ChernClasses c = chern_classes(v);
  if (!is_integer(c.c2) || !is_integer(c.c3))
    throw std::invalid_argument("non-integral Chern classes");
  auto spectra = enumerate_spectra(static_cast<i64>(to_integer(c.c2)),
                                   static_cast<i64>(to_integer(c.c3)));
  H0Bound r;
  if (spectra.empty()) return r;  // no admissible spectrum: the argument does not run
  for (const auto& spec : spectra)
    if (h2_twist(spec, t) != 0) return r;
  Rat chi = hilbert_polynomial(v).eval(Rat(t));
  r.bound = static_cast<i64>(to_integer(chi));
  r.proven_positive = *r.bound >= 1;
  return r;
}

}  // namespace pairwalls
