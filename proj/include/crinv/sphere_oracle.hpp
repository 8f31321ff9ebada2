#pragma once

#include <utility>
#include <vector>

#include "crinv/errors.hpp"
#include "crinv/rational.hpp"
#include "crinv/spectral.hpp"

namespace crinv {

/// Bidegree (a, b) of a harmonic polynomial on C^{n+1}: holomorphic degree a,
/// anti-holomorphic degree b. Labels the bigraded spherical-harmonic space
/// H_{a,b} restricted to S^{2n+1}.
struct Bidegree {
  unsigned a;
  unsigned b;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Joint (Delta_b, sqrt(-1) xi) eigenvalue of H_{a,b} on the round
/// S^{2n+1}:  p = 2ab + n(a+b),  q = b - a.
///
/// Sign convention: q = b - a, so holomorphic modes (a, 0) carry q = -a.
/// These formulas are derived, not quoted; the test suite pins them with two
/// independent oracles — the round-Laplacian identity 2p + q^2 = d(d + 2n)
/// for d = a + b, and (for n = 1) direct symbolic differentiation of the
/// degree <= 2 harmonics on S^3.
inline Mode mode_from_bidegree(unsigned n, const Bidegree& bd) {
  if (n < 1) throw InvalidDimension("sphere modes need n >= 1");
  const Integer a(bd.a), b(bd.b);
  return Mode(Rational(2 * a * b + Integer(n) * (a + b)), Rational(b - a));
}

/// All bidegrees with a + b <= max_degree, graded by total degree and then
/// by increasing b — so [(0,0), (1,0), (0,1), (2,0), ...] — paired with
/// their modes. Distinct bidegrees never share a mode (2p + q^2 = d(d+2n)
/// recovers d, and p is strictly monotone in a at fixed q), but the
/// enumeration deduplicates defensively anyway.
inline std::vector<std::pair<Bidegree, Mode>> enumerate_modes(
    unsigned n, unsigned max_degree) {
  std::vector<std::pair<Bidegree, Mode>> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    for (unsigned b = 0; b <= d; ++b) {
      const Bidegree bd{d - b, b};
      const Mode m = mode_from_bidegree(n, bd);
      bool seen = false;
      for (const auto& [prev_bd, prev_m] : out)
        if (prev_m == m) seen = true;
      if (!seen) out.emplace_back(bd, m);
    }
  }
  return out;
}

}  // namespace crinv
