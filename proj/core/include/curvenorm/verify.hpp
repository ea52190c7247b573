#pragma once

#include <string>
#include <vector>

#include "curvenorm/curve.hpp"
#include "curvenorm/types.hpp"

namespace curvenorm {

struct VerifyOptions {
  double slack = 0.05;      // multiplicative slack on theorem-constant checks
  int refine = 8;           // subdivision for Mobius images
  double tol = 1e-8;        // grid solver tolerance
  bool energy_checks = true;  // include the (slower) grid-energy checks
  unsigned seed = 20260811u;
};

struct VerifyCheck {
  std::string name;
  bool pass = false;
  double observed = 0.0;  // measured quantity (violation count, max error, ratio)
  double bound = 0.0;     // what it was compared against
  std::string witness;    // where the extremum / first violation occurred
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass = true;
};

/// Runs the inequality suite on one curve: chord/arc and sine-chord bounds,
/// seminorm ratio brackets, Mobius-image regularity and spherical-length
/// bounds, sampling monotonicity, solver minimality and grid convergence.
/// The curve must be equispaced with a power-of-two node count.
VerifyReport verify_curve(const JordanCurve& curve,
                          const VerifyOptions& options = {});

}  // namespace curvenorm
