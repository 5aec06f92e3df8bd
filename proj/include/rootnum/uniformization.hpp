#pragma once

#include <map>
#include <optional>
#include <string>

#include "rootnum/wd_algebra.hpp"

namespace rootnum {

/// Symbolic uniformization datum of a Jacobian over a local field: the
/// good-reduction Weil block kappa (all summands of weight -1/2), the
/// integral lattice character chi of dimension r (weight 0, rational
/// character), the torus rank r, the genus g, and the residue size q.
/// The engine checks the necessary conditions; it does not derive the datum
/// from a curve equation.
struct SplitData {
  long s = 0;
  WDRep chi1;
  WDRep chi2;
};

struct UniformizationInput {
  WDRep kappa;
  WDRep chi;
  long r = 0;
  long g = 1;
  long q = 2;
  std::optional<SplitData> split;
};

/// sigma' = kappa (+) (chi (x) omega^{-1} (x) sp(2)); dim 2g, nilpotent rank
/// r. Validates the weight and dimension constraints.
WDRep assemble_sigma(const UniformizationInput& u);

/// (omega^{-1})^{(r-s)} (+) (omega^{-1} (x) sp(2))^{(s)} for a split torus
/// modulo a rank-s lattice.
WDRep split_torus_sigma(long r, long s);

/// (chi2 (x) omega^{-1}) (+) (chi1 (x) omega^{-1} (x) sp(2)).
WDRep nonsplit_torus_sigma(const WDRep& chi1, const WDRep& chi2);

enum class WeightExpectation { KappaBlock, TorusBlock, SigmaTotal };

/// Histogram of Frobenius weights by dimension, with diagnostics for every
/// constituent outside the expected positions.
struct WeightAudit {
  std::map<Rat, long> histogram;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

WeightAudit weight_audit(const WDRep& a, WeightExpectation expectation);

/// Whether kappa, recentered to weight zero, is symplectic-feasible. Valid
/// Jacobian data always passes; the theorem gate rejects inputs that fail.
bool kappa_symplectic_check(const UniformizationInput& u);

/// Validation helpers shared with the sign engine.
void validate_uniformization(const UniformizationInput& u);

}  // namespace rootnum
