#include "rootnum/uniformization.hpp"

#include <sstream>

namespace rootnum {

namespace {

const Rat kKappaOmega = Rat(1, 2);  // kappa blocks sit at weight -1/2

void require_uniform_omega(const WDRep& rep, const Rat& expected,
                           const std::string& what) {
  for (const auto& [b, m] : rep.blocks()) {
    if (b.irred.omega_t() != expected) {
      throw WeightViolation(what + " summand " + b.irred.str() +
                            " has weight " + b.irred.weight().str() +
                            ", expected " + (-expected).str());
    }
  }
}

void require_plain_weil(const WDRep& rep, const std::string& what) {
  if (!rep.is_weil()) {
    throw WeightViolation(what + " must be a Weil representation");
  }
}

}  // namespace

void validate_uniformization(const UniformizationInput& u) {
  require_plain_weil(u.kappa, "kappa");
  require_plain_weil(u.chi, "chi");
  require_uniform_omega(u.kappa, kKappaOmega, "kappa");
  require_uniform_omega(u.chi, Rat(0), "chi");
  if (u.r < 0) throw RankOrder("torus rank must be nonnegative");
  if (u.chi.dim() != u.r) {
    throw DimensionMismatch("dim chi = " + std::to_string(u.chi.dim()) +
                            " != torus rank r = " + std::to_string(u.r));
  }
  if (u.kappa.dim() + 2 * u.r != 2 * u.g) {
    throw DimensionMismatch(
        "dim kappa + 2r = " + std::to_string(u.kappa.dim() + 2 * u.r) +
        " != 2g = " + std::to_string(2 * u.g));
  }
  if (!u.chi.empty()) {
    GroupPtr g = u.chi.common_group();
    if (g) {
      VirtualChar vc = wdrep_to_virtual_char(u.chi, g);
      if (!vc.is_true_character() || !has_rational_character(vc)) {
        throw WeightViolation("chi must be an integral rational character");
      }
    }
  }
  if (u.split) {
    if (u.split->s < 0 || u.split->s > u.r) {
      throw RankOrder("split lattice rank outside [0, r]");
    }
    if (u.split->chi1.dim() != u.split->s) {
      throw DimensionMismatch("dim chi1 != s");
    }
    if (!(direct_sum(u.split->chi1, u.split->chi2) == u.chi)) {
      throw DimensionMismatch("chi1 (+) chi2 != chi");
    }
  }
}

WDRep assemble_sigma(const UniformizationInput& u) {
  validate_uniformization(u);
  WDRep out = u.kappa;
  for (const auto& [b, m] : u.chi.blocks()) {
    out.add(b.irred.twisted(Rat(-1)), 2, m);
  }
  return out;
}

WDRep split_torus_sigma(long r, long s) {
  if (r < 0 || s < 0 || s > r) {
    throw RankOrder("split_torus_sigma requires 0 <= s <= r");
  }
  WDRep out;
  WeilIrred om_inv = WeilIrred::unramified(UnramLabel::One, Rat(-1));
  if (r - s > 0) out.add(om_inv, 1, r - s);
  if (s > 0) out.add(om_inv, 2, s);
  return out;
}

WDRep nonsplit_torus_sigma(const WDRep& chi1, const WDRep& chi2) {
  require_plain_weil(chi1, "chi1");
  require_plain_weil(chi2, "chi2");
  require_uniform_omega(chi1, Rat(0), "chi1");
  require_uniform_omega(chi2, Rat(0), "chi2");
  WDRep out;
  for (const auto& [b, m] : chi2.blocks()) out.add(b.irred.twisted(Rat(-1)), 1, m);
  for (const auto& [b, m] : chi1.blocks()) out.add(b.irred.twisted(Rat(-1)), 2, m);
  return out;
}

WeightAudit weight_audit(const WDRep& a, WeightExpectation expectation) {
  WeightAudit audit;
  for (const auto& [b, m] : a.blocks()) {
    long dim = b.irred.dim() * m;
    // constituent weights of irred (x) sp(n): weight(irred) - i
    for (long i = 0; i < b.sp_n; ++i) {
      audit.histogram[b.irred.weight() - Rat(i)] += dim;
    }
    std::ostringstream tag;
    tag << "block " << b.irred.str() << " (x)sp(" << b.sp_n << ")";
    switch (expectation) {
      case WeightExpectation::KappaBlock:
        if (b.sp_n != 1 || b.irred.weight() != Rat(-1, 2)) {
          audit.violations.push_back(tag.str() + ": weight " +
                                     b.irred.weight().str() + " != -1/2");
        }
        break;
      case WeightExpectation::TorusBlock:
        if (b.sp_n > 2 || b.irred.weight() != Rat(1)) {
          audit.violations.push_back(tag.str() +
                                     ": expected omega^{-1} head (weight 1)");
        }
        break;
      case WeightExpectation::SigmaTotal:
        if (b.sp_n == 1) {
          if (b.irred.weight() != Rat(-1, 2)) {
            audit.violations.push_back(tag.str() + ": weight " +
                                       b.irred.weight().str() + " != -1/2");
          }
        } else if (b.sp_n == 2) {
          if (b.irred.weight() != Rat(1)) {
            audit.violations.push_back(
                tag.str() + ": sp(2) head must have weight 1, got " +
                b.irred.weight().str());
          }
        } else {
          audit.violations.push_back(tag.str() + ": unexpected sp(n), n > 2");
        }
        break;
    }
  }
  return audit;
}

bool kappa_symplectic_check(const UniformizationInput& u) {
  // recenter kappa to weight zero, where the finite-part pairing applies
  WDRep recentered = u.kappa.twist_omega(-kKappaOmega);
  return form_feasibility(recentered, Form::Symplectic).feasible;
}

}  // namespace rootnum
