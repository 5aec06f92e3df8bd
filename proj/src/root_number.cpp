#include "rootnum/root_number.hpp"

#include <sstream>

namespace rootnum {

namespace {

Sign sign_of_cyc(const CycNum& v, const std::string& what) {
  auto r = v.as_rational();
  if (r) {
    if (*r == Rat(1)) return Sign(1);
    if (*r == Rat(-1)) return Sign(-1);
  }
  throw SchemaError(what + " evaluates to " + v.str() + ", not a sign");
}

void push_factor(SignTrace* trace, const std::string& name,
                 const BigInt& exponent, Sign value) {
  if (trace) trace->factors.push_back({name, exponent, value});
}

Sign det_sign(const VirtualChar& vc, const GroupElement& at,
              const std::string& what) {
  return sign_of_cyc(det_virtual_char_value(vc, at), what);
}

}  // namespace

TauData make_tau(GroupPtr group, VirtualChar rep,
                 std::optional<GroupElement> artin_minus_one) {
  TauData tau;
  tau.group = std::move(group);
  if (!rep.group || !rep.group->same_group(*tau.group)) {
    throw GroupMismatch("tau representation over a different group");
  }
  if (!rep.is_true_character() || rep.terms.empty()) {
    throw SchemaError("tau must be a nonzero true character");
  }
  // real-valued character: the constituent multiset is dual-invariant
  for (const auto& [r, m] : rep.terms) {
    IrrepDescriptor d = dual_rep(*tau.group, r);
    auto it = rep.terms.find(d);
    if (it == rep.terms.end() || it->second != m) {
      throw SchemaError("tau does not have real-valued character: "
                        "constituent multiset is not self-dual");
    }
  }
  tau.rep = std::move(rep);
  if (artin_minus_one) {
    GroupElement a = tau.group->normalized(artin_minus_one->t,
                                           artin_minus_one->v);
    if (!(tau.group->mul(a, a) == tau.group->identity())) {
      throw SchemaError("artin_minus_one must have order dividing 2");
    }
    tau.artin_minus_one = a;
  } else {
    tau.artin_minus_one = tau.group->identity();
    tau.artin_defaulted = true;
  }
  return tau;
}

std::string TauHypothesisReport::first_failure() const {
  if (!dim_even) return "dim-even";
  if (!det_trivial) return "det-trivial";
  if (!constituents_quaternionic) return "indicator-minus-one";
  if (!char_rational) return "char-rational";
  return "";
}

TauHypothesisReport tau_hypothesis_check(const TauData& tau) {
  TauHypothesisReport rep;
  const MetacyclicGroup& g = *tau.group;
  rep.dim_even = tau.rep.dim() % 2 == 0;
  rep.det_trivial = true;
  for (const auto& cls : g.conjugacy_classes()) {
    if (!(det_virtual_char_value(tau.rep, cls.front()) == CycNum::one())) {
      rep.det_trivial = false;
      break;
    }
  }
  rep.constituents_quaternionic = true;
  for (const auto& [r, m] : tau.rep.terms) {
    if (fs_indicator(g, r) != -1) {
      rep.constituents_quaternionic = false;
      break;
    }
  }
  rep.char_rational = has_rational_character(tau.rep);
  return rep;
}

VirtualChar place_eta(const TauData& tau) { return eta_char(tau.group); }

Sign w_archimedean(long genus, long dim_tau) {
  return parity_sign(BigInt(genus) * BigInt(dim_tau));
}

Sign w_sp2_twist(const VirtualChar& chi, const TauData& tau, long r,
                 SignTrace* trace) {
  if (!chi.group || !chi.group->same_group(*tau.group)) {
    throw GroupMismatch("chi and tau over different groups");
  }
  if (chi.dim() != r) {
    throw DimensionMismatch("w_sp2_twist: r = " + std::to_string(r) +
                            " != dim chi = " + std::to_string(chi.dim()));
  }
  if (!chi.is_true_character() || !has_rational_character(chi)) {
    throw SchemaError("chi must be an integral rational character");
  }
  long dim_tau = tau.rep.dim();
  Sign det_tau = det_sign(tau.rep, tau.artin_minus_one, "det tau(-1)");
  Sign det_chi = det_sign(chi, tau.artin_minus_one, "det chi(-1)");
  BigInt pairing = inner_product(chi, tau.rep);
  Sign out = det_tau.pow(BigInt(r)) * det_chi.pow(BigInt(dim_tau)) *
             parity_sign(pairing);
  push_factor(trace, "det tau(-1)^r", BigInt(r), det_tau.pow(BigInt(r)));
  push_factor(trace, "det chi(-1)^dim tau", BigInt(dim_tau),
              det_chi.pow(BigInt(dim_tau)));
  push_factor(trace, "(-1)^<chi,tau>", pairing, parity_sign(pairing));
  return out;
}

Sign w_rohrlich2(const GroupPtr& group, const IrrepDescriptor& lam,
                 const TauData& tau, Sign alpha, SignTrace* trace) {
  if (!group->same_group(*tau.group)) {
    throw GroupMismatch("lambda and tau over different groups");
  }
  if (!is_symplectic_by_criterion(*group, lam) || lam.x != 2) {
    throw NotSymplectic("w_rohrlich2 requires a 2-dimensional symplectic "
                        "irreducible");
  }
  long dim_tau = tau.rep.dim();
  IrrepDescriptor hat = hat_rep(*group, lam);
  VirtualChar one = trivial_char(group);
  VirtualChar eta = eta_char(group);
  VirtualChar hat_vc = virtual_char(group, {{hat, 1}});
  BigInt pairing = inner_product(one, tau.rep) +
                   inner_product(eta, tau.rep) +
                   inner_product(hat_vc, tau.rep);
  Sign det_tau = det_sign(tau.rep, tau.artin_minus_one, "det tau(-1)");
  Sign out = det_tau * alpha.pow(BigInt(dim_tau)) * parity_sign(pairing);
  push_factor(trace, "det tau(-1)", BigInt(1), det_tau);
  push_factor(trace, "alpha^dim tau", BigInt(dim_tau),
              alpha.pow(BigInt(dim_tau)));
  push_factor(trace, "(-1)^{<1,tau>+<eta,tau>+<hat,tau>}", pairing,
              parity_sign(pairing));
  return out;
}

Sign w_good_reduction(const GrothendieckLedger& ledger, const TauData& tau,
                      const std::vector<Sign>& alpha_list, SignTrace* trace) {
  if (!ledger.group || !ledger.group->same_group(*tau.group)) {
    throw GroupMismatch("ledger and tau over different groups");
  }
  long a = static_cast<long>(ledger.mu_list.size());
  if (static_cast<long>(alpha_list.size()) != a) {
    throw LedgerInvalid("alpha_list length " +
                        std::to_string(alpha_list.size()) + " != a = " +
                        std::to_string(a));
  }
  long dim_tau = tau.rep.dim();
  long dim_mu = ledger.mu.dim();
  long sum_mui = 0;
  for (const WeilIrred& w : ledger.mu_list) sum_mui += w.dim();
  if (sum_mui % 2 != 0) {
    throw LedgerInvalid("sum of symplectic dimensions is odd");
  }
  BigInt l1 = BigInt(dim_mu) + BigInt(sum_mui / 2);

  // det mu(-1): finite parts only; the omega part is the norm character,
  // which is 1 on the unit -1
  const MetacyclicGroup& g = *tau.group;
  Sign det_mu(1);
  for (const auto& [b, m] : ledger.mu.blocks()) {
    IrrepDescriptor d = b.irred.is_label()
                            ? label_descriptor(g, b.irred.label())
                            : b.irred.rep();
    Sign s = sign_of_cyc(det_character_value(g, d, tau.artin_minus_one),
                         "det mu(-1)");
    det_mu *= s.pow(BigInt(m));
  }

  VirtualChar one = trivial_char(tau.group);
  VirtualChar eta = eta_char(tau.group);
  BigInt hat_pairing = 0;
  for (const WeilIrred& w : ledger.hat_list) {
    hat_pairing += inner_product(virtual_char(tau.group, {{w.rep(), 1}}),
                                 tau.rep);
  }
  BigInt l2 = BigInt(a) * (inner_product(one, tau.rep) +
                           inner_product(eta, tau.rep) + hat_pairing);

  Sign alpha(1);
  for (Sign s : alpha_list) alpha *= s;
  Sign det_tau = det_sign(tau.rep, tau.artin_minus_one, "det tau(-1)");

  Sign out = det_mu.pow(BigInt(dim_tau)) * det_tau.pow(l1) *
             alpha.pow(BigInt(dim_tau)) * parity_sign(l2);
  push_factor(trace, "det mu(-1)^dim tau", BigInt(dim_tau),
              det_mu.pow(BigInt(dim_tau)));
  push_factor(trace, "det tau(-1)^l1", l1, det_tau.pow(l1));
  push_factor(trace, "alpha^dim tau", BigInt(dim_tau),
              alpha.pow(BigInt(dim_tau)));
  push_factor(trace, "(-1)^l2", l2, parity_sign(l2));
  return out;
}

namespace {

/// Normalizes a finite place's uniformization data: a uniform omega-twist on
/// (kappa, chi) is removed before evaluation, since the sign formulas do not
/// reference the omega exponent.
UniformizationInput normalized_uniformization(const LocalPlace& place,
                                              SignTrace* trace) {
  const UniformizationInput& u = place.unif;
  std::optional<Rat> dev;
  for (const auto& [b, m] : u.kappa.blocks()) {
    Rat d = b.irred.omega_t() - Rat(1, 2);
    if (dev && *dev != d) {
      throw WeightViolation("kappa summands with mixed omega exponents");
    }
    dev = d;
  }
  for (const auto& [b, m] : u.chi.blocks()) {
    Rat d = b.irred.omega_t();
    if (dev && *dev != d) {
      throw WeightViolation("chi summand twist differs from kappa twist");
    }
    dev = d;
  }
  UniformizationInput out = u;
  if (dev && !dev->is_zero()) {
    out.kappa = u.kappa.twist_omega(-*dev);
    out.chi = u.chi.twist_omega(-*dev);
    if (out.split) {
      out.split->chi1 = out.split->chi1.twist_omega(-*dev);
      out.split->chi2 = out.split->chi2.twist_omega(-*dev);
    }
    if (trace) {
      trace->warnings.push_back("uniform omega twist " + dev->str() +
                                " removed before evaluation");
    }
  }
  validate_uniformization(out);
  return out;
}

VirtualChar chi_virtual(const UniformizationInput& u, const TauData& tau) {
  if (u.chi.empty()) return VirtualChar{tau.group, {}};
  return wdrep_to_virtual_char(u.chi, tau.group);
}

GrothendieckLedger place_ledger(const LocalPlace& place,
                                const UniformizationInput& u,
                                SignTrace* trace) {
  WDRep lambda = u.kappa.twist_omega(Rat(-1, 2));
  if (place.ledger) {
    // validate the supplied ledger against kappa
    auto recombined = ledger_recombine_formal(*place.ledger);
    std::map<WeilIrred, long> expect;
    for (const auto& [b, m] : lambda.blocks()) expect[b.irred] += m;
    if (recombined != expect) {
      throw LedgerInvalid("supplied ledger does not recombine to "
                          "kappa (x) omega^{-1/2}");
    }
    return *place.ledger;
  }
  GroupPtr g = lambda.common_group();
  if (!g) g = place.tau.group;
  if (trace) trace->warnings.push_back("ledger computed from kappa");
  return grothendieck_decompose(g, lambda);
}

}  // namespace

std::pair<Sign, SignTrace> w_local(const LocalPlace& place) {
  SignTrace trace;
  trace.place = place.id;
  long dim_tau = place.tau.rep.dim();
  if (place.tau.artin_defaulted) {
    trace.warnings.push_back(
        "artin_minus_one defaulted to the identity element");
  }
  if (place.kind != LocalPlace::Kind::Finite) {
    trace.branch = "archimedean";
    Sign s = w_archimedean(place.genus, dim_tau);
    push_factor(&trace, "(-1)^{g dim tau}",
                BigInt(place.genus) * BigInt(dim_tau), s);
    trace.sign = s;
    return {s, trace};
  }

  UniformizationInput u = normalized_uniformization(place, &trace);
  VirtualChar chi = chi_virtual(u, place.tau);
  if (place.p > 2 * place.genus + 1) {
    trace.branch = "good-reduction-product";
    GrothendieckLedger ledger = place_ledger(place, u, &trace);
    std::vector<Sign> alphas = place.alpha_list;
    if (alphas.empty() && !ledger.mu_list.empty()) {
      // the local constants are arithmetic inputs; absent, they default
      // to +1 (they cancel whenever dim tau is even)
      alphas.assign(ledger.mu_list.size(), Sign(1));
      trace.warnings.push_back("alpha constants defaulted to +1 (a = " +
                               std::to_string(ledger.mu_list.size()) + ")");
    }
    Sign w_kappa = w_good_reduction(ledger, place.tau, alphas, &trace);
    Sign w_torus = w_sp2_twist(chi, place.tau, u.r, &trace);
    trace.sign = w_kappa * w_torus;
    return {trace.sign, trace};
  }

  trace.branch = "symplectic-pairing";
  // p <= 2g+1: the formula W(kappa (x) tau) = 1 needs both symplectic
  // hypotheses; there is no fallback formula otherwise.
  WDRep tau_rep;
  for (const auto& [r, m] : place.tau.rep.terms) {
    tau_rep.add(WeilIrred::finite(place.tau.group, r), 1, m);
  }
  if (!form_feasibility(tau_rep, Form::Symplectic).feasible) {
    throw UnsupportedBranch("p <= 2g+1 and tau_v is not symplectic");
  }
  if (!kappa_symplectic_check(u)) {
    throw UnsupportedBranch("p <= 2g+1 and kappa (x) omega^{-1/2} is not "
                            "symplectic-feasible");
  }
  push_factor(&trace, "W(kappa (x) tau) [symplectic pair]", BigInt(1),
              Sign(1));
  Sign w_torus = w_sp2_twist(chi, place.tau, u.r, &trace);
  trace.sign = w_torus;
  return {trace.sign, trace};
}

std::vector<ParityEntry> parity_audit(
    const TauData& tau,
    const std::vector<std::pair<std::string, VirtualChar>>& chars) {
  std::vector<ParityEntry> out;
  for (const auto& [name, vc] : chars) {
    if (!has_rational_character(vc)) {
      throw SchemaError("parity_audit: " + name +
                        " does not have rational character");
    }
    BigInt pairing = inner_product(vc, tau.rep);
    out.push_back({name, pairing, pairing % 2 == 0});
  }
  return out;
}

std::pair<Sign, std::vector<SignTrace>> w_global(
    const std::vector<LocalPlace>& places) {
  Sign total(1);
  std::vector<SignTrace> traces;
  for (const LocalPlace& p : places) {
    auto [s, tr] = w_local(p);
    total *= s;
    traces.push_back(std::move(tr));
  }
  return {total, traces};
}

Verdict theorem_gate(const std::vector<LocalPlace>& places,
                     const TauData& tau) {
  Verdict verdict;
  verdict.note =
      "Schur-index hypothesis checked through its operational surrogate: "
      "real rational character with indicator -1 on every constituent";
  TauHypothesisReport rep = tau_hypothesis_check(tau);
  if (!rep.pass()) {
    verdict.failed_condition = rep.first_failure();
    return verdict;
  }
  for (const LocalPlace& p : places) {
    if (p.kind != LocalPlace::Kind::Finite) continue;
    if (p.p <= 2 * p.genus + 1 && !p.abelian_decomposition) {
      verdict.failed_condition = "abelian-at-bad-primes";
      return verdict;
    }
  }
  for (const LocalPlace& p : places) {
    if (p.kind != LocalPlace::Kind::Finite) continue;
    SignTrace scratch;
    UniformizationInput u = normalized_uniformization(p, &scratch);
    if (!kappa_symplectic_check(u)) {
      verdict.failed_condition = "kappa-symplectic";
      return verdict;
    }
    std::vector<std::pair<std::string, VirtualChar>> chars;
    chars.emplace_back("chi", chi_virtual(u, tau));
    chars.emplace_back("1", trivial_char(tau.group));
    chars.emplace_back("eta", eta_char(tau.group));
    if (p.p > 2 * p.genus + 1) {
      GrothendieckLedger ledger = place_ledger(p, u, nullptr);
      VirtualChar hats{tau.group, {}};
      for (const WeilIrred& w : ledger.hat_list) hats.terms[w.rep()] += 1;
      chars.emplace_back("hat-sum", hats);
    }
    for (const ParityEntry& pe : parity_audit(tau, chars)) {
      if (!pe.even) {
        verdict.failed_condition = "parity";
        return verdict;
      }
    }
  }
  auto [total, traces] = w_global(places);
  verdict.traces = std::move(traces);
  for (const SignTrace& t : verdict.traces) {
    if (!t.sign.positive()) {
      verdict.failed_condition = "local-sign";
      return verdict;
    }
  }
  verdict.proven = true;
  verdict.sign = total;
  return verdict;
}

}  // namespace rootnum
