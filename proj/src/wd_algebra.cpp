#include "rootnum/wd_algebra.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace rootnum {

// ---------------------------------------------------------------------------
// WeilIrred

WeilIrred WeilIrred::unramified(UnramLabel label, const Rat& omega_t) {
  WeilIrred w;
  w.label_ = label;
  w.omega_t_ = omega_t;
  return w;
}

WeilIrred WeilIrred::finite(GroupPtr group, const IrrepDescriptor& rep,
                            const Rat& omega_t) {
  if (!group) throw GroupMismatch("WeilIrred::finite: null group");
  group->validate(rep);
  // normalize the trivial and quadratic unramified characters to labels
  if (rep.d == 1 && rep.w == 0) return unramified(UnramLabel::One, omega_t);
  if (rep.d == 1 && rep.w == group->s())
    return unramified(UnramLabel::Eta, omega_t);
  WeilIrred w;
  w.group_ = std::move(group);
  w.rep_ = rep;
  w.omega_t_ = omega_t;
  return w;
}

WeilIrred WeilIrred::dual() const {
  WeilIrred w = *this;
  w.omega_t_ = -omega_t_;
  if (!is_label()) w.rep_ = dual_rep(*group_, rep_);
  return w;
}

WeilIrred WeilIrred::twisted(const Rat& t) const {
  WeilIrred w = *this;
  w.omega_t_ += t;
  return w;
}

int WeilIrred::indicator() const {
  if (!omega_t_.is_zero()) {
    throw UndefinedIndicator("indicator of a block with omega exponent " +
                             omega_t_.str());
  }
  if (is_label()) return 1;  // both unramified labels are real quadratic
  if (!self_dual()) return 0;
  return is_symplectic_by_criterion(*group_, rep_) ? -1 : 1;
}

bool WeilIrred::symplectic() const {
  return omega_t_.is_zero() && !is_label() &&
         is_symplectic_by_criterion(*group_, rep_);
}

namespace {
auto irred_key(const WeilIrred& w) {
  long n = w.is_label() ? 0 : w.group()->n();
  long k = w.is_label() ? 0 : w.group()->k();
  IrrepDescriptor r = w.is_label() ? IrrepDescriptor{} : w.rep();
  return std::make_tuple(w.is_label() ? 0 : 1,
                         w.is_label() ? static_cast<int>(w.label()) : 0, n, k,
                         r, w.omega_t());
}
}  // namespace

bool operator==(const WeilIrred& a, const WeilIrred& b) {
  return irred_key(a) == irred_key(b);
}

bool operator<(const WeilIrred& a, const WeilIrred& b) {
  return irred_key(a) < irred_key(b);
}

std::string WeilIrred::str() const {
  std::ostringstream os;
  if (is_label()) {
    os << (label_ == UnramLabel::One ? "1" : "eta");
  } else {
    os << "ind(d=" << rep_.d << ",e=" << rep_.e << ",w=" << rep_.w << ")@G("
       << group_->n() << "," << group_->k() << ")";
  }
  if (!omega_t_.is_zero()) os << "*w^" << omega_t_.str();
  return os.str();
}

std::string form_name(Form f) {
  switch (f) {
    case Form::Orthogonal: return "orthogonal";
    case Form::Symplectic: return "symplectic";
    case Form::Unitary: return "unitary";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// WDRep

WDRep WDRep::sp(long n) {
  if (n < 1) throw std::invalid_argument("sp(n): n must be >= 1");
  WDRep r;
  r.add(WeilIrred::unramified(UnramLabel::One), n, 1);
  return r;
}

WDRep WDRep::single(WeilIrred irred, long sp_n, long mult) {
  WDRep r;
  r.add(irred, sp_n, mult);
  return r;
}

void WDRep::add(const WeilIrred& irred, long sp_n, long mult) {
  if (sp_n < 1) throw std::invalid_argument("WDRep::add: sp_n must be >= 1");
  if (mult == 0) return;
  if (mult < 0) throw std::invalid_argument("WDRep::add: negative multiplicity");
  Block b{irred, sp_n};
  blocks_[b] += mult;
  if (!irred.is_label()) common_group();  // throws GroupMismatch on conflict
}

long WDRep::dim() const {
  long d = 0;
  for (const auto& [b, m] : blocks_) d += b.irred.dim() * b.sp_n * m;
  return d;
}

long WDRep::nilpotent_rank() const {
  long r = 0;
  for (const auto& [b, m] : blocks_) r += b.irred.dim() * (b.sp_n - 1) * m;
  return r;
}

bool WDRep::is_weil() const {
  for (const auto& [b, m] : blocks_) {
    if (b.sp_n != 1) return false;
  }
  return true;
}

GroupPtr WDRep::common_group() const {
  GroupPtr g;
  for (const auto& [b, m] : blocks_) {
    if (b.irred.is_label()) continue;
    if (!g) {
      g = b.irred.group();
    } else if (!g->same_group(*b.irred.group())) {
      throw GroupMismatch("blocks over distinct groups: (" +
                          std::to_string(g->n()) + "," +
                          std::to_string(g->k()) + ") vs (" +
                          std::to_string(b.irred.group()->n()) + "," +
                          std::to_string(b.irred.group()->k()) + ")");
    }
  }
  return g;
}

WDRep direct_sum(const WDRep& a, const WDRep& b) {
  WDRep out = a;
  for (const auto& [blk, m] : b.blocks_) out.blocks_[blk] += m;
  out.common_group();  // throws GroupMismatch on incompatible finite parts
  return out;
}

WDRep WDRep::twist_omega(const Rat& t) const {
  WDRep out;
  for (const auto& [b, m] : blocks_) out.add(b.irred.twisted(t), b.sp_n, m);
  return out;
}

WDRep WDRep::dual() const {
  // sp(n)~ = omega^{-(n-1)} (x) sp(n), and the finite part dualizes
  WDRep out;
  for (const auto& [b, m] : blocks_) {
    out.add(b.irred.dual().twisted(Rat(-(b.sp_n - 1))), b.sp_n, m);
  }
  return out;
}

std::string WDRep::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, m] : blocks_) {
    if (!first) os << " + ";
    if (m != 1) os << m << "*";
    os << b.irred.str();
    if (b.sp_n != 1) os << "(x)sp(" << b.sp_n << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

WDRep sp(long n) { return WDRep::sp(n); }
WDRep twist_omega(const WDRep& a, const Rat& t) { return a.twist_omega(t); }
WDRep dual(const WDRep& a) { return a.dual(); }

SpMatrixModel sp_matrix_model(long n) {
  SpMatrixModel m;
  m.omega_exponents.resize(static_cast<size_t>(n));
  m.nilpotent.assign(static_cast<size_t>(n),
                     std::vector<long>(static_cast<size_t>(n), 0));
  for (long i = 0; i < n; ++i) m.omega_exponents[static_cast<size_t>(i)] = Rat(i);
  for (long j = 0; j + 1 < n; ++j)
    m.nilpotent[static_cast<size_t>(j + 1)][static_cast<size_t>(j)] = 1;
  return m;
}

// ---------------------------------------------------------------------------
// Form feasibility

namespace {

/// Hermitian partner: same finite part, negated omega exponent.
WeilIrred conj_dual(const WeilIrred& w) { return w.twisted(w.omega_t() * Rat(-2)); }

bool carries_form_alone(const WeilIrred& w, Form form) {
  switch (form) {
    case Form::Symplectic:
      return w.self_dual() && w.indicator() == -1;
    case Form::Orthogonal:
      return w.self_dual() && w.indicator() == +1;
    case Form::Unitary:
      return w.omega_t().is_zero();
  }
  return false;
}

WeilIrred pairing_partner(const WeilIrred& w, Form form) {
  return form == Form::Unitary ? conj_dual(w) : w.dual();
}

}  // namespace

FormWitness form_feasibility(const WDRep& a, Form form) {
  if (!a.is_weil()) {
    throw SchemaError("form_feasibility expects a Weil representation "
                      "(all sp labels 1)");
  }
  FormWitness res;
  std::map<WeilIrred, long> mult;
  for (const auto& [b, m] : a.blocks()) mult[b.irred] = m;
  for (const auto& [w, m] : mult) {
    WeilIrred partner = pairing_partner(w, form);
    if (partner == w) {
      if (carries_form_alone(w, form)) {
        res.self_blocks.emplace_back(w, m);
      } else if (m % 2 == 0) {
        res.paired_blocks.emplace_back(w, m / 2);
      } else {
        res.violations.push_back("odd multiplicity " + std::to_string(m) +
                                 " of self-dual block " + w.str() +
                                 " that does not carry a " + form_name(form) +
                                 " form alone");
      }
      continue;
    }
    auto it = mult.find(partner);
    long m2 = (it == mult.end()) ? 0 : it->second;
    if (partner < w) {
      if (m2 == 0) {
        res.violations.push_back("block " + w.str() + " lacks its partner " +
                                 partner.str());
      }
      continue;  // handled from the partner's side
    }
    if (m2 != m) {
      res.violations.push_back("multiplicity mismatch between " + w.str() +
                               " (" + std::to_string(m) + ") and " +
                               partner.str() + " (" + std::to_string(m2) +
                               ")");
    } else {
      res.paired_blocks.emplace_back(w, m);
    }
  }
  res.feasible = res.violations.empty();
  return res;
}

bool admissible_form_check(const WDRep& a, Form form) {
  std::map<long, WDRep> by_n;
  for (const auto& [b, m] : a.blocks()) {
    by_n[b.sp_n].add(b.irred, 1, m);
  }
  for (const auto& [n, group_rep] : by_n) {
    // recenter so dual pairing is symmetric within the fixed-n group
    WDRep recentered = group_rep.twist_omega(Rat(n - 1, 2));
    Form effective = form;
    if (n % 2 == 0) {
      if (form == Form::Symplectic) effective = Form::Orthogonal;
      else if (form == Form::Orthogonal) effective = Form::Symplectic;
    }
    if (!form_feasibility(recentered, effective).feasible) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Grothendieck decomposition

std::string case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Mixed: return "mixed";
  }
  return "?";
}

IrrepDescriptor label_descriptor(const MetacyclicGroup& g, UnramLabel label) {
  if (label == UnramLabel::One) return IrrepDescriptor{1, 0, 1, 0};
  return IrrepDescriptor{1, 0, 1, g.s()};
}

namespace {

IrrepDescriptor descriptor_of(const WeilIrred& w, const MetacyclicGroup& g) {
  return w.is_label() ? label_descriptor(g, w.label()) : w.rep();
}

}  // namespace

GrothendieckLedger grothendieck_decompose(GroupPtr group,
                                          const WDRep& lambda) {
  if (!lambda.is_weil()) {
    throw SchemaError("grothendieck_decompose expects a Weil representation");
  }
  GroupPtr lg = lambda.common_group();
  if (lg && !lg->same_group(*group)) {
    throw GroupMismatch("lambda is not over the stated group");
  }
  FormWitness fw = form_feasibility(lambda, Form::Symplectic);
  if (!fw.feasible) {
    throw NotSymplecticFeasible(fw.violations.front());
  }
  const MetacyclicGroup& g = *group;

  struct Entry {
    WeilIrred irred;
    IrrepDescriptor desc;
    long mult;
  };
  std::map<long, std::vector<Entry>> by_d;
  for (const auto& [b, m] : lambda.blocks()) {
    IrrepDescriptor desc = descriptor_of(b.irred, g);
    by_d[desc.d].push_back(Entry{b.irred, desc, m});
  }

  GrothendieckLedger ledger;
  ledger.group = group;
  std::vector<CaseTag> tags;

  for (auto& [d, entries] : by_d) {
    // all <k>-orbits of exponents of exact order d
    std::vector<long> orbit_reps;
    for (long e = 0; e < g.n(); ++e) {
      if (std::gcd<long, long>(e, g.n()) == g.n() / d &&
          g.orbit_rep(e) == e) {
        orbit_reps.push_back(e);
      }
    }
    long x = g.ord_k_mod(d);
    long q2 = 2 * g.s() / x;

    std::map<long, long> total_exp;   // orbit rep -> exponent of q(xi) in p
    std::map<long, long> sympl_mult;  // orbit rep -> z
    for (long e : orbit_reps) {
      total_exp[e] = 0;
      sympl_mult[e] = 0;
    }
    std::vector<Entry> nu_entries;
    for (const Entry& en : entries) {
      total_exp[g.orbit_rep(en.desc.e)] += en.mult;
      if (en.irred.symplectic()) {
        sympl_mult[en.desc.e] += en.mult;
      } else {
        nu_entries.push_back(en);
      }
    }
    long v = total_exp[orbit_reps.front()];
    for (long e : orbit_reps) {
      if (total_exp[e] != v) {
        throw IrrationalRestriction(
            "restriction to B is not Q-valued: the orbit exponents at d = " +
            std::to_string(d) + " differ (" + std::to_string(total_exp[e]) +
            " vs " + std::to_string(v) + ")");
      }
    }
    if (v == 0) continue;

    // nu-part: fold mu <- one side of each hyperbolic pair
    for (const Entry& en : nu_entries) {
      WeilIrred dual = en.irred.dual();
      if (dual == en.irred) {
        if (en.mult % 2 != 0) {
          throw LedgerInvalid("self-dual non-symplectic block " +
                              en.irred.str() + " with odd multiplicity");
        }
        ledger.mu.add(en.irred, 1, en.mult / 2);
      } else if (en.irred < dual) {
        ledger.mu.add(en.irred, 1, en.mult);
      }
    }

    long n_sympl_orbits = 0;
    bool some_orbit_without = false;
    for (long e : orbit_reps) {
      if (sympl_mult[e] > 0) ++n_sympl_orbits;
      else some_orbit_without = true;
    }
    if (n_sympl_orbits == 0) {
      tags.push_back(CaseTag::Case1);
      continue;
    }
    if (some_orbit_without) {
      // case 1: all z_j are even, mu0 collects lambda_j^{z_j/2}
      tags.push_back(CaseTag::Case1);
      for (long e : orbit_reps) {
        long z = sympl_mult[e];
        if (z == 0) continue;
        if (z % 2 != 0) {
          throw LedgerInvalid("case-1 block with odd symplectic multiplicity");
        }
        IrrepDescriptor lam{d, e, x, q2 / 2};
        ledger.mu0.add(WeilIrred::finite(group, lam), 1, z / 2);
      }
    } else {
      // case 2: every orbit carries its symplectic irreducible;
      // z_j + 2 alpha(j) = v and prod_j q(eta_j) = Phi_d
      tags.push_back(CaseTag::Case2);
      for (long e : orbit_reps) {
        long z = sympl_mult[e];
        if (v - z < 0 || (v - z) % 2 != 0) {
          throw LedgerInvalid("case-2 block with inconsistent exponents");
        }
        long alpha = (v - z) / 2;
        IrrepDescriptor lam{d, e, x, q2 / 2};
        WeilIrred w = WeilIrred::finite(group, lam);
        if (alpha > 0) ledger.mu0p.add(w, 1, alpha);
        for (long c = 0; c < v; ++c) ledger.mu_list.push_back(w);
      }
    }
  }

  if (tags.empty()) {
    ledger.tag = CaseTag::Case1;
  } else {
    ledger.tag = tags.front();
    for (CaseTag t : tags) {
      if (t != ledger.tag) {
        ledger.tag = CaseTag::Mixed;
        break;
      }
    }
  }
  for (const WeilIrred& w : ledger.mu_list) {
    ledger.hat_list.push_back(
        WeilIrred::finite(ledger.group, hat_rep(g, w.rep())));
  }
  return ledger;
}

std::map<WeilIrred, long> ledger_recombine_formal(
    const GrothendieckLedger& ledger) {
  std::map<WeilIrred, long> out;
  auto fold = [&out](const WDRep& rep, long scale) {
    for (const auto& [b, m] : rep.blocks()) out[b.irred] += scale * m;
  };
  fold(ledger.mu, 1);
  fold(ledger.mu.dual(), 1);
  fold(ledger.mu0, 2);
  fold(ledger.mu0p, -2);
  for (const WeilIrred& w : ledger.mu_list) out[w] += 1;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

VirtualChar ledger_recombine(const GrothendieckLedger& ledger) {
  auto formal = ledger_recombine_formal(ledger);
  std::vector<std::pair<IrrepDescriptor, long>> terms;
  for (const auto& [w, m] : formal) {
    if (!w.omega_t().is_zero()) {
      throw LedgerInvalid("ledger entry " + w.str() +
                          " carries an omega twist; no virtual character");
    }
    terms.emplace_back(descriptor_of(w, *ledger.group), m);
  }
  return virtual_char(ledger.group, std::move(terms));
}

VirtualChar wdrep_to_virtual_char(const WDRep& a, GroupPtr fallback_group) {
  if (!a.is_weil()) {
    throw SchemaError("expected a Weil representation (sp labels all 1)");
  }
  GroupPtr g = a.common_group();
  if (!g) g = std::move(fallback_group);
  if (!g) throw GroupMismatch("no group reference available");
  std::vector<std::pair<IrrepDescriptor, long>> terms;
  for (const auto& [b, m] : a.blocks()) {
    if (!b.irred.omega_t().is_zero()) {
      throw SchemaError("block " + b.irred.str() +
                        " carries an omega twist; not a virtual character");
    }
    terms.emplace_back(descriptor_of(b.irred, *g), m);
  }
  return virtual_char(std::move(g), std::move(terms));
}

}  // namespace rootnum
