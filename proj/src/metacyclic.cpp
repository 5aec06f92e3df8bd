#include "rootnum/metacyclic.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace rootnum {

namespace {

long mod_pos(long a, long m) { return ((a % m) + m) % m; }

long gcd_l(long a, long b) { return std::gcd(a, b); }

}  // namespace

// ---------------------------------------------------------------------------
// MetacyclicGroup

MetacyclicGroup::MetacyclicGroup(long n, long k) : n_(n) {
  if (n < 1) throw NotAUnit("group order parameter n must be >= 1");
  if (n > 100000) {
    throw std::invalid_argument("finite model too large: n > 100000");
  }
  k_ = mod_pos(k, n);
  if (n_ == 1) k_ = 1;  // canonical unit mod 1
  if (gcd_l(k_, n_) != 1) {
    throw NotAUnit("k = " + std::to_string(k) + " is not a unit mod " +
                   std::to_string(n));
  }
  // s = multiplicative order of k mod n
  k_powers_.push_back(1 % n_);
  long cur = k_ % n_;
  long s = 1;
  while (cur != 1 % n_) {
    k_powers_.push_back(cur);
    cur = (cur * k_) % n_;
    ++s;
  }
  s_ = s;
  if (order() > 2000000) {
    throw std::invalid_argument("finite model too large: |H| = 2sn > 2000000");
  }

  // irreducibles: for each d | n, <k>-orbits of exponents of order d, and
  // 2s/x characters of Gamma = (c^x)
  long dim_sq = 0;
  for (long d = 1; d <= n_; ++d) {
    if (n_ % d != 0) continue;
    long x = ord_k_mod(d);
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    for (long e = 0; e < n_; ++e) {
      if (seen[static_cast<size_t>(e)]) continue;
      if (gcd_l(e, n_) != n_ / d) continue;
      // walk the orbit of e, marking members
      long cur_e = e;
      long orbit = 0;
      do {
        seen[static_cast<size_t>(cur_e)] = true;
        cur_e = (cur_e * k_) % n_;
        ++orbit;
      } while (cur_e != e);
      if (orbit != x) throw std::logic_error("orbit size != ord(k mod d)");
      for (long w = 0; w < 2 * s_ / x; ++w) {
        irreps_.push_back(IrrepDescriptor{d, e, x, w});
        dim_sq += x * x;
      }
    }
  }
  std::sort(irreps_.begin(), irreps_.end());
  if (dim_sq != order()) {
    throw std::logic_error("sum of squared dimensions != group order");
  }

  // conjugacy classes by closure under conjugation with the generators
  long twos = 2 * s_;
  std::vector<bool> visited(static_cast<size_t>(order()), false);
  auto index = [&](const GroupElement& g) {
    return static_cast<size_t>(g.t * twos + g.v);
  };
  const GroupElement gen_b{1 % n_, 0};
  const GroupElement gen_c{0, 1 % twos};
  for (long t = 0; t < n_; ++t) {
    for (long v = 0; v < twos; ++v) {
      GroupElement g{t, v};
      if (visited[index(g)]) continue;
      std::vector<GroupElement> cls;
      std::vector<GroupElement> stack{g};
      visited[index(g)] = true;
      while (!stack.empty()) {
        GroupElement cur_g = stack.back();
        stack.pop_back();
        cls.push_back(cur_g);
        for (const GroupElement& h : {gen_b, gen_c}) {
          GroupElement cg = conjugate(cur_g, h);
          if (!visited[index(cg)]) {
            visited[index(cg)] = true;
            stack.push_back(cg);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  }
  if (classes_.size() != irreps_.size()) {
    throw std::logic_error("class count != irreducible count");
  }
}

long MetacyclicGroup::k_pow(long j) const {
  return k_powers_[static_cast<size_t>(mod_pos(j, s_))];
}

long MetacyclicGroup::k_pow_mod(long j, long mod) const {
  if (mod == 1) return 0;
  return k_pow(j) % mod;
}

long MetacyclicGroup::ord_k_mod(long d) const {
  if (d == 1) return 1;
  long cur = k_ % d;
  long x = 1;
  while (cur != 1) {
    cur = (cur * (k_ % d)) % d;
    ++x;
  }
  return x;
}

GroupElement MetacyclicGroup::normalized(long t, long v) const {
  return {mod_pos(t, n_), mod_pos(v, 2 * s_)};
}

GroupElement MetacyclicGroup::mul(const GroupElement& a,
                                  const GroupElement& b) const {
  long t = mod_pos(a.t + b.t * k_pow(-a.v), n_);
  long v = mod_pos(a.v + b.v, 2 * s_);
  return {t, v};
}

GroupElement MetacyclicGroup::inverse(const GroupElement& g) const {
  return normalized(-g.t * k_pow(g.v), -g.v);
}

GroupElement MetacyclicGroup::conjugate(const GroupElement& g,
                                        const GroupElement& h) const {
  return mul(mul(inverse(h), g), h);
}

long MetacyclicGroup::orbit_rep(long e) const {
  long e0 = mod_pos(e, n_);
  long best = e0;
  long cur = (e0 * k_) % n_;
  while (cur != e0) {
    best = std::min(best, cur);
    cur = (cur * k_) % n_;
  }
  return best;
}

void MetacyclicGroup::validate(const IrrepDescriptor& rep) const {
  std::ostringstream at;
  at << "descriptor (d=" << rep.d << ", e=" << rep.e << ", x=" << rep.x
     << ", w=" << rep.w << ") in group (n=" << n_ << ", k=" << k_ << ")";
  if (rep.d < 1 || n_ % rep.d != 0)
    throw SchemaError(at.str() + ": d does not divide n");
  if (rep.e < 0 || rep.e >= n_ || gcd_l(rep.e, n_) != n_ / rep.d)
    throw SchemaError(at.str() + ": e does not have order d");
  if (orbit_rep(rep.e) != rep.e)
    throw SchemaError(at.str() + ": e is not the canonical orbit representative");
  if (rep.x != ord_k_mod(rep.d))
    throw SchemaError(at.str() + ": x is not the order of k mod d");
  if (rep.w < 0 || rep.w >= 2 * s_ / rep.x)
    throw SchemaError(at.str() + ": w out of range [0, 2s/x)");
}

GroupPtr group_new(long n, long k) {
  return std::make_shared<const MetacyclicGroup>(n, k);
}

// ---------------------------------------------------------------------------
// VirtualChar

long VirtualChar::dim() const {
  long d = 0;
  for (const auto& [rep, m] : terms) d += rep.x * m;
  return d;
}

bool VirtualChar::is_true_character() const {
  for (const auto& [rep, m] : terms) {
    if (m < 0) return false;
  }
  return true;
}

bool operator==(const VirtualChar& a, const VirtualChar& b) {
  if (!a.group || !b.group || !a.group->same_group(*b.group)) return false;
  return a.terms == b.terms;
}

VirtualChar virtual_char(GroupPtr g,
                         std::vector<std::pair<IrrepDescriptor, long>> terms) {
  VirtualChar vc;
  vc.group = std::move(g);
  for (auto& [rep, m] : terms) {
    vc.group->validate(rep);
    if (m != 0) vc.terms[rep] += m;
  }
  std::erase_if(vc.terms, [](const auto& kv) { return kv.second == 0; });
  return vc;
}

VirtualChar trivial_char(GroupPtr g) {
  return virtual_char(std::move(g), {{IrrepDescriptor{1, 0, 1, 0}, 1}});
}

VirtualChar eta_char(GroupPtr g) {
  long s = g->s();
  return virtual_char(std::move(g), {{IrrepDescriptor{1, 0, 1, s}, 1}});
}

// ---------------------------------------------------------------------------
// Character values

namespace {

struct TermData {
  long conductor;  // lcm(d, 2s/x)
  long dscale;
  long qscale;
  long q2;      // 2s/x
  long eprime;  // e / (n/d), a unit mod d
};

TermData term_data(const MetacyclicGroup& g, const IrrepDescriptor& rep) {
  TermData td;
  td.q2 = 2 * g.s() / rep.x;
  td.conductor = std::lcm(rep.d, td.q2);
  td.dscale = td.conductor / rep.d;
  td.qscale = td.conductor / td.q2;
  td.eprime = rep.e / (g.n() / rep.d);
  return td;
}

/// Exponents (at td.conductor) of the x roots of unity summing to
/// chi(rep, el); empty when the value is zero.
void char_exponents(const MetacyclicGroup& g, const IrrepDescriptor& rep,
                    const TermData& td, const GroupElement& el,
                    std::vector<long>& out) {
  out.clear();
  if (el.v % rep.x != 0) return;
  long psi2 = td.qscale * mod_pos(rep.w * (el.v / rep.x), td.q2);
  long base = mod_pos(td.eprime * el.t, rep.d);
  for (long j = 0; j < rep.x; ++j) {
    long de = mod_pos(base * g.k_pow_mod(j, rep.d), rep.d);
    out.push_back(td.dscale * de + psi2);
  }
}

}  // namespace

CycNum character_value(const MetacyclicGroup& g, const IrrepDescriptor& rep,
                       const GroupElement& el) {
  g.validate(rep);
  GroupElement e = g.normalized(el.t, el.v);
  TermData td = term_data(g, rep);
  std::vector<long> exps;
  char_exponents(g, rep, td, e, exps);
  ZetaSum zs(td.conductor);
  for (long ex : exps) zs.add(ex, 1);
  return zs.materialize();
}

CycNum virtual_char_value(const VirtualChar& vc, const GroupElement& el) {
  const MetacyclicGroup& g = *vc.group;
  GroupElement e = g.normalized(el.t, el.v);
  long m_all = 1;
  std::vector<TermData> tds;
  for (const auto& [rep, mult] : vc.terms) {
    tds.push_back(term_data(g, rep));
    m_all = std::lcm(m_all, tds.back().conductor);
  }
  ZetaSum zs(m_all);
  size_t i = 0;
  std::vector<long> exps;
  for (const auto& [rep, mult] : vc.terms) {
    const TermData& td = tds[i++];
    char_exponents(g, rep, td, e, exps);
    long scale = m_all / td.conductor;
    for (long ex : exps) zs.add(static_cast<long long>(ex) * scale, mult);
  }
  return zs.materialize();
}

int fs_indicator(const MetacyclicGroup& g, const IrrepDescriptor& rep) {
  g.validate(rep);
  TermData td = term_data(g, rep);
  long n = g.n();
  long twos = 2 * g.s();
  ZetaSum zs(td.conductor);
  for (long t = 0; t < n; ++t) {
    for (long v = 0; v < twos; ++v) {
      long v2 = mod_pos(2 * v, twos);
      if (v2 % rep.x != 0) continue;
      long t2 = mod_pos(t + t * g.k_pow(-v), n);
      long psi2 = td.qscale * mod_pos(rep.w * (v2 / rep.x), td.q2);
      long base = mod_pos(td.eprime * t2, rep.d);
      for (long j = 0; j < rep.x; ++j) {
        long de = mod_pos(base * g.k_pow_mod(j, rep.d), rep.d);
        zs.add(td.dscale * de + psi2, 1);
      }
    }
  }
  auto total = zs.rational_value();
  if (!total) {
    throw IndicatorNotIntegral("indicator sum is irrational for (d=" +
                               std::to_string(rep.d) + ", e=" +
                               std::to_string(rep.e) + ", w=" +
                               std::to_string(rep.w) + ")");
  }
  Rat val = *total / Rat(g.order());
  if (!val.is_integer() ||
      (val != Rat(-1) && val != Rat(0) && val != Rat(1))) {
    throw IndicatorNotIntegral("indicator " + val.str() + " not in {-1,0,1}");
  }
  if (val == Rat(-1)) return -1;
  if (val == Rat(1)) return 1;
  return 0;
}

bool is_symplectic_by_criterion(const MetacyclicGroup& g,
                                const IrrepDescriptor& rep) {
  g.validate(rep);
  if (rep.d == 1 || rep.d == 2) return false;
  if (rep.x % 2 != 0) return false;
  long q2 = 2 * g.s() / rep.x;
  if (rep.w != q2 / 2) return false;  // psi2(c^x) = -1
  if (mod_pos(1 + g.k_pow_mod(rep.x / 2, rep.d), rep.d) != 0) return false;
  return true;
}

IrrepDescriptor hat_rep(const MetacyclicGroup& g,
                        const IrrepDescriptor& rep) {
  if (!is_symplectic_by_criterion(g, rep)) {
    throw NotSymplectic("hat_rep requires a symplectic irreducible");
  }
  long q2 = 2 * g.s() / rep.x;
  IrrepDescriptor out = rep;
  out.w = mod_pos(rep.w + q2 / 2, q2);
  return out;
}

IrrepDescriptor dual_rep(const MetacyclicGroup& g,
                         const IrrepDescriptor& rep) {
  g.validate(rep);
  IrrepDescriptor out = rep;
  out.e = g.orbit_rep(mod_pos(-rep.e, g.n()));
  long q2 = 2 * g.s() / rep.x;
  out.w = mod_pos(-rep.w, q2);
  return out;
}

VirtualChar theta_rep(GroupPtr g, long r) {
  if (r < 1 || g->n() % r != 0) {
    throw NotADivisor("theta_rep: r = " + std::to_string(r) +
                      " does not divide n = " + std::to_string(g->n()));
  }
  long n = g->n();
  long x = g->ord_k_mod(r);
  std::vector<std::pair<IrrepDescriptor, long>> terms;
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (long e = 0; e < n; ++e) {
    if (seen[static_cast<size_t>(e)] || gcd_l(e, n) != n / r) continue;
    long cur = e;
    do {
      seen[static_cast<size_t>(cur)] = true;
      cur = (cur * g->k()) % n;
    } while (cur != e);
    terms.push_back({IrrepDescriptor{r, e, x, 0}, 1});
  }
  return virtual_char(std::move(g), std::move(terms));
}

VirtualChar pi_rep(GroupPtr g, long d) {
  if (d < 1 || g->n() % d != 0) {
    throw NotADivisor("pi_rep: d = " + std::to_string(d) +
                      " does not divide n = " + std::to_string(g->n()));
  }
  // Frobenius reciprocity: <Ind_L^H 1, chi> = (1/|L|) sum_{l in L} chi(l),
  // L = (b^d) x| C of order (n/d) * 2s.
  long n = g->n();
  long twos = 2 * g->s();
  long lsize = (n / d) * twos;
  std::vector<std::pair<IrrepDescriptor, long>> terms;
  for (const IrrepDescriptor& rep : g->irreducibles()) {
    TermData td = term_data(*g, rep);
    ZetaSum zs(td.conductor);
    std::vector<long> exps;
    for (long u = 0; u < n / d; ++u) {
      for (long v = 0; v < twos; ++v) {
        GroupElement el = g->normalized(d * u, v);
        char_exponents(*g, rep, td, el, exps);
        for (long ex : exps) zs.add(ex, 1);
      }
    }
    auto total = zs.rational_value();
    if (!total) throw IndicatorNotIntegral("pi_rep: irrational multiplicity");
    Rat mult = *total / Rat(lsize);
    if (!mult.is_integer()) {
      throw IndicatorNotIntegral("pi_rep: fractional multiplicity");
    }
    long m = static_cast<long>(mult.num().get_si());
    if (m != 0) terms.push_back({rep, m});
  }
  return virtual_char(std::move(g), std::move(terms));
}

long inner_product_irreps(const MetacyclicGroup& g, const IrrepDescriptor& a,
                          const IrrepDescriptor& b) {
  TermData ta = term_data(g, a);
  TermData tb = term_data(g, b);
  long m = std::lcm(ta.conductor, tb.conductor);
  long sa = m / ta.conductor;
  long sb = m / tb.conductor;
  ZetaSum zs(m);
  std::vector<long> ea, eb;
  for (const auto& cls : g.conjugacy_classes()) {
    const GroupElement& repel = cls.front();
    char_exponents(g, a, ta, repel, ea);
    if (ea.empty()) continue;
    char_exponents(g, b, tb, repel, eb);
    if (eb.empty()) continue;
    long long size = static_cast<long long>(cls.size());
    for (long xa : ea) {
      for (long xb : eb) {
        zs.add(static_cast<long long>(xa) * sa -
                   static_cast<long long>(xb) * sb,
               size);
      }
    }
  }
  auto total = zs.rational_value();
  if (!total) throw IndicatorNotIntegral("inner product: irrational sum");
  Rat val = *total / Rat(g.order());
  if (!val.is_integer()) {
    throw IndicatorNotIntegral("inner product " + val.str() +
                               " is not an integer");
  }
  return static_cast<long>(val.num().get_si());
}

BigInt inner_product(const VirtualChar& a, const VirtualChar& b) {
  if (!a.group || !b.group || !a.group->same_group(*b.group)) {
    throw GroupMismatch("inner_product: virtual characters over different groups");
  }
  const MetacyclicGroup& g = *a.group;
  std::map<std::pair<IrrepDescriptor, IrrepDescriptor>, long> cache;
  BigInt total = 0;
  for (const auto& [ra, ma] : a.terms) {
    for (const auto& [rb, mb] : b.terms) {
      auto key = std::make_pair(ra, rb);
      auto it = cache.find(key);
      long ip;
      if (it == cache.end()) {
        ip = inner_product_irreps(g, ra, rb);
        cache.emplace(key, ip);
      } else {
        ip = it->second;
      }
      total += BigInt(ma) * BigInt(mb) * BigInt(ip);
    }
  }
  return total;
}

CycNum det_character_value(const MetacyclicGroup& g,
                           const IrrepDescriptor& rep,
                           const GroupElement& el) {
  g.validate(rep);
  GroupElement e = g.normalized(el.t, el.v);
  TermData td = term_data(g, rep);
  long m = std::lcm(td.conductor, 2L);
  // det(lambda(b)) = xi^{1 + k + ... + k^{x-1}}
  long ssum = 0;
  for (long j = 0; j < rep.x; ++j) ssum = mod_pos(ssum + g.k_pow_mod(j, rep.d), rep.d);
  long dexp = mod_pos(td.eprime * ssum * e.t, rep.d);
  // det(lambda(c)) = (-1)^{x-1} psi2(c^x)
  long qexp = mod_pos(rep.w * e.v, td.q2);
  long sign_exp = mod_pos((rep.x - 1) * e.v, 2);
  ZetaSum zs(m);
  long total = mod_pos(dexp * (m / rep.d) + qexp * (m / td.q2) +
                           sign_exp * (m / 2),
                       m);
  zs.add(total, 1);
  return zs.materialize();
}

CycNum det_virtual_char_value(const VirtualChar& vc, const GroupElement& el) {
  CycNum out = CycNum::one();
  for (const auto& [rep, mult] : vc.terms) {
    if (mult < 0) {
      throw SchemaError("determinant of a virtual character with negative "
                        "multiplicities is not defined here");
    }
    CycNum d = det_character_value(*vc.group, rep, el);
    for (long i = 0; i < mult; ++i) out = out * d;
  }
  return out;
}

IntPoly char_poly_at_b(const VirtualChar& vc) {
  const MetacyclicGroup& g = *vc.group;
  // product over constituents of q(xi) = prod_j (X - xi^{k^j})
  std::vector<CycNum> poly{CycNum::one()};  // lowest degree first
  auto mul_linear = [&](const CycNum& root) {
    // poly *= (X - root)
    std::vector<CycNum> next(poly.size() + 1, CycNum::zero());
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = next[i + 1] + poly[i];
      next[i] = next[i] - poly[i] * root;
    }
    poly = std::move(next);
  };
  for (const auto& [rep, mult] : vc.terms) {
    if (mult < 0) {
      throw SchemaError("char_poly_at_b of a properly virtual character");
    }
    long eprime = rep.e / (g.n() / rep.d);
    for (long c = 0; c < mult; ++c) {
      for (long j = 0; j < rep.x; ++j) {
        mul_linear(zeta(rep.d, eprime * g.k_pow_mod(j, rep.d)));
      }
    }
  }
  std::vector<BigInt> out;
  out.reserve(poly.size());
  for (const CycNum& c : poly) {
    auto r = c.as_rational();
    if (!r || !r->is_integer()) {
      throw IrrationalRestriction(
          "characteristic polynomial at b has a non-integer coefficient");
    }
    out.push_back(r->num());
  }
  return IntPoly(std::move(out));
}

bool has_rational_character(const VirtualChar& vc) {
  const MetacyclicGroup& g = *vc.group;
  long m_all = 1;
  std::vector<TermData> tds;
  for (const auto& [rep, mult] : vc.terms) {
    tds.push_back(term_data(g, rep));
    m_all = std::lcm(m_all, tds.back().conductor);
  }
  std::vector<long> exps;
  for (const auto& cls : g.conjugacy_classes()) {
    ZetaSum zs(m_all);
    size_t i = 0;
    for (const auto& [rep, mult] : vc.terms) {
      const TermData& td = tds[i++];
      char_exponents(g, rep, td, cls.front(), exps);
      long scale = m_all / td.conductor;
      for (long ex : exps) zs.add(static_cast<long long>(ex) * scale, mult);
    }
    if (!zs.rational_value()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomial matrix model

CycNum MonomialMatrix::trace() const {
  ZetaSum zs(conductor);
  for (long i = 0; i < dim; ++i) {
    if (perm[static_cast<size_t>(i)] == i)
      zs.add(entry_exp[static_cast<size_t>(i)], 1);
  }
  return zs.materialize();
}

CycNum MonomialMatrix::det() const {
  // permutation sign by cycle count
  std::vector<bool> seen(static_cast<size_t>(dim), false);
  int sign = 1;
  for (long i = 0; i < dim; ++i) {
    if (seen[static_cast<size_t>(i)]) continue;
    long len = 0;
    long j = i;
    while (!seen[static_cast<size_t>(j)]) {
      seen[static_cast<size_t>(j)] = true;
      j = perm[static_cast<size_t>(j)];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  long total = 0;
  for (long i = 0; i < dim; ++i)
    total = (total + entry_exp[static_cast<size_t>(i)]) % conductor;
  ZetaSum zs(conductor);
  zs.add(total, sign);
  return zs.materialize();
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.dim != b.dim || a.conductor != b.conductor) {
    throw std::invalid_argument("monomial matrix shape mismatch");
  }
  MonomialMatrix out;
  out.dim = a.dim;
  out.conductor = a.conductor;
  out.perm.resize(static_cast<size_t>(a.dim));
  out.entry_exp.resize(static_cast<size_t>(a.dim));
  for (long j = 0; j < a.dim; ++j) {
    long mid = b.perm[static_cast<size_t>(j)];
    out.perm[static_cast<size_t>(j)] = a.perm[static_cast<size_t>(mid)];
    out.entry_exp[static_cast<size_t>(j)] =
        (b.entry_exp[static_cast<size_t>(j)] +
         a.entry_exp[static_cast<size_t>(mid)]) %
        a.conductor;
  }
  return out;
}

MonomialMatrix monomial_matrix(const MetacyclicGroup& g,
                               const IrrepDescriptor& rep,
                               const GroupElement& el) {
  g.validate(rep);
  GroupElement e = g.normalized(el.t, el.v);
  TermData td = term_data(g, rep);
  long m = td.conductor;
  long x = rep.x;
  MonomialMatrix mb, mc;
  mb.dim = mc.dim = x;
  mb.conductor = mc.conductor = m;
  mb.perm.resize(static_cast<size_t>(x));
  mb.entry_exp.resize(static_cast<size_t>(x));
  mc.perm.resize(static_cast<size_t>(x));
  mc.entry_exp.resize(static_cast<size_t>(x));
  for (long i = 0; i < x; ++i) {
    mb.perm[static_cast<size_t>(i)] = i;
    mb.entry_exp[static_cast<size_t>(i)] =
        td.dscale * mod_pos(td.eprime * g.k_pow_mod(i, rep.d), rep.d);
    // lambda(c) e_i = e_{i+1}, lambda(c) e_{x-1} = psi2(c^x) e_0
    mc.perm[static_cast<size_t>(i)] = (i + 1) % x;
    mc.entry_exp[static_cast<size_t>(i)] =
        (i == x - 1) ? td.qscale * mod_pos(rep.w, td.q2) : 0;
  }
  MonomialMatrix out;
  out.dim = x;
  out.conductor = m;
  out.perm.resize(static_cast<size_t>(x));
  out.entry_exp.assign(static_cast<size_t>(x), 0);
  for (long i = 0; i < x; ++i) out.perm[static_cast<size_t>(i)] = i;
  for (long i = 0; i < e.t; ++i) out = out * mb;
  for (long i = 0; i < e.v; ++i) out = out * mc;
  return out;
}

// ---------------------------------------------------------------------------
// One-dimensional twist factoring

OneDimTwist factor_one_dim_twist(const MetacyclicGroup& g,
                                 const IrrepDescriptor& rep,
                                 const CycNum& central_scalar) {
  g.validate(rep);
  auto order = central_scalar.root_of_unity_order();
  if (!order) {
    throw SchemaError("factor_one_dim_twist: central scalar must be a root "
                      "of unity");
  }
  long r = *order;
  long e = -1;
  for (long cand = 0; cand < r; ++cand) {
    if (gcd_l(cand, r) != 1 && cand != 0) continue;
    if (central_scalar == zeta(r, cand)) {
      e = cand;
      break;
    }
  }
  if (e < 0) throw std::logic_error("root-of-unity exponent not found");
  long s = g.s();
  OneDimTwist out;
  out.phi_c = zeta(r * s, e);
  out.rep0 = rep;
  // absorb the twist into the descriptor when it factors through H
  long rs = r * s;
  long v0 = mod_pos(e * rep.x, rs);  // phi(c)^x = zeta_rs^{v0}
  long q2 = 2 * s / rep.x;
  if (mod_pos(2 * s * e, rs) == 0 &&
      (static_cast<long long>(v0) * q2) % rs == 0) {
    long u = static_cast<long>((static_cast<long long>(v0) * q2) / rs);
    out.rep0.w = mod_pos(rep.w - u, q2);
  }
  return out;
}

}  // namespace rootnum
