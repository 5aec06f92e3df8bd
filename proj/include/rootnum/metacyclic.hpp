#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rootnum/cyclotomic.hpp"
#include "rootnum/errors.hpp"

namespace rootnum {

/// Element of H written in the normal form b^t c^v, with t mod n and
/// v mod 2s. Multiplication twists the b-exponent by k^{-v1}:
///   (b^t1 c^v1)(b^t2 c^v2) = b^{t1 + t2 k^{-v1} mod n} c^{v1+v2 mod 2s}.
struct GroupElement {
  long t = 0;
  long v = 0;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  auto operator<=>(const GroupElement&) const = default;
};

/// Label of one irreducible representation of H, induced from the character
/// psi1 (x) psi2 of B x Gamma with Gamma = (c^x):
///   d  — order of xi = psi1(b), a divisor of n
///   e  — exponent with xi = zeta_n^e, the minimal exponent of order d in
///        its orbit under e -> k e (mod n)
///   x  — order of k mod d; equals the dimension
///   w  — psi2(c^x) = zeta_{2s/x}^w, 0 <= w < 2s/x
struct IrrepDescriptor {
  long d = 1;
  long e = 0;
  long x = 1;
  long w = 0;
  friend bool operator==(const IrrepDescriptor&,
                         const IrrepDescriptor&) = default;
  auto operator<=>(const IrrepDescriptor&) const = default;
};

/// The finite metacyclic model H = B x| C/(c^{2s}) with presentation
/// <b, c | b^n = 1, c^{2s} = 1, c^{-1} b c = b^k>, where s is the
/// multiplicative order of k mod n. Immutable after construction; all
/// caches are built eagerly so instances can be shared across threads.
class MetacyclicGroup {
 public:
  MetacyclicGroup(long n, long k);  // throws NotAUnit

  long n() const { return n_; }
  long k() const { return k_; }
  long s() const { return s_; }
  long order() const { return 2 * s_ * n_; }
  bool abelian() const { return n_ == 1 || k_ == 1; }

  long k_pow(long j) const;      // k^j mod n for any integer j
  long k_pow_mod(long j, long mod) const;  // k^j mod `mod`, mod | n
  long ord_k_mod(long d) const;  // order of k in (Z/dZ)^x, d | n

  GroupElement identity() const { return {0, 0}; }
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;
  GroupElement normalized(long t, long v) const;

  /// Conjugacy classes; each class lists its elements, the first entry is
  /// the representative.
  const std::vector<std::vector<GroupElement>>& conjugacy_classes() const {
    return classes_;
  }

  /// Canonical orbit representative of e under e -> k e (mod n).
  long orbit_rep(long e) const;

  const std::vector<IrrepDescriptor>& irreducibles() const { return irreps_; }
  void validate(const IrrepDescriptor& rep) const;  // throws SchemaError

  bool same_group(const MetacyclicGroup& o) const {
    return n_ == o.n_ && k_ == o.k_;
  }

 private:
  long n_, k_, s_;
  std::vector<long> k_powers_;  // k^j mod n, 0 <= j < s
  std::vector<std::vector<GroupElement>> classes_;
  std::vector<IrrepDescriptor> irreps_;
};

using GroupPtr = std::shared_ptr<const MetacyclicGroup>;

GroupPtr group_new(long n, long k);

/// Formal integer combination of irreducibles of one group.
struct VirtualChar {
  GroupPtr group;
  std::map<IrrepDescriptor, long> terms;

  long dim() const;
  bool is_true_character() const;  // all multiplicities >= 0
  friend bool operator==(const VirtualChar& a, const VirtualChar& b);
};

VirtualChar virtual_char(GroupPtr g,
                         std::vector<std::pair<IrrepDescriptor, long>> terms);
VirtualChar trivial_char(GroupPtr g);
/// The unramified quadratic character: b -> 1, c -> -1.
VirtualChar eta_char(GroupPtr g);

// --- character machinery ----------------------------------------------------

/// chi(b^t c^v) = 0 when x does not divide v, else
/// zeta_{2s/x}^{w v / x} * sum_j zeta_d^{e' t k^j}.
CycNum character_value(const MetacyclicGroup& g, const IrrepDescriptor& rep,
                       const GroupElement& el);

CycNum virtual_char_value(const VirtualChar& vc, const GroupElement& el);

/// Frobenius-Schur indicator (1/|H|) sum_{y in H} chi(y^2), evaluated by the
/// full O(|H|) summation in exact arithmetic. This is the oracle against
/// which the symplectic classification is tested.
int fs_indicator(const MetacyclicGroup& g, const IrrepDescriptor& rep);

/// The closed-form classification: symplectic iff d not in {1,2}, x even,
/// psi2(c^x) = -1, and 1 + k^{x/2} = 0 (mod d).
bool is_symplectic_by_criterion(const MetacyclicGroup& g,
                                const IrrepDescriptor& rep);

/// Companion representation with psi2 multiplied by the order-2 character of
/// Gamma; realizable over R while the input is symplectic.
IrrepDescriptor hat_rep(const MetacyclicGroup& g, const IrrepDescriptor& rep);

/// Contragredient: xi -> xi^{-1}, psi2 -> psi2^{-1}.
IrrepDescriptor dual_rep(const MetacyclicGroup& g, const IrrepDescriptor& rep);

/// Theta(r): sum over <k>-orbit representatives of the primitive r-th roots
/// of unity of the induced representation with trivial psi2. All character
/// values are rational; the characteristic polynomial at b is Phi_r.
VirtualChar theta_rep(GroupPtr g, long r);

/// Induced character of the trivial representation of (b^d) x| C; decomposed
/// into irreducibles via Frobenius reciprocity.
VirtualChar pi_rep(GroupPtr g, long d);

/// (1/|H|) sum_g chi_a(g) conj(chi_b(g)), an exact integer.
BigInt inner_product(const VirtualChar& a, const VirtualChar& b);
long inner_product_irreps(const MetacyclicGroup& g, const IrrepDescriptor& a,
                          const IrrepDescriptor& b);

/// Determinant of the monomial matrix of rep at el: the product of its
/// nonzero entries times the sign of the underlying permutation.
CycNum det_character_value(const MetacyclicGroup& g,
                           const IrrepDescriptor& rep,
                           const GroupElement& el);

CycNum det_virtual_char_value(const VirtualChar& vc, const GroupElement& el);

/// Characteristic polynomial of the (virtual) value at b; defined when all
/// coefficients come out rational integers (true for Theta sums).
IntPoly char_poly_at_b(const VirtualChar& vc);

bool has_rational_character(const VirtualChar& vc);

/// Monomial matrix model of an irreducible at one element, for matrix-level
/// cross-checks: entry(i) sits in row perm[i], column i, with value
/// zeta_M^{entry_exp[i]} at the stated conductor.
struct MonomialMatrix {
  long dim = 1;
  long conductor = 1;
  std::vector<long> perm;
  std::vector<long> entry_exp;
  CycNum trace() const;
  CycNum det() const;
  friend MonomialMatrix operator*(const MonomialMatrix& a,
                                  const MonomialMatrix& b);
};

MonomialMatrix monomial_matrix(const MetacyclicGroup& g,
                               const IrrepDescriptor& rep,
                               const GroupElement& el);

/// Factors a representation of the infinite group B x| C as lambda0 (x) phi
/// with lambda0 trivial on c^s and phi one-dimensional, phi(b) = 1 and
/// phi(c)^s equal to the supplied central scalar. phi(c) is the canonical
/// s-th root (smallest nonnegative exponent); the twist is absorbed into the
/// descriptor exactly when it factors through H.
struct OneDimTwist {
  IrrepDescriptor rep0;
  CycNum phi_c;
};
OneDimTwist factor_one_dim_twist(const MetacyclicGroup& g,
                                 const IrrepDescriptor& rep,
                                 const CycNum& central_scalar);

}  // namespace rootnum
