#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootnum/uniformization.hpp"
#include "rootnum/wd_algebra.hpp"

namespace rootnum {

/// A sign in {+1, -1}, closed under multiplication.
class Sign {
 public:
  Sign() = default;
  explicit Sign(int v) : v_(v) {
    if (v != 1 && v != -1) throw std::invalid_argument("Sign must be +-1");
  }
  int value() const { return v_; }
  bool positive() const { return v_ == 1; }
  friend Sign operator*(Sign a, Sign b) { return Sign(a.v_ * b.v_); }
  Sign& operator*=(Sign o) { v_ *= o.v_; return *this; }
  friend bool operator==(Sign a, Sign b) { return a.v_ == b.v_; }
  /// this^e (only the parity of e matters).
  Sign pow(const BigInt& e) const {
    return (v_ == 1 || e % 2 == 0) ? Sign(1) : Sign(-1);
  }
  std::string str() const { return v_ == 1 ? "+1" : "-1"; }

 private:
  int v_ = 1;
};

/// (-1)^e.
inline Sign parity_sign(const BigInt& e) { return Sign(-1).pow(e); }

/// Local datum for the twisting representation: the finite model of the
/// decomposition-group quotient, the (possibly reducible) restriction, and
/// the reciprocity image of -1. The character is required real-valued.
struct TauData {
  GroupPtr group;
  VirtualChar rep;
  GroupElement artin_minus_one;
  bool artin_defaulted = false;  // identity default, flagged in traces
};

TauData make_tau(GroupPtr group, VirtualChar rep,
                 std::optional<GroupElement> artin_minus_one);

struct TauHypothesisReport {
  bool dim_even = false;
  bool det_trivial = false;
  bool constituents_quaternionic = false;
  bool char_rational = false;
  bool pass() const {
    return dim_even && det_trivial && constituents_quaternionic &&
           char_rational;
  }
  std::string first_failure() const;
};

/// The operational surrogate for the Schur-index hypothesis: dimension even,
/// trivial determinant, Frobenius-Schur indicator -1 on every irreducible
/// constituent, rational character values.
TauHypothesisReport tau_hypothesis_check(const TauData& tau);

struct TraceFactor {
  std::string name;
  BigInt exponent;
  Sign value;  // the factor's contribution, base^exponent
};

struct SignTrace {
  std::string place;
  std::string branch;
  std::vector<TraceFactor> factors;
  Sign sign;
  std::vector<std::string> warnings;
};

/// (-1)^{g dim tau} at an infinite place.
Sign w_archimedean(long genus, long dim_tau);

/// W(chi (x) omega^{-1} (x) sp(2) (x) tau)
///   = det tau(-1)^r * det chi(-1)^{dim tau} * (-1)^{<chi, tau>}.
Sign w_sp2_twist(const VirtualChar& chi, const TauData& tau, long r,
                 SignTrace* trace = nullptr);

/// Two-dimensional symplectic case:
///   W = det tau(-1) * alpha^{dim tau}
///       * (-1)^{<1,tau> + <eta,tau> + <hat(lam),tau>}.
Sign w_rohrlich2(const GroupPtr& group, const IrrepDescriptor& lam,
                 const TauData& tau, Sign alpha, SignTrace* trace = nullptr);

/// Good-reduction formula over a Grothendieck ledger:
///   W(kappa (x) tau) = det mu(-1)^{dim tau} * det tau(-1)^{l1}
///                      * alpha^{dim tau} * (-1)^{l2},
/// l1 = dim mu + (dim mu_1 + ... + dim mu_a)/2,
/// l2 = a(<1,tau> + <eta,tau> + <hat mu_1 (+) ... (+) hat mu_a, tau>).
Sign w_good_reduction(const GrothendieckLedger& ledger, const TauData& tau,
                      const std::vector<Sign>& alpha_list,
                      SignTrace* trace = nullptr);

struct LocalPlace {
  enum class Kind { Real, Complex, Finite };
  Kind kind = Kind::Complex;
  std::string id;
  long p = 0;
  long genus = 1;
  UniformizationInput unif;
  TauData tau;
  std::optional<GrothendieckLedger> ledger;
  std::vector<Sign> alpha_list;
  bool abelian_decomposition = false;
};

/// Per-place evaluation with branch selection: archimedean places use the
/// parity formula; finite places with p > 2g+1 multiply the good-reduction
/// and sp(2)-twist factors; finite places with p <= 2g+1 require the
/// symplectic hypotheses (the tensor of two symplectic representations has
/// root number one) and keep only the sp(2)-twist factor.
std::pair<Sign, SignTrace> w_local(const LocalPlace& place);

struct ParityEntry {
  std::string name;
  BigInt pairing;
  bool even = false;
};

std::vector<ParityEntry> parity_audit(
    const TauData& tau,
    const std::vector<std::pair<std::string, VirtualChar>>& chars);

std::pair<Sign, std::vector<SignTrace>> w_global(
    const std::vector<LocalPlace>& places);

struct Verdict {
  bool proven = false;
  Sign sign;
  std::string failed_condition;  // empty when proven
  std::vector<SignTrace> traces;
  std::string note;
};

/// Full hypothesis gate: returns Proven(+1) with traces when every
/// hypothesis holds and every local sign is +1; otherwise HypothesisFailed
/// with the first violated condition.
Verdict theorem_gate(const std::vector<LocalPlace>& places,
                     const TauData& tau);

/// The unramified quadratic character in tau's group, squaring to trivial.
VirtualChar place_eta(const TauData& tau);

}  // namespace rootnum
