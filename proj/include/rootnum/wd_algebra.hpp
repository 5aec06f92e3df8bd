#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "rootnum/metacyclic.hpp"
#include "rootnum/rational.hpp"

namespace rootnum {

/// The two distinguished unramified one-dimensional labels: the trivial
/// character and the unramified quadratic character eta. They carry no group
/// reference; eta is group-independent as a Weil character.
enum class UnramLabel { One, Eta };

/// Irreducible building block of a Weil representation: a finite part (an
/// irreducible of a metacyclic model, or an unramified label) tensored with
/// omega^t for a rational exponent t. omega is the unramified character with
/// omega(Phi) = q^{-1}, so the Frobenius weight of the block is -t.
///
/// Finite parts that are the trivial or quadratic unramified character of
/// their group are normalized to the group-free labels, so block multisets
/// compare across constructions.
class WeilIrred {
 public:
  static WeilIrred unramified(UnramLabel label, const Rat& omega_t = Rat(0));
  static WeilIrred finite(GroupPtr group, const IrrepDescriptor& rep,
                          const Rat& omega_t = Rat(0));

  bool is_label() const { return !group_; }
  UnramLabel label() const { return label_; }
  const GroupPtr& group() const { return group_; }
  const IrrepDescriptor& rep() const { return rep_; }
  const Rat& omega_t() const { return omega_t_; }
  Rat weight() const { return -omega_t_; }

  long dim() const { return is_label() ? 1 : rep_.x; }
  WeilIrred dual() const;
  WeilIrred twisted(const Rat& t) const;
  bool self_dual() const { return dual() == *this; }

  /// Frobenius-Schur indicator of the finite part. Only defined for blocks
  /// with omega_t = 0 (finite image).
  int indicator() const;
  bool symplectic() const;  // finite image and indicator -1 classification

  friend bool operator==(const WeilIrred& a, const WeilIrred& b);
  friend bool operator<(const WeilIrred& a, const WeilIrred& b);

  std::string str() const;

 private:
  WeilIrred() = default;
  GroupPtr group_;           // null for labels
  IrrepDescriptor rep_;      // meaningful iff group_
  UnramLabel label_ = UnramLabel::One;
  Rat omega_t_;
};

enum class Form { Orthogonal, Symplectic, Unitary };

std::string form_name(Form f);

/// Formal admissible Weil-Deligne representation: a multiset of blocks
/// (pi, n) standing for pi (x) sp(n). The nilpotent part is implicit in the
/// sp labels. A plain Weil representation is the special case with all
/// n = 1.
class WDRep {
 public:
  struct Block {
    WeilIrred irred;
    long sp_n = 1;
    friend bool operator==(const Block& a, const Block& b) {
      return a.sp_n == b.sp_n && a.irred == b.irred;
    }
    friend bool operator<(const Block& a, const Block& b) {
      if (a.sp_n != b.sp_n) return a.sp_n < b.sp_n;
      return a.irred < b.irred;
    }
  };

  WDRep() = default;

  static WDRep zero() { return WDRep(); }
  /// The special representation sp(n) (trivial finite part).
  static WDRep sp(long n);
  static WDRep single(WeilIrred irred, long sp_n = 1, long mult = 1);

  const std::map<Block, long>& blocks() const { return blocks_; }
  bool empty() const { return blocks_.empty(); }
  long dim() const;
  long nilpotent_rank() const;
  bool is_weil() const;  // all blocks have sp_n == 1

  void add(const WeilIrred& irred, long sp_n, long mult);
  friend WDRep direct_sum(const WDRep& a, const WDRep& b);
  friend bool operator==(const WDRep& a, const WDRep& b) {
    return a.blocks_ == b.blocks_;
  }

  WDRep twist_omega(const Rat& t) const;
  WDRep dual() const;

  /// The group shared by the finite parts, null when all blocks are labels.
  GroupPtr common_group() const;

  std::string str() const;

 private:
  std::map<Block, long> blocks_;
};

using WeilRep = WDRep;

WDRep sp(long n);
WDRep direct_sum(const WDRep& a, const WDRep& b);
WDRep twist_omega(const WDRep& a, const Rat& t);
WDRep dual(const WDRep& a);

/// Explicit matrix model of sp(n) for matrix-level tests: sigma(Phi) is
/// diagonal with the listed omega-exponents, N is the shift nilpotent.
struct SpMatrixModel {
  std::vector<Rat> omega_exponents;        // exponent on each basis vector
  std::vector<std::vector<long>> nilpotent;  // N[i][j]
};
SpMatrixModel sp_matrix_model(long n);

/// Witness for form feasibility: how the multiset was grouped.
struct FormWitness {
  bool feasible = false;
  // irreducibles carrying the form themselves (with multiplicity)
  std::vector<std::pair<WeilIrred, long>> self_blocks;
  // hyperbolic pairs (pi, pi~) with the shared multiplicity
  std::vector<std::pair<WeilIrred, long>> paired_blocks;
  std::vector<std::string> violations;
};

/// Decides whether a semisimple Weil representation admits a nondegenerate
/// invariant form of the given kind, by the grouping nu + nu~ + (irreducibles
/// of matching type).
FormWitness form_feasibility(const WDRep& a, Form form);

/// Blockwise feasibility for a Weil-Deligne representation: blocks grouped
/// by n, each group recentered by the half-sum of the duality twist and
/// checked with the form parity flipped on even n (the sp factor itself is
/// symplectic for even n, orthogonal for odd n).
bool admissible_form_check(const WDRep& a, Form form);

enum class CaseTag { Case1, Case2, Mixed };

std::string case_tag_name(CaseTag t);

/// Constructive decomposition [lambda] = [mu] + [mu*] + 2([mu0] - [mu0'])
/// + [mu_1] + ... + [mu_a] of a symplectic-feasible Weil representation
/// whose restriction to B has Q-valued character.
struct GrothendieckLedger {
  GroupPtr group;
  WDRep mu;
  WDRep mu0;
  WDRep mu0p;
  std::vector<WeilIrred> mu_list;   // symplectic irreducibles, with repetition
  std::vector<WeilIrred> hat_list;  // their hats
  CaseTag tag = CaseTag::Case1;
};

GrothendieckLedger grothendieck_decompose(GroupPtr group, const WDRep& lambda);

/// [mu] + [mu*] + 2([mu0] - [mu0p]) + sum [mu_i], as a formal combination.
std::map<WeilIrred, long> ledger_recombine_formal(
    const GrothendieckLedger& ledger);

/// Same, converted to a virtual character of the ledger group. Requires all
/// entries to have omega_t = 0.
VirtualChar ledger_recombine(const GrothendieckLedger& ledger);

/// View of a twist-free Weil representation as a virtual character.
VirtualChar wdrep_to_virtual_char(const WDRep& a, GroupPtr fallback_group);

/// Descriptor form of a group-free label inside a concrete group.
IrrepDescriptor label_descriptor(const MetacyclicGroup& g, UnramLabel label);

}  // namespace rootnum
