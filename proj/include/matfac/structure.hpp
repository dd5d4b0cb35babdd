#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matfac/tensor.hpp"

namespace mfac {

enum class Side { left, right };

// Names of the variables some entry of X uses.
std::vector<std::string> support_vars(const MatFac& x);
bool disjoint_support(const MatFac& x, const MatFac& y);

// (+)_{i=1}^d (zeta^{e (i-1)} T^{1-i} W)^r, summands in order i = 1..d.
MatFac twisted_shift_sum(const MatFac& w, std::size_t r, long e, const CycloElem& zeta);

struct ReductionWitness {
  MatFac reduced;           // (X (x) Y) with the killed variables set to 0
  MatFac target;            // the displayed sum, with zeta twists
  Morphism witness;         // reduced -> target
  MatFac plain;             // the same sum without twists
  Morphism plain_witness;   // reduced -> plain
  bool literal = false;     // reduced == target as data
  bool verified = false;
};

// left: kill the variables of X (X reduced), target (+)(zeta^{i-1} T^{1-i} Y)^n.
// right: kill the variables of Y (Y reduced), target (+)(zeta^{1-i} T^{1-i} X)^m.
ReductionWitness reduce_tensor_witness(const MatFac& x, const MatFac& y, Side side,
                                       const CycloElem& zeta);

// blocks[i-1][j-1] is the (i, j) morphism of the reduced morphism.
struct BlockMorphisms {
  std::vector<std::vector<Morphism>> blocks;
  bool all_morphisms = false;
  bool reassembles = false;  // blocks put back together give the reduced morphism
};

// a : X (x) Y -> X (x) Y2 with X reduced; block (i, j) has components
// a_k(i, j) with the variables of X killed.
BlockMorphisms reduce_morphism_blocks_x(const Morphism& a, const MatFac& x, const MatFac& y,
                                        const MatFac& y2, const CycloElem& zeta);
// b : X (x) Y -> X2 (x) Y with Y reduced; block (i, j) has components
// b_k(2-i+k, 2-j+k) with the variables of Y killed, regrouped so the copy
// index of (T^{1-j} X)^m is slower.
BlockMorphisms reduce_morphism_blocks_y(const Morphism& b, const MatFac& x, const MatFac& x2,
                                        const MatFac& y, const CycloElem& zeta);

struct DecompBound {
  std::size_t n = 0, m = 0;
  int d = 2;
  std::size_t r = 0;  // gcd(n, m)
  std::size_t bound = 0;
  bool asymmetric = false;  // both shift-asymmetry hypotheses certified
  std::size_t min_summand_rank = 0;
  std::string basis;
};
DecompBound summand_bound(std::size_t n, std::size_t m, int d, bool x_asymmetric, bool y_asymmetric);

struct ShiftRefutation {
  int shift = 0;
  bool refuted = false;  // no invertible jet morphism X -> T^i X
};
std::vector<ShiftRefutation> jet_refute_shift_iso(const MatFac& x, unsigned n = 1);
// Sound refutation of X = Y through the jet hom space at precision n.
IsoSearch refute_isomorphism(const MatFac& x, const MatFac& y, unsigned n = 1);

struct StrongIndCert {
  enum class Kind { axiom, propagation };
  Kind kind = Kind::axiom;
  MatFac subject;
  std::vector<Polynomial> entries;  // axiom: the d coprime monomials
  std::shared_ptr<const StrongIndCert> left, right;
  std::vector<std::string> left_vars, right_vars;
  std::optional<CycloElem> zeta;
};

struct CertOutcome {
  std::optional<StrongIndCert> cert;
  std::string refusal;
};

// Rank 1, reduced, monomial entries (HypothesisError / Undecidable
// otherwise). Pairwise coprime entries give a certificate; shared factors
// give a refusal.
CertOutcome coprime_rank_one_cert(const MatFac& x);
StrongIndCert propagate_strong_ind(const StrongIndCert& cx, const StrongIndCert& cy,
                                   const CycloElem& zeta);
// Re-checks every recorded hypothesis down the certificate tree.
bool check_certificate(const StrongIndCert& c);

struct Claim {
  std::string name;
  std::string statement;
  std::string citation;
};
std::vector<Claim> strong_ind_consequences(const StrongIndCert& c);

struct SpotCheck {
  unsigned precision = 1;
  bool endomorphisms_scalar = false;  // every self-map is a common scalar at the origin
  bool cross_shifts_vanish = false;   // every X -> T^i X, i != 0, vanishes at the origin
  bool pass() const { return endomorphisms_scalar && cross_shifts_vanish; }
};
// Constant-term shadow of strong indecomposability; n = 0 picks a jet
// order that reaches every entry degree.
SpotCheck certificate_spot_check(const MatFac& x, unsigned n = 0);

struct IndecompReport {
  bool accepted = false;
  std::vector<std::string> hypotheses;
  std::string refusal;
  Claim claim;
};
// X rank-1 with pairwise coprime monomial entries, Y with an isomorphism
// Y -> TY (either direction accepted).
IndecompReport coprime_symmetric_indecomposable(const MatFac& x, const MatFac& y,
                                                const Morphism& shift_iso, const CycloElem& zeta);
// Y rank 1, T^i X not isomorphic to X for i != 0 (refuted through jets at
// precision n).
IndecompReport rank_one_asymmetric_indecomposable(const MatFac& x, const MatFac& y,
                                                  const CycloElem& zeta, unsigned n = 1);

}  // namespace mfac
