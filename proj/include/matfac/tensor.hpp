#pragma once

#include <vector>

#include "matfac/morphism.hpp"

namespace mfac {

// Position of x_a (x) y_b inside (X (x) Y)_k where x_a lies in X_{j-1}:
// blocks j = 1..d, X index slower than Y index.
std::size_t tensor_index(std::size_t n, std::size_t m, int j, std::size_t a, std::size_t b);

// The zeta-twisted tensor product, a factorization of f + g of rank d n m.
// Block (i, i) of Phi_k is zeta^{i-1} (1 (x) psi_{k+1-i}), block (i, i+1) is
// phi_i (x) 1.
MatFac tensor(const MatFac& x, const MatFac& y, const CycloElem& zeta);

Morphism tensor_left(const Morphism& a, const MatFac& y, const CycloElem& zeta);
Morphism tensor_right(const MatFac& x, const Morphism& b, const CycloElem& zeta);

// X (x)_zeta Y -> Y (x)_{zeta^-1} X, x (x) y -> zeta^{|x||y|} y (x) x.
Morphism swap_witness(const MatFac& x, const MatFac& y, const CycloElem& zeta);
// TX (x) Y -> T(X (x) Y), x (x) y -> zeta^{-|y|} x (x) y.
Morphism shift_witness(const MatFac& x, const MatFac& y, const CycloElem& zeta);
// (X (+) X2) (x) Y -> (X (x) Y) (+) (X2 (x) Y).
Morphism distribute_witness(const MatFac& x, const MatFac& x2, const MatFac& y,
                            const CycloElem& zeta);

struct AssocReport {
  bool equal = false;
  // perm[k][r] = position in ((X (x) Y) (x) Z)_k of the r-th basis element
  // of (X (x) (Y (x) Z))_k.
  std::vector<std::vector<std::size_t>> perm;
};
AssocReport assoc_check(const MatFac& x, const MatFac& y, const MatFac& z, const CycloElem& zeta);

struct DetReport {
  Polynomial expected;
  std::vector<Polynomial> dets;
  std::vector<bool> holds;
  bool pass = false;
};
// det Phi_k against (-1)^{nm(d+1)} (f + g)^{nm}.
DetReport det_check(const MatFac& x, const MatFac& y, const CycloElem& zeta);

// Shifts i (one per rank-1 summand) when P is a direct sum of the
// generators T^i(f, 1, ..., 1) in diagonal form. Throws HypothesisError
// otherwise.
std::vector<int> projective_shifts(const MatFac& p);
MatFac projective_sum(const Ring& ring, int d, const Polynomial& f, const std::vector<int>& shifts);

struct ProjectiveTensorReport {
  std::vector<int> shifts;  // in the order the summands were split off
  MatFac sum;               // the direct sum of generators
  Morphism witness;         // sum -> P (x) Y
  unsigned precision = 0;   // 0: exact
  bool verified = false;
};
ProjectiveTensorReport is_projective_tensor(const MatFac& p, const MatFac& y,
                                            const CycloElem& zeta, unsigned n = 0);

void require_primitive(const CycloElem& zeta, int d);

}  // namespace mfac
