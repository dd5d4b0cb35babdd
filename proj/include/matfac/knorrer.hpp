#pragma once

#include <vector>

#include "matfac/tensor.hpp"

namespace mfac {

struct OmegaContext {
  int d = 2;
  CycloElem omega;  // primitive 2d-th root
  CycloElem zeta;   // omega^2
  CycloElem inv_d;
};

// omega must satisfy omega^d = -1 and be a primitive 2d-th root.
OmegaContext make_context(const CycloElem& omega, int d);
// Odd d only: omega = -zeta.
OmegaContext context_from_zeta(const CycloElem& zeta, int d);

// p(m) = -m^2 + d m
long quadratic_exponent(int d, long m);

struct RootSum {
  CycloElem value;    // sum_j omega^{-j^2 + t j}
  CycloElem partner;  // sum_l omega^{l^2 - t l}
  bool product_is_d = false;
};
// Requires t + d even.
RootSum root_sum(const OmegaContext& ctx, long t);

// alpha_k(i, j) = omega^{p(j - i - k)}, i, j = 1..d.
FieldMatrix alpha_matrix(const OmegaContext& ctx, long k);
// The d factors of the circulant determinant of alpha_k, s = 1..d.
std::vector<CycloElem> alpha_determinant_factors(const OmegaContext& ctx, long k);

struct BlockDiagonalization {
  PolyMatrix phi;                   // the cyclic block matrix built from A and B
  std::vector<PolyMatrix> alphas;   // alpha_k (x) 1, k = 0..d-1
  std::vector<PolyMatrix> targets;  // diag(A - omega^{2k+2(i-1)-1} B)
  std::vector<bool> holds;          // alpha_{k-1} phi == target_k alpha_k
  bool pass = false;
};
BlockDiagonalization block_diagonalize(const OmegaContext& ctx, const PolyMatrix& a,
                                       const PolyMatrix& b);

struct SymmetricDecomposition {
  MatFac z;          // factorization of f + g
  MatFac sum;        // Z (+) TZ (+) ... (+) T^{d-1} Z
  MatFac tensor;     // X (x) Y at zeta = omega^2
  Morphism witness;  // tensor -> sum
  Morphism inverse;  // sum -> tensor
  bool verified = false;
};
// Requires every map of X equal (TX = X as data), likewise Y.
SymmetricDecomposition decompose_symmetric(const MatFac& x, const MatFac& y,
                                           const OmegaContext& ctx);

// Idempotent endomorphism of the tensor projecting onto the summand
// T^{block} Z of the decomposition.
Morphism knorrer_projection(const SymmetricDecomposition& dec, int block);

}  // namespace mfac
