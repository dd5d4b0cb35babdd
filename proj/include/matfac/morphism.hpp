#pragma once

#include <optional>
#include <vector>

#include "matfac/linalg.hpp"
#include "matfac/matfac.hpp"

namespace mfac {

// alpha_{k-1} phi_k == phi'_k alpha_k for every k.
bool is_morphism(const Morphism& a);
// Same identities compared on terms of total degree < n.
bool is_morphism_mod(const Morphism& a, unsigned n);
// Indices k where the identity fails (exactly).
std::vector<int> morphism_failures(const Morphism& a);

Morphism identity(const MatFac& x);
Morphism zero_morphism(const MatFac& source, const MatFac& target);
Morphism scalar_morphism(const MatFac& x, const CycloElem& c);
// a o b (apply b first).
Morphism compose(const Morphism& a, const Morphism& b);
Morphism add(const Morphism& a, const Morphism& b);
Morphism direct_sum(const Morphism& a, const Morphism& b);
// T^i applied to a morphism: components alpha_{k+i}.
Morphism shift(const Morphism& a, long i);

// Every component square with a determinant that is a unit at the origin.
bool is_isomorphism(const Morphism& a);
// Inverse witness; exact when every component has constant determinant,
// otherwise correct modulo total degree n. Returns the precision used
// (0 for exact) through `precision`.
Morphism inverse_witness(const Morphism& a, unsigned n, unsigned* precision = nullptr);

struct JetHomBasis {
  unsigned precision = 1;
  // Intertwining identities are imposed on all monomials of total degree
  // below this bound: precision + least order of a nonzero entry.
  unsigned equation_degree = 1;
  // basis[b][k] is the k-th component of the b-th solution.
  std::vector<std::vector<PolyMatrix>> basis;
};

JetHomBasis hom_space_jets(const MatFac& x, const MatFac& y, unsigned precision);

// Whether the truncation of comps lies in the span of the basis.
bool in_span(const JetHomBasis& hom, const std::vector<PolyMatrix>& comps);

enum class IsoVerdict { refuted, candidate };

struct IsoSearch {
  IsoVerdict verdict = IsoVerdict::refuted;
  // For refutations: the component whose determinant vanishes identically
  // on the solution space (-1 when ranks differ or the space is zero).
  int obstruction = -1;
  // For candidates: constant parts of a solution with all components
  // invertible, when one was found.
  std::optional<std::vector<FieldMatrix>> witness;
};

// Decides whether some element of the jet hom space has every component
// invertible at the origin. Refutation is sound for non-isomorphism.
IsoSearch search_isomorphism(const JetHomBasis& hom, std::size_t source_rank,
                             std::size_t target_rank, const CycloField& field);

struct Conjugated {
  Morphism morphism;       // Y -> Y'
  Morphism source_change;  // X -> Y
  Morphism target_change;  // X' -> Y'
  unsigned precision = 0;  // 0: exact
};

// Replaces alpha_k with A alpha_k B and adjusts source (phi_k B,
// B^{-1} phi_{k+1}) and target (phi'_k A^{-1}, A phi'_{k+1}).
Conjugated conjugate_component(const Morphism& a, long k, const PolyMatrix& A,
                               const PolyMatrix& B, unsigned n);

struct Splitting {
  std::size_t rank = 0;
  MatFac image;
  MatFac complement;
  Morphism witness;  // image (+) complement -> X
  unsigned precision = 0;  // 0: exact
  bool off_diagonal_vanishes = false;
};

// Splits X along per-component bases: image_basis[k] is n x r,
// complement_basis[k] is n x (n - r), jointly invertible at the origin.
Splitting split_along(const MatFac& x, const std::vector<PolyMatrix>& image_basis,
                      const std::vector<PolyMatrix>& complement_basis, unsigned n);

Splitting split_idempotent(const MatFac& x, const Morphism& e, unsigned n);

}  // namespace mfac
