#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matfac/poly_matrix.hpp"

namespace mfac {

// A d-fold matrix factorization (phi_1, ..., phi_{d-1}, phi_0) of f, with
// phi_k : X_k -> X_{k-1} and indices taken mod d. Shapes are checked on
// construction; the cyclic product identity is checked by validate().
class MatFac {
 public:
  // maps in tuple order (phi_1, ..., phi_{d-1}, phi_0)
  MatFac(Ring ring, int d, Polynomial f, const std::vector<PolyMatrix>& maps);
  // maps[k] = phi_k, k = 0..d-1
  static MatFac from_indexed(Ring ring, int d, Polynomial f, std::vector<PolyMatrix> by_index);

  const Ring& ring() const { return ring_; }
  int d() const { return d_; }
  std::size_t rank() const { return rank_; }
  const Polynomial& f() const { return f_; }
  const PolyMatrix& phi(long k) const { return maps_[index(k)]; }
  const std::vector<PolyMatrix>& by_index() const { return maps_; }
  std::vector<PolyMatrix> tuple() const;
  std::size_t index(long k) const { return static_cast<std::size_t>(((k % d_) + d_) % d_); }

  bool operator==(const MatFac& o) const;
  bool operator!=(const MatFac& o) const { return !(*this == o); }

 private:
  MatFac(Ring ring, int d, Polynomial f, std::vector<PolyMatrix> by_index, bool);
  Ring ring_;
  int d_;
  std::size_t rank_;
  Polynomial f_;
  std::vector<PolyMatrix> maps_;
};

struct ValidationReport {
  // holds[k]: phi_k phi_{k+1} ... phi_{k-1} == f I (modulo degree precision
  // when set)
  std::vector<bool> holds;
  std::optional<unsigned> precision;
  bool pass = false;
  std::vector<int> failing() const;
};

ValidationReport validate(const MatFac& x);
// Identities checked on terms of total degree < n only.
ValidationReport validate_mod(const MatFac& x, unsigned n);

// Product phi_k phi_{k+1} ... phi_{k+len-1}.
PolyMatrix cyclic_product(const MatFac& x, long k, int len);

MatFac shift(const MatFac& x, long i);
MatFac direct_sum(const MatFac& a, const MatFac& b);
MatFac zero_factorization(const Ring& ring, int d, const Polynomial& f);
bool is_reduced(const MatFac& x);
MatFac projective(const Ring& ring, int d, const Polynomial& f, int i);
MatFac reduce_mod_vars(const MatFac& x, const std::vector<std::string>& kill);
// Every map multiplied by the scalar c.
MatFac scale_all(const MatFac& x, const CycloElem& c);

struct PresentationMatrix {
  PolyMatrix matrix;
  Polynomial f;
  long start = 1;
  int length = 1;
};

PresentationMatrix cokernel_presentation(const MatFac& x, long k, int len);

// Variables occurring in any map.
std::vector<bool> support(const MatFac& x);
// 1 + the largest total degree of any entry among the given factorizations.
unsigned default_precision(const std::vector<const MatFac*>& xs);

// A d-tuple (alpha_0, ..., alpha_{d-1}) with alpha_k : X_k -> X'_k.
class Morphism {
 public:
  Morphism(MatFac source, MatFac target, std::vector<PolyMatrix> comps);

  const MatFac& source() const { return source_; }
  const MatFac& target() const { return target_; }
  const PolyMatrix& comp(long k) const { return comps_[source_.index(k)]; }
  const std::vector<PolyMatrix>& comps() const { return comps_; }
  int d() const { return source_.d(); }

  bool operator==(const Morphism& o) const;

 private:
  MatFac source_;
  MatFac target_;
  std::vector<PolyMatrix> comps_;
};

// (cX, witness cX -> X) where cX = (c_1 phi_1, ..., c_0 phi_0); units given
// in tuple order (c_1, ..., c_{d-1}, c_0).
struct Scaled {
  MatFac scaled;
  Morphism witness;
};
Scaled scale_by_units(const MatFac& x, const std::vector<CycloElem>& units);

}  // namespace mfac
