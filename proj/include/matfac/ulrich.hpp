#pragma once

#include <optional>
#include <vector>

#include "matfac/structure.hpp"

namespace mfac {

// f = sum_i prod_j f_ij, N rows of d factors each. A partition groups each
// row's factors into k consecutive products (sizes per row, all of length k).
struct SumOfProducts {
  Ring ring;
  int d = 2;
  std::vector<std::vector<Polynomial>> factors;
  std::vector<std::vector<int>> partition;  // empty: k = d
  std::optional<Polynomial> target;

  std::size_t terms() const { return factors.size(); }
  int k() const;
  Polynomial sum() const;
  // Row i as a rank-1 factorization with k factors.
  MatFac row(std::size_t i) const;
};

void check_sum_of_products(const SumOfProducts& s);

struct BuildReport {
  MatFac x;
  int k = 2;
  std::size_t expected_rank = 0;
  unsigned expected_det_exponent = 0;  // k^{N-2}
  bool rank_ok = false;
  std::vector<bool> det_ok;
  bool pass = false;
};
BuildReport build_from_sum(const SumOfProducts& s, const CycloElem& zeta);

struct ModuleStats {
  std::size_t mu = 0;
  std::size_t rank_r = 0;
  std::size_t e_r = 0;
  unsigned ord_f = 0;
  bool ulrich = false;
  bool irreducible_asserted = false;
  int det_sign = 1;  // det = det_sign f^{rank_r}
  Rational ratio() const {
    if (e_r == 0) return Rational(0);
    Rational q(static_cast<unsigned long>(mu), static_cast<unsigned long>(e_r));
    q.canonicalize();
    return q;
  }
};

// Statistics of cok(matrix) for a presentation coming from a reduced
// factorization. Throws HypothesisError when the determinant is not a
// signed power of f or irreducibility is not asserted.
ModuleStats presentation_stats(const PresentationMatrix& p, bool irreducible);
// M = cok(phi_1 ... phi_l).
ModuleStats mcm_stats(const MatFac& x, int l, bool irreducible);

struct UlrichBuild {
  BuildReport build;
  PresentationMatrix presentation;
  ModuleStats stats;
  bool guaranteed = false;  // d equals ord(f)
};
UlrichBuild build_ulrich(const SumOfProducts& s, const CycloElem& zeta, bool irreducible);

struct ExtensionReport {
  PresentationMatrix l, m, n;  // cok phi_{k+1}, cok phi_k phi_{k+1}, cok phi_k
  ModuleStats l_stats, m_stats, n_stats;
  bool squares_commute = false;
};
ExtensionReport extension_ses(const MatFac& x, bool irreducible, long k = 1);

struct IndecomposableUlrich {
  BuildReport build;
  StrongIndCert cert;
  PresentationMatrix presentation;
  ModuleStats stats;
  std::vector<Claim> claims;
  std::optional<std::size_t> complexity_bound;  // uc(f) <= d^{N-2} when Ulrich
};
IndecomposableUlrich indecomposable_ulrich(const SumOfProducts& s, const CycloElem& zeta,
                                           bool irreducible);

}  // namespace mfac
