#include "matfac/ulrich.hpp"

#include "matfac/parser.hpp"

namespace mfac {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

int SumOfProducts::k() const {
  return partition.empty() ? d : static_cast<int>(partition.front().size());
}

Polynomial SumOfProducts::sum() const {
  Polynomial f = ring.zero();
  for (const auto& row : factors) {
    Polynomial p = ring.one();
    for (const auto& q : row) p *= q;
    f += p;
  }
  return f;
}

MatFac SumOfProducts::row(std::size_t i) const {
  const auto& fs = factors.at(i);
  std::vector<Polynomial> grouped;
  if (partition.empty()) {
    grouped = fs;
  } else {
    std::size_t pos = 0;
    for (int size : partition.at(i)) {
      Polynomial p = ring.one();
      for (int t = 0; t < size; ++t) p *= fs[pos++];
      grouped.push_back(std::move(p));
    }
  }
  Polynomial f = ring.one();
  std::vector<PolyMatrix> maps;
  for (const auto& g : grouped) {
    f *= g;
    maps.push_back(poly_scalar(ring, 1, g));
  }
  return MatFac(ring, static_cast<int>(grouped.size()), f, maps);
}

void check_sum_of_products(const SumOfProducts& s) {
  if (s.d < 2) throw HypothesisError("each term needs at least 2 factors");
  if (s.terms() < 2) throw HypothesisError("need at least 2 terms");
  for (const auto& row : s.factors) {
    if (static_cast<int>(row.size()) != s.d) throw ShapeMismatch("every term needs d factors");
    for (const auto& q : row) {
      if (q.ring() != s.ring) throw RingMismatch("factor over a different ring");
      if (!q.constant_term().is_zero()) throw HypothesisError("factor " + to_string(q) + " is a unit");
    }
  }
  if (!s.partition.empty()) {
    if (s.partition.size() != s.terms()) throw HypothesisError("partition needs one grouping per term");
    const std::size_t k = s.partition.front().size();
    if (k < 2 || static_cast<int>(k) > s.d) throw HypothesisError("partition must have 2..d groups");
    for (const auto& groups : s.partition) {
      if (groups.size() != k) throw HypothesisError("every term must be split into the same number of groups");
      int total = 0;
      for (int g : groups) {
        if (g < 1) throw HypothesisError("empty group in partition");
        total += g;
      }
      if (total != s.d) throw HypothesisError("partition sizes must add up to d");
    }
  }
  if (s.target && *s.target != s.sum()) throw HypothesisError("terms do not add up to the declared target");
}

BuildReport build_from_sum(const SumOfProducts& s, const CycloElem& zeta) {
  check_sum_of_products(s);
  const int k = s.k();
  require_primitive(zeta, k);
  MatFac x = s.row(0);
  for (std::size_t i = 1; i < s.terms(); ++i) x = tensor(x, s.row(i), zeta);
  const std::size_t n = s.terms();
  BuildReport r{x, k, ipow(k, n - 1), static_cast<unsigned>(ipow(k, n - 2)), false, {}, true};
  r.rank_ok = x.rank() == r.expected_rank && x.f() == s.sum() && validate(x).pass && is_reduced(x);
  Polynomial power = s.sum().pow(r.expected_det_exponent);
  for (int t = 0; t < k; ++t) {
    Polynomial det = determinant(x.phi(t));
    r.det_ok.push_back(det == power || det == -power);
    r.pass = r.pass && r.det_ok.back();
  }
  r.pass = r.pass && r.rank_ok;
  return r;
}

ModuleStats presentation_stats(const PresentationMatrix& p, bool irreducible) {
  if (!has_zero_constant_terms(p.matrix)) {
    throw HypothesisError("presentation is not minimal: the factorization is not reduced");
  }
  if (!irreducible) throw HypothesisError("rank over S/(f) needs f asserted irreducible");
  if (p.f.is_zero() || p.f.is_constant()) throw HypothesisError("f must be a nonzero non-unit");
  ModuleStats st;
  st.irreducible_asserted = true;
  st.mu = p.matrix.rows();
  st.ord_f = order_of(p.f);
  Polynomial det = determinant(p.matrix);
  if (det.is_zero()) throw HypothesisError("presentation determinant vanishes");
  unsigned s = det.total_degree() / p.f.total_degree();
  Polynomial power = p.f.pow(s);
  if (det == power) {
    st.det_sign = 1;
  } else if (det == -power) {
    st.det_sign = -1;
  } else {
    throw HypothesisError("determinant is not a signed power of f");
  }
  st.rank_r = s;
  st.e_r = st.ord_f * st.rank_r;
  st.ulrich = st.mu == st.e_r;
  return st;
}

ModuleStats mcm_stats(const MatFac& x, int l, bool irreducible) {
  if (l < 1 || l >= x.d()) throw HypothesisError("l must lie in 1..d-1");
  if (!is_reduced(x)) throw HypothesisError("factorization is not reduced");
  if (!validate(x).pass) throw HypothesisError("factorization does not validate");
  return presentation_stats(cokernel_presentation(x, 1, l), irreducible);
}

UlrichBuild build_ulrich(const SumOfProducts& s, const CycloElem& zeta, bool irreducible) {
  BuildReport b = build_from_sum(s, zeta);
  PresentationMatrix p = cokernel_presentation(b.x, 1, 1);
  ModuleStats st = presentation_stats(p, irreducible);
  bool guaranteed = b.k == static_cast<int>(order_of(s.sum()));
  return {b, p, st, guaranteed};
}

ExtensionReport extension_ses(const MatFac& x, bool irreducible, long k) {
  if (x.d() < 3) throw HypothesisError("extension sequence needs d >= 3 so that phi_k phi_{k+1} is not f");
  if (!validate(x).pass) throw HypothesisError("factorization does not validate");
  if (order_of(x.f()) < 2) throw HypothesisError("ord(f) must be at least 2");
  ExtensionReport r{cokernel_presentation(x, k + 1, 1), cokernel_presentation(x, k, 2),
                    cokernel_presentation(x, k, 1), {}, {}, {}, false};
  r.l_stats = presentation_stats(r.l, irreducible);
  r.m_stats = presentation_stats(r.m, irreducible);
  r.n_stats = presentation_stats(r.n, irreducible);
  // X_{k+1} -> X_k -> L over X_{k+1} -> X_{k-1} -> M, with 1 and phi_k down.
  const Ring& ring = x.ring();
  PolyMatrix id = poly_identity(ring, x.rank());
  bool left = x.phi(k) * r.l.matrix == r.m.matrix * id;
  // M -> N is induced by 1 on X_{k-1}: the image of phi_k phi_{k+1} lies in
  // the image of phi_k.
  bool right = id * r.m.matrix == r.n.matrix * x.phi(k + 1);
  r.squares_commute = left && right;
  return r;
}

IndecomposableUlrich indecomposable_ulrich(const SumOfProducts& s, const CycloElem& zeta,
                                           bool irreducible) {
  if (!s.partition.empty()) throw HypothesisError("indecomposable construction uses the full rows");
  check_sum_of_products(s);
  std::optional<StrongIndCert> acc;
  for (std::size_t i = 0; i < s.terms(); ++i) {
    CertOutcome c = coprime_rank_one_cert(s.row(i));
    if (!c.cert) throw HypothesisError("term " + std::to_string(i + 1) + ": " + c.refusal);
    acc = acc ? propagate_strong_ind(*acc, *c.cert, zeta) : *c.cert;
  }
  BuildReport b = build_from_sum(s, zeta);
  if (acc->subject != b.x) throw std::logic_error("certificate subject differs from the built tensor");
  PresentationMatrix p = cokernel_presentation(b.x, 1, 1);
  ModuleStats st = presentation_stats(p, irreducible);
  IndecomposableUlrich out{b, *acc, p, st, strong_ind_consequences(*acc), std::nullopt};
  if (st.ulrich && b.k == static_cast<int>(st.ord_f)) out.complexity_bound = st.rank_r;
  return out;
}

}  // namespace mfac
