#include "matfac/morphism.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <tuple>

namespace mfac {

namespace {

void check_composable(const MatFac& a, const MatFac& b) {
  if (!(a == b)) throw RingMismatch("morphisms are not composable");
}

// Exponent vectors of total degree < n, by degree then lex-descending.
std::vector<Exponents> monomials_below(std::size_t nvars, unsigned n) {
  std::vector<Exponents> out;
  for (unsigned deg = 0; deg < n; ++deg) {
    Exponents e(nvars, 0);
    // enumerate compositions of deg into nvars parts, lex descending
    std::vector<Exponents> level;
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
      if (i + 1 == nvars) {
        e[i] = left;
        level.push_back(e);
        return;
      }
      for (int v = static_cast<int>(left); v >= 0; --v) {
        e[i] = static_cast<unsigned>(v);
        rec(i + 1, left - v);
      }
    };
    if (nvars == 0) {
      if (deg == 0) out.push_back(e);
      continue;
    }
    rec(0, deg);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool identities_hold(const Morphism& a, std::optional<unsigned> n, std::vector<int>* failures) {
  bool ok = true;
  for (int k = 0; k < a.d(); ++k) {
    PolyMatrix lhs = n ? mul_truncated(a.comp(k - 1), a.source().phi(k), *n)
                       : a.comp(k - 1) * a.source().phi(k);
    PolyMatrix rhs = n ? mul_truncated(a.target().phi(k), a.comp(k), *n)
                       : a.target().phi(k) * a.comp(k);
    if (lhs != rhs) {
      ok = false;
      if (failures) failures->push_back(k);
    }
  }
  return ok;
}

}  // namespace

bool is_morphism(const Morphism& a) { return identities_hold(a, std::nullopt, nullptr); }

bool is_morphism_mod(const Morphism& a, unsigned n) { return identities_hold(a, n, nullptr); }

std::vector<int> morphism_failures(const Morphism& a) {
  std::vector<int> f;
  identities_hold(a, std::nullopt, &f);
  return f;
}

Morphism identity(const MatFac& x) {
  return Morphism(x, x, std::vector<PolyMatrix>(x.d(), poly_identity(x.ring(), x.rank())));
}

Morphism zero_morphism(const MatFac& source, const MatFac& target) {
  return Morphism(source, target,
                  std::vector<PolyMatrix>(source.d(), poly_zero(source.ring(), target.rank(),
                                                                source.rank())));
}

Morphism scalar_morphism(const MatFac& x, const CycloElem& c) {
  return Morphism(
      x, x, std::vector<PolyMatrix>(x.d(), poly_scalar(x.ring(), x.rank(), x.ring().constant(c))));
}

Morphism compose(const Morphism& a, const Morphism& b) {
  check_composable(b.target(), a.source());
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < a.d(); ++k) comps.push_back(a.comp(k) * b.comp(k));
  return Morphism(b.source(), a.target(), std::move(comps));
}

Morphism add(const Morphism& a, const Morphism& b) {
  check_composable(a.source(), b.source());
  check_composable(a.target(), b.target());
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < a.d(); ++k) comps.push_back(a.comp(k) + b.comp(k));
  return Morphism(a.source(), a.target(), std::move(comps));
}

Morphism direct_sum(const Morphism& a, const Morphism& b) {
  std::vector<PolyMatrix> comps;
  const Ring& ring = a.source().ring();
  for (int k = 0; k < a.d(); ++k) {
    PolyMatrix m = poly_zero(ring, a.target().rank() + b.target().rank(),
                             a.source().rank() + b.source().rank());
    m.set_block(0, 0, a.comp(k));
    m.set_block(a.target().rank(), a.source().rank(), b.comp(k));
    comps.push_back(std::move(m));
  }
  return Morphism(direct_sum(a.source(), b.source()), direct_sum(a.target(), b.target()),
                  std::move(comps));
}

Morphism shift(const Morphism& a, long i) {
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < a.d(); ++k) comps.push_back(a.comp(k + i));
  return Morphism(shift(a.source(), i), shift(a.target(), i), std::move(comps));
}

bool is_isomorphism(const Morphism& a) {
  if (a.source().rank() != a.target().rank()) return false;
  for (const auto& c : a.comps())
    if (determinant(constant_part(c)).is_zero()) return false;
  return true;
}

Morphism inverse_witness(const Morphism& a, unsigned n, unsigned* precision) {
  std::vector<PolyMatrix> comps;
  bool exact = true;
  for (const auto& c : a.comps()) {
    if (auto inv = exact_inverse(c)) {
      comps.push_back(*inv);
    } else {
      comps.push_back(jet_inverse(c, n));
      exact = false;
    }
  }
  if (precision) *precision = exact ? 0 : n;
  return Morphism(a.target(), a.source(), std::move(comps));
}

JetHomBasis hom_space_jets(const MatFac& x, const MatFac& y, unsigned precision) {
  if (x.ring() != y.ring() || x.d() != y.d() || x.f() != y.f()) {
    throw RingMismatch("hom space between factorizations over different (ring, d, f)");
  }
  const Ring& ring = x.ring();
  const int d = x.d();
  const std::size_t n = x.rank(), m = y.rank();
  std::optional<unsigned> o;
  for (const MatFac* z : {&x, &y})
    for (const auto& phi : z->by_index()) {
      auto mo = min_order(phi);
      if (mo && (!o || *mo < *o)) o = mo;
    }
  JetHomBasis out;
  out.precision = precision;
  out.equation_degree = precision + o.value_or(0);
  const auto monos = monomials_below(ring.nvars(), precision);
  const std::size_t M = monos.size();
  auto unknown = [&](long k, std::size_t r, std::size_t c, std::size_t mu) {
    return ((x.index(k) * m + r) * n + c) * M + mu;
  };
  const std::size_t total = static_cast<std::size_t>(d) * m * n * M;
  using Key = std::tuple<int, std::size_t, std::size_t, Exponents>;
  std::map<Key, SparseSystem::Row> eqs;
  const unsigned bound = out.equation_degree;
  auto contribute = [&](int k, std::size_t r, std::size_t c, std::size_t var_id,
                        const Exponents& mono, const Polynomial& coeff_poly, bool negate) {
    for (const auto& [e, v] : coeff_poly.terms()) {
      Exponents nu(e.size());
      for (std::size_t i = 0; i < e.size(); ++i) nu[i] = e[i] + mono[i];
      if (total_degree(nu) >= bound) continue;
      auto& row = eqs[Key{k, r, c, nu}];
      CycloElem val = negate ? -v : v;
      auto [slot, inserted] = row.try_emplace(var_id, val);
      if (!inserted) slot->second += val;
    }
  };
  for (int k = 0; k < d; ++k) {
    const PolyMatrix& phi = x.phi(k);
    const PolyMatrix& psi = y.phi(k);
    // alpha_{k-1} phi_k: (r, c) = sum_j alpha_{k-1}(r, j) phi_k(j, c)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t j = 0; j < n; ++j) {
          if (phi(j, c).is_zero()) continue;
          for (std::size_t mu = 0; mu < M; ++mu)
            contribute(k, r, c, unknown(k - 1, r, j, mu), monos[mu], phi(j, c), false);
        }
        // - psi_k alpha_k: (r, c) = sum_j psi_k(r, j) alpha_k(j, c)
        for (std::size_t j = 0; j < m; ++j) {
          if (psi(r, j).is_zero()) continue;
          for (std::size_t mu = 0; mu < M; ++mu)
            contribute(k, r, c, unknown(k, j, c, mu), monos[mu], psi(r, j), true);
        }
      }
  }
  SparseSystem sys(ring.field(), total);
  for (auto& [key, row] : eqs) sys.add_equation(std::move(row));
  for (const auto& v : sys.solution_basis()) {
    std::vector<PolyMatrix> comps(d, poly_zero(ring, m, n));
    for (int k = 0; k < d; ++k)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t mu = 0; mu < M; ++mu) {
            const CycloElem& val = v[unknown(k, r, c, mu)];
            if (!val.is_zero()) comps[k](r, c).add_term(monos[mu], val);
          }
    out.basis.push_back(std::move(comps));
  }
  return out;
}

bool in_span(const JetHomBasis& hom, const std::vector<PolyMatrix>& comps) {
  if (comps.empty()) return true;
  const Ring& ring = comps[0].zero().ring();
  const auto monos = monomials_below(ring.nvars(), hom.precision);
  const std::size_t rows = comps.size() * comps[0].rows() * comps[0].cols() * monos.size();
  FieldMatrix a(rows, hom.basis.size() + 1, ring.field().zero());
  auto fill = [&](std::size_t col, const std::vector<PolyMatrix>& cs) {
    std::size_t row = 0;
    for (const auto& c : cs)
      for (const auto& p : c.data())
        for (const auto& mono : monos) a(row++, col) = p.coefficient(mono);
  };
  for (std::size_t b = 0; b < hom.basis.size(); ++b) fill(b, hom.basis[b]);
  fill(hom.basis.size(), comps);
  FieldMatrix without = a.block(0, 0, rows, hom.basis.size());
  return rank(without) == rank(a);
}

IsoSearch search_isomorphism(const JetHomBasis& hom, std::size_t source_rank,
                             std::size_t target_rank, const CycloField& field) {
  IsoSearch out;
  if (source_rank != target_rank || hom.basis.empty()) return out;
  const std::size_t r = hom.basis.size();
  const std::size_t d = hom.basis[0].size();
  std::vector<std::vector<FieldMatrix>> consts(r);
  for (std::size_t b = 0; b < r; ++b)
    for (const auto& c : hom.basis[b]) consts[b].push_back(constant_part(c));
  auto combine = [&](const std::vector<long>& t) {
    std::vector<FieldMatrix> comps(d, field_zero(field, target_rank, source_rank));
    for (std::size_t b = 0; b < r; ++b) {
      if (t[b] == 0) continue;
      for (std::size_t k = 0; k < d; ++k) comps[k] += consts[b][k].scaled(field.from_int(t[b]));
    }
    return comps;
  };
  auto all_invertible = [&](const std::vector<FieldMatrix>& comps) {
    return std::all_of(comps.begin(), comps.end(),
                       [](const FieldMatrix& c) { return !determinant(c).is_zero(); });
  };
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<long> dist(-9, 9);
  auto random_point = [&] {
    std::vector<long> t(r);
    for (auto& v : t) v = dist(rng);
    return t;
  };
  for (int attempt = 0; attempt < 4; ++attempt) {
    auto comps = combine(random_point());
    if (all_invertible(comps)) {
      out.verdict = IsoVerdict::candidate;
      out.witness = comps;
      return out;
    }
  }
  // Symbolic check: determinant of each component as a polynomial in the
  // basis coordinates.
  std::vector<std::string> names;
  for (std::size_t b = 0; b < r; ++b) names.push_back("t" + std::to_string(b));
  Ring tring(field, names);
  for (std::size_t k = 0; k < d; ++k) {
    PolyMatrix sym = poly_zero(tring, target_rank, source_rank);
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t i = 0; i < target_rank; ++i)
        for (std::size_t j = 0; j < source_rank; ++j)
          if (!consts[b][k](i, j).is_zero()) sym(i, j) += tring.var(b) * consts[b][k](i, j);
    if (determinant(sym).is_zero()) {
      out.verdict = IsoVerdict::refuted;
      out.obstruction = static_cast<int>(k);
      return out;
    }
  }
  out.verdict = IsoVerdict::candidate;
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto comps = combine(random_point());
    if (all_invertible(comps)) {
      out.witness = comps;
      break;
    }
  }
  return out;
}

Conjugated conjugate_component(const Morphism& a, long k, const PolyMatrix& A,
                               const PolyMatrix& B, unsigned n) {
  const MatFac& x = a.source();
  const MatFac& xp = a.target();
  if (A.rows() != xp.rank() || !A.is_square() || B.rows() != x.rank() || !B.is_square()) {
    throw ShapeMismatch("conjugating matrices have the wrong size");
  }
  if (determinant(constant_part(A)).is_zero() || determinant(constant_part(B)).is_zero()) {
    throw HypothesisError("conjugating matrix is not invertible over the local ring");
  }
  unsigned precision = 0;
  auto invert = [&](const PolyMatrix& M) {
    if (auto inv = exact_inverse(M)) return *inv;
    precision = n;
    return jet_inverse(M, n);
  };
  PolyMatrix Ainv = invert(A), Binv = invert(B);
  auto mul = [&](const PolyMatrix& p, const PolyMatrix& q) {
    return precision ? mul_truncated(p, q, precision) : p * q;
  };
  std::vector<PolyMatrix> ys = x.by_index(), yps = xp.by_index();
  const std::size_t i0 = x.index(k), i1 = x.index(k + 1);
  ys[i0] = mul(x.phi(k), B);
  ys[i1] = mul(Binv, x.phi(k + 1));
  yps[i0] = mul(xp.phi(k), Ainv);
  yps[i1] = mul(A, xp.phi(k + 1));
  MatFac y = MatFac::from_indexed(x.ring(), x.d(), x.f(), ys);
  MatFac yp = MatFac::from_indexed(x.ring(), x.d(), x.f(), yps);
  std::vector<PolyMatrix> beta = a.comps();
  beta[i0] = mul(mul(A, a.comp(k)), B);
  std::vector<PolyMatrix> gamma(x.d(), poly_identity(x.ring(), x.rank()));
  gamma[i0] = Binv;
  std::vector<PolyMatrix> delta(x.d(), poly_identity(x.ring(), xp.rank()));
  delta[i0] = A;
  return {Morphism(y, yp, beta), Morphism(x, y, gamma), Morphism(xp, yp, delta), precision};
}

Splitting split_along(const MatFac& x, const std::vector<PolyMatrix>& image_basis,
                      const std::vector<PolyMatrix>& complement_basis, unsigned n) {
  const int d = x.d();
  const Ring& ring = x.ring();
  const std::size_t rk = x.rank();
  const std::size_t r = image_basis.at(0).cols();
  std::vector<PolyMatrix> P, Pinv;
  unsigned precision = 0;
  for (int k = 0; k < d; ++k) {
    if (image_basis[k].cols() != r || complement_basis[k].cols() != rk - r) {
      throw ShapeMismatch("splitting bases have inconsistent ranks");
    }
    PolyMatrix p = poly_zero(ring, rk, rk);
    p.set_block(0, 0, image_basis[k]);
    p.set_block(0, r, complement_basis[k]);
    P.push_back(p);
  }
  for (int k = 0; k < d; ++k) {
    if (auto inv = exact_inverse(P[k])) {
      Pinv.push_back(*inv);
    } else {
      Pinv.push_back(jet_inverse(P[k], n));
      precision = n;
    }
  }
  auto mul = [&](const PolyMatrix& p, const PolyMatrix& q) {
    return precision ? mul_truncated(p, q, precision) : p * q;
  };
  std::vector<PolyMatrix> top, bottom;
  bool vanish = true;
  for (int k = 0; k < d; ++k) {
    PolyMatrix psi = mul(mul(Pinv[x.index(k - 1)], x.phi(k)), P[k]);
    top.push_back(psi.block(0, 0, r, r));
    bottom.push_back(psi.block(r, r, rk - r, rk - r));
    if (!psi.block(0, r, r, rk - r).is_zero() || !psi.block(r, 0, rk - r, r).is_zero()) {
      vanish = false;
    }
  }
  MatFac image = MatFac::from_indexed(ring, d, x.f(), top);
  MatFac complement = MatFac::from_indexed(ring, d, x.f(), bottom);
  Morphism witness(direct_sum(image, complement), x, P);
  return {r, image, complement, witness, precision, vanish};
}

Splitting split_idempotent(const MatFac& x, const Morphism& e, unsigned n) {
  if (!(e.source() == x) || !(e.target() == x)) {
    throw HypothesisError("idempotent is not an endomorphism of the factorization");
  }
  if (!is_morphism(e)) throw HypothesisError("idempotent fails the intertwining identities");
  if (!(compose(e, e) == e)) throw HypothesisError("morphism is not idempotent");
  const Ring& ring = x.ring();
  const std::size_t rk = x.rank();
  std::vector<PolyMatrix> image, complement;
  std::optional<std::size_t> r;
  for (int k = 0; k < x.d(); ++k) {
    const PolyMatrix& ek = e.comp(k);
    PolyMatrix fk = poly_identity(ring, rk) - ek;
    auto piv_e = rref(constant_part(ek)).pivots;
    auto piv_f = rref(constant_part(fk)).pivots;
    if (r && *r != piv_e.size()) {
      throw HypothesisError("idempotent components have different ranks at the origin");
    }
    r = piv_e.size();
    PolyMatrix im = poly_zero(ring, rk, piv_e.size());
    for (std::size_t c = 0; c < piv_e.size(); ++c)
      for (std::size_t i = 0; i < rk; ++i) im(i, c) = ek(i, piv_e[c]);
    PolyMatrix co = poly_zero(ring, rk, piv_f.size());
    for (std::size_t c = 0; c < piv_f.size(); ++c)
      for (std::size_t i = 0; i < rk; ++i) co(i, c) = fk(i, piv_f[c]);
    image.push_back(std::move(im));
    complement.push_back(std::move(co));
  }
  return split_along(x, image, complement, n);
}

}  // namespace mfac
