#include "matfac/structure.hpp"

#include <algorithm>
#include <numeric>

namespace mfac {

namespace {

int mod(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

// (c T^s W)^r
MatFac twisted_power(const MatFac& w, std::size_t r, long s, const CycloElem& c) {
  const Ring& ring = w.ring();
  std::vector<PolyMatrix> maps;
  for (int k = 0; k < w.d(); ++k) maps.push_back(kron(poly_identity(ring, r), w.phi(k + s).scaled(c)));
  return MatFac::from_indexed(ring, w.d(), w.f(), std::move(maps));
}

std::vector<std::string> vars_of(const std::vector<bool>& mask, const Ring& ring) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i]) out.push_back(ring.vars()[i]);
  return out;
}

void require_reduced_and_disjoint(const MatFac& killed, const MatFac& other) {
  if (!is_reduced(killed)) throw HypothesisError("the factor whose variables are killed is not reduced");
  if (!disjoint_support(killed, other)) throw HypothesisError("variable supports overlap");
}

Claim indecomposable_claim(const std::string& why) {
  return {"indecomposable", "X (x) Y is an indecomposable matrix factorization", why};
}

}  // namespace

std::vector<std::string> support_vars(const MatFac& x) { return vars_of(support(x), x.ring()); }

bool disjoint_support(const MatFac& x, const MatFac& y) {
  auto a = support(x), b = support(y);
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

MatFac twisted_shift_sum(const MatFac& w, std::size_t r, long e, const CycloElem& zeta) {
  MatFac sum = zero_factorization(w.ring(), w.d(), w.f());
  for (int i = 1; i <= w.d(); ++i) sum = direct_sum(sum, twisted_power(w, r, 1 - i, zeta.pow(e * (i - 1))));
  return sum;
}

ReductionWitness reduce_tensor_witness(const MatFac& x, const MatFac& y, Side side,
                                       const CycloElem& zeta) {
  const int d = x.d();
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), m = y.rank(), size = d * n * m;
  MatFac t = tensor(x, y, zeta);
  if (side == Side::left) {
    require_reduced_and_disjoint(x, y);
    MatFac red = reduce_mod_vars(t, support_vars(x));
    MatFac yx = reduce_mod_vars(y, support_vars(x));
    MatFac target = twisted_shift_sum(yx, n, 1, zeta);
    MatFac plain = twisted_shift_sum(yx, n, 0, zeta);
    std::vector<PolyMatrix> id, untwist;
    for (int k = 0; k < d; ++k) {
      id.push_back(poly_identity(ring, size));
      PolyMatrix c = poly_zero(ring, size, size);
      for (int i = 1; i <= d; ++i) {
        Polynomial s = ring.constant(zeta.pow(static_cast<long>(i - 1) * k));
        for (std::size_t q = 0; q < n * m; ++q) c((i - 1) * n * m + q, (i - 1) * n * m + q) = s;
      }
      untwist.push_back(std::move(c));
    }
    Morphism w(red, target, std::move(id));
    Morphism pw(red, plain, std::move(untwist));
    bool ok = validate(red).pass && validate(target).pass && validate(plain).pass && is_morphism(w) &&
              is_isomorphism(w) && is_morphism(pw) && is_isomorphism(pw);
    return {red, target, w, plain, pw, red == target, ok};
  }
  require_reduced_and_disjoint(y, x);
  MatFac red = reduce_mod_vars(t, support_vars(y));
  MatFac xy = reduce_mod_vars(x, support_vars(y));
  MatFac target = twisted_shift_sum(xy, m, -1, zeta);
  MatFac plain = twisted_shift_sum(xy, m, 0, zeta);
  std::vector<PolyMatrix> tw, pl;
  for (int k = 0; k < d; ++k) {
    PolyMatrix c = poly_zero(ring, size, size), p = poly_zero(ring, size, size);
    for (int j = 1; j <= d; ++j) {
      int i = mod(k + 1 - j, d) + 1;
      Polynomial s = ring.constant(zeta.pow(static_cast<long>(i - 1) * k));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          std::size_t from = tensor_index(n, m, j, a, b);
          std::size_t to = (i - 1) * n * m + b * n + a;
          c(to, from) = s;
          p(to, from) = ring.one();
        }
    }
    tw.push_back(std::move(c));
    pl.push_back(std::move(p));
  }
  Morphism w(red, target, std::move(tw));
  Morphism pw(red, plain, std::move(pl));
  bool ok = validate(red).pass && validate(target).pass && validate(plain).pass && is_morphism(w) &&
            is_isomorphism(w) && is_morphism(pw) && is_isomorphism(pw);
  return {red, target, w, plain, pw, red == target, ok};
}

BlockMorphisms reduce_morphism_blocks_x(const Morphism& a, const MatFac& x, const MatFac& y,
                                        const MatFac& y2, const CycloElem& zeta) {
  if (a.source() != tensor(x, y, zeta) || a.target() != tensor(x, y2, zeta)) {
    throw HypothesisError("morphism is not between the stated tensor products");
  }
  require_reduced_and_disjoint(x, y);
  require_reduced_and_disjoint(x, y2);
  const int d = x.d();
  const std::size_t n = x.rank(), m = y.rank(), m2 = y2.rank();
  auto kill = support_vars(x);
  MatFac yx = reduce_mod_vars(y, kill), y2x = reduce_mod_vars(y2, kill);
  std::vector<PolyMatrix> red;
  for (int k = 0; k < d; ++k) red.push_back(reduce_mod_vars(a.comp(k), kill));
  BlockMorphisms out;
  out.all_morphisms = true;
  for (int i = 1; i <= d; ++i) {
    std::vector<Morphism> row;
    MatFac tgt = twisted_power(y2x, n, 1 - i, zeta.pow(i - 1));
    for (int j = 1; j <= d; ++j) {
      MatFac src = twisted_power(yx, n, 1 - j, zeta.pow(j - 1));
      std::vector<PolyMatrix> comps;
      for (int k = 0; k < d; ++k) comps.push_back(red[k].block((i - 1) * n * m2, (j - 1) * n * m, n * m2, n * m));
      row.emplace_back(src, tgt, std::move(comps));
      out.all_morphisms = out.all_morphisms && is_morphism(row.back());
    }
    out.blocks.push_back(std::move(row));
  }
  out.reassembles = true;
  for (int k = 0; k < d; ++k) {
    PolyMatrix full = poly_zero(x.ring(), d * n * m2, d * n * m);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) full.set_block((i - 1) * n * m2, (j - 1) * n * m, out.blocks[i - 1][j - 1].comp(k));
    out.reassembles = out.reassembles && full == red[k];
  }
  return out;
}

BlockMorphisms reduce_morphism_blocks_y(const Morphism& b, const MatFac& x, const MatFac& x2,
                                        const MatFac& y, const CycloElem& zeta) {
  if (b.source() != tensor(x, y, zeta) || b.target() != tensor(x2, y, zeta)) {
    throw HypothesisError("morphism is not between the stated tensor products");
  }
  require_reduced_and_disjoint(y, x);
  require_reduced_and_disjoint(y, x2);
  const int d = x.d();
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), n2 = x2.rank(), m = y.rank();
  auto kill = support_vars(y);
  MatFac xy = reduce_mod_vars(x, kill), x2y = reduce_mod_vars(x2, kill);
  std::vector<PolyMatrix> red;
  for (int k = 0; k < d; ++k) red.push_back(reduce_mod_vars(b.comp(k), kill));
  BlockMorphisms out;
  out.all_morphisms = true;
  for (int i = 1; i <= d; ++i) {
    std::vector<Morphism> row;
    MatFac tgt = twisted_power(x2y, m, 1 - i, ring.field().one());
    for (int j = 1; j <= d; ++j) {
      MatFac src = twisted_power(xy, m, 1 - j, ring.field().one());
      std::vector<PolyMatrix> comps;
      for (int k = 0; k < d; ++k) {
        int rb = mod(1 - i + k, d) + 1, cb = mod(1 - j + k, d) + 1;
        PolyMatrix sub = red[k].block((rb - 1) * n2 * m, (cb - 1) * n * m, n2 * m, n * m);
        PolyMatrix sh = poly_zero(ring, n2 * m, n * m);
        for (std::size_t a2 = 0; a2 < n2; ++a2)
          for (std::size_t b2 = 0; b2 < m; ++b2)
            for (std::size_t a1 = 0; a1 < n; ++a1)
              for (std::size_t b1 = 0; b1 < m; ++b1) sh(b2 * n2 + a2, b1 * n + a1) = sub(a2 * m + b2, a1 * m + b1);
        comps.push_back(std::move(sh));
      }
      row.emplace_back(src, tgt, std::move(comps));
      out.all_morphisms = out.all_morphisms && is_morphism(row.back());
    }
    out.blocks.push_back(std::move(row));
  }
  // Reassemble through the regrouping isomorphisms of the reduction.
  ReductionWitness rs = reduce_tensor_witness(x, y, Side::right, zeta);
  ReductionWitness rt = reduce_tensor_witness(x2, y, Side::right, zeta);
  out.reassembles = true;
  for (int k = 0; k < d; ++k) {
    PolyMatrix full = poly_zero(ring, d * n2 * m, d * n * m);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j) full.set_block((i - 1) * n2 * m, (j - 1) * n * m, out.blocks[i - 1][j - 1].comp(k));
    PolyMatrix conj = rt.plain_witness.comp(k) * red[k] * rs.plain_witness.comp(k).transpose();
    out.reassembles = out.reassembles && full == conj;
  }
  return out;
}

DecompBound summand_bound(std::size_t n, std::size_t m, int d, bool x_asymmetric, bool y_asymmetric) {
  DecompBound b;
  b.n = n;
  b.m = m;
  b.d = d;
  b.r = std::gcd(n, m);
  b.asymmetric = x_asymmetric && y_asymmetric;
  if (b.r == 0) return b;
  if (b.asymmetric) {
    b.bound = b.r;
    b.min_summand_rank = d * n * m / b.r;
    b.basis = "both factors shift-asymmetric: at most gcd(n, m) summands";
  } else {
    b.bound = d * b.r;
    b.min_summand_rank = n * m / b.r;
    b.basis = "indecomposable reduced factors: at most d gcd(n, m) summands";
  }
  return b;
}

IsoSearch refute_isomorphism(const MatFac& x, const MatFac& y, unsigned n) {
  if (x.rank() != y.rank()) return IsoSearch{};
  JetHomBasis hom = hom_space_jets(x, y, n);
  return search_isomorphism(hom, x.rank(), y.rank(), x.ring().field());
}

std::vector<ShiftRefutation> jet_refute_shift_iso(const MatFac& x, unsigned n) {
  std::vector<ShiftRefutation> out;
  for (int i = 1; i < x.d(); ++i) {
    IsoSearch s = refute_isomorphism(x, shift(x, i), n);
    out.push_back({i, s.verdict == IsoVerdict::refuted});
  }
  return out;
}

CertOutcome coprime_rank_one_cert(const MatFac& x) {
  if (x.rank() != 1) throw HypothesisError("coprime certificate needs rank 1");
  if (!validate(x).pass) throw HypothesisError("factorization does not validate");
  if (!is_reduced(x)) throw HypothesisError("factorization is not reduced");
  StrongIndCert c{StrongIndCert::Kind::axiom, x, {}, {}, {}, {}, {}, {}};
  for (int t = 1; t <= x.d(); ++t) c.entries.push_back(x.phi(t)(0, 0));
  if (!monomial_coprime(c.entries)) return {std::nullopt, "entries are not pairwise coprime"};
  return {c, ""};
}

StrongIndCert propagate_strong_ind(const StrongIndCert& cx, const StrongIndCert& cy,
                                   const CycloElem& zeta) {
  if (!disjoint_support(cx.subject, cy.subject)) {
    throw HypothesisError("certified factors share variables");
  }
  StrongIndCert c{StrongIndCert::Kind::propagation, tensor(cx.subject, cy.subject, zeta), {}, {}, {},
                  {}, {}, {}};
  c.left = std::make_shared<const StrongIndCert>(cx);
  c.right = std::make_shared<const StrongIndCert>(cy);
  c.left_vars = support_vars(cx.subject);
  c.right_vars = support_vars(cy.subject);
  c.zeta = zeta;
  return c;
}

bool check_certificate(const StrongIndCert& c) {
  if (c.kind == StrongIndCert::Kind::axiom) {
    if (c.subject.rank() != 1 || !is_reduced(c.subject) || !validate(c.subject).pass) return false;
    for (int t = 1; t <= c.subject.d(); ++t)
      if (c.entries.size() != static_cast<std::size_t>(c.subject.d()) || c.entries[t - 1] != c.subject.phi(t)(0, 0))
        return false;
    try {
      return monomial_coprime(c.entries);
    } catch (const Undecidable&) {
      return false;
    }
  }
  if (!c.left || !c.right || !c.zeta) return false;
  if (!check_certificate(*c.left) || !check_certificate(*c.right)) return false;
  if (!disjoint_support(c.left->subject, c.right->subject)) return false;
  return c.subject == tensor(c.left->subject, c.right->subject, *c.zeta);
}

std::vector<Claim> strong_ind_consequences(const StrongIndCert& c) {
  const std::string why = "consequences of strong indecomposability";
  std::vector<Claim> out{
      {"indecomposable", "X is an indecomposable matrix factorization", why},
      {"shift_asymmetric", "T^i X is not isomorphic to X for every i != 0", why},
  };
  for (int i = 0; i < c.subject.d(); ++i) {
    out.push_back({"cokernel_indecomposable_" + std::to_string(i),
                   "cok phi_" + std::to_string(i) + " is an indecomposable MCM module over S/(f)", why});
  }
  out.push_back({"local_endomorphisms",
                 "End(X)/rad End(X) and End(cok phi_i)/rad End(cok phi_i) are the residue field", why});
  return out;
}

SpotCheck certificate_spot_check(const MatFac& x, unsigned n) {
  if (n == 0) {
    unsigned hi = 0, lo = ~0u;
    for (const auto& m : x.by_index()) {
      hi = std::max(hi, max_total_degree(m));
      if (auto o = min_order(m)) lo = std::min(lo, *o);
    }
    n = lo == ~0u ? 1 : 1 + hi - std::min(hi, lo);
  }
  SpotCheck sc;
  sc.precision = n;
  const CycloField& k = x.ring().field();
  JetHomBasis self = hom_space_jets(x, x, n);
  sc.endomorphisms_scalar = true;
  for (const auto& sol : self.basis) {
    CycloElem xi = constant_part(sol[0])(0, 0);
    FieldMatrix expect = field_identity(k, x.rank()).scaled(xi);
    for (const auto& comp : sol)
      if (constant_part(comp) != expect) sc.endomorphisms_scalar = false;
  }
  sc.cross_shifts_vanish = true;
  for (int i = 1; i < x.d(); ++i) {
    JetHomBasis cross = hom_space_jets(x, shift(x, i), n);
    for (const auto& sol : cross.basis)
      for (const auto& comp : sol)
        if (!constant_part(comp).is_zero()) sc.cross_shifts_vanish = false;
  }
  return sc;
}

IndecompReport coprime_symmetric_indecomposable(const MatFac& x, const MatFac& y,
                                                const Morphism& shift_iso, const CycloElem& zeta) {
  require_primitive(zeta, x.d());
  IndecompReport r;
  r.claim = indecomposable_claim("rank-one coprime factor tensored with a shift-symmetric factor");
  CertOutcome c = coprime_rank_one_cert(x);
  if (!c.cert) {
    r.refusal = c.refusal;
    return r;
  }
  r.hypotheses.push_back("X rank one with pairwise coprime monomial entries: checked");
  if (!disjoint_support(x, y)) {
    r.refusal = "X and Y share variables";
    return r;
  }
  r.hypotheses.push_back("disjoint variables: checked");
  MatFac ty = shift(y, 1);
  bool ends = (shift_iso.source() == y && shift_iso.target() == ty) ||
              (shift_iso.source() == ty && shift_iso.target() == y);
  if (!ends || !is_morphism(shift_iso) || !is_isomorphism(shift_iso)) {
    r.refusal = "supplied morphism is not an isomorphism between Y and TY";
    return r;
  }
  r.hypotheses.push_back("Y isomorphic to TY: witness checked");
  r.hypotheses.push_back("Y indecomposable: asserted by caller");
  r.accepted = true;
  return r;
}

IndecompReport rank_one_asymmetric_indecomposable(const MatFac& x, const MatFac& y,
                                                  const CycloElem& zeta, unsigned n) {
  require_primitive(zeta, x.d());
  IndecompReport r;
  r.claim = indecomposable_claim("shift-asymmetric factor tensored with a rank-one factor");
  if (y.rank() != 1) {
    r.refusal = "Y does not have rank one";
    return r;
  }
  if (!validate(y).pass) {
    r.refusal = "Y does not validate";
    return r;
  }
  r.hypotheses.push_back("Y rank one: checked");
  if (!disjoint_support(x, y)) {
    r.refusal = "X and Y share variables";
    return r;
  }
  r.hypotheses.push_back("disjoint variables: checked");
  for (const auto& s : jet_refute_shift_iso(x, n)) {
    if (!s.refuted) {
      r.refusal = "T^" + std::to_string(s.shift) + " X = X not refuted at precision " + std::to_string(n);
      return r;
    }
  }
  r.hypotheses.push_back("T^i X not isomorphic to X for i != 0: refuted at precision " + std::to_string(n));
  r.hypotheses.push_back("X indecomposable: asserted by caller");
  r.accepted = true;
  return r;
}

}  // namespace mfac
