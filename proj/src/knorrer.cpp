#include "matfac/knorrer.hpp"

namespace mfac {

namespace {

bool all_maps_equal(const MatFac& x) {
  for (int k = 1; k < x.d(); ++k)
    if (x.phi(k) != x.phi(0)) return false;
  return true;
}

PolyMatrix scalar_blocks(const FieldMatrix& m, const Ring& ring, std::size_t block) {
  return kron(lift(m, ring), poly_identity(ring, block));
}

}  // namespace

OmegaContext make_context(const CycloElem& omega, int d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (!is_primitive_root(omega, 2 * d)) {
    throw HypothesisError("omega is not a primitive " + std::to_string(2 * d) + "-th root of unity");
  }
  const CycloField& k = omega.field();
  if (omega.pow(d) != -k.one()) throw HypothesisError("omega^d != -1");
  return {d, omega, omega * omega, k.from_int(d).inverse()};
}

OmegaContext context_from_zeta(const CycloElem& zeta, int d) {
  if (d % 2 == 0) {
    throw HypothesisError("even d needs an explicit primitive 2d-th root omega");
  }
  require_primitive(zeta, d);
  return make_context(-zeta, d);
}

long quadratic_exponent(int d, long m) { return -m * m + static_cast<long>(d) * m; }

RootSum root_sum(const OmegaContext& ctx, long t) {
  if (((t + ctx.d) % 2 + 2) % 2 != 0) throw HypothesisError("root sum needs t + d even");
  const CycloField& k = ctx.omega.field();
  RootSum r{k.zero(), k.zero(), false};
  for (long j = 0; j < ctx.d; ++j) {
    r.value += ctx.omega.pow(-j * j + t * j);
    r.partner += ctx.omega.pow(j * j - t * j);
  }
  r.product_is_d = (r.value * r.partner) == k.from_int(ctx.d);
  return r;
}

FieldMatrix alpha_matrix(const OmegaContext& ctx, long k) {
  const int d = ctx.d;
  FieldMatrix a = field_zero(ctx.omega.field(), d, d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) a(i - 1, j - 1) = ctx.omega.pow(quadratic_exponent(d, j - i - k));
  return a;
}

std::vector<CycloElem> alpha_determinant_factors(const OmegaContext& ctx, long k) {
  const int d = ctx.d;
  std::vector<CycloElem> out;
  for (long s = 1; s <= d; ++s) {
    CycloElem sum = ctx.omega.field().zero();
    for (long j = 1; j <= d; ++j)
      sum += ctx.omega.pow(quadratic_exponent(d, j - 1 - k) + 2 * s * (j - 1));
    out.push_back(sum);
  }
  return out;
}

BlockDiagonalization block_diagonalize(const OmegaContext& ctx, const PolyMatrix& a,
                                       const PolyMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ShapeMismatch("A and B must be square of one size");
  }
  if (a * b != b * a) throw HypothesisError("A and B do not commute");
  const int d = ctx.d;
  const std::size_t n = a.rows();
  const Ring& ring = a.zero().ring();
  BlockDiagonalization out{poly_zero(ring, d * n, d * n), {}, {}, {}, true};
  for (int i = 1; i <= d; ++i) {
    out.phi.set_block((i - 1) * n, (i - 1) * n, b.scaled(ctx.omega.pow(2 * (i - 1))));
    out.phi.set_block((i - 1) * n, (i % d) * n, a);
  }
  for (int k = 0; k < d; ++k) {
    out.alphas.push_back(scalar_blocks(alpha_matrix(ctx, k), ring, n));
    std::vector<PolyMatrix> blocks;
    for (int i = 1; i <= d; ++i) blocks.push_back(a - b.scaled(ctx.omega.pow(2 * k + 2 * (i - 1) - 1)));
    out.targets.push_back(block_diagonal(ring, blocks));
  }
  for (int k = 0; k < d; ++k) {
    const PolyMatrix& prev = out.alphas[(k + d - 1) % d];
    bool ok = prev * out.phi == out.targets[k] * out.alphas[k];
    out.holds.push_back(ok);
    out.pass = out.pass && ok;
  }
  return out;
}

SymmetricDecomposition decompose_symmetric(const MatFac& x, const MatFac& y,
                                           const OmegaContext& ctx) {
  if (x.d() != ctx.d || y.d() != ctx.d) throw RingMismatch("factorizations and context disagree on d");
  if (!all_maps_equal(x)) throw HypothesisError("TX = X fails: the maps of X are not all equal");
  if (!all_maps_equal(y)) throw HypothesisError("TY = Y fails: the maps of Y are not all equal");
  const int d = ctx.d;
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), m = y.rank();
  PolyMatrix a = kron(x.phi(0), poly_identity(ring, m));
  PolyMatrix b = kron(poly_identity(ring, n), y.phi(0));
  BlockDiagonalization bd = block_diagonalize(ctx, a, b);

  std::vector<PolyMatrix> zmaps;
  for (int k = 0; k < d; ++k) zmaps.push_back(a - b.scaled(ctx.omega.pow(2 * k - 1)));
  MatFac z = MatFac::from_indexed(ring, d, x.f() + y.f(), std::move(zmaps));
  MatFac sum = zero_factorization(ring, d, z.f());
  for (int i = 0; i < d; ++i) sum = direct_sum(sum, shift(z, i));

  MatFac t = tensor(x, y, ctx.zeta);
  std::vector<PolyMatrix> inv;
  for (int k = 0; k < d; ++k) {
    auto ai = inverse(alpha_matrix(ctx, k));
    if (!ai) throw std::logic_error("alpha matrix is singular");
    inv.push_back(scalar_blocks(*ai, ring, n * m));
  }
  Morphism w(t, sum, bd.alphas);
  Morphism wi(sum, t, inv);
  bool ok = bd.pass && validate(z).pass && validate(sum).pass && is_morphism(w) && is_morphism(wi) &&
            is_isomorphism(w);
  for (int k = 0; k < d && ok; ++k) {
    ok = t.phi(k) == bd.phi && sum.phi(k) == bd.targets[k] &&
         w.comp(k) * wi.comp(k) == poly_identity(ring, d * n * m);
  }
  return {z, sum, t, w, wi, ok};
}

Morphism knorrer_projection(const SymmetricDecomposition& dec, int block) {
  const int d = dec.z.d();
  if (block < 0 || block >= d) throw std::invalid_argument("block index out of range");
  const Ring& ring = dec.z.ring();
  const std::size_t r = dec.z.rank();
  PolyMatrix e = poly_zero(ring, d * r, d * r);
  e.set_block(block * r, block * r, poly_identity(ring, r));
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < d; ++k) comps.push_back(dec.inverse.comp(k) * e * dec.witness.comp(k));
  return Morphism(dec.tensor, dec.tensor, std::move(comps));
}

}  // namespace mfac
