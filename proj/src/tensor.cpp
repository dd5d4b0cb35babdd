#include "matfac/tensor.hpp"

#include <algorithm>

namespace mfac {

namespace {

void check_pair(const MatFac& x, const MatFac& y) {
  if (x.ring() != y.ring()) throw RingMismatch("tensor factors over different rings");
  if (x.d() != y.d()) throw RingMismatch("tensor factors with different d");
}

int mod(long a, int d) { return static_cast<int>(((a % d) + d) % d); }

Polynomial constant(const Ring& ring, const CycloElem& c) { return ring.constant(c); }

}  // namespace

void require_primitive(const CycloElem& zeta, int d) {
  if (!is_primitive_root(zeta, d)) {
    throw HypothesisError("zeta is not a primitive " + std::to_string(d) + "-th root of unity");
  }
}

std::size_t tensor_index(std::size_t n, std::size_t m, int j, std::size_t a, std::size_t b) {
  return static_cast<std::size_t>(j - 1) * n * m + a * m + b;
}

MatFac tensor(const MatFac& x, const MatFac& y, const CycloElem& zeta) {
  check_pair(x, y);
  const int d = x.d();
  require_primitive(zeta, d);
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), m = y.rank(), bs = n * m;
  PolyMatrix in = poly_identity(ring, n), im = poly_identity(ring, m);
  std::vector<PolyMatrix> maps;
  for (int k = 0; k < d; ++k) {
    PolyMatrix phi = poly_zero(ring, d * bs, d * bs);
    for (int i = 1; i <= d; ++i) {
      CycloElem tw = zeta.pow(i - 1);
      phi.set_block((i - 1) * bs, (i - 1) * bs, kron(in, y.phi(k + 1 - i)).scaled(tw));
      int j = i % d + 1;
      phi.set_block((i - 1) * bs, (j - 1) * bs, kron(x.phi(i), im));
    }
    maps.push_back(std::move(phi));
  }
  return MatFac::from_indexed(ring, d, x.f() + y.f(), std::move(maps));
}

Morphism tensor_left(const Morphism& a, const MatFac& y, const CycloElem& zeta) {
  const MatFac& x = a.source();
  const MatFac& xp = a.target();
  const Ring& ring = x.ring();
  const int d = x.d();
  PolyMatrix im = poly_identity(ring, y.rank());
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < d; ++k) {
    std::vector<PolyMatrix> blocks;
    for (int j = 1; j <= d; ++j) blocks.push_back(kron(a.comp(j - 1), im));
    comps.push_back(block_diagonal(ring, blocks));
  }
  return Morphism(tensor(x, y, zeta), tensor(xp, y, zeta), std::move(comps));
}

Morphism tensor_right(const MatFac& x, const Morphism& b, const CycloElem& zeta) {
  const Ring& ring = x.ring();
  const int d = x.d();
  PolyMatrix in = poly_identity(ring, x.rank());
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < d; ++k) {
    std::vector<PolyMatrix> blocks;
    for (int j = 1; j <= d; ++j) blocks.push_back(kron(in, b.comp(k + 1 - j)));
    comps.push_back(block_diagonal(ring, blocks));
  }
  return Morphism(tensor(x, b.source(), zeta), tensor(x, b.target(), zeta), std::move(comps));
}

Morphism swap_witness(const MatFac& x, const MatFac& y, const CycloElem& zeta) {
  check_pair(x, y);
  const int d = x.d();
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), m = y.rank();
  MatFac src = tensor(x, y, zeta);
  MatFac tgt = tensor(y, x, zeta.inverse());
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < d; ++k) {
    PolyMatrix c = poly_zero(ring, d * n * m, d * n * m);
    for (int j = 1; j <= d; ++j) {
      int p = j - 1;
      int q = mod(k + 1 - j, d);
      Polynomial w = constant(ring, zeta.pow(static_cast<long>(p) * q));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b)
          c(tensor_index(m, n, q + 1, b, a), tensor_index(n, m, j, a, b)) = w;
    }
    comps.push_back(std::move(c));
  }
  return Morphism(src, tgt, std::move(comps));
}

Morphism shift_witness(const MatFac& x, const MatFac& y, const CycloElem& zeta) {
  check_pair(x, y);
  const int d = x.d();
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), m = y.rank();
  MatFac src = tensor(shift(x, 1), y, zeta);
  MatFac tgt = shift(tensor(x, y, zeta), 1);
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < d; ++k) {
    PolyMatrix c = poly_zero(ring, d * n * m, d * n * m);
    for (int j = 1; j <= d; ++j) {
      int ydeg = mod(k + 1 - j, d);
      int jt = j % d + 1;
      Polynomial w = constant(ring, zeta.pow(-ydeg));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < m; ++b)
          c(tensor_index(n, m, jt, a, b), tensor_index(n, m, j, a, b)) = w;
    }
    comps.push_back(std::move(c));
  }
  return Morphism(src, tgt, std::move(comps));
}

Morphism distribute_witness(const MatFac& x, const MatFac& x2, const MatFac& y,
                            const CycloElem& zeta) {
  const int d = x.d();
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), n2 = x2.rank(), m = y.rank();
  MatFac src = tensor(direct_sum(x, x2), y, zeta);
  MatFac tgt = direct_sum(tensor(x, y, zeta), tensor(x2, y, zeta));
  const std::size_t size = static_cast<std::size_t>(d) * (n + n2) * m;
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < d; ++k) {
    PolyMatrix c = poly_zero(ring, size, size);
    for (int j = 1; j <= d; ++j)
      for (std::size_t a = 0; a < n + n2; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          std::size_t from = tensor_index(n + n2, m, j, a, b);
          std::size_t to = a < n ? tensor_index(n, m, j, a, b)
                                 : d * n * m + tensor_index(n2, m, j, a - n, b);
          c(to, from) = ring.one();
        }
    comps.push_back(std::move(c));
  }
  return Morphism(src, tgt, std::move(comps));
}

AssocReport assoc_check(const MatFac& x, const MatFac& y, const MatFac& z, const CycloElem& zeta) {
  check_pair(x, y);
  check_pair(y, z);
  const int d = x.d();
  const Ring& ring = x.ring();
  const std::size_t n = x.rank(), m = y.rank(), l = z.rank();
  MatFac left = tensor(tensor(x, y, zeta), z, zeta);
  MatFac right = tensor(x, tensor(y, z, zeta), zeta);
  const std::size_t size = static_cast<std::size_t>(d) * d * n * m * l;
  AssocReport rep;
  std::vector<PolyMatrix> comps;
  for (int k = 0; k < d; ++k) {
    std::vector<std::size_t> perm(size);
    PolyMatrix c = poly_zero(ring, size, size);
    for (int p = 0; p < d; ++p)
      for (int q = 0; q < d; ++q)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < m; ++b)
            for (std::size_t cz = 0; cz < l; ++cz) {
              // ((X (x) Y) (x) Z)_k: outer block j1 with (X (x) Y)_{p+q}
              int j1 = mod(p + q, d) + 1;
              std::size_t w = tensor_index(n, m, p + 1, a, b);
              std::size_t li = tensor_index(d * n * m, l, j1, w, cz);
              // (X (x) (Y (x) Z))_k: block p+1 with (Y (x) Z)_{k-p}
              std::size_t v = tensor_index(m, l, q + 1, b, cz);
              std::size_t ri = tensor_index(n, d * m * l, p + 1, a, v);
              perm[ri] = li;
              c(li, ri) = ring.one();
            }
    rep.perm.push_back(std::move(perm));
    comps.push_back(std::move(c));
  }
  rep.equal = is_morphism(Morphism(right, left, comps));
  return rep;
}

DetReport det_check(const MatFac& x, const MatFac& y, const CycloElem& zeta) {
  MatFac t = tensor(x, y, zeta);
  const unsigned nm = static_cast<unsigned>(x.rank() * y.rank());
  Polynomial expected = (x.f() + y.f()).pow(nm);
  if ((static_cast<unsigned long>(nm) * (x.d() + 1)) % 2 == 1) expected = -expected;
  DetReport rep{expected, {}, {}, true};
  for (int k = 0; k < t.d(); ++k) {
    Polynomial det = determinant(t.phi(k));
    rep.holds.push_back(det == expected);
    rep.pass = rep.pass && rep.holds.back();
    rep.dets.push_back(std::move(det));
  }
  return rep;
}

std::vector<int> projective_shifts(const MatFac& p) {
  const int d = p.d();
  std::vector<int> shifts;
  for (std::size_t a = 0; a < p.rank(); ++a) {
    int found = -1;
    for (int k = 0; k < d; ++k) {
      const PolyMatrix& m = p.phi(k);
      for (std::size_t b = 0; b < p.rank(); ++b)
        if (b != a && (!m(a, b).is_zero() || !m(b, a).is_zero())) {
          throw HypothesisError("not a diagonal sum of projective generators");
        }
      const Polynomial& e = m(a, a);
      if (e == p.f()) {
        if (found >= 0) throw HypothesisError("summand carries f in two slots");
        found = k;
      } else if (!(e.is_constant() && e.constant_term().is_one())) {
        throw HypothesisError("summand entry is neither 1 nor f");
      }
    }
    if (found < 0) throw HypothesisError("summand carries no f slot");
    // T^i (f, 1, ..., 1) has f in slot k = 1 - i.
    shifts.push_back(mod(1 - found, d));
  }
  return shifts;
}

MatFac projective_sum(const Ring& ring, int d, const Polynomial& f, const std::vector<int>& shifts) {
  MatFac sum = zero_factorization(ring, d, f);
  for (int i : shifts) sum = direct_sum(sum, projective(ring, d, f, i));
  return sum;
}

ProjectiveTensorReport is_projective_tensor(const MatFac& p, const MatFac& y,
                                            const CycloElem& zeta, unsigned n) {
  projective_shifts(p);
  const int d = p.d();
  const Ring& ring = p.ring();
  MatFac w0 = tensor(p, y, zeta);
  if (n == 0) n = default_precision({&p, &y});
  const std::size_t total = w0.rank();
  ProjectiveTensorReport rep{{}, zero_factorization(ring, d, w0.f()),
                             identity(w0), 0, false};
  std::vector<PolyMatrix> acc(d, poly_identity(ring, total));
  bool exact = true;
  auto mul = [&](const PolyMatrix& a, const PolyMatrix& b) {
    return exact ? a * b : mul_truncated(a, b, n);
  };
  MatFac w = w0;
  std::size_t done = 0;
  while (w.rank() > 0) {
    bool split = false;
    for (int i = 0; i < d && !split; ++i) {
      // C = psi_{2-i} ... psi_{-i} : W_{-i} -> W_{1-i}
      PolyMatrix c = poly_identity(ring, w.rank());
      for (int t = 2 - i; t <= d - i; ++t) c = mul_truncated(c, w.phi(t), n);
      std::size_t row = 0, col = 0;
      bool found = false;
      for (std::size_t r = 0; r < c.rows() && !found; ++r)
        for (std::size_t s = 0; s < c.cols() && !found; ++s)
          if (!c(r, s).constant_term().is_zero()) {
            row = r;
            col = s;
            found = true;
          }
      if (!found) continue;
      const std::size_t rk = w.rank();
      // alpha : P_i -> W, generated at W_{-i} by the basis vector e_col.
      std::vector<PolyMatrix> alpha(d, poly_zero(ring, rk, 1));
      PolyMatrix v = poly_zero(ring, rk, 1);
      v(col, 0) = ring.one();
      alpha[w.index(-i)] = v;
      for (int t = 0; t < d - 1; ++t) {
        long k = -i - t;
        alpha[w.index(k - 1)] = mul_truncated(w.phi(k), alpha[w.index(k)], n);
      }
      // beta : W -> P_i, generated at W_{1-i} by the row vector e_row.
      std::vector<PolyMatrix> beta(d, poly_zero(ring, 1, rk));
      PolyMatrix u = poly_zero(ring, 1, rk);
      u(0, row) = ring.one();
      beta[w.index(1 - i)] = u;
      for (int t = 0; t < d - 1; ++t) {
        long k = 2 - i + t;
        beta[w.index(k)] = mul_truncated(beta[w.index(k - 1)], w.phi(k), n);
      }
      Polynomial s = c(row, col);
      Polynomial sinv = (s.is_constant()) ? ring.constant(s.constant_term().inverse())
                                          : jet_inverse(s, n);
      std::vector<PolyMatrix> image, complement;
      for (int k = 0; k < d; ++k) {
        PolyMatrix e = mul_truncated(alpha[k], beta[k], n).scaled(sinv);
        e = truncate(e, n);
        PolyMatrix f = poly_identity(ring, rk) - e;
        auto piv = rref(constant_part(f)).pivots;
        PolyMatrix co = poly_zero(ring, rk, piv.size());
        for (std::size_t q = 0; q < piv.size(); ++q)
          for (std::size_t r = 0; r < rk; ++r) co(r, q) = f(r, piv[q]);
        image.push_back(alpha[k]);
        complement.push_back(co);
      }
      Splitting sp = split_along(w, image, complement, n);
      if (sp.precision != 0 || !s.is_constant() || !sp.off_diagonal_vanishes) exact = false;
      for (int k = 0; k < d; ++k) {
        PolyMatrix lifted = poly_identity(ring, total);
        lifted.set_block(done, done, sp.witness.comp(k));
        acc[k] = mul(acc[k], lifted);
      }
      rep.shifts.push_back(i);
      w = sp.complement;
      ++done;
      split = true;
    }
    if (!split) return rep;
  }
  rep.sum = projective_sum(ring, d, w0.f(), rep.shifts);
  rep.precision = exact ? 0 : n;
  rep.witness = Morphism(rep.sum, w0, acc);
  bool morphism_ok = exact ? is_morphism(rep.witness) : is_morphism_mod(rep.witness, n);
  rep.verified = morphism_ok && is_isomorphism(rep.witness);
  return rep;
}

}  // namespace mfac
