#include "matfac/poly_matrix.hpp"

#include <algorithm>

#include "matfac/linalg.hpp"

namespace mfac {

PolyMatrix poly_zero(const Ring& ring, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, cols, ring.zero());
}

PolyMatrix poly_identity(const Ring& ring, std::size_t n) {
  return PolyMatrix::identity(n, ring.zero(), ring.one());
}

PolyMatrix poly_scalar(const Ring& ring, std::size_t n, const Polynomial& s) {
  return PolyMatrix::identity(n, ring.zero(), s);
}

FieldMatrix field_zero(const CycloField& k, std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, cols, k.zero());
}

FieldMatrix field_identity(const CycloField& k, std::size_t n) {
  return FieldMatrix::identity(n, k.zero(), k.one());
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    }
  return r;
}

PolyMatrix block_diagonal(const Ring& ring, const std::vector<PolyMatrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  PolyMatrix r = poly_zero(ring, rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

FieldMatrix constant_part(const PolyMatrix& m) {
  FieldMatrix r(m.rows(), m.cols(), m.zero().ring().field().zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).constant_term();
  return r;
}

PolyMatrix lift(const FieldMatrix& m, const Ring& ring) {
  PolyMatrix r = poly_zero(ring, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = ring.constant(m(i, j));
  return r;
}

PolyMatrix truncate(const PolyMatrix& m, unsigned n) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).truncated(n);
  return r;
}

PolyMatrix mul_truncated(const PolyMatrix& a, const PolyMatrix& b, unsigned n) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product " + a.shape() + " * " + b.shape());
  PolyMatrix r(a.rows(), b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += mfac::mul_truncated(a(i, k), b(k, j), n);
      }
    }
  return r;
}

PolyMatrix reduce_mod_vars(const PolyMatrix& m, const std::vector<std::string>& kill) {
  PolyMatrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = reduce_mod_vars(m(i, j), kill);
  return r;
}

unsigned max_total_degree(const PolyMatrix& m) {
  unsigned best = 0;
  for (const auto& p : m.data()) best = std::max(best, p.total_degree());
  return best;
}

std::optional<unsigned> min_order(const PolyMatrix& m) {
  std::optional<unsigned> best;
  for (const auto& p : m.data()) {
    if (p.is_zero()) continue;
    unsigned o = order_of(p);
    if (!best || o < *best) best = o;
  }
  return best;
}

bool has_zero_constant_terms(const PolyMatrix& m) {
  for (const auto& p : m.data())
    if (!p.constant_term().is_zero()) return false;
  return true;
}

bool vanishes_below(const PolyMatrix& m, unsigned n) {
  for (const auto& p : m.data())
    if (!p.is_zero() && order_of(p) < n) return false;
  return true;
}

Polynomial determinant(const PolyMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("determinant of non-square " + m.shape());
  const Ring& ring = m.zero().ring();
  const std::size_t n = m.rows();
  if (n == 0) return ring.one();
  PolyMatrix a = m;
  bool negate = false;
  Polynomial prev = ring.one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t p = k; p < n; ++p) {
      if (a(p, k).is_zero()) continue;
      if (best == n || a(p, k).num_terms() < a(best, k).num_terms()) best = p;
    }
    if (best == n) return ring.zero();
    if (best != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(best, j));
      negate = !negate;
    }
    const Polynomial& piv = a(k, k);
    bool unit_prev = prev.is_constant() && prev.constant_term().is_one();
    for (std::size_t i = k + 1; i < n; ++i) {
      const Polynomial lead = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial v = piv * a(i, j);
        if (!lead.is_zero() && !a(k, j).is_zero()) v -= lead * a(k, j);
        a(i, j) = unit_prev ? v : exact_divide(v, prev);
      }
      a(i, k) = ring.zero();
    }
    prev = piv;
  }
  Polynomial det = a(n - 1, n - 1);
  return negate ? -det : det;
}

PolyMatrix jet_inverse(const PolyMatrix& m, unsigned n) {
  if (!m.is_square()) throw ShapeMismatch("inverse of non-square " + m.shape());
  const Ring& ring = m.zero().ring();
  FieldMatrix c = constant_part(m);
  auto cinv = inverse(c);
  if (!cinv) throw DivisionByZero("matrix is not invertible at the origin");
  PolyMatrix ci = lift(*cinv, ring);
  // m = c (1 + u) with u = c^{-1}(m - c), so m^{-1} = sum (-u)^k c^{-1}.
  PolyMatrix u = -(ci * (m - lift(c, ring)));
  PolyMatrix sum = poly_identity(ring, m.rows());
  PolyMatrix power = sum;
  for (unsigned k = 1; k < n; ++k) {
    power = mul_truncated(power, u, n);
    if (power.is_zero()) break;
    sum += power;
  }
  return mul_truncated(truncate(sum, n), ci, n);
}

std::optional<PolyMatrix> exact_inverse(const PolyMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of non-square " + m.shape());
  const Ring& ring = m.zero().ring();
  const std::size_t n = m.rows();
  Polynomial det = determinant(m);
  if (!det.is_constant() || det.is_zero()) return std::nullopt;
  CycloElem dinv = det.constant_term().inverse();
  bool constant_entries = std::all_of(m.data().begin(), m.data().end(),
                                      [](const Polynomial& p) { return p.is_constant(); });
  if (constant_entries) return lift(*inverse(constant_part(m)), ring);
  PolyMatrix r = poly_zero(ring, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor = poly_zero(ring, n - 1, n - 1);
      for (std::size_t a = 0, ra = 0; a < n; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, cb = 0; b < n; ++b) {
          if (b == j) continue;
          minor(ra, cb++) = m(a, b);
        }
        ++ra;
      }
      Polynomial cof = determinant(minor) * dinv;
      r(j, i) = ((i + j) % 2) ? -cof : cof;
    }
  return r;
}

std::vector<bool> support(const PolyMatrix& m) {
  std::vector<bool> s(m.zero().ring().nvars(), false);
  for (const auto& p : m.data()) {
    auto ps = p.support();
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = s[i] || ps[i];
  }
  return s;
}

}  // namespace mfac
