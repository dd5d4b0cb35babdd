#pragma once

// Helpers and independent reference computations shared by the test
// binaries. Nothing here calls the library's determinant, tensor or
// root-sum code.

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "matfac/parser.hpp"
#include "matfac/tensor.hpp"

namespace oracle {

using namespace mfac;

inline Polynomial P(const Ring& r, const std::string& text) { return parse_poly(text, r); }

inline PolyMatrix M(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m = poly_zero(r, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_poly(rows[i][j], r);
  return m;
}

// Rank-one factorization (e_1, ..., e_{d-1}, e_0) in tuple order.
inline MatFac rank_one(const Ring& r, const std::vector<std::string>& entries) {
  Polynomial f = r.one();
  std::vector<PolyMatrix> maps;
  for (const auto& e : entries) {
    Polynomial p = parse_poly(e, r);
    f *= p;
    maps.push_back(poly_scalar(r, 1, p));
  }
  return MatFac(r, static_cast<int>(entries.size()), f, maps);
}

// Rank-two monomial factorization of a^2 c_3 ... c_d:
// ([[a, b], [0, a]], [[a, -b], [0, a]], c_3 I, ..., c_d I).
inline MatFac rank_two(const Ring& r, const std::string& a, const std::string& b,
                       const std::vector<std::string>& rest) {
  std::vector<PolyMatrix> maps{M(r, {{a, b}, {"0", a}}), M(r, {{a, "-" + b}, {"0", a}})};
  Polynomial f = parse_poly(a, r).pow(2);
  for (const auto& c : rest) {
    maps.push_back(poly_scalar(r, 2, parse_poly(c, r)));
    f *= parse_poly(c, r);
  }
  return MatFac(r, static_cast<int>(maps.size()), f, maps);
}

// Laplace expansion along the first remaining row, memoized on the set of
// used columns. Independent of the elimination-based determinant.
inline Polynomial cofactor_det(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n > 63) throw std::runtime_error("cofactor oracle limited to 63 columns");
  const Ring& ring = m.zero().ring();
  std::unordered_map<std::uint64_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint64_t used) -> Polynomial {
    if (row == n) return ring.one();
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Polynomial acc = ring.zero();
    std::size_t free_pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used >> c & 1) continue;
      if (!m(row, c).is_zero()) {
        Polynomial term = m(row, c);
        term *= self(self, row + 1, used | (std::uint64_t{1} << c));
        if (free_pos % 2) acc -= term; else acc += term;
      }
      ++free_pos;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

// zeta_m^k as a complex number.
inline std::complex<double> croot(int m, long k) {
  const double pi = 3.14159265358979323846;
  return std::polar(1.0, 2 * pi * static_cast<double>(k) / m);
}

// Numeric value of an element of Q(zeta_m) from its power-basis coordinates.
inline std::complex<double> to_complex(const CycloElem& a) {
  std::complex<double> v = 0;
  const int m = a.field().conductor();
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) v += a.coeffs()[j].get_d() * croot(m, static_cast<long>(j));
  return v;
}

}  // namespace oracle
