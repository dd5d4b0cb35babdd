#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matfac/matrix.hpp"
#include "matfac/polynomial.hpp"

namespace mfac {

using PolyMatrix = Matrix<Polynomial>;
using FieldMatrix = Matrix<CycloElem>;

PolyMatrix poly_zero(const Ring& ring, std::size_t rows, std::size_t cols);
PolyMatrix poly_identity(const Ring& ring, std::size_t n);
PolyMatrix poly_scalar(const Ring& ring, std::size_t n, const Polynomial& s);

FieldMatrix field_zero(const CycloField& k, std::size_t rows, std::size_t cols);
FieldMatrix field_identity(const CycloField& k, std::size_t n);

// Kronecker product: A (x) B, A's index varying slower.
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix block_diagonal(const Ring& ring, const std::vector<PolyMatrix>& blocks);

FieldMatrix constant_part(const PolyMatrix& m);
PolyMatrix lift(const FieldMatrix& m, const Ring& ring);

PolyMatrix truncate(const PolyMatrix& m, unsigned n);
PolyMatrix mul_truncated(const PolyMatrix& a, const PolyMatrix& b, unsigned n);
PolyMatrix reduce_mod_vars(const PolyMatrix& m, const std::vector<std::string>& kill);

unsigned max_total_degree(const PolyMatrix& m);
// Least order among nonzero entries; nullopt if the matrix is zero.
std::optional<unsigned> min_order(const PolyMatrix& m);
bool has_zero_constant_terms(const PolyMatrix& m);
// True iff every entry has no terms of total degree < n.
bool vanishes_below(const PolyMatrix& m, unsigned n);

// Fraction-free (Bareiss) determinant with exact polynomial division.
Polynomial determinant(const PolyMatrix& m);

// Inverse modulo total degree n; the constant part must be invertible.
PolyMatrix jet_inverse(const PolyMatrix& m, unsigned n);

// Exact polynomial inverse when det(m) is a nonzero constant.
std::optional<PolyMatrix> exact_inverse(const PolyMatrix& m);

std::vector<bool> support(const PolyMatrix& m);

}  // namespace mfac
