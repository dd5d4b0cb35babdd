#pragma once

#include <map>
#include <optional>
#include <vector>

#include "matfac/poly_matrix.hpp"

namespace mfac {

struct RowEchelon {
  FieldMatrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Reduced row echelon form; pivots chosen as the leftmost nonzero column,
// topmost nonzero row, so results are deterministic.
RowEchelon rref(const FieldMatrix& m);
std::size_t rank(const FieldMatrix& m);
CycloElem determinant(const FieldMatrix& m);
std::optional<FieldMatrix> inverse(const FieldMatrix& m);
// Basis of {v : m v = 0}, one column per basis vector.
std::vector<std::vector<CycloElem>> nullspace(const FieldMatrix& m);

// Homogeneous sparse linear system over a cyclotomic field, reduced as rows
// are added.
class SparseSystem {
 public:
  using Row = std::map<std::size_t, CycloElem>;

  SparseSystem(CycloField field, std::size_t unknowns);

  void add_equation(Row row);
  std::size_t unknowns() const { return unknowns_; }
  std::size_t rank() const { return pivot_rows_.size(); }
  // Solution basis; free variables in increasing order, each basis vector has
  // a 1 in its free slot.
  std::vector<std::vector<CycloElem>> solution_basis() const;

 private:
  void reduce(Row& row) const;

  CycloField field_;
  std::size_t unknowns_;
  // pivot column -> normalized row with leading 1 at pivot
  std::map<std::size_t, Row> pivot_rows_;
};

}  // namespace mfac
