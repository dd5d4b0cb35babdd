#include "matfac/linalg.hpp"

namespace mfac {

RowEchelon rref(const FieldMatrix& m) {
  FieldMatrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    CycloElem inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      CycloElem f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {a, pivots};
}

std::size_t rank(const FieldMatrix& m) { return rref(m).pivots.size(); }

CycloElem determinant(const FieldMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("determinant of non-square " + m.shape());
  const CycloField& k = m.zero().field();
  FieldMatrix a = m;
  CycloElem det = k.one();
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return k.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    CycloElem inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      CycloElem f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!a(c, j).is_zero()) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<FieldMatrix> inverse(const FieldMatrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of non-square " + m.shape());
  const std::size_t n = m.rows();
  const CycloField& k = m.zero().field();
  FieldMatrix aug(n, 2 * n, k.zero());
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < n; ++i) aug(i, n + i) = k.one();
  RowEchelon e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::vector<std::vector<CycloElem>> nullspace(const FieldMatrix& m) {
  RowEchelon e = rref(m);
  const CycloField& k = m.zero().field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<CycloElem>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<CycloElem> v(m.cols(), k.zero());
    v[f] = k.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseSystem::SparseSystem(CycloField field, std::size_t unknowns)
    : field_(std::move(field)), unknowns_(unknowns) {}

void SparseSystem::reduce(Row& row) const {
  std::vector<std::size_t> hits;
  for (const auto& [c, v] : row)
    if (pivot_rows_.count(c)) hits.push_back(c);
  for (std::size_t c : hits) {
    auto it = row.find(c);
    if (it == row.end()) continue;
    CycloElem f = it->second;
    for (const auto& [pc, pv] : pivot_rows_.at(c)) {
      auto [slot, inserted] = row.try_emplace(pc, -(f * pv));
      if (!inserted) {
        slot->second -= f * pv;
        if (slot->second.is_zero()) row.erase(slot);
      }
    }
  }
}

void SparseSystem::add_equation(Row row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second.is_zero()) {
      it = row.erase(it);
    } else {
      ++it;
    }
  }
  reduce(row);
  if (row.empty()) return;
  std::size_t pivot = row.begin()->first;
  CycloElem inv = row.begin()->second.inverse();
  for (auto& [c, v] : row) v *= inv;
  // Keep pivot rows fully reduced against each other.
  for (auto& [pc, prow] : pivot_rows_) {
    auto it = prow.find(pivot);
    if (it == prow.end()) continue;
    CycloElem f = it->second;
    for (const auto& [c, v] : row) {
      auto [slot, inserted] = prow.try_emplace(c, -(f * v));
      if (!inserted) {
        slot->second -= f * v;
        if (slot->second.is_zero()) prow.erase(slot);
      }
    }
  }
  pivot_rows_.emplace(pivot, std::move(row));
}

std::vector<std::vector<CycloElem>> SparseSystem::solution_basis() const {
  std::vector<std::vector<CycloElem>> basis;
  for (std::size_t f = 0; f < unknowns_; ++f) {
    if (pivot_rows_.count(f)) continue;
    std::vector<CycloElem> v(unknowns_, field_.zero());
    v[f] = field_.one();
    for (const auto& [p, prow] : pivot_rows_) {
      auto it = prow.find(f);
      if (it != prow.end()) v[p] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace mfac
