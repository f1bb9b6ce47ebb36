#include "pgap/linalg.hpp"

#include "pgap/error.hpp"

namespace pgap {

void Matrix::append_row(const std::vector<Elem>& values) {
  require(values.size() == cols_, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require(cols_ == o.rows_, "matrix dimension mismatch");
  require(same_field(*field_, *o.field_), "matrix field mismatch");
  const Field& f = *field_;
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(a, o.at(k, j)));
    }
  return out;
}

bool Matrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

Echelon row_reduce(Matrix m) {
  const Field& f = *m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m.at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    const Elem inv = f.inv(m.at(r, c));
    Elem* pr = m.row(r);
    for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* ri = m.row(i);
      const Elem factor = ri[c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j] != 0) ri[j] = f.sub(ri[j], f.mul(factor, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(m.field(), 0, cols);
  for (std::size_t i = 0; i < r; ++i) reduced.append_row(std::vector<Elem>(m.row(i), m.row(i) + cols));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Matrix nullspace(const Matrix& m) {
  const Field& f = *m.field();
  const Echelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(m.field(), 0, cols);
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = f.neg(e.reduced.at(i, free));
    basis.append_row(v);
  }
  return basis;
}

Matrix row_basis(const Matrix& m) { return row_reduce(m).reduced; }

}  // namespace pgap
