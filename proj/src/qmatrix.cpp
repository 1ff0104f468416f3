#include "gradecat/qmatrix.hpp"

#include <algorithm>

namespace gradecat {

QMat QMat::identity(int n) {
  QMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

std::vector<Rat> QMat::col(int c) const {
  std::vector<Rat> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, c);
  return v;
}

void QMat::set_col(int c, const std::vector<Rat>& v) {
  for (int i = 0; i < rows; ++i) at(i, c) = v[i];
}

QMat qmul(const QMat& A, const QMat& B, const Field& F) {
  if (A.cols != B.rows) fail(ErrCode::DimensionMismatch, "matrix product shape");
  QMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (F.is_zero(A.at(i, k))) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = F.add(C.at(i, j), F.mul(A.at(i, k), B.at(k, j)));
    }
  return C;
}

std::vector<Rat> qmul_vec(const QMat& A, const std::vector<Rat>& x, const Field& F) {
  if (int(x.size()) != A.cols) fail(ErrCode::DimensionMismatch, "matrix-vector shape");
  std::vector<Rat> y(A.rows, F.zero());
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (!F.is_zero(A.at(i, j))) y[i] = F.add(y[i], F.mul(A.at(i, j), x[j]));
  return y;
}

std::vector<int> rref(QMat& A, const Field& F) {
  for (auto& v : A.a) v = F.normalize(v);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    int sel = -1;
    for (int i = r; i < A.rows; ++i)
      if (!F.is_zero(A.at(i, c))) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < A.cols; ++j) std::swap(A.at(sel, j), A.at(r, j));
    Rat piv = F.inv(A.at(r, c));
    for (int j = c; j < A.cols; ++j) A.at(r, j) = F.mul(A.at(r, j), piv);
    for (int i = 0; i < A.rows; ++i) {
      if (i == r || F.is_zero(A.at(i, c))) continue;
      Rat f = A.at(i, c);
      for (int j = c; j < A.cols; ++j)
        A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  // drop zero rows so that equal row spaces give equal matrices
  QMat B(int(pivots.size()), A.cols);
  for (size_t i = 0; i < pivots.size(); ++i)
    for (int j = 0; j < A.cols; ++j) B.at(int(i), j) = A.at(int(i), j);
  A = B;
  return pivots;
}

int rank(QMat A, const Field& F) { return int(rref(A, F).size()); }

std::vector<Rat> reduce_against(const QMat& ech, const std::vector<int>& pivots,
                                std::vector<Rat> v, const Field& F) {
  if (int(v.size()) != ech.cols && ech.rows > 0)
    fail(ErrCode::DimensionMismatch, "reduce_against vector length");
  for (int r = 0; r < ech.rows; ++r) {
    const Rat& coeff = v[pivots[r]];
    if (F.is_zero(coeff)) continue;
    Rat f = F.normalize(coeff);
    for (int j = 0; j < ech.cols; ++j)
      v[j] = F.sub(v[j], F.mul(f, ech.at(r, j)));
  }
  for (auto& x : v) x = F.normalize(x);
  return v;
}

std::optional<std::vector<Rat>> solve_field(const QMat& A, const std::vector<Rat>& b,
                                            const Field& F) {
  if (int(b.size()) != A.rows) fail(ErrCode::DimensionMismatch, "solve rhs length");
  QMat M(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, A.cols) = b[i];
  }
  std::vector<int> piv = rref(M, F);
  std::vector<Rat> x(A.cols, F.zero());
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == A.cols) return std::nullopt;  // inconsistent row
    x[piv[r]] = M.at(int(r), A.cols);
  }
  return x;
}

std::optional<QMat> inverse(const QMat& A, const Field& F) {
  if (A.rows != A.cols) fail(ErrCode::DimensionMismatch, "inverse of non-square matrix");
  int n = A.rows;
  QMat M(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M.at(i, j) = A.at(i, j);
    M.at(i, n + i) = 1;
  }
  std::vector<int> piv = rref(M, F);
  if (int(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  QMat R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R.at(i, j) = M.at(i, n + j);
  return R;
}

bool is_zero_vec(const std::vector<Rat>& v, const Field& F) {
  return std::all_of(v.begin(), v.end(), [&](const Rat& x) { return F.is_zero(x); });
}

}  // namespace gradecat
