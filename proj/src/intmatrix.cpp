#include "gradecat/intmatrix.hpp"

#include <algorithm>
#include <cstdlib>

namespace gradecat {

IntMat IntMat::identity(int n) {
  IntMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IntMat IntMat::transpose() const {
  IntMat T(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
  return T;
}

std::vector<Int> IntMat::col(int c) const {
  std::vector<Int> v(rows);
  for (int i = 0; i < rows; ++i) v[i] = at(i, c);
  return v;
}

void IntMat::set_col(int c, const std::vector<Int>& v) {
  for (int i = 0; i < rows; ++i) at(i, c) = v[i];
}

IntMat imul(const IntMat& A, const IntMat& B) {
  if (A.cols != B.rows) fail(ErrCode::DimensionMismatch, "integer matrix product shape");
  IntMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Int& aik = A.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
    }
  return C;
}

std::vector<Int> imul_vec(const IntMat& A, const std::vector<Int>& x) {
  if (int(x.size()) != A.cols) fail(ErrCode::DimensionMismatch, "integer matrix-vector shape");
  std::vector<Int> y(A.rows, Int(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (A.at(i, j) != 0) y[i] += A.at(i, j) * x[j];
  return y;
}

IntMat hconcat(const IntMat& A, const IntMat& B) {
  if (A.rows != B.rows) fail(ErrCode::DimensionMismatch, "hconcat row counts");
  IntMat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

bool is_zero(const IntMat& A) {
  return std::all_of(A.a.begin(), A.a.end(), [](const Int& z) { return z == 0; });
}

Int det(const IntMat& A) {
  if (A.rows != A.cols) fail(ErrCode::DimensionMismatch, "determinant of non-square matrix");
  int n = A.rows;
  if (n == 0) return 1;
  IntMat M = A;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (M.at(k, k) == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (M.at(i, k) != 0) { sw = i; break; }
      if (sw < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(sw, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
    prev = M.at(k, k);
  }
  return sign > 0 ? M.at(n - 1, n - 1) : Int(-M.at(n - 1, n - 1));
}

namespace {

struct SnfWork {
  IntMat U, D, V;

  void row_swap(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < D.cols; ++j) std::swap(D.at(a, j), D.at(b, j));
    for (int j = 0; j < U.cols; ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void col_swap(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, a), D.at(i, b));
    for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  void row_addmul(int dst, int src, const Int& q) {  // row dst += q * row src
    if (q == 0) return;
    for (int j = 0; j < D.cols; ++j) D.at(dst, j) += q * D.at(src, j);
    for (int j = 0; j < U.cols; ++j) U.at(dst, j) += q * U.at(src, j);
  }
  void col_addmul(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < D.rows; ++i) D.at(i, dst) += q * D.at(i, src);
    for (int i = 0; i < V.rows; ++i) V.at(i, dst) += q * V.at(i, src);
  }
  void row_negate(int r) {
    for (int j = 0; j < D.cols; ++j) D.at(r, j) = -D.at(r, j);
    for (int j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
  }

  /* minimal |entry| over the nonzero entries of D[t.., t..], ties row-major */
  bool find_pivot(int t, int& pi, int& pj) const {
    bool found = false;
    Int best;
    for (int i = t; i < D.rows; ++i)
      for (int j = t; j < D.cols; ++j) {
        const Int& v = D.at(i, j);
        if (v == 0) continue;
        Int av = abs(v);
        if (!found || av < best) {
          found = true;
          best = av;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& A) {
  SnfWork w{IntMat::identity(A.rows), A, IntMat::identity(A.cols)};
  int m = A.rows, n = A.cols;
  int lim = std::min(m, n);
  for (int t = 0; t < lim; ++t) {
    int pi, pj;
    if (!w.find_pivot(t, pi, pj)) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);
    for (bool again = true; again;) {
      again = false;
      // clear the pivot column; truncated quotients leave remainders strictly
      // smaller than the pivot, so re-pivoting always makes progress
      for (int i = t + 1; i < m; ++i)
        if (w.D.at(i, t) != 0) w.row_addmul(i, t, Int(-(w.D.at(i, t) / w.D.at(t, t))));
      {
        int best = -1;
        for (int i = t + 1; i < m; ++i)
          if (w.D.at(i, t) != 0 &&
              (best < 0 || abs(w.D.at(i, t)) < abs(w.D.at(best, t))))
            best = i;
        if (best >= 0) {
          w.row_swap(t, best);
          again = true;
          continue;
        }
      }
      for (int j = t + 1; j < n; ++j)
        if (w.D.at(t, j) != 0) w.col_addmul(j, t, Int(-(w.D.at(t, j) / w.D.at(t, t))));
      {
        int best = -1;
        for (int j = t + 1; j < n; ++j)
          if (w.D.at(t, j) != 0 &&
              (best < 0 || abs(w.D.at(t, j)) < abs(w.D.at(t, best))))
            best = j;
        if (best >= 0) {
          w.col_swap(t, best);
          again = true;
          continue;
        }
      }
      // pivot must divide the whole remaining block for the invariant chain
      for (int i = t + 1; i < m && !again; ++i)
        for (int j = t + 1; j < n && !again; ++j)
          if (w.D.at(i, j) % w.D.at(t, t) != 0) {
            w.row_addmul(t, i, Int(1));
            again = true;
          }
    }
    if (w.D.at(t, t) < 0) w.row_negate(t);
  }
  return SmithResult{w.U, w.D, w.V};
}

std::vector<Int> SmithResult::diag() const {
  int lim = std::min(D.rows, D.cols);
  std::vector<Int> d(lim);
  for (int i = 0; i < lim; ++i) d[i] = D.at(i, i);
  return d;
}

IntMat kernel_basis(const IntMat& A) {
  SmithResult s = smith_normal_form(A);
  int lim = std::min(A.rows, A.cols);
  std::vector<int> free_cols;
  for (int j = 0; j < A.cols; ++j)
    if (j >= lim || s.D.at(j, j) == 0) free_cols.push_back(j);
  IntMat K(A.cols, int(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k)
    K.set_col(int(k), s.V.col(free_cols[k]));
  return K;
}

std::optional<std::vector<Int>> solve_int(const IntMat& A, const std::vector<Int>& b) {
  if (int(b.size()) != A.rows) fail(ErrCode::DimensionMismatch, "solve_int rhs length");
  SmithResult s = smith_normal_form(A);
  std::vector<Int> c = imul_vec(s.U, b);
  int lim = std::min(A.rows, A.cols);
  std::vector<Int> y(A.cols, Int(0));
  for (int i = 0; i < A.rows; ++i) {
    if (i < lim && s.D.at(i, i) != 0) {
      if (c[i] % s.D.at(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.D.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return imul_vec(s.V, y);
}

IntMat unimodular_inverse(const IntMat& U) {
  if (U.rows != U.cols) fail(ErrCode::DimensionMismatch, "inverse of non-square matrix");
  SmithResult s = smith_normal_form(U);
  for (int i = 0; i < U.rows; ++i)
    if (s.D.at(i, i) != 1) fail(ErrCode::NoSolution, "matrix is not unimodular");
  return imul(s.V, s.U);
}

}  // namespace gradecat
