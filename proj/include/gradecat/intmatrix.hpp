#ifndef GRADECAT_INTMATRIX_HPP
#define GRADECAT_INTMATRIX_HPP

#include <optional>
#include <vector>

#include "gradecat/numeric.hpp"

namespace gradecat {

/* Dense arbitrary-precision integer matrix, row-major. */
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}
  static IntMat identity(int n);

  Int& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[size_t(r) * cols + c]; }
  bool operator==(const IntMat&) const = default;

  IntMat transpose() const;
  std::vector<Int> col(int c) const;
  void set_col(int c, const std::vector<Int>& v);
};

IntMat imul(const IntMat& A, const IntMat& B);
std::vector<Int> imul_vec(const IntMat& A, const std::vector<Int>& x);
IntMat hconcat(const IntMat& A, const IntMat& B);
bool is_zero(const IntMat& A);

/* Determinant by fraction-free Bareiss elimination (exact). */
Int det(const IntMat& A);

/* Smith normal form U*A*V = D with U, V unimodular and D diagonal with
 * d1 | d2 | ... | dk >= 0 (ones first, then proper invariants, zeros last).
 * Pivot selection: minimal |entry| among nonzero candidates, ties broken
 * row-major, which makes U and V deterministic. */
struct SmithResult {
  IntMat U, D, V;
  std::vector<Int> diag() const;  // min(rows, cols) diagonal entries
};
SmithResult smith_normal_form(const IntMat& A);

/* Basis of the integer kernel { x : A x = 0 }, one column per basis vector. */
IntMat kernel_basis(const IntMat& A);

/* One integer solution of A x = b, if any. */
std::optional<std::vector<Int>> solve_int(const IntMat& A, const std::vector<Int>& b);

/* Exact inverse of a unimodular matrix. */
IntMat unimodular_inverse(const IntMat& U);

}  // namespace gradecat

#endif
