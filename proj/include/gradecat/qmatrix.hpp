#ifndef GRADECAT_QMATRIX_HPP
#define GRADECAT_QMATRIX_HPP

#include <optional>
#include <vector>

#include "gradecat/numeric.hpp"

namespace gradecat {

/* Dense matrix over a Field (rationals or F_p), row-major. */
struct QMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}
  static QMat identity(int n);

  Rat& at(int r, int c) { return a[size_t(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[size_t(r) * cols + c]; }
  bool operator==(const QMat&) const = default;

  std::vector<Rat> col(int c) const;
  void set_col(int c, const std::vector<Rat>& v);
};

QMat qmul(const QMat& A, const QMat& B, const Field& F);
std::vector<Rat> qmul_vec(const QMat& A, const std::vector<Rat>& x, const Field& F);

/* In-place reduced row echelon form; returns the pivot columns in order.
 * RREF is canonical for the row space, so any generating set of the same
 * subspace yields byte-identical echelon data. */
std::vector<int> rref(QMat& A, const Field& F);

int rank(QMat A, const Field& F);

/* Reduce v against echelon rows (pivot columns as returned by rref):
 * the result is the canonical representative of v modulo the row space,
 * supported on non-pivot coordinates. */
std::vector<Rat> reduce_against(const QMat& ech, const std::vector<int>& pivots,
                                std::vector<Rat> v, const Field& F);

/* One solution of A x = b over the field, if any. */
std::optional<std::vector<Rat>> solve_field(const QMat& A, const std::vector<Rat>& b,
                                            const Field& F);

/* Inverse of a square matrix; nullopt when singular. */
std::optional<QMat> inverse(const QMat& A, const Field& F);

bool is_zero_vec(const std::vector<Rat>& v, const Field& F);

}  // namespace gradecat

#endif
