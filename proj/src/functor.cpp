#include "gradecat/functor.hpp"

namespace gradecat {

bool Functor::is_isomorphism() const {
  for (bool b : invertible_on)
    if (!b) return false;
  return true;
}

std::vector<Rat> Functor::apply(int s, int t, const std::vector<Rat>& v) const {
  return qmul_vec(matrices[size_t(s) * src->nv() + t], v, tgt->field);
}

Functor build_functor(const PresentedCategory& src, const PresentedCategory& tgt,
                      const std::vector<QMat>& matrices) {
  if (src.quiver.vertices != tgt.quiver.vertices)
    fail(ErrCode::DimensionMismatch, "functor requires identical object sets");
  if (!(src.field == tgt.field)) fail(ErrCode::DimensionMismatch, "functor requires a common field");
  int nv = src.nv();
  if (int(matrices.size()) != nv * nv)
    fail(ErrCode::DimensionMismatch, "one matrix per ordered vertex pair expected");
  Functor F;
  F.src = &src;
  F.tgt = &tgt;
  F.matrices = matrices;
  const Field& k = tgt.field;
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t) {
      const QMat& m = matrices[size_t(s) * nv + t];
      if (m.rows != tgt.hom(s, t).dim() || m.cols != src.hom(s, t).dim())
        fail(ErrCode::DimensionMismatch,
             "matrix at " + src.quiver.vertices[s] + "->" + src.quiver.vertices[t] +
                 " disagrees with hom dimensions");
      F.invertible_on.push_back(m.rows == m.cols && inverse(m, k).has_value());
    }
  // identities are preserved
  for (int b = 0; b < nv; ++b) {
    if (F.apply(b, b, src.id_vec(b)) != tgt.id_vec(b))
      fail(ErrCode::NotFunctorial, "identity at " + src.quiver.vertices[b] + " not preserved");
  }
  // composition law on all pairs of quotient-basis elements
  for (int x = 0; x < nv; ++x)
    for (int y = 0; y < nv; ++y) {
      int dxy = src.hom(x, y).dim();
      if (dxy == 0) continue;
      for (int z = 0; z < nv; ++z) {
        int dyz = src.hom(y, z).dim();
        if (dyz == 0) continue;
        for (int i = 0; i < dxy; ++i)
          for (int j = 0; j < dyz; ++j) {
            std::vector<Rat> ei(dxy, Rat(0)), ej(dyz, Rat(0));
            ei[i] = 1;
            ej[j] = 1;
            std::vector<Rat> lhs = F.apply(x, z, compose(src, x, y, z, ej, ei));
            std::vector<Rat> rhs =
                compose(tgt, x, y, z, F.apply(y, z, ej), F.apply(x, y, ei));
            if (lhs != rhs)
              fail(ErrCode::NotFunctorial,
                   "composition law fails on basis (" + src.quiver.vertices[x] + "->" +
                       src.quiver.vertices[y] + "#" + std::to_string(i) + ", " +
                       src.quiver.vertices[y] + "->" + src.quiver.vertices[z] + "#" +
                       std::to_string(j) + ")");
          }
      }
    }
  return F;
}

Functor identity_functor(const PresentedCategory& C) {
  std::vector<QMat> mats;
  for (int s = 0; s < C.nv(); ++s)
    for (int t = 0; t < C.nv(); ++t) mats.push_back(QMat::identity(C.hom(s, t).dim()));
  return build_functor(C, C, mats);
}

Functor compose_functor(const Functor& F, const Functor& G) {
  if (F.src != G.tgt) fail(ErrCode::NotComposable, "functor composition endpoints");
  std::vector<QMat> mats;
  int nv = G.src->nv();
  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t)
      mats.push_back(qmul(F.matrices[size_t(s) * nv + t], G.matrices[size_t(s) * nv + t],
                          F.tgt->field));
  return build_functor(*G.src, *F.tgt, mats);
}

bool functor_equal(const Functor& F, const Functor& G) {
  if (F.src != G.src || F.tgt != G.tgt) return false;
  for (size_t i = 0; i < F.matrices.size(); ++i) {
    if (F.matrices[i].rows != G.matrices[i].rows || F.matrices[i].cols != G.matrices[i].cols)
      return false;
    for (int r = 0; r < F.matrices[i].rows; ++r)
      for (int c = 0; c < F.matrices[i].cols; ++c)
        if (!F.tgt->field.is_zero(
                F.tgt->field.sub(F.matrices[i].at(r, c), G.matrices[i].at(r, c))))
          return false;
  }
  return true;
}

}  // namespace gradecat
