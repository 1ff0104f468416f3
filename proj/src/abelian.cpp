#include "gradecat/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace gradecat {

Int AbelianGroup::order() const {
  if (rank > 0) fail(ErrCode::InfiniteGroup, "order of an infinite group");
  Int o = 1;
  for (const Int& d : torsion) o *= d;
  return o;
}

std::string AbelianGroup::str() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (rank == 1) { os << "Z"; first = false; }
  else if (rank > 1) { os << "Z^" << rank; first = false; }
  for (const Int& d : torsion) {
    if (!first) os << " x ";
    os << "Z/" << int_str(d);
    first = false;
  }
  return os.str();
}

AbelianGroup AbelianGroup::cyclic(const Int& n) {
  if (n == 0) return free(1);
  if (n == 1) return trivial();
  AbelianGroup g;
  g.torsion = {n};
  return g;
}

bool GroupElement::operator<(const GroupElement& o) const {
  if (free_part != o.free_part) return free_part < o.free_part;
  return torsion_part < o.torsion_part;
}

GroupElement gel_zero(const AbelianGroup& G) {
  return GroupElement{std::vector<Int>(G.rank, Int(0)),
                      std::vector<Int>(G.torsion.size(), Int(0))};
}

GroupElement gel_gen(const AbelianGroup& G, size_t k) {
  GroupElement e = gel_zero(G);
  if (k < G.rank) e.free_part[k] = 1;
  else e.torsion_part[k - G.rank] = 1;
  return gel_normalize(G, e);
}

GroupElement gel_normalize(const AbelianGroup& G, GroupElement e) {
  if (e.free_part.size() != G.rank || e.torsion_part.size() != G.torsion.size())
    fail(ErrCode::DimensionMismatch, "element does not match group shape");
  for (size_t i = 0; i < G.torsion.size(); ++i) {
    Int r = e.torsion_part[i] % G.torsion[i];
    if (r < 0) r += G.torsion[i];
    e.torsion_part[i] = r;
  }
  return e;
}

GroupElement gel_add(const AbelianGroup& G, const GroupElement& a, const GroupElement& b) {
  GroupElement c = a;
  for (size_t i = 0; i < G.rank; ++i) c.free_part[i] += b.free_part[i];
  for (size_t i = 0; i < G.torsion.size(); ++i) c.torsion_part[i] += b.torsion_part[i];
  return gel_normalize(G, c);
}

GroupElement gel_neg(const AbelianGroup& G, const GroupElement& a) {
  GroupElement c = a;
  for (auto& v : c.free_part) v = -v;
  for (auto& v : c.torsion_part) v = -v;
  return gel_normalize(G, c);
}

GroupElement gel_sub(const AbelianGroup& G, const GroupElement& a, const GroupElement& b) {
  return gel_add(G, a, gel_neg(G, b));
}

GroupElement gel_smul(const AbelianGroup& G, const Int& n, const GroupElement& a) {
  GroupElement c = a;
  for (auto& v : c.free_part) v *= n;
  for (auto& v : c.torsion_part) v *= n;
  return gel_normalize(G, c);
}

bool gel_is_zero(const AbelianGroup& G, const GroupElement& a) {
  GroupElement n = gel_normalize(G, a);
  return std::all_of(n.free_part.begin(), n.free_part.end(), [](const Int& v) { return v == 0; }) &&
         std::all_of(n.torsion_part.begin(), n.torsion_part.end(), [](const Int& v) { return v == 0; });
}

std::string gel_str(const AbelianGroup& G, const GroupElement& a) {
  GroupElement e = gel_normalize(G, a);
  if (G.ngens() == 0) return "0";
  std::ostringstream os;
  if (G.ngens() > 1) os << "(";
  bool first = true;
  for (const Int& v : e.free_part) { os << (first ? "" : ",") << int_str(v); first = false; }
  for (const Int& v : e.torsion_part) { os << (first ? "" : ",") << int_str(v); first = false; }
  if (G.ngens() > 1) os << ")";
  return os.str();
}

std::vector<Int> gel_lift(const AbelianGroup& G, const GroupElement& a) {
  GroupElement e = gel_normalize(G, a);
  std::vector<Int> v;
  v.reserve(G.ngens());
  v.insert(v.end(), e.free_part.begin(), e.free_part.end());
  v.insert(v.end(), e.torsion_part.begin(), e.torsion_part.end());
  return v;
}

GroupElement gel_from_vec(const AbelianGroup& G, const std::vector<Int>& v) {
  if (v.size() != G.ngens()) fail(ErrCode::DimensionMismatch, "vector does not match group rank");
  GroupElement e;
  e.free_part.assign(v.begin(), v.begin() + G.rank);
  e.torsion_part.assign(v.begin() + G.rank, v.end());
  return gel_normalize(G, e);
}

std::vector<GroupElement> enumerate_elements(const AbelianGroup& G) {
  if (!G.is_finite()) fail(ErrCode::InfiniteGroup, "cannot enumerate " + G.str());
  std::vector<GroupElement> out;
  std::vector<Int> digits(G.torsion.size(), Int(0));
  while (true) {
    out.push_back(gel_from_vec(G, digits));
    int i = int(digits.size()) - 1;
    for (; i >= 0; --i) {
      digits[i] += 1;
      if (digits[i] < G.torsion[i]) break;
      digits[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

IntMat relation_lattice(const AbelianGroup& G) {
  int n = int(G.ngens());
  IntMat L(n, int(G.torsion.size()));
  for (size_t i = 0; i < G.torsion.size(); ++i)
    L.at(int(G.rank + i), int(i)) = G.torsion[i];
  return L;
}

GroupHom GroupHom::identity(const AbelianGroup& G) {
  GroupHom f{G, G, {}};
  for (size_t k = 0; k < G.ngens(); ++k) f.images.push_back(gel_gen(G, k));
  return f;
}

GroupHom GroupHom::zero(const AbelianGroup& G, const AbelianGroup& H) {
  return GroupHom{G, H, std::vector<GroupElement>(G.ngens(), gel_zero(H))};
}

bool hom_well_defined(const GroupHom& f) {
  if (f.images.size() != f.source.ngens()) return false;
  for (size_t i = 0; i < f.source.torsion.size(); ++i)
    if (!gel_is_zero(f.target, gel_smul(f.target, f.source.torsion[i],
                                        f.images[f.source.rank + i])))
      return false;
  return true;
}

GroupElement hom_apply(const GroupHom& f, const GroupElement& x) {
  GroupElement e = gel_normalize(f.source, x);
  GroupElement y = gel_zero(f.target);
  std::vector<Int> v = gel_lift(f.source, e);
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) y = gel_add(f.target, y, gel_smul(f.target, v[k], f.images[k]));
  return y;
}

GroupHom hom_compose(const GroupHom& g, const GroupHom& f) {
  if (!(f.target == g.source)) fail(ErrCode::DimensionMismatch, "hom composition target/source");
  GroupHom h{f.source, g.target, {}};
  for (const GroupElement& im : f.images) h.images.push_back(hom_apply(g, im));
  return h;
}

IntMat hom_matrix(const GroupHom& f) {
  IntMat M(int(f.target.ngens()), int(f.source.ngens()));
  for (size_t c = 0; c < f.images.size(); ++c) {
    std::vector<Int> v = gel_lift(f.target, f.images[c]);
    for (size_t r = 0; r < v.size(); ++r) M.at(int(r), int(c)) = v[r];
  }
  return M;
}

std::string hom_str(const GroupHom& f) {
  std::ostringstream os;
  os << "[";
  for (size_t k = 0; k < f.images.size(); ++k)
    os << (k ? ", " : "") << "g" << k << " -> " << gel_str(f.target, f.images[k]);
  os << "]";
  return os.str();
}

GroupElement Cokernel::project(const std::vector<Int>& x) const {
  if (int(x.size()) != n) fail(ErrCode::DimensionMismatch, "cokernel projection input");
  std::vector<Int> y = imul_vec(U, x);
  GroupElement e;
  for (int i : free_idx) e.free_part.push_back(y[i]);
  for (int i : tors_idx) e.torsion_part.push_back(y[i]);
  return gel_normalize(group, e);
}

std::vector<Int> Cokernel::gen_lift(size_t k) const {
  int coord = k < group.rank ? free_idx[k] : tors_idx[k - group.rank];
  return Uinv.col(coord);
}

Cokernel cokernel(const IntMat& R, int n) {
  if (R.rows != n) fail(ErrCode::DimensionMismatch, "relation matrix row count");
  Cokernel c;
  c.n = n;
  SmithResult s = smith_normal_form(R);
  c.U = s.U;
  c.Uinv = unimodular_inverse(s.U);
  int lim = std::min(n, R.cols);
  c.diag.resize(n);
  for (int i = 0; i < n; ++i) c.diag[i] = i < lim ? s.D.at(i, i) : Int(0);
  for (int i = 0; i < n; ++i) {
    if (c.diag[i] == 0) c.free_idx.push_back(i);
    else if (c.diag[i] >= 2) c.tors_idx.push_back(i);
  }
  c.group.rank = c.free_idx.size();
  for (int i : c.tors_idx) c.group.torsion.push_back(c.diag[i]);
  return c;
}

std::vector<Int> SubgroupPresentation::gen_ambient(size_t k) const {
  return imul_vec(gens, coker.gen_lift(k));
}

std::optional<GroupElement> SubgroupPresentation::member(const std::vector<Int>& v) const {
  auto z = solve_int(hconcat(gens, L), v);
  if (!z) return std::nullopt;
  std::vector<Int> c(z->begin(), z->begin() + gens.cols);
  return coker.project(c);
}

SubgroupPresentation make_subgroup(const IntMat& A, const IntMat& L) {
  if (A.rows != L.rows) fail(ErrCode::DimensionMismatch, "subgroup ambient dimension");
  SubgroupPresentation sp;
  sp.gens = A;
  sp.L = L;
  IntMat K = kernel_basis(hconcat(A, L));
  IntMat Rel(A.cols, K.cols);
  for (int i = 0; i < A.cols; ++i)
    for (int j = 0; j < K.cols; ++j) Rel.at(i, j) = K.at(i, j);
  sp.coker = cokernel(Rel, A.cols);
  sp.group = sp.coker.group;
  return sp;
}

QuotientResult subgroup_quotient(const AbelianGroup& G, const std::vector<GroupElement>& gens) {
  int n = int(G.ngens());
  IntMat A(n, int(gens.size()));
  for (size_t c = 0; c < gens.size(); ++c) A.set_col(int(c), gel_lift(G, gens[c]));
  Cokernel ck = cokernel(hconcat(relation_lattice(G), A), n);
  QuotientResult qr;
  qr.group = ck.group;
  qr.is_full = ck.group.is_trivial();
  for (int k = 0; k < n; ++k) {
    std::vector<Int> e(n, Int(0));
    e[k] = 1;
    qr.gen_images.push_back(ck.project(e));
  }
  return qr;
}

std::optional<GroupElement> SubgroupResult::coordinates(const GroupElement& d) const {
  return pres.member(gel_lift(ambient, d));
}

SubgroupResult subgroup_of(const AbelianGroup& G, const std::vector<GroupElement>& gens) {
  int n = int(G.ngens());
  IntMat A(n, int(gens.size()));
  for (size_t c = 0; c < gens.size(); ++c) A.set_col(int(c), gel_lift(G, gens[c]));
  SubgroupResult r;
  r.pres = make_subgroup(A, relation_lattice(G));
  r.group = r.pres.group;
  r.ambient = G;
  for (size_t k = 0; k < r.group.ngens(); ++k)
    r.gen_in_ambient.push_back(gel_from_vec(G, r.pres.gen_ambient(k)));
  return r;
}

HomSpaceDesc hom_space(const AbelianGroup& G, const AbelianGroup& H) {
  HomSpaceDesc d;
  d.source = G;
  d.target = H;
  d.finite = (G.rank == 0) || H.is_finite();
  std::vector<std::vector<GroupElement>> pools;  // admissible images per source generator
  for (size_t k = 0; k < G.ngens(); ++k) {
    std::vector<GroupElement> gens_k;
    if (k < G.rank) {
      for (size_t j = 0; j < H.ngens(); ++j) gens_k.push_back(gel_gen(H, j));
    } else {
      const Int& dk = G.torsion[k - G.rank];
      for (size_t j = 0; j < H.torsion.size(); ++j) {
        Int g = gcd(dk, H.torsion[j]);
        if (g > 1)
          gens_k.push_back(gel_smul(H, H.torsion[j] / g, gel_gen(H, H.rank + j)));
      }
    }
    d.image_gens.push_back(gens_k);
    if (d.finite) {
      // enumerate the admissible subgroup elementwise
      std::vector<GroupElement> pool;
      if (k < G.rank) {
        pool = enumerate_elements(H);
      } else {
        pool.push_back(gel_zero(H));
        for (const GroupElement& g : d.image_gens[k]) {
          // close the pool under adding multiples of g (g has finite order)
          std::vector<GroupElement> multiples;
          GroupElement acc = gel_zero(H);
          do {
            multiples.push_back(acc);
            acc = gel_add(H, acc, g);
          } while (!(acc == gel_zero(H)));
          std::vector<GroupElement> next;
          for (const GroupElement& base : pool)
            for (const GroupElement& m : multiples) next.push_back(gel_add(H, base, m));
          std::sort(next.begin(), next.end());
          next.erase(std::unique(next.begin(), next.end()), next.end());
          pool = next;
        }
      }
      pools.push_back(pool);
    }
  }
  if (d.finite) {
    // cartesian product, lexicographic in the pools
    std::vector<size_t> idx(G.ngens(), 0);
    while (true) {
      GroupHom f{G, H, {}};
      for (size_t k = 0; k < G.ngens(); ++k) f.images.push_back(pools[k][idx[k]]);
      if (hom_well_defined(f)) d.all.push_back(f);
      int i = int(G.ngens()) - 1;
      for (; i >= 0; --i) {
        if (++idx[i] < pools[i].size()) break;
        idx[i] = 0;
      }
      if (i < 0) break;
    }
  }
  return d;
}

std::optional<GroupHom> hom_from_constraints(const AbelianGroup& G, const AbelianGroup& H,
                                             const std::vector<GroupElement>& gs,
                                             const std::vector<GroupElement>& ts) {
  if (gs.size() != ts.size()) fail(ErrCode::DimensionMismatch, "constraint list lengths");
  int nG = int(G.ngens()), nH = int(H.ngens());
  IntMat LH = relation_lattice(H);
  int tH = LH.cols;
  // one equation block per constraint plus one per source torsion generator
  std::vector<std::vector<Int>> lhs_vecs;
  std::vector<std::vector<Int>> rhs_vecs;
  for (size_t j = 0; j < gs.size(); ++j) {
    lhs_vecs.push_back(gel_lift(G, gs[j]));
    rhs_vecs.push_back(gel_lift(H, ts[j]));
  }
  for (size_t i = 0; i < G.torsion.size(); ++i) {
    std::vector<Int> v(nG, Int(0));
    v[G.rank + i] = G.torsion[i];
    lhs_vecs.push_back(v);
    rhs_vecs.push_back(std::vector<Int>(nH, Int(0)));
  }
  int blocks = int(lhs_vecs.size());
  IntMat M(nH * blocks, nH * nG + tH * blocks);
  std::vector<Int> rhs(size_t(nH) * blocks, Int(0));
  for (int b = 0; b < blocks; ++b) {
    for (int i = 0; i < nH; ++i) {
      int row = b * nH + i;
      for (int c = 0; c < nG; ++c) M.at(row, i * nG + c) = lhs_vecs[b][c];
      for (int j = 0; j < tH; ++j) M.at(row, nH * nG + b * tH + j) = LH.at(i, j);
      rhs[row] = rhs_vecs[b][i];
    }
  }
  auto sol = solve_int(M, rhs);
  if (!sol) return std::nullopt;
  GroupHom f{G, H, {}};
  for (int c = 0; c < nG; ++c) {
    std::vector<Int> img(nH);
    for (int i = 0; i < nH; ++i) img[i] = (*sol)[size_t(i) * nG + c];
    f.images.push_back(gel_from_vec(H, img));
  }
  return f;
}

DiagramLimit diagram_limit(const std::vector<AbelianGroup>& nodes,
                           const std::vector<DiagramArrow>& arrows) {
  std::vector<int> off(nodes.size() + 1, 0);
  for (size_t i = 0; i < nodes.size(); ++i) off[i + 1] = off[i] + int(nodes[i].ngens());
  int N = off[nodes.size()];
  // block-diagonal relation lattice of the product
  int tP = 0;
  for (const auto& g : nodes) tP += int(g.torsion.size());
  IntMat LP(N, tP);
  {
    int c = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
      IntMat Li = relation_lattice(nodes[i]);
      for (int j = 0; j < Li.cols; ++j, ++c)
        for (int r = 0; r < Li.rows; ++r) LP.at(off[i] + r, c) = Li.at(r, j);
    }
  }
  // coherence map: one block row per arrow, mu on the source block, -id on the target
  int M = 0;
  for (const auto& a : arrows) M += int(nodes[a.tgt].ngens());
  IntMat F(M, N);
  int tT = 0;
  for (const auto& a : arrows) tT += int(nodes[a.tgt].torsion.size());
  IntMat LT(M, tT);
  {
    int row = 0, c = 0;
    for (const auto& a : arrows) {
      if (!(a.map.source == nodes[a.src]) || !(a.map.target == nodes[a.tgt]))
        fail(ErrCode::DimensionMismatch, "diagram arrow endpoints");
      IntMat mu = hom_matrix(a.map);
      int nt = int(nodes[a.tgt].ngens());
      for (int i = 0; i < nt; ++i) {
        for (int j = 0; j < mu.cols; ++j) F.at(row + i, off[a.src] + j) = mu.at(i, j);
        F.at(row + i, off[a.tgt] + i) -= 1;
      }
      IntMat Lt = relation_lattice(nodes[a.tgt]);
      for (int j = 0; j < Lt.cols; ++j, ++c)
        for (int r = 0; r < Lt.rows; ++r) LT.at(row + r, c) = Lt.at(r, j);
      row += nt;
    }
  }
  IntMat K = kernel_basis(hconcat(F, LT));
  IntMat Sgens(N, K.cols);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < K.cols; ++j) Sgens.at(i, j) = K.at(i, j);
  SubgroupPresentation sp = make_subgroup(Sgens, LP);
  DiagramLimit lim;
  lim.group = sp.group;
  for (size_t k = 0; k < sp.group.ngens(); ++k) {
    std::vector<Int> amb = sp.gen_ambient(k);
    std::vector<GroupElement> comps;
    for (size_t i = 0; i < nodes.size(); ++i) {
      std::vector<Int> slice(amb.begin() + off[i], amb.begin() + off[i + 1]);
      comps.push_back(gel_from_vec(nodes[i], slice));
    }
    lim.gen_components.push_back(comps);
  }
  return lim;
}

}  // namespace gradecat
