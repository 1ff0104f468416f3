#include "gradecat/grading.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "gradecat/errors.hpp"

namespace gradecat {

std::string BasisRef::str() const {
  std::ostringstream os;
  os << src << "->" << tgt << "#" << idx;
  return os.str();
}

const GroupElement& Grading::deg(const BasisRef& r) const {
  int nv = cat->nv();
  if (r.src < 0 || r.src >= nv || r.tgt < 0 || r.tgt >= nv)
    fail(ErrCode::UnknownBasisRef, "basis reference " + r.str() + ": no such hom-space");
  const auto& ds = degrees[r.src * nv + r.tgt];
  if (r.idx < 0 || r.idx >= (int)ds.size())
    fail(ErrCode::UnknownBasisRef, "basis reference " + r.str() + ": index out of range");
  return ds[r.idx];
}

std::vector<Rat> Grading::to_homogeneous(int s, int t, const std::vector<Rat>& qv) const {
  return qmul_vec(base_change_inv[s * cat->nv() + t], qv, cat->field);
}

std::vector<Rat> Grading::from_homogeneous(int s, int t, const std::vector<Rat>& hv) const {
  return qmul_vec(base_change[s * cat->nv() + t], hv, cat->field);
}

static Grading assemble(const PresentedCategory& C, const AbelianGroup& G,
                        std::vector<QMat> bc, std::vector<std::vector<GroupElement>> degs) {
  Grading X;
  X.cat = &C;
  X.group = G;
  X.base_change = std::move(bc);
  X.degrees = std::move(degs);
  X.base_change_inv.resize(X.base_change.size());
  int nv = C.nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      int d = C.hom(s, t).dim();
      const QMat& B = X.base_change[p];
      if (B.rows != d || B.cols != d)
        fail(ErrCode::DimensionMismatch,
             "base change for hom(" + C.quiver.vertices[s] + "," + C.quiver.vertices[t] +
                 ") must be " + std::to_string(d) + "x" + std::to_string(d));
      if ((int)X.degrees[p].size() != d)
        fail(ErrCode::DimensionMismatch,
             "hom(" + C.quiver.vertices[s] + "," + C.quiver.vertices[t] + ") needs " +
                 std::to_string(d) + " degrees, got " + std::to_string(X.degrees[p].size()));
      for (const auto& g : X.degrees[p])
        if ((int)g.free_part.size() != G.rank || (int)g.torsion_part.size() != (int)G.torsion.size())
          fail(ErrCode::DimensionMismatch, "degree with wrong shape for the structural group");
      if (d == 0) {
        X.base_change_inv[p] = QMat(0, 0);
        continue;
      }
      auto inv = inverse(B, C.field);
      if (!inv)
        fail(ErrCode::SingularBaseChange,
             "base change for hom(" + C.quiver.vertices[s] + "," + C.quiver.vertices[t] +
                 ") is singular");
      X.base_change_inv[p] = *inv;
    }
  return X;
}

Grading path_basis_grading(const PresentedCategory& C, const AbelianGroup& G,
                           const std::vector<GroupElement>& arrow_degrees) {
  if ((int)arrow_degrees.size() != (int)C.quiver.arrows.size())
    fail(ErrCode::DimensionMismatch, "one degree per arrow required");
  for (const auto& g : arrow_degrees)
    if ((int)g.free_part.size() != G.rank || (int)g.torsion_part.size() != (int)G.torsion.size())
      fail(ErrCode::DimensionMismatch, "arrow degree with wrong shape for the structural group");
  int nv = C.nv();
  std::vector<QMat> bc(nv * nv);
  std::vector<std::vector<GroupElement>> degs(nv * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      const HomSpace& H = C.hom(s, t);
      bc[p] = QMat::identity(H.dim());
      for (int bi : H.basis) {
        GroupElement d = gel_zero(G);
        for (int a : H.paths[bi].seq) d = gel_add(G, d, arrow_degrees[a]);
        degs[p].push_back(d);
      }
    }
  return assemble(C, G, std::move(bc), std::move(degs));
}

Grading make_grading(const PresentedCategory& C, const AbelianGroup& G,
                     const std::vector<std::optional<QMat>>& base_changes,
                     const std::vector<std::vector<GroupElement>>& degrees) {
  int nv = C.nv();
  if ((int)base_changes.size() != nv * nv || (int)degrees.size() != nv * nv)
    fail(ErrCode::DimensionMismatch, "need one base change and degree list per vertex pair");
  std::vector<QMat> bc(nv * nv);
  for (int p = 0; p < nv * nv; p++) {
    int d = C.homs[p].dim();
    bc[p] = base_changes[p] ? *base_changes[p] : QMat::identity(d);
  }
  return assemble(C, G, std::move(bc), degrees);
}

Grading trivial_grading(const PresentedCategory& C) {
  AbelianGroup G;  // trivial
  std::vector<GroupElement> ad(C.quiver.arrows.size(), gel_zero(G));
  return path_basis_grading(C, G, ad);
}

GradingCheck validate_grading(const Grading& X) {
  GradingCheck res;
  const PresentedCategory& C = *X.cat;
  int nv = C.nv();
  // identities must be homogeneous of degree zero
  for (int b = 0; b < nv; b++) {
    auto hv = X.to_homogeneous(b, b, C.id_vec(b));
    for (int k = 0; k < (int)hv.size(); k++) {
      if (C.field.is_zero(hv[k])) continue;
      if (!gel_is_zero(X.group, X.degrees[b * nv + b][k])) {
        res.ok = false;
        res.violations.push_back({b, b, b, -1, k,
                                  "identity of " + C.quiver.vertices[b] +
                                      " meets nonzero degree at basis element " +
                                      std::to_string(k)});
      }
    }
  }
  // composites of homogeneous elements must live in the product degree
  for (int x = 0; x < nv; x++)
    for (int y = 0; y < nv; y++) {
      int dxy = C.hom(x, y).dim();
      if (dxy == 0) continue;
      for (int z = 0; z < nv; z++) {
        int dyz = C.hom(y, z).dim();
        if (dyz == 0 || C.hom(x, z).dim() == 0) continue;
        for (int fi = 0; fi < dxy; fi++) {
          auto fv = X.base_change[x * nv + y].col(fi);
          for (int gi = 0; gi < dyz; gi++) {
            auto gv = X.base_change[y * nv + z].col(gi);
            auto comp = compose(C, x, y, z, gv, fv);
            auto hv = X.to_homogeneous(x, z, comp);
            GroupElement want = gel_add(X.group, X.degrees[y * nv + z][gi],
                                        X.degrees[x * nv + y][fi]);
            for (int k = 0; k < (int)hv.size(); k++) {
              if (C.field.is_zero(hv[k])) continue;
              if (!(X.degrees[x * nv + z][k] == want)) {
                res.ok = false;
                res.violations.push_back(
                    {x, y, z, fi, gi,
                     "composite meets degree " + gel_str(X.group, X.degrees[x * nv + z][k]) +
                         " at basis element " + std::to_string(k) + ", expected " +
                         gel_str(X.group, want)});
              }
            }
          }
        }
      }
    }
  return res;
}

int Walk::from() const { return steps.empty() ? base : steps.front().from(); }
int Walk::to() const { return steps.empty() ? base : steps.back().to(); }

Walk make_walk(const Grading& X, int base, const std::vector<std::pair<BasisRef, int>>& steps) {
  int nv = X.cat->nv();
  if (base < 0 || base >= nv) fail(ErrCode::UnknownBasisRef, "walk base vertex out of range");
  Walk w;
  w.base = base;
  int cur = base;
  for (const auto& [ref, eps] : steps) {
    if (eps != 1 && eps != -1)
      fail(ErrCode::Schema, "walk step sign must be +1 or -1");
    X.deg(ref);  // validates the reference
    WalkStep st{ref, eps};
    if (st.from() != cur)
      fail(ErrCode::NotConcatenable,
           "walk step " + ref.str() + (eps > 0 ? "" : "^-1") + " starts at vertex " +
               std::to_string(st.from()) + ", expected " + std::to_string(cur));
    cur = st.to();
    w.steps.push_back(st);
  }
  return w;
}

Walk walk_inverse(const Walk& w) {
  Walk r;
  r.base = w.to();
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it)
    r.steps.push_back({it->ref, -it->eps});
  return r;
}

Walk walk_concat(const Walk& a, const Walk& b) {
  if (a.to() != b.from())
    fail(ErrCode::NotConcatenable, "walks end at " + std::to_string(a.to()) +
                                       " and start at " + std::to_string(b.from()));
  Walk r = a;
  r.steps.insert(r.steps.end(), b.steps.begin(), b.steps.end());
  return r;
}

GroupElement walk_degree(const Grading& X, const Walk& w) {
  GroupElement d = gel_zero(X.group);
  for (const auto& st : w.steps) {
    const GroupElement& e = X.deg(st.ref);
    d = st.eps > 0 ? gel_add(X.group, d, e) : gel_sub(X.group, d, e);
  }
  return d;
}

std::vector<BasisRef> grading_edges(const Grading& X) {
  std::vector<BasisRef> edges;
  int nv = X.cat->nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++)
      for (int i = 0; i < X.dim(s, t); i++) edges.push_back({s, t, i});
  return edges;
}

SpanningTree spanning_tree(const Grading& X, int b0) {
  int nv = X.cat->nv();
  if (b0 < 0 || b0 >= nv) fail(ErrCode::UnknownBasisRef, "base vertex out of range");
  SpanningTree T;
  T.root = b0;
  T.edges = grading_edges(X);
  T.is_tree_edge.assign(T.edges.size(), false);
  T.to_vertex.assign(nv, Walk{});
  std::vector<bool> seen(nv, false);
  // incidence lists in global edge order, loops excluded
  std::vector<std::vector<int>> at(nv);
  for (int e = 0; e < (int)T.edges.size(); e++) {
    if (T.edges[e].src == T.edges[e].tgt) continue;
    at[T.edges[e].src].push_back(e);
    at[T.edges[e].tgt].push_back(e);
  }
  for (auto& v : at) std::sort(v.begin(), v.end());
  std::queue<int> q;
  seen[b0] = true;
  T.to_vertex[b0] = Walk{b0, {}};
  q.push(b0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int e : at[u]) {
      const BasisRef& r = T.edges[e];
      int other = r.src == u ? r.tgt : r.src;
      if (seen[other]) continue;
      seen[other] = true;
      T.is_tree_edge[e] = true;
      Walk w = T.to_vertex[u];
      w.steps.push_back({r, r.src == u ? +1 : -1});
      T.to_vertex[other] = std::move(w);
      q.push(other);
    }
  }
  for (int v = 0; v < nv; v++)
    if (!seen[v])
      fail(ErrCode::Disconnected,
           "object " + X.cat->quiver.vertices[v] + " is not connected to " +
               X.cat->quiver.vertices[b0] + " by nonzero hom-spaces");
  return T;
}

std::vector<GroupElement> closed_walk_degree_gens(const Grading& X, int b0) {
  SpanningTree T = spanning_tree(X, b0);
  std::vector<GroupElement> tdeg(X.cat->nv());
  for (int v = 0; v < X.cat->nv(); v++) tdeg[v] = walk_degree(X, T.to_vertex[v]);
  std::vector<GroupElement> gens;
  for (int e = 0; e < (int)T.edges.size(); e++) {
    if (T.is_tree_edge[e]) continue;
    const BasisRef& r = T.edges[e];
    // closed walk: tree to r.src, edge forward, tree back from r.tgt
    GroupElement d = gel_add(X.group, tdeg[r.src], X.deg(r));
    gens.push_back(gel_sub(X.group, d, tdeg[r.tgt]));
  }
  return gens;
}

bool is_connected_grading(const Grading& X, int b0) {
  auto gens = closed_walk_degree_gens(X, b0);
  return subgroup_quotient(X.group, gens).is_full;
}

MappedWalk map_walk(const Grading& X, const Grading& Y, const Functor& J, const Walk& w) {
  const Field& F = X.cat->field;
  MappedWalk out;
  out.walk.base = w.base;
  int nv = X.cat->nv();
  for (const auto& st : w.steps) {
    int s = st.ref.src, t = st.ref.tgt;
    auto hv = X.base_change[s * nv + t].col(st.ref.idx);
    auto img = J.apply(s, t, hv);
    auto ihv = Y.to_homogeneous(s, t, img);
    int hit = -1;
    for (int k = 0; k < (int)ihv.size(); k++) {
      if (F.is_zero(ihv[k])) continue;
      if (hit >= 0) {
        const auto& da = Y.degrees[s * nv + t][hit];
        const auto& db = Y.degrees[s * nv + t][k];
        if (da == db)
          fail(ErrCode::NotBasisAligned,
               "image of " + st.ref.str() + " mixes basis elements " + std::to_string(hit) +
                   " and " + std::to_string(k) + " of equal degree");
        fail(ErrCode::NotHomogeneous,
             "image of " + st.ref.str() + " mixes degrees " + gel_str(Y.group, da) + " and " +
                 gel_str(Y.group, db));
      }
      hit = k;
    }
    if (hit < 0)
      fail(ErrCode::NotHomogeneous, "image of " + st.ref.str() + " is zero");
    out.walk.steps.push_back({BasisRef{s, t, hit}, st.eps});
    out.scalars.push_back(F.normalize(ihv[hit]));
  }
  return out;
}

std::vector<std::vector<GroupElement>> image_degrees(const Grading& X, const Grading& Y,
                                                     const Functor& J) {
  const Field& F = X.cat->field;
  int nv = X.cat->nv();
  std::vector<std::vector<GroupElement>> table(nv * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      for (int i = 0; i < X.dim(s, t); i++) {
        auto img = J.apply(s, t, X.base_change[p].col(i));
        auto ihv = Y.to_homogeneous(s, t, img);
        std::optional<GroupElement> d;
        for (int k = 0; k < (int)ihv.size(); k++) {
          if (F.is_zero(ihv[k])) continue;
          const GroupElement& dk = Y.degrees[p][k];
          if (!d) {
            d = dk;
          } else if (!(*d == dk)) {
            fail(ErrCode::NotHomogeneous,
                 "image of " + BasisRef{s, t, i}.str() + " mixes degrees " +
                     gel_str(Y.group, *d) + " and " + gel_str(Y.group, dk));
          }
        }
        if (!d)
          fail(ErrCode::NotHomogeneous, "image of " + BasisRef{s, t, i}.str() + " is zero");
        table[p].push_back(*d);
      }
    }
  return table;
}

Grading quotient_grading(const Grading& X, const GroupHom& pi) {
  if (!(pi.source == X.group))
    fail(ErrCode::DimensionMismatch, "homomorphism source differs from the structural group");
  if (!hom_well_defined(pi)) fail(ErrCode::Schema, "homomorphism is not well defined");
  if (!subgroup_quotient(pi.target, pi.images).is_full)
    fail(ErrCode::NotSurjective, "homomorphism does not reach the whole target group");
  std::vector<std::vector<GroupElement>> degs(X.degrees.size());
  for (size_t p = 0; p < X.degrees.size(); p++)
    for (const auto& d : X.degrees[p]) degs[p].push_back(hom_apply(pi, d));
  Grading Q = assemble(*X.cat, pi.target, X.base_change, std::move(degs));
  auto chk = validate_grading(Q);
  if (!chk.ok)
    fail(ErrCode::InvalidGrading, "pushed-forward degrees break compatibility: " +
                                      chk.violations.front().detail);
  return Q;
}

Grading restrict_to_image(const Grading& X, int b0) {
  auto gens = closed_walk_degree_gens(X, b0);
  SubgroupResult sub = subgroup_of(X.group, gens);
  std::vector<std::vector<GroupElement>> degs(X.degrees.size());
  int nv = X.cat->nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      for (int i = 0; i < (int)X.degrees[p].size(); i++) {
        auto c = sub.coordinates(X.degrees[p][i]);
        if (!c)
          fail(ErrCode::DegreeOutsideImage,
               "degree " + gel_str(X.group, X.degrees[p][i]) + " of " + BasisRef{s, t, i}.str() +
                   " lies outside the subgroup generated by closed-walk degrees");
        degs[p].push_back(*c);
      }
    }
  Grading R = assemble(*X.cat, sub.group, X.base_change, std::move(degs));
  auto chk = validate_grading(R);
  if (!chk.ok)
    fail(ErrCode::InvalidGrading,
         "restricted degrees break compatibility: " + chk.violations.front().detail);
  if (!is_connected_grading(R, b0))
    fail(ErrCode::NotConnectedResult, "restriction did not produce a connected grading");
  return R;
}

Grading gauge_by_tree(const Grading& X, int b0) {
  SpanningTree T = spanning_tree(X, b0);
  std::vector<GroupElement> tdeg(X.cat->nv());
  for (int v = 0; v < X.cat->nv(); v++) tdeg[v] = walk_degree(X, T.to_vertex[v]);
  std::vector<std::vector<GroupElement>> degs(X.degrees.size());
  int nv = X.cat->nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      for (const auto& d : X.degrees[p])
        degs[p].push_back(gel_sub(X.group, gel_add(X.group, tdeg[s], d), tdeg[t]));
    }
  Grading G = assemble(*X.cat, X.group, X.base_change, std::move(degs));
  auto chk = validate_grading(G);
  if (!chk.ok)
    fail(ErrCode::InvalidGrading,
         "gauged degrees break compatibility: " + chk.violations.front().detail);
  return G;
}

std::vector<Walk> trivial_degree_connectors(const Grading& X, int b0) {
  if (X.group.rank > 0)
    fail(ErrCode::InfiniteGroup, "connector search needs a finite structural group");
  auto elems = enumerate_elements(X.group);
  std::map<std::vector<Int>, int> eidx;
  for (int i = 0; i < (int)elems.size(); i++) eidx[elems[i].torsion_part] = i;
  int nv = X.cat->nv(), ng = (int)elems.size();
  auto edges = grading_edges(X);
  auto state = [&](int v, int g) { return v * ng + g; };
  std::vector<int> par_state(nv * ng, -1), par_edge(nv * ng, -1), par_eps(nv * ng, 0);
  std::vector<bool> seen(nv * ng, false);
  int zero_idx = eidx.at(gel_zero(X.group).torsion_part);
  std::queue<int> q;
  seen[state(b0, zero_idx)] = true;
  q.push(state(b0, zero_idx));
  while (!q.empty()) {
    int st = q.front();
    q.pop();
    int v = st / ng, g = st % ng;
    for (int e = 0; e < (int)edges.size(); e++) {
      const BasisRef& r = edges[e];
      const GroupElement& d = X.deg(r);
      if (r.src == v) {
        int g2 = eidx.at(gel_add(X.group, elems[g], d).torsion_part);
        int s2 = state(r.tgt, g2);
        if (!seen[s2]) {
          seen[s2] = true;
          par_state[s2] = st;
          par_edge[s2] = e;
          par_eps[s2] = +1;
          q.push(s2);
        }
      }
      if (r.tgt == v) {
        int g2 = eidx.at(gel_sub(X.group, elems[g], d).torsion_part);
        int s2 = state(r.src, g2);
        if (!seen[s2]) {
          seen[s2] = true;
          par_state[s2] = st;
          par_edge[s2] = e;
          par_eps[s2] = -1;
          q.push(s2);
        }
      }
    }
  }
  std::vector<Walk> out(nv);
  for (int v = 0; v < nv; v++) {
    int st = state(v, zero_idx);
    if (!seen[st])
      fail(ErrCode::Disconnected,
           "no trivial-degree walk from " + X.cat->quiver.vertices[b0] + " to " +
               X.cat->quiver.vertices[v]);
    std::vector<WalkStep> rev;
    while (par_state[st] >= 0) {
      rev.push_back({edges[par_edge[st]], par_eps[st]});
      st = par_state[st];
    }
    Walk w;
    w.base = b0;
    w.steps.assign(rev.rbegin(), rev.rend());
    out[v] = std::move(w);
  }
  return out;
}

}  // namespace gradecat
