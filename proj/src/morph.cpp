#include "gradecat/morph.hpp"

#include <algorithm>
#include <numeric>

#include "gradecat/errors.hpp"

namespace gradecat {

/* generator walk of one edge against a spanning tree: tree to the source,
 * the edge forward, tree back from the target */
static Walk generator_walk(const SpanningTree& T, const BasisRef& e) {
  Walk w = T.to_vertex[e.src];
  w.steps.push_back({e, +1});
  Walk back = walk_inverse(T.to_vertex[e.tgt]);
  w.steps.insert(w.steps.end(), back.steps.begin(), back.steps.end());
  return w;
}

GradingMorphism verify_grading_morphism(const Grading& X, const Grading& Y, const GroupHom& mu,
                                        const Functor& J, int b0) {
  if (X.cat != Y.cat)
    fail(ErrCode::DimensionMismatch, "gradings live on different categories");
  if (!(mu.source == X.group) || !(mu.target == Y.group))
    fail(ErrCode::DimensionMismatch, "group map does not match the structural groups");
  if (!hom_well_defined(mu)) fail(ErrCode::Schema, "group map is not well defined");
  // functor re-verified from its matrices (identity + composition law)
  Functor Jv = build_functor(*X.cat, *X.cat, J.matrices);
  if (Y.group.is_trivial()) {
    // a trivial target has a single degree component, so homogeneity and the
    // degree square hold for any functor
    GradingMorphism M;
    M.src = &X;
    M.tgt = &Y;
    M.mu = mu;
    M.J = Jv;
    return M;
  }
  image_degrees(X, Y, Jv);  // homogeneity, throws NotHomogeneous
  SpanningTree T = spanning_tree(X, b0);
  for (const BasisRef& e : T.edges) {
    Walk w = generator_walk(T, e);
    GroupElement lhs = hom_apply(mu, walk_degree(X, w));
    MappedWalk mw = map_walk(X, Y, Jv, w);
    GroupElement rhs = walk_degree(Y, mw.walk);
    if (!(lhs == rhs))
      fail(ErrCode::SquareFails,
           "generator walk of edge " + e.str() + " has image degree " + gel_str(Y.group, rhs) +
               ", the group map sends its degree to " + gel_str(X.group, lhs));
  }
  GradingMorphism M;
  M.src = &X;
  M.tgt = &Y;
  M.mu = mu;
  M.J = Jv;
  return M;
}

/* ---- thin morphism enumeration ---- */

namespace {

struct CompRule {
  int pxy, pyz, pxz;  // pair indices
  int i, j;           // homogeneous basis indices in hom(x,y), hom(y,z)
  int k = -1;         // support index of the composite in hom(x,z), -1 if zero
  Rat a;              // composite coefficient
};

struct ThinContext {
  const PresentedCategory* C;
  const Grading* X;
  const Grading* Y;
  int b0;
  std::vector<CompRule> xrules;
  /* per pair and ordered index pair (i,j) of Y: composite support (k, a) */
  std::map<std::tuple<int, int, int, int, int>, std::pair<int, Rat>> ycomp;
  std::vector<std::pair<int, int>> id_seed_x;  // per object: (pair, index of identity)
  std::vector<std::pair<int, int>> id_seed_y;
  std::vector<Rat> id_coef_x, id_coef_y;
  std::vector<int> pair_order;  // pairs with positive dimension, row-major
  std::vector<std::vector<int>> perm;  // current assignment per pair (X idx -> Y idx)
  std::vector<bool> assigned;
  long leaves = 0;
  std::vector<GradingMorphism> out;
  SpanningTree tree;
  std::vector<GroupElement> gens;
  std::vector<Walk> gen_walks;
};

/* support of a vector that is at most one nonzero coordinate; (-1,0) if zero */
std::pair<int, Rat> single_support(const std::vector<Rat>& v, const Field& F,
                                   const char* what) {
  int k = -1;
  Rat a(0);
  for (int i = 0; i < (int)v.size(); i++) {
    if (F.is_zero(v[i])) continue;
    if (k >= 0) fail(ErrCode::NotThin, std::string(what) + " is not supported on one component");
    k = i;
    a = F.normalize(v[i]);
  }
  return {k, a};
}

void thin_check(const Grading& X, const char* which) {
  int nv = X.cat->nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      const auto& ds = X.degrees[s * nv + t];
      for (size_t i = 0; i < ds.size(); i++)
        for (size_t j = i + 1; j < ds.size(); j++)
          if (ds[i] == ds[j])
            fail(ErrCode::NotThin, std::string(which) +
                                       " grading has a repeated degree in hom-space " +
                                       std::to_string(s) + "->" + std::to_string(t));
    }
}

void finish_candidate(ThinContext& ctx) {
  const PresentedCategory& C = *ctx.C;
  const Grading& X = *ctx.X;
  const Grading& Y = *ctx.Y;
  const Field& F = C.field;
  int nv = C.nv();
  // scalar variables per (pair, x-index)
  std::map<std::pair<int, int>, Rat> c;
  for (int b = 0; b < nv; b++) {
    auto [p, k] = ctx.id_seed_x[b];
    auto [py, ky] = ctx.id_seed_y[b];
    (void)py;
    if (ctx.perm[p][k] != ky) return;  // identity must map to identity
    c[{p, k}] = F.div(ctx.id_coef_y[b], ctx.id_coef_x[b]);
  }
  // constraint list: c[pxz,k] = (a'/a) * c[pyz,j] * c[pxy,i]
  struct Eq {
    std::pair<int, int> k, j, i;
    Rat q;
  };
  std::vector<Eq> eqs;
  for (const CompRule& r : ctx.xrules) {
    auto it = ctx.ycomp.find({r.pxy, r.pyz, r.pxz, ctx.perm[r.pxy][r.i], ctx.perm[r.pyz][r.j]});
    int yk = it == ctx.ycomp.end() ? -1 : it->second.first;
    if ((r.k < 0) != (yk < 0)) return;  // zero composite on one side only
    if (r.k < 0) continue;
    if (ctx.perm[r.pxz][r.k] != yk) return;  // composite lands on the wrong line
    eqs.push_back({{r.pxz, r.k}, {r.pyz, r.j}, {r.pxy, r.i}, F.div(it->second.second, r.a)});
  }
  // list all variables in deterministic order
  std::vector<std::pair<int, int>> vars;
  for (int p : ctx.pair_order)
    for (int i = 0; i < (int)ctx.perm[p].size(); i++) vars.push_back({p, i});
  // propagate known values; set remaining free scalars to one
  while (true) {
    bool derived = true;
    while (derived) {
      derived = false;
      for (const Eq& e : eqs) {
        bool hk = c.count(e.k), hj = c.count(e.j), hi = c.count(e.i);
        if (hj && hi && !hk) {
          c[e.k] = F.mul(e.q, F.mul(c[e.j], c[e.i]));
          derived = true;
        } else if (hk && hj && !hi) {
          c[e.i] = F.div(c[e.k], F.mul(e.q, c[e.j]));
          derived = true;
        } else if (hk && hi && !hj) {
          c[e.j] = F.div(c[e.k], F.mul(e.q, c[e.i]));
          derived = true;
        }
      }
    }
    auto free_var = std::find_if(vars.begin(), vars.end(),
                                 [&](const std::pair<int, int>& v) { return !c.count(v); });
    if (free_var == vars.end()) break;
    c[*free_var] = F.one();
  }
  // all constraints must hold
  for (const Eq& e : eqs)
    if (!F.is_zero(F.sub(c[e.k], F.mul(e.q, F.mul(c[e.j], c[e.i]))))) return;
  // assemble quotient-coordinate matrices
  std::vector<QMat> mats(nv * nv, QMat(0, 0));
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      int d = C.hom(s, t).dim();
      QMat D(d, d);
      for (int i = 0; i < d; i++) D.at(ctx.perm[p][i], i) = c[{p, i}];
      mats[p] = qmul(Y.base_change[p], qmul(D, X.base_change_inv[p], F), F);
    }
  Functor J;
  try {
    J = build_functor(C, C, mats);
  } catch (const Error&) {
    return;  // a cycle constraint outside the propagated ones failed
  }
  // the group map is forced by the generator walks
  std::vector<GroupElement> images;
  try {
    for (const Walk& w : ctx.gen_walks) {
      MappedWalk mw = map_walk(X, Y, J, w);
      images.push_back(walk_degree(Y, mw.walk));
    }
  } catch (const Error&) {
    return;
  }
  auto mu = hom_from_constraints(X.group, Y.group, ctx.gens, images);
  if (!mu) return;
  GradingMorphism M;
  try {
    M = verify_grading_morphism(X, Y, *mu, J, ctx.b0);
  } catch (const Error&) {
    return;
  }
  for (const GradingMorphism& prev : ctx.out)
    if (prev.mu == M.mu) return;  // one morphism per distinct group map
  ctx.out.push_back(std::move(M));
}

bool rules_ok_partial(ThinContext& ctx) {
  for (const CompRule& r : ctx.xrules) {
    if (!ctx.assigned[r.pxy] || !ctx.assigned[r.pyz] || !ctx.assigned[r.pxz]) continue;
    auto it = ctx.ycomp.find({r.pxy, r.pyz, r.pxz, ctx.perm[r.pxy][r.i], ctx.perm[r.pyz][r.j]});
    int yk = it == ctx.ycomp.end() ? -1 : it->second.first;
    if ((r.k < 0) != (yk < 0)) return false;
    if (r.k >= 0 && ctx.perm[r.pxz][r.k] != yk) return false;
  }
  return true;
}

void assign_pairs(ThinContext& ctx, size_t at) {
  if (at == ctx.pair_order.size()) {
    if (++ctx.leaves > 1000000)
      fail(ErrCode::TooManyPaths, "too many candidate line bijections");
    finish_candidate(ctx);
    return;
  }
  int p = ctx.pair_order[at];
  int d = (int)ctx.perm[p].size();
  std::vector<int> sigma(d);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    ctx.perm[p] = sigma;
    ctx.assigned[p] = true;
    if (rules_ok_partial(ctx)) assign_pairs(ctx, at + 1);
    ctx.assigned[p] = false;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

}  // namespace

std::vector<GradingMorphism> enumerate_thin_morphisms(const Grading& X, const Grading& Y,
                                                      int b0) {
  if (X.cat != Y.cat)
    fail(ErrCode::DimensionMismatch, "gradings live on different categories");
  thin_check(X, "source");
  /* A trivial structural group makes the target terminal: the zero group map
   * is the only candidate and the identity functor witnesses it, whatever the
   * component dimensions are.  Handle this before the thinness gate so that
   * quotients by the full group stay inside the enumerable family. */
  if (Y.group.is_trivial())
    return {verify_grading_morphism(X, Y, GroupHom::zero(X.group, Y.group),
                                    identity_functor(*X.cat), b0)};
  thin_check(Y, "target");
  const PresentedCategory& C = *X.cat;
  const Field& F = C.field;
  int nv = C.nv();
  ThinContext ctx;
  ctx.C = &C;
  ctx.X = &X;
  ctx.Y = &Y;
  ctx.b0 = b0;
  ctx.perm.resize(nv * nv);
  ctx.assigned.assign(nv * nv, false);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      ctx.perm[p].resize(C.hom(s, t).dim());
      if (C.hom(s, t).dim() > 0) ctx.pair_order.push_back(p);
    }
  // identity supports
  for (int b = 0; b < nv; b++) {
    int p = b * nv + b;
    auto [kx, ax] = single_support(X.to_homogeneous(b, b, C.id_vec(b)), F, "identity");
    auto [ky, ay] = single_support(Y.to_homogeneous(b, b, C.id_vec(b)), F, "identity");
    ctx.id_seed_x.push_back({p, kx});
    ctx.id_seed_y.push_back({p, ky});
    ctx.id_coef_x.push_back(ax);
    ctx.id_coef_y.push_back(ay);
  }
  // composition tables on both sides
  for (int x = 0; x < nv; x++)
    for (int y = 0; y < nv; y++)
      for (int z = 0; z < nv; z++) {
        int pxy = x * nv + y, pyz = y * nv + z, pxz = x * nv + z;
        int dxy = C.hom(x, y).dim(), dyz = C.hom(y, z).dim();
        if (dxy == 0 || dyz == 0 || C.hom(x, z).dim() == 0) continue;
        for (int i = 0; i < dxy; i++)
          for (int j = 0; j < dyz; j++) {
            auto cq = compose(C, x, y, z, X.base_change[pyz].col(j), X.base_change[pxy].col(i));
            auto [k, a] = single_support(X.to_homogeneous(x, z, cq), F, "composite");
            ctx.xrules.push_back({pxy, pyz, pxz, i, j, k, a});
            auto cy = compose(C, x, y, z, Y.base_change[pyz].col(j), Y.base_change[pxy].col(i));
            auto [yk, ya] = single_support(Y.to_homogeneous(x, z, cy), F, "composite");
            if (yk >= 0) ctx.ycomp[{pxy, pyz, pxz, i, j}] = {yk, ya};
          }
      }
  ctx.tree = spanning_tree(X, b0);
  ctx.gens = closed_walk_degree_gens(X, b0);
  for (int e = 0; e < (int)ctx.tree.edges.size(); e++)
    if (!ctx.tree.is_tree_edge[e]) ctx.gen_walks.push_back(generator_walk(ctx.tree, ctx.tree.edges[e]));
  assign_pairs(ctx, 0);
  return std::move(ctx.out);
}

FixResult compute_fix(const Grading& X, int b0) {
  auto ms = enumerate_thin_morphisms(X, X, b0);
  FixResult out;
  for (const auto& m : ms) out.mus.push_back(m.mu);
  const AbelianGroup& G = X.group;
  int n = (int)G.ngens();
  IntMat L = relation_lattice(G);
  // fixed elements: lifted v with (M - I) v inside the relation lattice, per map
  int k = (int)out.mus.size();
  if (n == 0 || k == 0) {
    // whole group
    std::vector<GroupElement> gens;
    for (size_t i = 0; i < G.ngens(); i++) gens.push_back(gel_gen(G, i));
    SubgroupResult sr = subgroup_of(G, gens);
    out.subgroup = sr.group;
    out.gens_in_gamma = sr.gen_in_ambient;
    return out;
  }
  IntMat big(k * n, n + k * L.cols);
  for (int b = 0; b < k; b++) {
    IntMat M = hom_matrix(out.mus[b]);
    for (int r = 0; r < n; r++) {
      for (int cc = 0; cc < n; cc++) {
        Int v = M.at(r, cc);
        if (r == cc) v -= 1;
        big.at(b * n + r, cc) = v;
      }
      for (int cc = 0; cc < L.cols; cc++) big.at(b * n + r, n + b * L.cols + cc) = L.at(r, cc);
    }
  }
  IntMat K = kernel_basis(big);
  std::vector<GroupElement> gens;
  for (int j = 0; j < K.cols; j++) {
    std::vector<Int> v(n);
    for (int r = 0; r < n; r++) v[r] = K.at(r, j);
    gens.push_back(gel_from_vec(G, v));
  }
  SubgroupResult sr = subgroup_of(G, gens);
  out.subgroup = sr.group;
  out.gens_in_gamma = sr.gen_in_ambient;
  return out;
}

std::vector<Grading> enumerate_constricted_gradings(const PresentedCategory& C,
                                                    const AbelianGroup& G, int b0, long cap) {
  ConstrictedCheck cc = is_constricted(C);
  if (!cc.ok) {
    const auto& [a, p] = *cc.witness;
    fail(ErrCode::NotConstricted, "path " + path_str(C.quiver, p) + " parallel to arrow " +
                                      C.quiver.arrows[a].id + " survives in the quotient");
  }
  if (!G.is_finite()) fail(ErrCode::InfiniteGroup, "enumeration needs a finite group");
  auto elems = enumerate_elements(G);
  size_t na = C.quiver.arrows.size();
  double total = 1;
  for (size_t i = 0; i < na; i++) {
    total *= (double)elems.size();
    if (total > (double)cap)
      fail(ErrCode::GroupTooLarge, "assignment space exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Grading> out;
  std::vector<size_t> digit(na, 0);
  while (true) {
    std::vector<GroupElement> ad;
    for (size_t i = 0; i < na; i++) ad.push_back(elems[digit[i]]);
    Grading X = path_basis_grading(C, G, ad);
    if (validate_grading(X).ok && is_connected_grading(X, b0)) out.push_back(std::move(X));
    // odometer, last digit fastest
    size_t i = na;
    while (i > 0) {
      if (++digit[i - 1] < elems.size()) break;
      digit[i - 1] = 0;
      i--;
    }
    if (i == 0 || na == 0) break;
  }
  return out;
}

UniversalCheck verify_universal_property(const Grading& U,
                                         const std::vector<const Grading*>& family,
                                         const std::vector<std::string>& labels, int b0) {
  if (family.size() != labels.size())
    fail(ErrCode::DimensionMismatch, "one label per grading required");
  UniversalCheck out;
  for (size_t i = 0; i < family.size(); i++) {
    auto ms = enumerate_thin_morphisms(U, *family[i], b0);
    UniversalCheckEntry e;
    e.label = labels[i];
    e.count = ms.size();
    e.exists = !ms.empty();
    e.unique = ms.size() == 1;
    out.all_exist = out.all_exist && e.exists;
    out.all_unique = out.all_unique && e.unique;
    out.entries.push_back(e);
  }
  return out;
}

DiagramLimit coherent_family_group(const GradingFamily& fam) {
  std::vector<AbelianGroup> nodes;
  for (const Grading* g : fam.gradings) nodes.push_back(g->group);
  std::vector<DiagramArrow> arrows;
  for (const auto& e : fam.morphisms) {
    if (e.src >= nodes.size() || e.tgt >= nodes.size())
      fail(ErrCode::Schema, "morphism endpoint outside the family");
    if (!(e.mu.source == nodes[e.src]) || !(e.mu.target == nodes[e.tgt]))
      fail(ErrCode::DimensionMismatch, "group map does not match its endpoints");
    arrows.push_back({e.src, e.tgt, e.mu});
  }
  return diagram_limit(nodes, arrows);
}

}  // namespace gradecat
