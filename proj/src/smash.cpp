#include "gradecat/smash.hpp"

#include <map>
#include <sstream>

#include "gradecat/errors.hpp"

namespace gradecat {

std::string SmashCategory::obj_str(int o) const {
  std::ostringstream os;
  os << "(" << cat->quiver.vertices[obj_base(o)] << ","
     << gel_str(grading->group, elems[obj_elem(o)]) << ")";
  return os.str();
}

SmashCategory build_smash(const PresentedCategory& C, const Grading& X) {
  if (!X.group.is_finite())
    fail(ErrCode::InfiniteGroup, "smash product needs a finite structural group, got " +
                                     X.group.str() + "; quotient the grading first");
  auto chk = validate_grading(X);
  if (!chk.ok)
    fail(ErrCode::InvalidGrading,
         "grading fails validation: " + chk.violations.front().detail);
  SmashCategory S;
  S.cat = &C;
  S.grading = &X;
  S.elems = enumerate_elements(X.group);
  int ne = (int)S.elems.size(), nv = C.nv();
  S.hom.assign(size_t(S.nobj()) * S.nobj(), {});
  for (int b = 0; b < nv; b++)
    for (int e1 = 0; e1 < ne; e1++)
      for (int b2 = 0; b2 < nv; b2++)
        for (int e2 = 0; e2 < ne; e2++) {
          GroupElement want = gel_sub(X.group, S.elems[e1], S.elems[e2]);
          auto& cell = S.hom[size_t(S.obj(b, e1)) * S.nobj() + S.obj(b2, e2)];
          for (int i = 0; i < X.dim(b, b2); i++)
            if (X.degrees[b * nv + b2][i] == want) cell.push_back({b, b2, i});
        }
  return S;
}

CoveringCheck verify_covering(const SmashCategory& S) {
  CoveringCheck out;
  const Grading& X = *S.grading;
  const PresentedCategory& C = *S.cat;
  int ne = (int)S.elems.size(), nv = C.nv();
  // every stored reference must sit in the right cell
  for (int o1 = 0; o1 < S.nobj(); o1++)
    for (int o2 = 0; o2 < S.nobj(); o2++)
      for (const BasisRef& r : S.hom_at(o1, o2)) {
        GroupElement want =
            gel_sub(X.group, S.elems[S.obj_elem(o1)], S.elems[S.obj_elem(o2)]);
        if (r.src != S.obj_base(o1) || r.tgt != S.obj_base(o2) || !(X.deg(r) == want)) {
          out.ok = false;
          out.mismatches.push_back("stray entry " + r.str() + " in hom(" + S.obj_str(o1) +
                                   "," + S.obj_str(o2) + ")");
        }
      }
  // star of (b,s) over each base object must match the star of b
  for (int o = 0; o < S.nobj(); o++) {
    int b = S.obj_base(o);
    for (int b2 = 0; b2 < nv; b2++) {
      size_t outgoing = 0, incoming = 0;
      for (int e2 = 0; e2 < ne; e2++) {
        outgoing += S.hom_at(o, S.obj(b2, e2)).size();
        incoming += S.hom_at(S.obj(b2, e2), o).size();
      }
      if ((int)outgoing != C.hom(b, b2).dim()) {
        out.ok = false;
        out.mismatches.push_back("outgoing star of " + S.obj_str(o) + " over " +
                                 C.quiver.vertices[b2] + " has size " +
                                 std::to_string(outgoing) + ", base dimension is " +
                                 std::to_string(C.hom(b, b2).dim()));
      }
      if ((int)incoming != C.hom(b2, b).dim()) {
        out.ok = false;
        out.mismatches.push_back("incoming star of " + S.obj_str(o) + " over " +
                                 C.quiver.vertices[b2] + " has size " +
                                 std::to_string(incoming) + ", base dimension is " +
                                 std::to_string(C.hom(b2, b).dim()));
      }
    }
  }
  return out;
}

static int elem_index(const SmashCategory& S, const GroupElement& g) {
  for (int i = 0; i < (int)S.elems.size(); i++)
    if (S.elems[i] == g) return i;
  fail(ErrCode::Schema, "group element outside the enumeration");
}

DeckFunctor deck_functor(const SmashCategory& S, const GroupElement& s) {
  DeckFunctor D;
  D.S = &S;
  D.s = gel_normalize(S.grading->group, s);
  for (int o = 0; o < S.nobj(); o++) {
    int b = S.obj_base(o), e = S.obj_elem(o);
    D.obj_map.push_back(S.obj(b, elem_index(S, gel_add(S.grading->group, D.s, S.elems[e]))));
  }
  return D;
}

GaloisCheck galois_check(const SmashCategory& S) {
  GaloisCheck out;
  const AbelianGroup& G = S.grading->group;
  for (const GroupElement& s : S.elems) {
    if (gel_is_zero(G, s)) continue;
    DeckFunctor D = deck_functor(S, s);
    for (int o = 0; o < S.nobj(); o++)
      if (D.obj_map[o] == o) {
        out.free_action = false;
        out.failures.push_back("deck transform " + gel_str(G, s) + " fixes " + S.obj_str(o));
      }
  }
  for (int b = 0; b < S.cat->nv(); b++)
    for (int e1 = 0; e1 < (int)S.elems.size(); e1++)
      for (int e2 = 0; e2 < (int)S.elems.size(); e2++) {
        bool hit = false;
        for (const GroupElement& s : S.elems)
          if (deck_functor(S, s).obj_map[S.obj(b, e1)] == S.obj(b, e2)) {
            hit = true;
            break;
          }
        if (!hit) {
          out.fiber_transitive = false;
          out.failures.push_back("no deck transform sends " + S.obj_str(S.obj(b, e1)) +
                                 " to " + S.obj_str(S.obj(b, e2)));
        }
      }
  return out;
}

int CoveringMorphism::map_obj(int o) const {
  int b = src->obj_base(o), e = src->obj_elem(o);
  GroupElement g = gel_add(tgt->grading->group, hom_apply(mu, src->elems[e]), h[b]);
  return tgt->obj(b, elem_index(*tgt, g));
}

CoveringMorphism covering_morphism(const SmashCategory& SX, const SmashCategory& SY,
                                   const GroupHom& mu, const Functor& J,
                                   const std::vector<Walk>& connectors) {
  const Grading& X = *SX.grading;
  const Grading& Y = *SY.grading;
  if (SX.cat != SY.cat)
    fail(ErrCode::DimensionMismatch, "smash products live over different base categories");
  if (!(mu.source == X.group) || !(mu.target == Y.group))
    fail(ErrCode::DimensionMismatch, "group map does not match the structural groups");
  if (!hom_well_defined(mu)) fail(ErrCode::Schema, "group map is not well defined");
  int nv = SX.cat->nv();
  if ((int)connectors.size() != nv)
    fail(ErrCode::DimensionMismatch, "one connector walk per base object required");
  CoveringMorphism M;
  M.src = &SX;
  M.tgt = &SY;
  M.mu = mu;
  M.J = &J;
  for (int b = 0; b < nv; b++) {
    if (connectors[b].to() != b)
      fail(ErrCode::NotConcatenable,
           "connector " + std::to_string(b) + " ends at vertex " +
               std::to_string(connectors[b].to()) + ", expected " + std::to_string(b));
    if (!gel_is_zero(X.group, walk_degree(X, connectors[b])))
      fail(ErrCode::InvalidGrading, "connector walk to vertex " + std::to_string(b) +
                                        " has nonzero degree");
    MappedWalk mw = map_walk(X, Y, J, connectors[b]);
    M.h.push_back(gel_neg(Y.group, walk_degree(Y, mw.walk)));
  }
  // J must shift every homogeneous degree by exactly mu plus the connector gauge
  auto table = image_degrees(X, Y, J);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      for (int i = 0; i < (int)table[p].size(); i++) {
        GroupElement want = gel_add(
            Y.group, hom_apply(mu, X.degrees[p][i]), gel_sub(Y.group, M.h[s], M.h[t]));
        if (!(table[p][i] == want))
          fail(ErrCode::DiagramFails,
               "image of " + BasisRef{s, t, i}.str() + " has degree " +
                   gel_str(Y.group, table[p][i]) + " and misses the object-map component " +
                   gel_str(Y.group, want));
      }
    }
  return M;
}

GroupHom lambda_map(const CoveringMorphism& M, int b0) {
  const SmashCategory& SX = *M.src;
  const SmashCategory& SY = *M.tgt;
  const AbelianGroup& GX = SX.grading->group;
  const AbelianGroup& GY = SY.grading->group;
  GroupHom lam;
  lam.source = GX;
  lam.target = GY;
  // the action on each fiber determines lambda(s); it must not depend on the object
  auto lambda_of = [&](const GroupElement& s) {
    DeckFunctor D = deck_functor(SX, s);
    std::optional<GroupElement> val;
    for (int o = 0; o < SX.nobj(); o++) {
      int ho = M.map_obj(o), hso = M.map_obj(D.obj_map[o]);
      if (SY.obj_base(ho) != SX.obj_base(o) || SY.obj_base(hso) != SX.obj_base(o))
        fail(ErrCode::NotEquivariant, "object map does not cover the identity");
      GroupElement d = gel_sub(GY, SY.elems[SY.obj_elem(hso)], SY.elems[SY.obj_elem(ho)]);
      if (!val) {
        val = d;
      } else if (!(*val == d)) {
        fail(ErrCode::NotEquivariant,
             "deck transport of " + gel_str(GX, s) + " differs between objects: " +
                 gel_str(GY, *val) + " vs " + gel_str(GY, d) + " at " + SX.obj_str(o));
      }
    }
    return *val;
  };
  for (size_t k = 0; k < GX.ngens(); k++) lam.images.push_back(lambda_of(gel_gen(GX, k)));
  if (!hom_well_defined(lam))
    fail(ErrCode::NotEquivariant, "deck transport map is not a homomorphism");
  if (!(lam == M.mu))
    fail(ErrCode::NotEquivariant,
         "group map of the covering morphism differs from the deck-transport map");
  // normalized re-derivation at the root object: difference of the images of
  // (b0, s) and (b0, 0) computed directly
  for (const GroupElement& s : SX.elems) {
    int o0 = SX.obj(b0, elem_index(SX, gel_zero(GX)));
    int os = SX.obj(b0, elem_index(SX, s));
    GroupElement direct =
        gel_sub(GY, SY.elems[SY.obj_elem(M.map_obj(os))], SY.elems[SY.obj_elem(M.map_obj(o0))]);
    if (!(hom_apply(lam, s) == direct))
      fail(ErrCode::NotEquivariant,
           "normalization at the root disagrees with deck transport at " + gel_str(GX, s));
  }
  return lam;
}

CoveringMorphism compose_covering(const CoveringMorphism& M2, const CoveringMorphism& M1,
                                  const Functor& J21) {
  if (M1.tgt != M2.src)
    fail(ErrCode::NotComposable, "covering morphisms do not chain");
  Functor expect = compose_functor(*M2.J, *M1.J);
  if (!functor_equal(J21, expect))
    fail(ErrCode::NotFunctorial, "supplied base functor is not the composite");
  CoveringMorphism M;
  M.src = M1.src;
  M.tgt = M2.tgt;
  M.mu = hom_compose(M2.mu, M1.mu);
  M.J = &J21;
  const AbelianGroup& GZ = M2.tgt->grading->group;
  for (int b = 0; b < M1.src->cat->nv(); b++)
    M.h.push_back(gel_add(GZ, hom_apply(M2.mu, M1.h[b]), M2.h[b]));
  for (int o = 0; o < M1.src->nobj(); o++)
    if (M.map_obj(o) != M2.map_obj(M1.map_obj(o)))
      fail(ErrCode::NotEquivariant, "composite object map disagrees at " + M1.src->obj_str(o));
  return M;
}

}  // namespace gradecat
