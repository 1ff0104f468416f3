#include "gradecat/schur.hpp"

#include <algorithm>
#include <numeric>

#include "gradecat/errors.hpp"

namespace gradecat {

std::vector<std::pair<int, int>> schurian_morphisms(const PresentedCategory& C) {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; s < C.nv(); s++)
    for (int t = 0; t < C.nv(); t++)
      if (C.hom(s, t).dim() == 1) out.push_back({s, t});
  return out;
}

/* span state for one pair: echelon rows over quotient coordinates */
struct SpanState {
  QMat rows{0, 0};
  std::vector<int> pivots;
};

static std::vector<Rat> get_row(const QMat& m, int i) {
  std::vector<Rat> v(m.cols);
  for (int j = 0; j < m.cols; j++) v[j] = m.at(i, j);
  return v;
}

static bool span_add(SpanState& st, const std::vector<Rat>& v, const Field& F) {
  auto r = reduce_against(st.rows, st.pivots, v, F);
  if (is_zero_vec(r, F)) return false;
  QMat m(st.rows.rows + 1, (int)v.size());
  for (int i = 0; i < st.rows.rows; i++)
    for (int j = 0; j < st.rows.cols; j++) m.at(i, j) = st.rows.at(i, j);
  for (int j = 0; j < (int)v.size(); j++) m.at(st.rows.rows, j) = v[j];
  st.pivots = rref(m, F);
  st.rows = std::move(m);
  return true;
}

SGClosure sg_closure(const PresentedCategory& C) {
  int nv = C.nv();
  const Field& F = C.field;
  std::vector<SpanState> st(nv * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int d = C.hom(s, t).dim();
      st[s * nv + t].rows = QMat(0, d);
      if (d == 1) {
        std::vector<Rat> e{Rat(1)};
        span_add(st[s * nv + t], e, F);
      }
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < nv; x++)
      for (int y = 0; y < nv; y++) {
        const SpanState& a = st[x * nv + y];
        if (a.rows.rows == 0) continue;
        for (int z = 0; z < nv; z++) {
          const SpanState& b = st[y * nv + z];
          if (b.rows.rows == 0 || C.hom(x, z).dim() == 0) continue;
          for (int i = 0; i < a.rows.rows; i++) {
            auto u = get_row(a.rows, i);
            for (int j = 0; j < b.rows.rows; j++) {
              auto w = compose(C, x, y, z, get_row(b.rows, j), u);
              if (span_add(st[x * nv + z], w, F)) changed = true;
            }
          }
        }
      }
  }
  SGClosure out;
  out.is_sg = true;
  out.span.resize(nv * nv, QMat(0, 0));
  out.pivots.resize(nv * nv);
  for (int s = 0; s < nv && !out.witness; s++)
    for (int t = 0; t < nv; t++) {
      int p = s * nv + t;
      out.span[p] = st[p].rows;
      out.pivots[p] = st[p].pivots;
      if (st[p].rows.rows < C.hom(s, t).dim()) {
        out.is_sg = false;
        if (!out.witness) {
          // first quotient-basis vector outside the closure
          int d = C.hom(s, t).dim();
          for (int k = 0; k < d; k++) {
            std::vector<Rat> e(d, Rat(0));
            e[k] = Rat(1);
            if (!is_zero_vec(reduce_against(st[p].rows, st[p].pivots, e, F), F)) {
              out.witness = BasisRef{s, t, k};
              break;
            }
          }
        }
      }
    }
  // fill remaining spans when a witness stopped the outer scan early
  for (int p = 0; p < nv * nv; p++)
    if (out.span[p].cols != st[p].rows.cols) {
      out.span[p] = st[p].rows;
      out.pivots[p] = st[p].pivots;
    }
  return out;
}

ConstrictedCheck is_constricted(const PresentedCategory& C) {
  ConstrictedCheck out;
  for (int a = 0; a < (int)C.quiver.arrows.size(); a++) {
    const Arrow& ar = C.quiver.arrows[a];
    int s = ar.src, t = ar.tgt;
    const HomSpace& H = C.hom(s, t);
    for (const Path& p : H.paths) {
      if ((int)p.seq.size() == 1 && p.seq[0] == a) continue;
      LinComb v{s, t, {{Rat(1), p}}};
      if (!ideal_membership(C, v)) {
        out.ok = false;
        out.witness = {a, p};
        return out;
      }
    }
  }
  return out;
}

std::vector<std::vector<int>> partition_core(int n, const QMat& ideal,
                                             const std::vector<int>& pivots, const Field& F,
                                             int cap) {
  (void)pivots;
  if (n > cap)
    fail(ErrCode::TooManyPaths,
         "hom-space with " + std::to_string(n) + " paths exceeds the partition cap of " +
             std::to_string(cap));
  int r = ideal.rows;
  std::vector<std::vector<int>> circuits;
  if (r > 0) {
    /* dimension of the subspace of ideal vectors supported inside S:
     * kernel dimension of the row-combination map restricted to S^c */
    auto dim_within = [&](const std::vector<bool>& inS) {
      QMat A(n, r);  // upper bound on rows; fill complement coords
      int rows = 0;
      for (int j = 0; j < n; j++) {
        if (inS[j]) continue;
        for (int i = 0; i < r; i++) A.at(rows, i) = ideal.at(i, j);
        rows++;
      }
      QMat B(rows, r);
      for (int i = 0; i < rows; i++)
        for (int j = 0; j < r; j++) B.at(i, j) = A.at(i, j);
      return r - rank(B, F);
    };
    /* enumerate supports by increasing size; a minimal support never properly
     * contains another, so supersets of found circuits are pruned */
    std::vector<int> subset;
    for (int k = 1; k <= n; k++) {
      subset.assign(k, 0);
      std::iota(subset.begin(), subset.end(), 0);
      while (true) {
        std::vector<bool> inS(n, false);
        for (int c : subset) inS[c] = true;
        bool covers = false;
        for (const auto& circ : circuits) {
          bool sub = true;
          for (int c : circ)
            if (!inS[c]) { sub = false; break; }
          if (sub) { covers = true; break; }
        }
        if (!covers && dim_within(inS) > 0) circuits.push_back(subset);
        // next k-subset
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) i--;
        if (i < 0) break;
        subset[i]++;
        for (int j = i + 1; j < k; j++) subset[j] = subset[j - 1] + 1;
      }
    }
  }
  // union-find over circuit supports
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& circ : circuits)
    for (size_t i = 1; i < circ.size(); i++) {
      int a = find(circ[0]), b = find(circ[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; i++) blocks[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [rep, blk] : blocks) out.push_back(blk);
  // direct-sum sanity: block-local ideal dimensions must add up
  if (r > 0) {
    int total = 0;
    for (const auto& blk : out) {
      std::vector<bool> inS(n, false);
      for (int c : blk) inS[c] = true;
      QMat B(n, r);
      int rows = 0;
      for (int j = 0; j < n; j++) {
        if (inS[j]) continue;
        for (int i = 0; i < r; i++) B.at(rows, i) = ideal.at(i, j);
        rows++;
      }
      QMat Bc(rows, r);
      for (int i = 0; i < rows; i++)
        for (int j = 0; j < r; j++) Bc.at(i, j) = B.at(i, j);
      total += r - rank(Bc, F);
    }
    if (total != r)
      fail(ErrCode::InvalidGrading, "support partition failed to split the ideal");
  }
  return out;
}

std::vector<std::vector<int>> homogeneity_partition(const PresentedCategory& C, int x, int y,
                                                    int cap) {
  const HomSpace& H = C.hom(x, y);
  return partition_core((int)H.paths.size(), H.ideal, H.pivots, C.field, cap);
}

HomotopyData presentation_homotopy(const PresentedCategory& C, int b0) {
  const Quiver& Q = C.quiver;
  int nv = C.nv(), na = (int)Q.arrows.size();
  if (b0 < 0 || b0 >= nv) fail(ErrCode::Schema, "base vertex out of range");
  // BFS spanning tree over arrows in declaration order (undirected)
  std::vector<bool> seen(nv, false);
  std::vector<bool> tree(na, false);
  std::vector<std::vector<std::pair<int, int>>> at(nv);  // vertex -> (arrow, dir)
  for (int a = 0; a < na; a++) {
    int s = Q.arrows[a].src, t = Q.arrows[a].tgt;
    if (s == t) continue;
    at[s].push_back({a, +1});
    at[t].push_back({a, -1});
  }
  for (auto& v : at)
    std::sort(v.begin(), v.end());
  std::vector<int> order;
  seen[b0] = true;
  order.push_back(b0);
  for (size_t qi = 0; qi < order.size(); qi++) {
    int u = order[qi];
    for (auto [a, dir] : at[u]) {
      int s = Q.arrows[a].src, t = Q.arrows[a].tgt;
      int other = dir > 0 ? t : s;
      if (seen[other]) continue;
      seen[other] = true;
      tree[a] = true;
      order.push_back(other);
    }
  }
  for (int v = 0; v < nv; v++)
    if (!seen[v])
      fail(ErrCode::Disconnected,
           "vertex " + Q.vertices[v] + " is not connected to " + Q.vertices[b0]);
  HomotopyData H;
  H.root = b0;
  H.chord_of_arrow.assign(na, -1);
  for (int a = 0; a < na; a++)
    if (!tree[a]) {
      H.chord_of_arrow[a] = (int)H.pi1.generators.size();
      H.pi1.generators.push_back(Q.arrows[a].id);
    }
  auto word_of_path = [&](const Path& p) {
    Word w;
    for (int a : p.seq)
      if (H.chord_of_arrow[a] >= 0) w.push_back({H.chord_of_arrow[a], +1});
    return word_reduce(w);
  };
  std::vector<Word> relators;
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      const HomSpace& hs = C.hom(s, t);
      if (hs.paths.size() < 2 || hs.ideal.rows == 0) continue;
      auto blocks = homogeneity_partition(C, s, t);
      for (const auto& blk : blocks)
        for (size_t i = 0; i < blk.size(); i++)
          for (size_t j = i + 1; j < blk.size(); j++) {
            Word w = word_concat(word_of_path(hs.paths[blk[i]]),
                                 word_inverse(word_of_path(hs.paths[blk[j]])));
            if (!w.empty()) relators.push_back(w);
          }
    }
  // drop exact duplicates, keep first occurrences
  for (const auto& w : relators)
    if (std::find(H.pi1.relators.begin(), H.pi1.relators.end(), w) == H.pi1.relators.end())
      H.pi1.relators.push_back(w);
  return H;
}

UniversalGrading universal_grading(const PresentedCategory& C, int b0) {
  SGClosure sg = sg_closure(C);
  if (!sg.is_sg) {
    std::string w = sg.witness ? " (first escape: basis element " + sg.witness->str() + ")" : "";
    fail(ErrCode::NotSG, "category is not generated by its one-dimensional hom-spaces" + w);
  }
  ConstrictedCheck cc = is_constricted(C);
  if (!cc.ok) {
    const auto& [a, p] = *cc.witness;
    fail(ErrCode::NotConstricted, "path " + path_str(C.quiver, p) + " parallel to arrow " +
                                      C.quiver.arrows[a].id + " survives in the quotient");
  }
  UniversalGrading U;
  U.homotopy = presentation_homotopy(C, b0);
  U.abel = abelianize(U.homotopy.pi1);
  std::vector<GroupElement> ad;
  for (int a = 0; a < (int)C.quiver.arrows.size(); a++) {
    int c = U.homotopy.chord_of_arrow[a];
    ad.push_back(c < 0 ? gel_zero(U.abel.group)
                       : U.abel.project_word(U.homotopy.pi1, Word{{c, +1}}));
  }
  U.grading = path_basis_grading(C, U.abel.group, ad);
  auto chk = validate_grading(U.grading);
  if (!chk.ok)
    fail(ErrCode::InvalidGrading,
         "chord-degree grading failed validation: " + chk.violations.front().detail);
  if (!is_connected_grading(U.grading, b0))
    fail(ErrCode::NotConnectedResult, "chord-degree grading is not connected");
  return U;
}

}  // namespace gradecat
