#include "gradecat/category.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gradecat {

int HomSpace::path_index(const Path& p) const {
  // within one hom-space the arrow sequence identifies the path (the empty
  // sequence can only be the identity at src == tgt)
  auto it = index_.find(p.seq);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Rat> PresentedCategory::id_vec(int b) const {
  const HomSpace& h = hom(b, b);
  std::vector<Rat> v(h.dim(), Rat(0));
  for (size_t k = 0; k < h.basis.size(); ++k)
    if (h.paths[h.basis[k]].seq.empty()) {
      v[k] = 1;
      return v;
    }
  fail(ErrCode::NonAdmissible, "identity path missing at " + quiver.vertices[b]);
}

std::vector<Rat> PresentedCategory::to_full(int s, int t, const std::vector<Rat>& qv) const {
  const HomSpace& h = hom(s, t);
  if (int(qv.size()) != h.dim()) fail(ErrCode::DimensionMismatch, "quotient coordinate length");
  std::vector<Rat> full(h.paths.size(), Rat(0));
  for (size_t k = 0; k < h.basis.size(); ++k) full[h.basis[k]] = qv[k];
  return full;
}

std::vector<Rat> PresentedCategory::to_quotient(int s, int t, std::vector<Rat> full) const {
  const HomSpace& h = hom(s, t);
  if (full.size() != h.paths.size()) fail(ErrCode::DimensionMismatch, "path coordinate length");
  std::vector<Rat> red = reduce_against(h.ideal, h.pivots, std::move(full), field);
  std::vector<Rat> qv(h.dim());
  for (size_t k = 0; k < h.basis.size(); ++k) qv[k] = red[h.basis[k]];
  return qv;
}

namespace {

/* index lookup over an explicit path list (used during construction) */
int find_path(const std::vector<Path>& paths, const Path& p) {
  for (size_t i = 0; i < paths.size(); ++i)
    if (paths[i].seq == p.seq && (!p.seq.empty() || paths[i].base == p.base)) return int(i);
  return -1;
}

}  // namespace

PresentedCategory build_category(const Quiver& q, const std::vector<LinComb>& relations,
                                 std::optional<int> bound, const Field& field) {
  PresentedCategory C;
  C.field = field;
  C.quiver = q;
  {
    std::set<std::string> ids;
    for (const Arrow& a : q.arrows) {
      if (a.src < 0 || a.src >= int(q.vertices.size()) || a.tgt < 0 ||
          a.tgt >= int(q.vertices.size()))
        fail(ErrCode::Schema, "arrow '" + a.id + "' has out-of-range endpoints");
      if (!ids.insert(a.id).second) fail(ErrCode::Schema, "duplicate arrow id '" + a.id + "'");
    }
  }
  C.relations.clear();
  for (const LinComb& r : relations) {
    if (r.terms.empty()) fail(ErrCode::NonAdmissible, "empty relation");
    LinComb keep;
    keep.src = r.src;
    keep.tgt = r.tgt;
    for (const auto& [c, p] : r.terms) {
      if (p.length() < 2)
        fail(ErrCode::NonAdmissible,
             "relation term " + path_str(q, p) + " has length " + std::to_string(p.length()));
      if (p.source(q) != r.src || p.target(q) != r.tgt)
        fail(ErrCode::NonAdmissible, "relation term " + path_str(q, p) + " endpoint mismatch");
      if (field.is_zero(c)) continue;  // a vanishing term imposes nothing
      keep.terms.emplace_back(field.normalize(c), p);
    }
    if (keep.terms.empty())
      fail(ErrCode::NonAdmissible, "relation from " + q.vertices[size_t(r.src)] + " to " +
                                       q.vertices[size_t(r.tgt)] + " has all coefficients zero");
    C.relations.push_back(std::move(keep));
  }
  bool cyclic = q.has_cycle();
  if (bound) {
    if (*bound < 2) fail(ErrCode::BadBound, "bound must be at least 2");
    C.bound = *bound;
  } else {
    if (cyclic) fail(ErrCode::BadBound, "cyclic quiver requires an explicit bound");
    C.bound = q.longest_path() + 1;
  }
  const int N = C.bound;
  int nv = int(q.vertices.size());
  C.homs.resize(size_t(nv) * nv);

  for (int s = 0; s < nv; ++s)
    for (int t = 0; t < nv; ++t) {
      HomSpace& h = C.hom(s, t);
      h.src = s;
      h.tgt = t;
      // paths up to length N: the < N part carries the hom-space, the == N
      // slice feeds the truncation-consistency check
      std::vector<Path> ext = enumerate_paths(q, s, t, N + 1);
      size_t nshort = 0;
      for (const Path& p : ext)
        if (p.length() < N) ++nshort;
      h.paths.assign(ext.begin(), ext.begin() + nshort);
      for (size_t i = 0; i < h.paths.size(); ++i) h.index_[h.paths[i].seq] = int(i);

      // relation translates pre.r.post landing between s and t
      std::vector<std::vector<Rat>> short_rows;  // truncated below N
      std::vector<std::vector<Rat>> exact_rows;  // fully supported in <= N
      for (const LinComb& r : relations) {
        int minlen = N + 1, maxlen = 0;
        for (const auto& [c, p] : r.terms) {
          minlen = std::min(minlen, p.length());
          maxlen = std::max(maxlen, p.length());
        }
        std::vector<Path> pres = enumerate_paths(q, s, r.src, N);
        std::vector<Path> posts = enumerate_paths(q, r.tgt, t, N);
        for (const Path& pre : pres)
          for (const Path& post : posts) {
            int base_len = pre.length() + post.length();
            if (base_len + minlen > N) continue;
            std::vector<Rat> row_ext(ext.size(), Rat(0));
            bool nonzero = false;
            for (const auto& [c, p] : r.terms) {
              if (base_len + p.length() > N) continue;
              Path tr = path_concat(q, path_concat(q, pre, p), post);
              int idx = find_path(ext, tr);
              if (idx < 0) fail(ErrCode::NonAdmissible, "translate escaped enumeration");
              row_ext[idx] = field.add(row_ext[idx], c);
              nonzero = true;
            }
            if (!nonzero) continue;
            if (base_len + maxlen <= N) exact_rows.push_back(row_ext);
            if (base_len + minlen < N) {
              std::vector<Rat> row(nshort, Rat(0));
              bool any = false;
              for (size_t i = 0; i < nshort; ++i) {
                row[i] = row_ext[i];
                if (!field.is_zero(row[i])) any = true;
              }
              if (any) short_rows.push_back(row);
            }
          }
      }

      // truncation consistency: every discarded length-N path must already lie
      // in the span of translates fully supported in length <= N, otherwise
      // the bound changes the category and is refused
      if (ext.size() > nshort) {
        QMat E(int(exact_rows.size()), int(ext.size()));
        for (size_t i = 0; i < exact_rows.size(); ++i)
          for (size_t j = 0; j < ext.size(); ++j) E.at(int(i), int(j)) = exact_rows[i][j];
        std::vector<int> piv = rref(E, field);
        for (size_t i = nshort; i < ext.size(); ++i) {
          std::vector<Rat> unit(ext.size(), Rat(0));
          unit[i] = 1;
          if (!is_zero_vec(reduce_against(E, piv, unit, field), field))
            fail(ErrCode::BadBound, "path " + path_str(q, ext[i]) + " of length " +
                                        std::to_string(N) + " survives the ideal");
        }
      }

      h.ideal = QMat(int(short_rows.size()), int(nshort));
      for (size_t i = 0; i < short_rows.size(); ++i)
        for (size_t j = 0; j < nshort; ++j) h.ideal.at(int(i), int(j)) = short_rows[i][j];
      h.pivots = rref(h.ideal, field);
      {
        size_t pi = 0;
        for (int j = 0; j < int(nshort); ++j) {
          if (pi < h.pivots.size() && h.pivots[pi] == j) { ++pi; continue; }
          h.basis.push_back(j);
        }
      }
    }
  return C;
}

std::vector<Rat> compose(const PresentedCategory& C, int x, int y, int z,
                         const std::vector<Rat>& f, const std::vector<Rat>& g) {
  const HomSpace& hg = C.hom(x, y);
  const HomSpace& hf = C.hom(y, z);
  const HomSpace& ht = C.hom(x, z);
  if (int(g.size()) != hg.dim() || int(f.size()) != hf.dim())
    fail(ErrCode::DimensionMismatch, "compose coordinate lengths");
  std::vector<Rat> full(ht.paths.size(), Rat(0));
  for (size_t j = 0; j < hg.basis.size(); ++j) {
    if (C.field.is_zero(g[j])) continue;
    const Path& pg = hg.paths[hg.basis[j]];
    for (size_t i = 0; i < hf.basis.size(); ++i) {
      if (C.field.is_zero(f[i])) continue;
      const Path& pf = hf.paths[hf.basis[i]];
      if (pg.length() + pf.length() >= C.bound) continue;  // truncated: lies in the ideal
      Path comp = path_concat(C.quiver, pg, pf);
      int idx = ht.path_index(comp);
      if (idx < 0) fail(ErrCode::NotComposable, "composite path missing from enumeration");
      full[idx] = C.field.add(full[idx], C.field.mul(f[i], g[j]));
    }
  }
  return C.to_quotient(x, z, std::move(full));
}

std::vector<Rat> residue(const PresentedCategory& C, const LinComb& v) {
  const HomSpace& h = C.hom(v.src, v.tgt);
  std::vector<Rat> full(h.paths.size(), Rat(0));
  for (const auto& [c, p] : v.terms) {
    if (p.source(C.quiver) != v.src || p.target(C.quiver) != v.tgt)
      fail(ErrCode::NotComposable, "term endpoints disagree with the combination");
    if (p.length() >= C.bound) continue;  // truncated away
    int idx = h.path_index(p);
    if (idx < 0) fail(ErrCode::UnknownBasisRef, "path " + path_str(C.quiver, p) + " not enumerated");
    full[idx] = C.field.add(full[idx], c);
  }
  return C.to_quotient(v.src, v.tgt, std::move(full));
}

bool ideal_membership(const PresentedCategory& C, const LinComb& v) {
  return is_zero_vec(residue(C, v), C.field);
}

std::string morphism_str(const PresentedCategory& C, int s, int t, const std::vector<Rat>& qv) {
  const HomSpace& h = C.hom(s, t);
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < h.basis.size(); ++k) {
    if (C.field.is_zero(qv[k])) continue;
    Rat c = C.field.normalize(qv[k]);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (ac != 1) os << rat_str(ac) << "*";
    os << path_str(C.quiver, h.paths[h.basis[k]]);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace gradecat
