#include "gradecat/model.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>

namespace gradecat {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  fail(ErrCode::Schema, path + ": " + msg);
}

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(path, std::string("missing required key '") + key + "'");
  return *it;
}

const Json* maybe(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

void check_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys)
      if (it.key() == k) known = true;
    if (!known) schema(path, "unknown key '" + it.key() + "'");
  }
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected a string");
  return j.get<std::string>();
}

int get_index(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected a non-negative integer");
  auto v = j.get<std::int64_t>();
  if (v < 0 || v > (std::int64_t(1) << 30)) schema(path, "integer out of range");
  return int(v);
}

int vertex_of(const Quiver& q, const std::string& name, const std::string& path) {
  for (int i = 0; i < int(q.vertices.size()); i++)
    if (q.vertices[i] == name) return i;
  schema(path, "unresolved vertex '" + name + "'");
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrCode::Schema, path + ": cannot open file");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(ErrCode::Schema, path + ": malformed JSON");
  return j;
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrCode::Schema, path + ": cannot open file for writing");
  out << j.dump(2) << "\n";
}

/* --- scalars ------------------------------------------------------------ */

Json int_json(const Int& v) {
  if (v.fits_slong_p()) return Json(std::int64_t(v.get_si()));
  return Json(int_str(v));
}

Int parse_int(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.dump());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      schema(path, "malformed integer '" + j.get<std::string>() + "'");
    }
  }
  schema(path, "expected an integer (number or decimal string)");
}

Json rat_json(const Rat& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p())
    return Json(std::int64_t(v.get_num().get_si()));
  return Json(rat_str(v));
}

QCoef parse_coef(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return QCoef{Rat(Int(j.dump())), false};
  if (!j.is_string())
    schema(path, "expected a coefficient (integer, or a string like \"-1/2\", \"q\", \"2*q\")");
  std::string s = j.get<std::string>();
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) schema(path, "empty coefficient");
  QCoef c;
  if (s.back() == 'q') {
    c.times_q = true;
    s.pop_back();
    if (!s.empty() && s.back() == '*') s.pop_back();
    if (s.empty()) {
      c.base = Rat(1);
      return c;
    }
    if (s == "-") {
      c.base = Rat(-1);
      return c;
    }
  }
  try {
    c.base = parse_rat(s);
  } catch (const Error&) {
    schema(path, "malformed coefficient '" + j.get<std::string>() + "'");
  }
  return c;
}

Rat resolve_coef(const QCoef& c, const std::optional<Rat>& q, const std::string& path) {
  if (!c.times_q) return c.base;
  if (!q) fail(ErrCode::Usage, path + ": coefficient uses the parameter q; pass --q");
  Rat r = c.base * *q;
  return r;
}

Rat parse_rat_json(const Json& j, const std::optional<Rat>& q, const std::string& path) {
  return resolve_coef(parse_coef(j, path), q, path);
}

/* --- field / group / element / hom / presentation ------------------------ */

Json field_json(const Field& F) {
  if (F.kind == Field::Kind::Rationals) return Json("Q");
  Json j = Json::object();
  j["Fp"] = int_json(F.p);
  return j;
}

Field parse_field(const Json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    schema(path, "unknown field '" + j.get<std::string>() + "' (use \"Q\" or {\"Fp\": p})");
  }
  if (j.is_object()) {
    check_keys(j, {"Fp"}, path);
    Int p = parse_int(need(j, "Fp", path), path + ".Fp");
    try {
      return Field::prime(p);
    } catch (const Error& e) {
      schema(path + ".Fp", e.what());
    }
  }
  schema(path, "expected \"Q\" or {\"Fp\": p}");
}

Json group_json(const AbelianGroup& G) {
  Json j = Json::object();
  j["rank"] = std::uint64_t(G.rank);
  Json t = Json::array();
  for (const Int& d : G.torsion) t.push_back(int_json(d));
  j["torsion"] = t;
  return j;
}

AbelianGroup parse_group(const Json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected a group {\"rank\": r, \"torsion\": [d1, ...]}");
  check_keys(j, {"rank", "torsion"}, path);
  AbelianGroup G;
  G.rank = size_t(get_index(need(j, "rank", path), path + ".rank"));
  const Json& t = need(j, "torsion", path);
  if (!t.is_array()) schema(path + ".torsion", "expected an array");
  Int prev = 0;
  for (size_t i = 0; i < t.size(); i++) {
    std::string p = path + ".torsion[" + std::to_string(i) + "]";
    Int d = parse_int(t[i], p);
    if (d < 2) schema(p, "torsion invariant must be at least 2");
    if (i > 0 && !mpz_divisible_p(d.get_mpz_t(), prev.get_mpz_t()))
      schema(p, "torsion invariants must form a divisibility chain");
    prev = d;
    G.torsion.push_back(d);
  }
  return G;
}

Json element_json(const GroupElement& e) {
  Json j = Json::object();
  Json f = Json::array();
  for (const Int& v : e.free_part) f.push_back(int_json(v));
  Json t = Json::array();
  for (const Int& v : e.torsion_part) t.push_back(int_json(v));
  j["free"] = f;
  j["torsion"] = t;
  return j;
}

GroupElement parse_element(const Json& j, const AbelianGroup& G, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an element {\"free\": [...], \"torsion\": [...]}");
  check_keys(j, {"free", "torsion"}, path);
  const Json& f = need(j, "free", path);
  const Json& t = need(j, "torsion", path);
  if (!f.is_array() || f.size() != G.rank)
    schema(path + ".free", "expected " + std::to_string(G.rank) + " coordinates");
  if (!t.is_array() || t.size() != G.torsion.size())
    schema(path + ".torsion", "expected " + std::to_string(G.torsion.size()) + " coordinates");
  GroupElement e;
  for (size_t i = 0; i < f.size(); i++)
    e.free_part.push_back(parse_int(f[i], path + ".free[" + std::to_string(i) + "]"));
  for (size_t i = 0; i < t.size(); i++)
    e.torsion_part.push_back(parse_int(t[i], path + ".torsion[" + std::to_string(i) + "]"));
  return gel_normalize(G, std::move(e));
}

Json hom_json(const GroupHom& f) {
  Json j = Json::object();
  j["source"] = group_json(f.source);
  j["target"] = group_json(f.target);
  Json im = Json::array();
  for (const GroupElement& e : f.images) im.push_back(element_json(e));
  j["images"] = im;
  return j;
}

GroupHom parse_hom(const Json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected {\"source\", \"target\", \"images\"}");
  check_keys(j, {"source", "target", "images"}, path);
  GroupHom f;
  f.source = parse_group(need(j, "source", path), path + ".source");
  f.target = parse_group(need(j, "target", path), path + ".target");
  const Json& im = need(j, "images", path);
  if (!im.is_array() || im.size() != f.source.ngens())
    schema(path + ".images",
           "expected " + std::to_string(f.source.ngens()) + " images (one per source generator)");
  for (size_t i = 0; i < im.size(); i++)
    f.images.push_back(parse_element(im[i], f.target, path + ".images[" + std::to_string(i) + "]"));
  if (!hom_well_defined(f)) schema(path, "images do not respect the torsion relations");
  return f;
}

Json presentation_json(const GroupPresentation& p) {
  Json j = Json::object();
  j["generators"] = p.generators;
  Json rs = Json::array();
  for (const Word& w : p.relators) {
    Json r = Json::array();
    for (const auto& [g, e] : w) {
      Json st = Json::array();
      st.push_back(p.generators[g]);
      st.push_back(e);
      r.push_back(st);
    }
    rs.push_back(r);
  }
  j["relators"] = rs;
  return j;
}

GroupPresentation parse_presentation(const Json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected {\"generators\", \"relators\"}");
  check_keys(j, {"generators", "relators"}, path);
  GroupPresentation p;
  const Json& gs = need(j, "generators", path);
  if (!gs.is_array()) schema(path + ".generators", "expected an array of names");
  std::map<std::string, int> gidx;
  for (size_t i = 0; i < gs.size(); i++) {
    std::string gp = path + ".generators[" + std::to_string(i) + "]";
    std::string n = get_string(gs[i], gp);
    if (n.empty()) schema(gp, "empty generator name");
    if (gidx.count(n)) schema(gp, "duplicate generator '" + n + "'");
    gidx[n] = int(i);
    p.generators.push_back(n);
  }
  if (const Json* jr = maybe(j, "relators")) {
    if (!jr->is_array()) schema(path + ".relators", "expected an array");
    for (size_t i = 0; i < jr->size(); i++) {
      std::string rp = path + ".relators[" + std::to_string(i) + "]";
      const Json& r = (*jr)[i];
      if (!r.is_array()) schema(rp, "expected an array of [generator, 1|-1] letters");
      Word w;
      for (size_t k = 0; k < r.size(); k++) {
        std::string sp = rp + "[" + std::to_string(k) + "]";
        const Json& st = r[k];
        if (!st.is_array() || st.size() != 2) schema(sp, "expected [generator, 1|-1]");
        std::string n = get_string(st[0], sp + "[0]");
        auto it = gidx.find(n);
        if (it == gidx.end()) schema(sp + "[0]", "unresolved generator '" + n + "'");
        if (!st[1].is_number_integer()) schema(sp + "[1]", "expected 1 or -1");
        auto e = st[1].get<std::int64_t>();
        if (e != 1 && e != -1) schema(sp + "[1]", "expected 1 or -1");
        w.push_back({it->second, int(e)});
      }
      p.relators.push_back(word_reduce(w));
    }
  }
  return p;
}

/* --- category ------------------------------------------------------------ */

std::string pair_key(const PresentedCategory& C, int s, int t) {
  return C.quiver.vertices[s] + "->" + C.quiver.vertices[t];
}

std::pair<int, int> parse_pair_key(const PresentedCategory& C, const std::string& key,
                                   const std::string& path) {
  auto pos = key.find("->");
  if (pos == std::string::npos) schema(path, "expected \"src->tgt\", got '" + key + "'");
  int s = vertex_of(C.quiver, key.substr(0, pos), path);
  int t = vertex_of(C.quiver, key.substr(pos + 2), path);
  return {s, t};
}

std::string ref_key(const PresentedCategory& C, const BasisRef& r) {
  return pair_key(C, r.src, r.tgt) + "#" + std::to_string(r.idx);
}

BasisRef parse_ref_key(const PresentedCategory& C, const std::string& key,
                       const std::string& path) {
  auto pos = key.rfind('#');
  if (pos == std::string::npos) schema(path, "expected \"src->tgt#index\", got '" + key + "'");
  auto [s, t] = parse_pair_key(C, key.substr(0, pos), path);
  std::string digits = key.substr(pos + 1);
  int idx = -1;
  try {
    size_t used = 0;
    idx = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
  } catch (...) {
    schema(path, "malformed basis index in '" + key + "'");
  }
  if (idx < 0 || idx >= C.hom(s, t).dim())
    schema(path, "basis index out of range in '" + key + "' (dimension " +
                     std::to_string(C.hom(s, t).dim()) + ")");
  return BasisRef{s, t, idx};
}

Json category_json(const PresentedCategory& C) {
  Json j = Json::object();
  j["field"] = field_json(C.field);
  j["vertices"] = C.quiver.vertices;
  Json as = Json::array();
  for (const Arrow& a : C.quiver.arrows) {
    Json ja = Json::object();
    ja["id"] = a.id;
    ja["src"] = C.quiver.vertices[a.src];
    ja["tgt"] = C.quiver.vertices[a.tgt];
    as.push_back(ja);
  }
  j["arrows"] = as;
  Json rs = Json::array();
  for (const LinComb& r : C.relations) {
    Json jr = Json::object();
    jr["src"] = C.quiver.vertices[r.src];
    jr["tgt"] = C.quiver.vertices[r.tgt];
    Json ts = Json::array();
    for (const auto& [coef, p] : r.terms) {
      Json jt = Json::object();
      jt["coef"] = rat_json(coef);
      Json jp = Json::array();
      for (int ai : p.seq) jp.push_back(C.quiver.arrows[ai].id);
      jt["path"] = jp;
      ts.push_back(jt);
    }
    jr["terms"] = ts;
    rs.push_back(jr);
  }
  j["relations"] = rs;
  j["bound"] = C.bound;
  return j;
}

PresentedCategory parse_category(const Json& j, const std::optional<Rat>& q,
                                 const std::string& path) {
  if (!j.is_object()) schema(path, "expected a category object");
  check_keys(j, {"field", "vertices", "arrows", "relations", "bound"}, path);
  Field F = parse_field(need(j, "field", path), path + ".field");

  Quiver Q;
  const Json& vs = need(j, "vertices", path);
  if (!vs.is_array() || vs.empty()) schema(path + ".vertices", "expected a nonempty array");
  std::set<std::string> vseen;
  for (size_t i = 0; i < vs.size(); i++) {
    std::string p = path + ".vertices[" + std::to_string(i) + "]";
    std::string name = get_string(vs[i], p);
    if (name.empty()) schema(p, "empty vertex name");
    if (name.find("->") != std::string::npos || name.find('#') != std::string::npos)
      schema(p, "vertex name may not contain '->' or '#'");
    if (!vseen.insert(name).second) schema(p, "duplicate vertex '" + name + "'");
    Q.vertices.push_back(name);
  }

  const Json& as = need(j, "arrows", path);
  if (!as.is_array()) schema(path + ".arrows", "expected an array");
  std::map<std::string, int> aidx;
  for (size_t i = 0; i < as.size(); i++) {
    std::string p = path + ".arrows[" + std::to_string(i) + "]";
    const Json& ja = as[i];
    if (!ja.is_object()) schema(p, "expected {\"id\", \"src\", \"tgt\"}");
    check_keys(ja, {"id", "src", "tgt"}, p);
    Arrow a;
    a.id = get_string(need(ja, "id", p), p + ".id");
    if (a.id.empty()) schema(p + ".id", "empty arrow id");
    if (aidx.count(a.id)) schema(p + ".id", "duplicate arrow id '" + a.id + "'");
    a.src = vertex_of(Q, get_string(need(ja, "src", p), p + ".src"), p + ".src");
    a.tgt = vertex_of(Q, get_string(need(ja, "tgt", p), p + ".tgt"), p + ".tgt");
    aidx[a.id] = int(Q.arrows.size());
    Q.arrows.push_back(a);
  }

  std::vector<LinComb> rels;
  if (const Json* jr = maybe(j, "relations")) {
    if (!jr->is_array()) schema(path + ".relations", "expected an array");
    for (size_t i = 0; i < jr->size(); i++) {
      std::string p = path + ".relations[" + std::to_string(i) + "]";
      const Json& r = (*jr)[i];
      if (!r.is_object()) schema(p, "expected {\"src\", \"tgt\", \"terms\"}");
      check_keys(r, {"src", "tgt", "terms"}, p);
      LinComb lc;
      lc.src = vertex_of(Q, get_string(need(r, "src", p), p + ".src"), p + ".src");
      lc.tgt = vertex_of(Q, get_string(need(r, "tgt", p), p + ".tgt"), p + ".tgt");
      const Json& ts = need(r, "terms", p);
      if (!ts.is_array()) schema(p + ".terms", "expected an array");
      for (size_t k = 0; k < ts.size(); k++) {
        std::string tp = p + ".terms[" + std::to_string(k) + "]";
        const Json& t = ts[k];
        if (!t.is_object()) schema(tp, "expected {\"coef\", \"path\"}");
        check_keys(t, {"coef", "path"}, tp);
        Rat coef = resolve_coef(parse_coef(need(t, "coef", tp), tp + ".coef"), q, tp + ".coef");
        Path pa;
        pa.base = lc.src;
        const Json& jp = need(t, "path", tp);
        if (!jp.is_array()) schema(tp + ".path", "expected an array of arrow ids (first applied first)");
        for (size_t m = 0; m < jp.size(); m++) {
          std::string ap = tp + ".path[" + std::to_string(m) + "]";
          std::string id = get_string(jp[m], ap);
          auto it = aidx.find(id);
          if (it == aidx.end()) schema(ap, "unresolved arrow '" + id + "'");
          pa.seq.push_back(it->second);
        }
        lc.terms.push_back({coef, pa});
      }
      rels.push_back(lc);
    }
  }

  std::optional<int> bound;
  if (const Json* jb = maybe(j, "bound"))
    if (!jb->is_null()) bound = get_index(*jb, path + ".bound");
  return build_category(Q, rels, bound, F);
}

/* --- matrices / vectors --------------------------------------------------- */

Json matrix_json(const QMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows; r++) {
    Json row = Json::array();
    for (int c = 0; c < m.cols; c++) row.push_back(rat_json(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

QMat parse_matrix(const Json& j, const std::optional<Rat>& q, const std::string& path) {
  if (!j.is_array()) schema(path, "expected a matrix (array of row arrays)");
  int rows = int(j.size());
  int cols = -1;
  std::vector<Rat> data;
  for (int r = 0; r < rows; r++) {
    std::string rp = path + "[" + std::to_string(r) + "]";
    const Json& row = j[r];
    if (!row.is_array()) schema(rp, "expected a row array");
    if (cols < 0)
      cols = int(row.size());
    else if (int(row.size()) != cols)
      schema(rp, "ragged matrix");
    for (int c = 0; c < int(row.size()); c++)
      data.push_back(parse_rat_json(row[c], q, rp + "[" + std::to_string(c) + "]"));
  }
  if (cols < 0) cols = 0;
  QMat m(rows, cols);
  m.a = std::move(data);
  return m;
}

Json vector_json(const std::vector<Rat>& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(rat_json(x));
  return j;
}

std::vector<Rat> parse_vector(const Json& j, const std::optional<Rat>& q,
                              const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of rationals");
  std::vector<Rat> v;
  for (size_t i = 0; i < j.size(); i++)
    v.push_back(parse_rat_json(j[i], q, path + "[" + std::to_string(i) + "]"));
  return v;
}

/* --- grading -------------------------------------------------------------- */

Json grading_json(const PresentedCategory& C, const Grading& X) {
  Json j = Json::object();
  j["group"] = group_json(X.group);
  Json bc = Json::object();
  int nv = C.nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int d = C.hom(s, t).dim();
      if (d == 0) continue;
      const QMat& B = X.base_change[size_t(s) * nv + t];
      if (B == QMat::identity(d)) continue;
      bc[pair_key(C, s, t)] = matrix_json(B);
    }
  if (!bc.empty()) j["base_change"] = bc;
  Json dg = Json::object();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      size_t p = size_t(s) * nv + t;
      for (int i = 0; i < int(X.degrees[p].size()); i++)
        dg[ref_key(C, BasisRef{s, t, i})] = element_json(X.degrees[p][i]);
    }
  j["degrees"] = dg;
  return j;
}

Grading parse_grading(const PresentedCategory& C, const Json& j, const std::optional<Rat>& q,
                      const std::string& path) {
  if (!j.is_object()) schema(path, "expected a grading object");
  check_keys(j, {"group", "base_change", "degrees"}, path);
  AbelianGroup G = parse_group(need(j, "group", path), path + ".group");
  int nv = C.nv();

  std::vector<std::optional<QMat>> bcs(size_t(nv) * nv);
  if (const Json* jb = maybe(j, "base_change")) {
    if (!jb->is_object()) schema(path + ".base_change", "expected an object keyed by hom pairs");
    for (auto it = jb->begin(); it != jb->end(); ++it) {
      std::string p = path + ".base_change['" + it.key() + "']";
      auto [s, t] = parse_pair_key(C, it.key(), p);
      QMat m = parse_matrix(it.value(), q, p);
      int d = C.hom(s, t).dim();
      if (m.rows != d || m.cols != d)
        schema(p, "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
      bcs[size_t(s) * nv + t] = std::move(m);
    }
  }

  const Json& jd = need(j, "degrees", path);
  if (!jd.is_object()) schema(path + ".degrees", "expected an object keyed by basis references");
  std::vector<std::vector<GroupElement>> degs(size_t(nv) * nv);
  std::vector<std::vector<bool>> have(size_t(nv) * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      degs[size_t(s) * nv + t].assign(size_t(C.hom(s, t).dim()), GroupElement{});
      have[size_t(s) * nv + t].assign(size_t(C.hom(s, t).dim()), false);
    }
  for (auto it = jd.begin(); it != jd.end(); ++it) {
    std::string p = path + ".degrees['" + it.key() + "']";
    BasisRef r = parse_ref_key(C, it.key(), p);
    size_t pi = size_t(r.src) * nv + r.tgt;
    if (have[pi][r.idx]) schema(p, "duplicate degree for '" + it.key() + "'");
    have[pi][r.idx] = true;
    degs[pi][r.idx] = parse_element(it.value(), G, p);
  }
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++)
      for (int i = 0; i < C.hom(s, t).dim(); i++)
        if (!have[size_t(s) * nv + t][i])
          schema(path + ".degrees", "missing degree for '" + ref_key(C, BasisRef{s, t, i}) + "'");
  return make_grading(C, G, bcs, degs);
}

/* --- functor / walk ------------------------------------------------------- */

Json functor_json(const PresentedCategory& C, const Functor& F) {
  Json j = Json::object();
  Json ms = Json::object();
  int nv = C.nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int d = C.hom(s, t).dim();
      if (d == 0) continue;
      const QMat& M = F.matrices[size_t(s) * nv + t];
      if (M == QMat::identity(d)) continue;
      ms[pair_key(C, s, t)] = matrix_json(M);
    }
  j["matrices"] = ms;
  return j;
}

Functor parse_functor(const PresentedCategory& C, const Json& j, const std::optional<Rat>& q,
                      const std::string& path) {
  if (!j.is_object()) schema(path, "expected a functor object {\"matrices\": {...}}");
  check_keys(j, {"matrices"}, path);
  int nv = C.nv();
  std::vector<QMat> mats(size_t(nv) * nv);
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) mats[size_t(s) * nv + t] = QMat::identity(C.hom(s, t).dim());
  if (const Json* jm = maybe(j, "matrices")) {
    if (!jm->is_object()) schema(path + ".matrices", "expected an object keyed by hom pairs");
    for (auto it = jm->begin(); it != jm->end(); ++it) {
      std::string p = path + ".matrices['" + it.key() + "']";
      auto [s, t] = parse_pair_key(C, it.key(), p);
      QMat m = parse_matrix(it.value(), q, p);
      int d = C.hom(s, t).dim();
      if (m.rows != d || m.cols != d)
        schema(p, "expected a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
      mats[size_t(s) * nv + t] = std::move(m);
    }
  }
  return build_functor(C, C, mats);
}

Json walk_json(const PresentedCategory& C, const NamedWalk& w) {
  Json j = Json::array();
  for (const auto& [r, e] : w.steps) {
    Json st = Json::array();
    st.push_back(ref_key(C, r));
    st.push_back(e);
    j.push_back(st);
  }
  return j;
}

NamedWalk parse_walk(const PresentedCategory& C, const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    schema(path, "expected a nonempty array of [basisRef, 1|-1] steps");
  NamedWalk w;
  for (size_t i = 0; i < j.size(); i++) {
    std::string p = path + "[" + std::to_string(i) + "]";
    const Json& st = j[i];
    if (!st.is_array() || st.size() != 2) schema(p, "expected [basisRef, 1|-1]");
    BasisRef r = parse_ref_key(C, get_string(st[0], p + "[0]"), p + "[0]");
    if (!st[1].is_number_integer()) schema(p + "[1]", "expected 1 or -1");
    auto e = st[1].get<std::int64_t>();
    if (e != 1 && e != -1) schema(p + "[1]", "expected 1 or -1");
    w.steps.push_back({r, int(e)});
  }
  w.base = w.steps.front().second > 0 ? w.steps.front().first.src : w.steps.front().first.tgt;
  return w;
}

/* --- model files ----------------------------------------------------------- */

namespace {
template <class T>
const T* find_named(const std::vector<std::pair<std::string, T>>& v, const std::string& n) {
  for (const auto& [k, x] : v)
    if (k == n) return &x;
  return nullptr;
}
template <class T>
std::string name_list(const std::vector<std::pair<std::string, T>>& v) {
  if (v.empty()) return "(none)";
  std::string s;
  for (const auto& [k, x] : v) {
    if (!s.empty()) s += ", ";
    s += k;
  }
  return s;
}
}  // namespace

const Grading* ModelFile::grading(const std::string& name) const {
  return find_named(gradings, name);
}
const Functor* ModelFile::functor(const std::string& name) const {
  return find_named(functors, name);
}
const GroupHom* ModelFile::hom(const std::string& name) const { return find_named(homs, name); }
const NamedWalk* ModelFile::walk(const std::string& name) const { return find_named(walks, name); }

const Grading& ModelFile::need_grading(const std::string& name) const {
  const Grading* g = grading(name);
  if (!g)
    fail(ErrCode::Usage, "unknown grading '" + name + "'; the file defines: " + name_list(gradings));
  return *g;
}
const Functor& ModelFile::need_functor(const std::string& name) const {
  const Functor* f = functor(name);
  if (!f)
    fail(ErrCode::Usage, "unknown functor '" + name + "'; the file defines: " + name_list(functors));
  return *f;
}
const GroupHom& ModelFile::need_hom(const std::string& name) const {
  const GroupHom* f = hom(name);
  if (!f)
    fail(ErrCode::Usage,
         "unknown group map '" + name + "'; the file defines: " + name_list(homs));
  return *f;
}
const NamedWalk& ModelFile::need_walk(const std::string& name) const {
  const NamedWalk* w = walk(name);
  if (!w)
    fail(ErrCode::Usage, "unknown walk '" + name + "'; the file defines: " + name_list(walks));
  return *w;
}

ModelFile parse_model(const Json& j, const std::optional<Rat>& q) {
  if (!j.is_object()) fail(ErrCode::Schema, "$: model file must be a JSON object");
  check_keys(j, {"category", "gradings", "functors", "homs", "walks"}, "$");
  ModelFile m;
  m.category =
      std::make_unique<PresentedCategory>(parse_category(need(j, "category", "$"), q, "$.category"));
  if (const Json* jg = maybe(j, "gradings")) {
    if (!jg->is_object()) schema("$.gradings", "expected an object of named gradings");
    for (auto it = jg->begin(); it != jg->end(); ++it)
      m.gradings.emplace_back(
          it.key(), parse_grading(*m.category, it.value(), q, "$.gradings['" + it.key() + "']"));
  }
  if (const Json* jf = maybe(j, "functors")) {
    if (!jf->is_object()) schema("$.functors", "expected an object of named functors");
    for (auto it = jf->begin(); it != jf->end(); ++it)
      m.functors.emplace_back(
          it.key(), parse_functor(*m.category, it.value(), q, "$.functors['" + it.key() + "']"));
  }
  if (const Json* jh = maybe(j, "homs")) {
    if (!jh->is_object()) schema("$.homs", "expected an object of named group maps");
    for (auto it = jh->begin(); it != jh->end(); ++it)
      m.homs.emplace_back(it.key(), parse_hom(it.value(), "$.homs['" + it.key() + "']"));
  }
  if (const Json* jw = maybe(j, "walks")) {
    if (!jw->is_object()) schema("$.walks", "expected an object of named walks");
    for (auto it = jw->begin(); it != jw->end(); ++it)
      m.walks.emplace_back(it.key(),
                           parse_walk(*m.category, it.value(), "$.walks['" + it.key() + "']"));
  }
  return m;
}

ModelFile load_model(const std::string& path, const std::optional<Rat>& q) {
  return parse_model(read_json_file(path), q);
}

Json model_json(const ModelFile& m) {
  Json j = Json::object();
  j["category"] = category_json(*m.category);
  if (!m.gradings.empty()) {
    Json g = Json::object();
    for (const auto& [n, x] : m.gradings) g[n] = grading_json(*m.category, x);
    j["gradings"] = g;
  }
  if (!m.functors.empty()) {
    Json f = Json::object();
    for (const auto& [n, x] : m.functors) f[n] = functor_json(*m.category, x);
    j["functors"] = f;
  }
  if (!m.homs.empty()) {
    Json h = Json::object();
    for (const auto& [n, x] : m.homs) h[n] = hom_json(x);
    j["homs"] = h;
  }
  if (!m.walks.empty()) {
    Json w = Json::object();
    for (const auto& [n, x] : m.walks) w[n] = walk_json(*m.category, x);
    j["walks"] = w;
  }
  return j;
}

namespace {
bool path_equal(const Path& a, const Path& b) {
  if (a.seq != b.seq) return false;
  return a.seq.empty() ? a.base == b.base : true;
}
bool lincomb_equal(const LinComb& a, const LinComb& b) {
  if (a.src != b.src || a.tgt != b.tgt || a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); i++) {
    if (a.terms[i].first != b.terms[i].first) return false;
    if (!path_equal(a.terms[i].second, b.terms[i].second)) return false;
  }
  return true;
}
bool category_equal(const PresentedCategory& a, const PresentedCategory& b) {
  if (!(a.field == b.field) || a.bound != b.bound) return false;
  if (a.quiver.vertices != b.quiver.vertices) return false;
  if (a.quiver.arrows.size() != b.quiver.arrows.size()) return false;
  for (size_t i = 0; i < a.quiver.arrows.size(); i++) {
    const Arrow& x = a.quiver.arrows[i];
    const Arrow& y = b.quiver.arrows[i];
    if (x.id != y.id || x.src != y.src || x.tgt != y.tgt) return false;
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (size_t i = 0; i < a.relations.size(); i++)
    if (!lincomb_equal(a.relations[i], b.relations[i])) return false;
  return true;
}
}  // namespace

bool model_equal(const ModelFile& a, const ModelFile& b) {
  if (!category_equal(*a.category, *b.category)) return false;
  if (a.gradings.size() != b.gradings.size()) return false;
  for (size_t i = 0; i < a.gradings.size(); i++) {
    if (a.gradings[i].first != b.gradings[i].first) return false;
    const Grading& x = a.gradings[i].second;
    const Grading& y = b.gradings[i].second;
    if (!(x.group == y.group) || x.base_change != y.base_change || x.degrees != y.degrees)
      return false;
  }
  if (a.functors.size() != b.functors.size()) return false;
  for (size_t i = 0; i < a.functors.size(); i++) {
    if (a.functors[i].first != b.functors[i].first) return false;
    if (a.functors[i].second.matrices != b.functors[i].second.matrices) return false;
  }
  if (a.homs.size() != b.homs.size()) return false;
  for (size_t i = 0; i < a.homs.size(); i++) {
    if (a.homs[i].first != b.homs[i].first) return false;
    if (!(a.homs[i].second == b.homs[i].second)) return false;
  }
  if (a.walks.size() != b.walks.size()) return false;
  for (size_t i = 0; i < a.walks.size(); i++) {
    if (a.walks[i].first != b.walks[i].first) return false;
    if (a.walks[i].second.base != b.walks[i].second.base ||
        a.walks[i].second.steps != b.walks[i].second.steps)
      return false;
  }
  return true;
}

/* --- smash-product files ----------------------------------------------------- */

Json smash_json(const SmashCategory& S) {
  Json j = Json::object();
  j["category"] = category_json(*S.cat);
  j["grading"] = grading_json(*S.cat, *S.grading);
  Json es = Json::array();
  for (const GroupElement& e : S.elems) es.push_back(element_json(e));
  j["elements"] = es;
  Json hs = Json::array();
  int n = S.nobj();
  for (int o1 = 0; o1 < n; o1++)
    for (int o2 = 0; o2 < n; o2++) {
      Json cell = Json::array();
      for (const BasisRef& r : S.hom_at(o1, o2)) cell.push_back(ref_key(*S.cat, r));
      hs.push_back(cell);
    }
  j["hom"] = hs;
  return j;
}

SmashFile parse_smash(const Json& j, const std::optional<Rat>& q) {
  if (!j.is_object()) fail(ErrCode::Schema, "$: smash file must be a JSON object");
  check_keys(j, {"category", "grading", "elements", "hom"}, "$");
  SmashFile f;
  f.category =
      std::make_unique<PresentedCategory>(parse_category(need(j, "category", "$"), q, "$.category"));
  f.grading = std::make_unique<Grading>(
      parse_grading(*f.category, need(j, "grading", "$"), q, "$.grading"));
  SmashCategory& S = f.smash;
  S.cat = f.category.get();
  S.grading = f.grading.get();
  const AbelianGroup& G = f.grading->group;
  if (!G.is_finite())
    fail(ErrCode::InfiniteGroup, "$.grading.group: smash products need a finite group");
  const Json& es = need(j, "elements", "$");
  if (!es.is_array()) schema("$.elements", "expected an array of group elements");
  for (size_t i = 0; i < es.size(); i++)
    S.elems.push_back(parse_element(es[i], G, "$.elements[" + std::to_string(i) + "]"));
  if (!(G.order() == long(S.elems.size())))
    schema("$.elements", "expected one entry per group element (" + int_str(G.order()) + ")");
  for (size_t i = 0; i < S.elems.size(); i++)
    for (size_t k = i + 1; k < S.elems.size(); k++)
      if (S.elems[i] == S.elems[k])
        schema("$.elements",
               "duplicate element at positions " + std::to_string(i) + " and " + std::to_string(k));
  const Json& hs = need(j, "hom", "$");
  int n = S.nobj();
  if (!hs.is_array() || int(hs.size()) != n * n)
    schema("$.hom", "expected " + std::to_string(n * n) + " cells (object pairs, row-major)");
  for (int c = 0; c < n * n; c++) {
    std::string p = "$.hom[" + std::to_string(c) + "]";
    const Json& cell = hs[size_t(c)];
    if (!cell.is_array()) schema(p, "expected an array of basis references");
    std::vector<BasisRef> refs;
    for (size_t i = 0; i < cell.size(); i++) {
      std::string ip = p + "[" + std::to_string(i) + "]";
      refs.push_back(parse_ref_key(*f.category, get_string(cell[i], ip), ip));
    }
    S.hom.push_back(std::move(refs));
  }
  return f;
}

}  // namespace gradecat
