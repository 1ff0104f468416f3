#include <CLI11.hpp>
#include <iostream>

#include "gradecat/corpus.hpp"
#include "gradecat/smash.hpp"

using namespace gradecat;

namespace {

std::optional<Rat> opt_q(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_rat(s);
}

int resolve_vertex(const PresentedCategory& C, const std::string& name) {
  if (name.empty()) return 0;
  try {
    return C.quiver.vertex_index(name);
  } catch (const Error&) {
    fail(ErrCode::Usage, "unknown vertex '" + name + "'");
  }
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

AbelianGroup parse_group_spec(const std::string& spec) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : spec) {
    if (c == 'x' || c == 'X' || c == '*') {
      tokens.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  tokens.push_back(cur);
  int rank = 0;
  std::vector<Int> tors;
  for (const std::string& t : tokens) {
    if (t == "Z") {
      rank++;
      continue;
    }
    std::string num;
    if (!t.empty() && (t[0] == 'C' || t[0] == 'c'))
      num = t.substr(1);
    else if (t.rfind("Z/", 0) == 0)
      num = t.substr(2);
    bool digits = !num.empty();
    for (char c : num) digits = digits && std::isdigit(static_cast<unsigned char>(c));
    if (!digits)
      fail(ErrCode::Usage,
           "bad group token '" + t + "' in '" + spec + "' (use Z, Cn, Z/n, joined with x)");
    Int n(num);
    if (n == 0)
      rank++;  // C0 = Z/0 = Z
    else if (n > 1)
      tors.push_back(n);
  }
  if (tors.empty()) return rank == 0 ? AbelianGroup::trivial() : AbelianGroup::free(rank);
  int n = rank + int(tors.size());
  IntMat R(int(tors.size()), n);
  for (size_t i = 0; i < tors.size(); i++) R.at(int(i), int(i)) = tors[i];
  return cokernel(R, n).group;  // canonical invariant-factor form
}

std::string gel_list(const AbelianGroup& G, const std::vector<GroupElement>& es) {
  std::string s;
  for (const auto& e : es) s += (s.empty() ? "" : ", ") + gel_str(G, e);
  return s.empty() ? "(none)" : s;
}

std::string count_list(const UniversalCheck& uc) {
  std::string s;
  for (const auto& e : uc.entries)
    s += (s.empty() ? "" : ", ") + e.label + ":" + std::to_string(e.count);
  return s.empty() ? "(empty family)" : s;
}

std::string first_violation(const GradingCheck& chk) {
  return chk.ok ? "all composites and identities homogeneous" : chk.violations.front().detail;
}

/* ---- commands ------------------------------------------------------------ */

Report cmd_cat_info(const std::string& path, const std::optional<Rat>& q) {
  Report R;
  R.command = "cat info " + path;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  int nv = C.nv();
  long total = 0;
  Json dims = Json::object();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      int d = C.hom(s, t).dim();
      total += d;
      if (d > 0) dims[pair_key(C, s, t)] = d;
    }
  std::string bound = C.bound > 0 ? std::to_string(C.bound) : "none";
  R.add("category admissible", true,
        std::to_string(nv) + " vertices, " + std::to_string(C.quiver.arrows.size()) +
            " arrows, " + std::to_string(C.relations.size()) + " relation(s), field " +
            C.field.str() + ", length bound " + bound);
  R.add("hom-space dimensions computed", true,
        "total dimension " + std::to_string(total) + " over " + std::to_string(nv * nv) +
            " ordered vertex pairs");
  std::vector<std::string> gn, fn, hn, wn;
  for (const auto& g : m.gradings) gn.push_back(g.first);
  for (const auto& f : m.functors) fn.push_back(f.first);
  for (const auto& h : m.homs) hn.push_back(h.first);
  for (const auto& w : m.walks) wn.push_back(w.first);
  R.add("named sections resolved", true,
        "gradings [" + join(gn) + "], functors [" + join(fn) + "], group maps [" + join(hn) +
            "], walks [" + join(wn) + "]");
  R.data["dims"] = dims;
  R.data["gradings"] = gn;
  R.data["functors"] = fn;
  R.data["homs"] = hn;
  R.data["walks"] = wn;
  return R;
}

Report cmd_cat_check(const std::string& path, const std::optional<Rat>& q) {
  Report R;
  R.command = "cat check " + path;
  ModelFile m = load_model(path, q);
  R.add("model parses and all references resolve", true, "");
  for (const auto& [name, X] : m.gradings) {
    GradingCheck chk = validate_grading(X);
    R.add("grading '" + name + "' is a valid grading", chk.ok, first_violation(chk));
  }
  for (const auto& [name, F] : m.functors)
    R.add("functor '" + name + "' respects composition and identities", true,
          "verified on all composable basis pairs");
  for (const auto& [name, h] : m.homs)
    R.add("group map '" + name + "' is well defined", true, hom_str(h));
  for (const auto& [name, w] : m.walks)
    R.add("walk '" + name + "' is concatenable", true,
          std::to_string(w.steps.size()) + " step(s)");
  return R;
}

Report cmd_grading_validate(const std::string& path, const std::optional<Rat>& q,
                            const std::string& gname) {
  Report R;
  R.command = "grading validate " + path + " --grading " + gname;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  const Grading& X = m.need_grading(gname);
  GradingCheck chk = validate_grading(X);
  R.add("grading '" + gname + "' is a valid grading", chk.ok, first_violation(chk));
  Json viol = Json::array();
  for (const auto& v : chk.violations) {
    Json e = Json::object();
    e["pair"] = pair_key(C, v.x, v.z);
    e["detail"] = v.detail;
    viol.push_back(e);
  }
  R.data["group"] = group_json(X.group);
  R.data["violations"] = viol;
  return R;
}

Report cmd_grading_connected(const std::string& path, const std::optional<Rat>& q,
                             const std::string& gname, const std::string& base) {
  Report R;
  R.command = "grading connected " + path + " --grading " + gname;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  const Grading& X = m.need_grading(gname);
  int b0 = resolve_vertex(C, base);
  GradingCheck chk = validate_grading(X);
  R.add("grading '" + gname + "' is a valid grading", chk.ok, first_violation(chk));
  std::vector<GroupElement> gens = closed_walk_degree_gens(X, b0);
  bool conn = is_connected_grading(X, b0);
  R.add("closed-walk degrees generate the structural group", conn,
        "group " + X.group.str() + "; closed-walk degree generators " + gel_list(X.group, gens));
  Json gj = Json::array();
  for (const auto& e : gens) gj.push_back(element_json(e));
  R.data["group"] = group_json(X.group);
  R.data["generators"] = gj;
  return R;
}

Report cmd_grading_quotient(const std::string& path, const std::optional<Rat>& q,
                            const std::string& gname, const std::string& hname,
                            const std::string& out) {
  Report R;
  R.command = "grading quotient " + path + " --grading " + gname + " --hom " + hname;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  const Grading& X = m.need_grading(gname);
  const GroupHom& pi = m.need_hom(hname);
  Grading Qd = quotient_grading(X, pi);
  R.add("quotient grading constructed", true, "group " + Qd.group.str());
  GradingCheck chk = validate_grading(Qd);
  R.add("quotient grading is a valid grading", chk.ok, first_violation(chk));
  R.data["grading"] = grading_json(C, Qd);
  if (!out.empty()) {
    write_json_file(out, grading_json(C, Qd));
    R.add("wrote " + out, true, "");
  }
  return R;
}

Report cmd_schur_analyze(const std::string& path, const std::optional<Rat>& q) {
  Report R;
  R.command = "schur analyze " + path;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  auto pairs = schurian_morphisms(C);
  std::vector<std::string> pk;
  for (auto [s, t] : pairs) pk.push_back(pair_key(C, s, t));
  R.add("one-dimensional hom-spaces listed", true,
        std::to_string(pairs.size()) + " pair(s): " + (pk.empty() ? "(none)" : join(pk)));
  SGClosure sg = sg_closure(C);
  R.add("category is generated by its one-dimensional hom-spaces", sg.is_sg,
        sg.witness ? "first basis element outside the span: " + ref_key(C, *sg.witness)
                   : "span covers every hom-space");
  ConstrictedCheck con = is_constricted(C);
  R.add("presentation is constricted", con.ok,
        con.witness ? "arrow '" + C.quiver.arrows[size_t(con.witness->first)].id +
                          "' has the surviving parallel path " +
                          path_str(C.quiver, con.witness->second)
                    : "every path parallel to an arrow lies in the ideal");
  Json parts = Json::object();
  int nv = C.nv();
  for (int s = 0; s < nv; s++)
    for (int t = 0; t < nv; t++) {
      if (C.hom(s, t).paths.size() < 2 || C.hom(s, t).paths.size() > 20) continue;
      Json blocks = Json::array();
      for (const auto& b : homogeneity_partition(C, s, t)) {
        Json blk = Json::array();
        for (int i : b) blk.push_back(path_str(C.quiver, C.hom(s, t).paths[size_t(i)]));
        blocks.push_back(blk);
      }
      parts[pair_key(C, s, t)] = blocks;
    }
  R.data["schurian_pairs"] = pk;
  R.data["partitions"] = parts;
  return R;
}

Report cmd_schur_universal(const std::string& path, const std::optional<Rat>& q,
                           const std::string& base, const std::string& out_pres,
                           const std::string& out_grad) {
  Report R;
  R.command = "schur universal " + path;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  int b0 = resolve_vertex(C, base);
  UniversalGrading U = universal_grading(C, b0);
  R.add("presentation-homotopy group computed", true, U.homotopy.pi1.str());
  R.add("structural group (abelianized)", true, U.grading.group.str());
  GradingCheck chk = validate_grading(U.grading);
  R.add("universal grading is valid and connected",
        chk.ok && is_connected_grading(U.grading, b0), first_violation(chk));
  R.data["presentation"] = presentation_json(U.homotopy.pi1);
  R.data["group"] = group_json(U.grading.group);
  R.data["grading"] = grading_json(C, U.grading);
  if (!out_pres.empty()) {
    write_json_file(out_pres, presentation_json(U.homotopy.pi1));
    R.add("wrote " + out_pres, true, "");
  }
  if (!out_grad.empty()) {
    write_json_file(out_grad, grading_json(C, U.grading));
    R.add("wrote " + out_grad, true, "");
  }
  return R;
}

Grading grading_from_file(const PresentedCategory& C, const std::string& path,
                          const std::optional<Rat>& q, const std::string& name) {
  Json j = read_json_file(path);
  if (j.is_object() && (j.contains("group") || j.contains("degrees")))
    return parse_grading(C, j, q, "$");
  if (j.is_object() && j.contains("gradings")) {
    const Json& gs = j["gradings"];
    if (!gs.is_object() || gs.empty())
      fail(ErrCode::Schema, "$.gradings: expected a nonempty object");
    if (!name.empty()) {
      if (!gs.contains(name)) {
        std::vector<std::string> names;
        for (auto it = gs.begin(); it != gs.end(); ++it) names.push_back(it.key());
        fail(ErrCode::Usage, "grading '" + name + "' not in " + path + "; available: " +
                                 join(names));
      }
      return parse_grading(C, gs[name], q, "$.gradings." + name);
    }
    if (gs.size() == 1) return parse_grading(C, gs.begin().value(), q, "$.gradings." + gs.begin().key());
    fail(ErrCode::Usage, "several gradings in " + path + "; pick one with --name");
  }
  fail(ErrCode::Schema, "$: expected a grading object or a model file with a gradings section");
}

Report cmd_smash_build(const std::string& cat_path, const std::string& grad_path,
                       const std::string& out, const std::optional<Rat>& q,
                       const std::string& name) {
  Report R;
  R.command = "smash build --category " + cat_path + " --grading " + grad_path;
  ModelFile m = load_model(cat_path, q);
  const PresentedCategory& C = *m.category;
  Grading X = grading_from_file(C, grad_path, q, name);
  SmashCategory S = build_smash(C, X);
  long total = 0;
  for (const auto& cell : S.hom) total += long(cell.size());
  R.add("smash category built", true,
        "group " + X.group.str() + " of order " + X.group.order().get_str() + ", " +
            std::to_string(S.nobj()) + " objects, total hom dimension " + std::to_string(total));
  write_json_file(out, smash_json(S));
  R.add("wrote " + out, true, "");
  return R;
}

Report cmd_smash_verify(const std::string& path, const std::optional<Rat>& q) {
  Report R;
  R.command = "smash verify " + path;
  SmashFile sf = parse_smash(read_json_file(path), q);
  const SmashCategory& S = sf.smash;
  SmashCategory fresh = build_smash(*sf.category, *sf.grading);
  // stored element order may differ from the canonical enumeration
  std::vector<int> eidx(S.elems.size(), -1);
  for (size_t i = 0; i < S.elems.size(); i++)
    for (size_t k = 0; k < fresh.elems.size(); k++)
      if (S.elems[i] == fresh.elems[k]) eidx[i] = int(k);
  bool table_ok = true;
  std::string witness;
  for (int o1 = 0; table_ok && o1 < S.nobj(); o1++)
    for (int o2 = 0; table_ok && o2 < S.nobj(); o2++) {
      int f1 = fresh.obj(S.obj_base(o1), eidx[size_t(S.obj_elem(o1))]);
      int f2 = fresh.obj(S.obj_base(o2), eidx[size_t(S.obj_elem(o2))]);
      if (!(S.hom_at(o1, o2) == fresh.hom_at(f1, f2))) {
        table_ok = false;
        witness = "cell " + S.obj_str(o1) + " -> " + S.obj_str(o2) +
                  " differs from the graded component";
      }
    }
  R.add("stored hom table matches the graded components", table_ok, witness);
  CoveringCheck cc = verify_covering(S);
  R.add("star dimension equality with the base category", cc.ok,
        cc.ok ? "all stars match" : cc.mismatches.front());
  GaloisCheck gc = galois_check(S);
  R.add("deck action is free", gc.free_action,
        gc.free_action || gc.failures.empty() ? "" : gc.failures.front());
  R.add("deck action is transitive on fibers", gc.fiber_transitive,
        gc.fiber_transitive || gc.failures.empty() ? "" : gc.failures.back());
  R.data["group"] = group_json(sf.grading->group);
  R.data["objects"] = S.nobj();
  return R;
}

Report cmd_morph_verify(const std::string& path, const std::optional<Rat>& q,
                        const std::string& src, const std::string& tgt, const std::string& mu,
                        const std::string& fun, const std::string& base) {
  Report R;
  R.command = "morph verify " + path + " --source " + src + " --target " + tgt;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  int b0 = resolve_vertex(C, base);
  const Grading& X = m.need_grading(src);
  const Grading& Y = m.need_grading(tgt);
  const GroupHom& h = m.need_hom(mu);
  const Functor& J = m.need_functor(fun);
  try {
    verify_grading_morphism(X, Y, h, J, b0);
    R.add("witness functor is homogeneous and the degree square holds", true, hom_str(h));
  } catch (const Error& e) {
    if (e.code == ErrCode::Usage || e.code == ErrCode::Schema) throw;
    R.add("witness functor is homogeneous and the degree square holds", false, e.what());
  }
  return R;
}

Report cmd_morph_fix(const std::string& path, const std::optional<Rat>& q,
                     const std::string& gname, const std::string& base) {
  Report R;
  R.command = "morph fix " + path + " --grading " + gname;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  int b0 = resolve_vertex(C, base);
  const Grading& X = m.need_grading(gname);
  FixResult fx = compute_fix(X, b0);
  R.add("subgroup fixed by every self-morphism computed", true,
        "fixed subgroup " + fx.subgroup.str() + " inside " + X.group.str() + ", from " +
            std::to_string(fx.mus.size()) + " self-morphism group map(s)");
  Json gens = Json::array();
  for (const auto& e : fx.gens_in_gamma) gens.push_back(element_json(e));
  R.data["subgroup"] = group_json(fx.subgroup);
  R.data["generators"] = gens;
  R.data["self_morphisms"] = fx.mus.size();
  return R;
}

Report cmd_morph_universal(const std::string& path, const std::optional<Rat>& q,
                           const std::string& cand, const std::string& family_csv,
                           const std::string& base) {
  Report R;
  R.command = "morph universal-check " + path + " --candidate " + cand;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  int b0 = resolve_vertex(C, base);
  const Grading& U = m.need_grading(cand);
  std::vector<std::string> labels;
  if (family_csv.empty()) {
    for (const auto& [name, g] : m.gradings)
      if (name != cand) labels.push_back(name);
  } else {
    labels = split_csv(family_csv);
  }
  std::vector<const Grading*> fam;
  for (const std::string& n : labels) fam.push_back(&m.need_grading(n));
  UniversalCheck uc = verify_universal_property(U, fam, labels, b0);
  R.add("a morphism exists to every family member", uc.all_exist,
        "distinct group-map counts " + count_list(uc));
  R.add("the morphism is unique for every family member", uc.all_unique,
        "distinct group-map counts " + count_list(uc));
  Json entries = Json::array();
  for (const auto& e : uc.entries) {
    Json x = Json::object();
    x["label"] = e.label;
    x["exists"] = e.exists;
    x["unique"] = e.unique;
    x["count"] = e.count;
    entries.push_back(x);
  }
  R.data["entries"] = entries;
  return R;
}

Report cmd_oracle(const std::string& path, const std::optional<Rat>& q,
                  const std::string& group_spec, long cap, const std::string& base) {
  Report R;
  R.command = "oracle enumerate " + path + " --group " + group_spec;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  int b0 = resolve_vertex(C, base);
  AbelianGroup G = parse_group_spec(group_spec);
  auto list = enumerate_constricted_gradings(C, G, b0, cap);
  R.add("exhaustive enumeration of connected gradings complete", true,
        std::to_string(list.size()) + " connected grading(s) by " + G.str());
  Json gj = Json::array();
  for (const Grading& g : list) gj.push_back(grading_json(C, g));
  R.data["group"] = group_json(G);
  R.data["count"] = list.size();
  R.data["gradings"] = gj;
  return R;
}

Report cmd_pi1(const std::string& path, const std::optional<Rat>& q, const std::string& base) {
  Report R;
  R.command = "pi1 presentation " + path;
  ModelFile m = load_model(path, q);
  const PresentedCategory& C = *m.category;
  int b0 = resolve_vertex(C, base);
  HomotopyData H = presentation_homotopy(C, b0);
  Abelianized A = abelianize(H.pi1);
  R.add("presentation-homotopy group computed", true, H.pi1.str());
  R.add("abelianization", true, A.group.str());
  R.data["presentation"] = presentation_json(H.pi1);
  R.data["abelianization"] = group_json(A.group);
  return R;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradings of linear categories presented by quivers with relations"};
  app.require_subcommand(1);
  bool json_out = false;
  long seed = 0;
  app.add_flag("--json", json_out, "emit the report as JSON");
  app.add_option("--seed", seed, "accepted for interface stability; everything is deterministic");

  std::string path, q_str, gname, hname, base, out, out_pres, out_grad;
  std::string cat_path, grad_path, name_flag, src, tgt, mu, fun, cand, family_csv, group_spec;
  std::string example_name, emit_dir = ".";
  long cap = 1000000;
  bool run_all = false;
  int status = 0;
  auto emit = [&](const Report& R) {
    if (json_out)
      std::cout << R.json().dump(2) << "\n";
    else
      std::cout << R.text();
    status = R.exit_code();
  };

  auto add_model_arg = [&](CLI::App* c) {
    c->add_option("model", path, "model file (JSON)")->required();
    c->add_option("--q", q_str, "value for the coefficient parameter q");
  };

  CLI::App* cat = app.add_subcommand("cat", "presented category inspection");
  cat->require_subcommand(1);
  CLI::App* cat_info = cat->add_subcommand("info", "dimensions and named sections");
  add_model_arg(cat_info);
  cat_info->callback([&] { emit(cmd_cat_info(path, opt_q(q_str))); });
  CLI::App* cat_check = cat->add_subcommand("check", "validate every named object");
  add_model_arg(cat_check);
  cat_check->callback([&] { emit(cmd_cat_check(path, opt_q(q_str))); });

  CLI::App* grading = app.add_subcommand("grading", "grading validation and constructions");
  grading->require_subcommand(1);
  CLI::App* g_val = grading->add_subcommand("validate", "check homogeneity of composition");
  add_model_arg(g_val);
  g_val->add_option("--grading", gname, "grading name")->required();
  g_val->callback([&] { emit(cmd_grading_validate(path, opt_q(q_str), gname)); });
  CLI::App* g_con = grading->add_subcommand("connected", "closed-walk degree generation");
  add_model_arg(g_con);
  g_con->add_option("--grading", gname, "grading name")->required();
  g_con->add_option("--base", base, "base vertex (default: first)");
  g_con->callback([&] { emit(cmd_grading_connected(path, opt_q(q_str), gname, base)); });
  CLI::App* g_quo = grading->add_subcommand("quotient", "push a grading along a group map");
  add_model_arg(g_quo);
  g_quo->add_option("--grading", gname, "grading name")->required();
  g_quo->add_option("--hom", hname, "group map name")->required();
  g_quo->add_option("--out", out, "write the quotient grading to this file");
  g_quo->callback([&] { emit(cmd_grading_quotient(path, opt_q(q_str), gname, hname, out)); });

  CLI::App* schur = app.add_subcommand("schur", "one-dimensional generation analysis");
  schur->require_subcommand(1);
  CLI::App* s_an = schur->add_subcommand("analyze", "generation, constriction, partitions");
  add_model_arg(s_an);
  s_an->callback([&] { emit(cmd_schur_analyze(path, opt_q(q_str))); });
  CLI::App* s_un = schur->add_subcommand("universal", "universal grading construction");
  add_model_arg(s_un);
  s_un->add_option("--base", base, "base vertex (default: first)");
  s_un->add_option("--out-presentation", out_pres, "write the group presentation here");
  s_un->add_option("--out-grading", out_grad, "write the universal grading here");
  s_un->callback(
      [&] { emit(cmd_schur_universal(path, opt_q(q_str), base, out_pres, out_grad)); });

  CLI::App* smash = app.add_subcommand("smash", "smash product categories");
  smash->require_subcommand(1);
  CLI::App* sm_b = smash->add_subcommand("build", "build the smash product of a finite grading");
  sm_b->add_option("--category", cat_path, "model file holding the category")->required();
  sm_b->add_option("--grading", grad_path, "grading file (bare grading or model file)")
      ->required();
  sm_b->add_option("--out", out, "output smash file")->required();
  sm_b->add_option("--name", name_flag, "grading name when the grading file is a model file");
  sm_b->add_option("--q", q_str, "value for the coefficient parameter q");
  sm_b->callback(
      [&] { emit(cmd_smash_build(cat_path, grad_path, out, opt_q(q_str), name_flag)); });
  CLI::App* sm_v = smash->add_subcommand("verify", "star/Galois checks of a stored smash file");
  sm_v->add_option("smash_file", path, "smash file (JSON)")->required();
  sm_v->add_option("--q", q_str, "value for the coefficient parameter q");
  sm_v->callback([&] { emit(cmd_smash_verify(path, opt_q(q_str))); });

  CLI::App* morph = app.add_subcommand("morph", "morphisms of gradings");
  morph->require_subcommand(1);
  CLI::App* mo_v = morph->add_subcommand("verify", "verify a (group map, functor) witness pair");
  add_model_arg(mo_v);
  mo_v->add_option("--source", src, "source grading name")->required();
  mo_v->add_option("--target", tgt, "target grading name")->required();
  mo_v->add_option("--mu", mu, "group map name")->required();
  mo_v->add_option("--functor", fun, "witness functor name")->required();
  mo_v->add_option("--base", base, "base vertex (default: first)");
  mo_v->callback([&] { emit(cmd_morph_verify(path, opt_q(q_str), src, tgt, mu, fun, base)); });
  CLI::App* mo_f = morph->add_subcommand("fix", "subgroup fixed by all self-morphisms");
  add_model_arg(mo_f);
  mo_f->add_option("--grading", gname, "grading name")->required();
  mo_f->add_option("--base", base, "base vertex (default: first)");
  mo_f->callback([&] { emit(cmd_morph_fix(path, opt_q(q_str), gname, base)); });
  CLI::App* mo_u = morph->add_subcommand("universal-check",
                                         "morphism existence/uniqueness into a family");
  add_model_arg(mo_u);
  mo_u->add_option("--candidate", cand, "candidate source grading name")->required();
  mo_u->add_option("--family", family_csv,
                   "comma-separated grading names (default: all other gradings)");
  mo_u->add_option("--base", base, "base vertex (default: first)");
  mo_u->callback(
      [&] { emit(cmd_morph_universal(path, opt_q(q_str), cand, family_csv, base)); });

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive grading enumeration");
  CLI::App* or_e = oracle->add_subcommand("enumerate", "all connected gradings by a group");
  oracle->require_subcommand(1);
  add_model_arg(or_e);
  or_e->add_option("--group", group_spec, "target group, e.g. Z, C2, Z/4, ZxC2")->required();
  or_e->add_option("--cap", cap, "assignment budget");
  or_e->add_option("--base", base, "base vertex (default: first)");
  or_e->callback([&] { emit(cmd_oracle(path, opt_q(q_str), group_spec, cap, base)); });

  CLI::App* pi1 = app.add_subcommand("pi1", "presentation-homotopy groups");
  pi1->require_subcommand(1);
  CLI::App* p_p = pi1->add_subcommand("presentation", "group of the given presentation");
  add_model_arg(p_p);
  p_p->add_option("--base", base, "base vertex (default: first)");
  p_p->callback([&] { emit(cmd_pi1(path, opt_q(q_str), base)); });

  CLI::App* examples = app.add_subcommand("examples", "built-in example corpus");
  examples->require_subcommand(1);
  CLI::App* ex_r = examples->add_subcommand("run", "run expected-result suites");
  ex_r->add_option("name", example_name, "example name");
  ex_r->add_flag("--all", run_all, "run the whole corpus");
  ex_r->add_option("--q", q_str, "value for the coefficient parameter q (bq only)");
  ex_r->callback([&] {
    if (!run_all && example_name.empty())
      fail(ErrCode::Usage, "give an example name or --all; available: " + join(corpus_names()));
    std::vector<std::string> names =
        run_all ? corpus_names() : std::vector<std::string>{example_name};
    bool all_ok = true;
    Json arr = Json::array();
    for (size_t i = 0; i < names.size(); i++) {
      Report R = run_example(names[i], opt_q(q_str));
      all_ok = all_ok && R.all_pass();
      if (json_out)
        arr.push_back(R.json());
      else
        std::cout << (i ? "\n" : "") << R.text();
    }
    if (json_out) std::cout << (names.size() == 1 ? arr[0].dump(2) : arr.dump(2)) << "\n";
    status = all_ok ? 0 : 1;
  });
  CLI::App* ex_e = examples->add_subcommand("emit", "write the corpus files to disk");
  ex_e->add_option("--dir", emit_dir, "output directory (default: current)");
  ex_e->callback([&] {
    Report R;
    R.command = "examples emit";
    for (const CorpusEntry& e : example_corpus()) {
      std::string p = emit_dir + "/" + e.name + ".json";
      write_json_file(p, e.file);
      R.add("wrote " + p, true, e.summary);
    }
    emit(R);
  });

  try {
    app.parse(argc, argv);
    return status;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return (e.code == ErrCode::Usage || e.code == ErrCode::Schema) ? 2 : 1;
  }
}
