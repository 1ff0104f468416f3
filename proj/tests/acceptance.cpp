/* End-to-end acceptance runner: one line per criterion, exit 1 on any
 * failure or time overrun.  Every check is exact arithmetic. */
#include <bit>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "gradecat/intmatrix.hpp"
#include "helpers.hpp"

using namespace gct;

namespace {

struct Checker {
  std::vector<std::string> fails;
  void check(bool ok, const std::string& what) {
    if (!ok) fails.push_back(what);
  }
};

void run_suite(Checker& ck, const std::string& name, const std::optional<Rat>& q) {
  Report r = run_example(name, q);
  for (const auto& v : r.verdicts)
    ck.check(v.pass, name + ": " + v.name + (v.detail.empty() ? "" : " (" + v.detail + ")"));
}

/* ---- criterion 5: smash products as coverings --------------------------- */

void smash_properties(Checker& ck) {
  // a trivial structural group reproduces the base category
  {
    ModelFile m = load_example("a3");
    const PresentedCategory& C = *m.category;
    Grading T = trivial_grading(C);  // must outlive the smash, which points into it
    SmashCategory S = build_smash(C, T);
    ck.check(S.nobj() == C.nv(), "trivial smash object count");
    bool dims = true;
    for (int s = 0; s < C.nv(); ++s)
      for (int t = 0; t < C.nv(); ++t)
        dims = dims && int(S.hom_at(S.obj(s, 0), S.obj(t, 0)).size()) == C.hom(s, t).dim();
    ck.check(dims, "trivial smash hom dimensions");
    ck.check(verify_covering(S).ok, "trivial smash star dimensions");
  }

  // the order-two grading of the nilpotent loop of order two
  {
    ModelFile m = load_example("kcp2");
    SmashCategory S = build_smash(*m.category, *m.grading("natural"));
    ck.check(S.nobj() == 2, "loop smash object count");
    size_t total = 0;
    for (const auto& cell : S.hom) total += cell.size();
    ck.check(total == 4, "loop smash total dimension");
    ck.check(verify_covering(S).ok, "loop smash star dimensions");
    GaloisCheck gc = galois_check(S);
    ck.check(gc.free_action, "loop smash free action");
    ck.check(gc.fiber_transitive, "loop smash fiber transitivity");
  }

  // two opposite C2 path gradings of the roundtrip category; the identity
  // group map between them is realized with a genuine fiber shift
  {
    ModelFile m = load_example("roundtrip");
    const PresentedCategory& C = *m.category;
    AbelianGroup C2 = AbelianGroup::cyclic(2);
    GroupElement g = gel_gen(C2, 0), z = gel_zero(C2);
    Grading X = path_basis_grading(C, C2, {z, g});
    Grading Y = path_basis_grading(C, C2, {g, z});
    SmashCategory SX = build_smash(C, X);
    SmashCategory SY = build_smash(C, Y);
    ck.check(SX.nobj() == 4, "roundtrip smash object count");
    ck.check(verify_covering(SX).ok && verify_covering(SY).ok,
             "roundtrip smash star dimensions");
    GaloisCheck gx = galois_check(SX);
    ck.check(gx.free_action && gx.fiber_transitive, "roundtrip smash deck action");

    Functor id = identity_functor(C);
    GroupHom idmu = GroupHom::identity(C2);
    CoveringMorphism M1 = covering_morphism(SX, SY, idmu, id, trivial_degree_connectors(X, 0));
    ck.check(M1.h[0] == z && M1.h[1] == g, "covering fiber shift");
    ck.check(lambda_map(M1, 0) == idmu, "covering group map recovery");
    CoveringMorphism M2 = covering_morphism(SY, SX, idmu, id, trivial_degree_connectors(Y, 0));
    CoveringMorphism M21 = compose_covering(M2, M1, id);
    ck.check(lambda_map(M21, 0) == hom_compose(lambda_map(M2, 0), lambda_map(M1, 0)),
             "covering composition is multiplicative on group maps");
    bool ident = M21.h[0] == z && M21.h[1] == z;
    for (int o = 0; o < SX.nobj(); ++o) ident = ident && M21.map_obj(o) == o;
    ck.check(ident, "opposite shifts cancel");
  }

  // arrow swap over the order-four quotient of the parallel-pair grading
  {
    ModelFile m = load_example("kronecker");
    const Grading* V = m.grading("V");
    AbelianGroup C4 = AbelianGroup::cyclic(4);
    GroupHom pi{V->group, C4, {gel_gen(C4, 0)}};
    Grading Vq = quotient_grading(*V, pi);
    SmashCategory S = build_smash(*m.category, Vq);
    GaloisCheck gc = galois_check(S);
    ck.check(gc.free_action && gc.fiber_transitive, "quotient smash deck action");
    GroupHom muInv{C4, C4, {gel_neg(C4, gel_gen(C4, 0))}};
    CoveringMorphism M =
        covering_morphism(S, S, muInv, *m.functor("swap"), trivial_degree_connectors(Vq, 0));
    ck.check(lambda_map(M, 0) == muInv, "induced covering realizes inversion");
  }
}

/* ---- criterion 6: randomized exact-arithmetic properties ----------------- */

void smith_properties(Checker& ck, std::mt19937& rng) {
  std::uniform_int_distribution<int> dim(1, 5), ent(-20, 20);
  for (int t = 0; t < 200; ++t) {
    IntMat A(dim(rng), dim(rng));
    for (auto& v : A.a) v = Int(ent(rng));
    SmithResult S = smith_normal_form(A);
    ck.check(imul(imul(S.U, A), S.V) == S.D, "diagonalization product");
    Int du = det(S.U), dv = det(S.V);
    ck.check(du == 1 || du == -1, "left factor unimodular");
    ck.check(dv == 1 || dv == -1, "right factor unimodular");
    bool diag = true;
    for (int i = 0; i < S.D.rows; ++i)
      for (int j = 0; j < S.D.cols; ++j)
        if (i != j && S.D.at(i, j) != 0) diag = false;
    ck.check(diag, "off-diagonal zero");
    std::vector<Int> d = S.diag();
    bool chain = true;
    for (size_t i = 0; i < d.size(); ++i) {
      if (d[i] < 0) chain = false;
      if (i + 1 < d.size()) {
        if (d[i] == 0 && d[i + 1] != 0) chain = false;
        if (d[i] != 0 && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) chain = false;
      }
    }
    ck.check(chain, "divisibility chain");
  }
}

void walk_properties(Checker& ck, std::mt19937& rng) {
  ModelFile m = load_example("bq", Rat(1));
  const Grading& X = m.need_grading("U");
  std::vector<BasisRef> edges = grading_edges(X);
  // incident steps per vertex (loops contribute both directions)
  int nv = m.category->nv();
  std::vector<std::vector<WalkStep>> inc{size_t(nv)};
  for (const BasisRef& e : edges) {
    inc[size_t(e.src)].push_back(WalkStep{e, +1});
    inc[size_t(e.tgt)].push_back(WalkStep{e, -1});
  }
  auto random_walk = [&](int start, int len) {
    Walk w;
    w.base = start;
    int at = start;
    for (int i = 0; i < len; ++i) {
      const auto& cand = inc[size_t(at)];
      const WalkStep& s = cand[rng() % cand.size()];
      w.steps.push_back(s);
      at = s.to();
    }
    return w;
  };
  std::uniform_int_distribution<int> startd(0, nv - 1), lend(0, 6);
  for (int t = 0; t < 120; ++t) {
    Walk a = random_walk(startd(rng), lend(rng));
    Walk b = random_walk(a.to(), lend(rng));
    GroupElement da = walk_degree(X, a), db = walk_degree(X, b);
    ck.check(walk_degree(X, walk_concat(a, b)) == gel_add(X.group, da, db),
             "walk degrees add along concatenation");
    ck.check(walk_degree(X, walk_inverse(a)) == gel_neg(X.group, da),
             "walk degree negates along reversal");
    Walk closed = walk_concat(a, walk_inverse(a));
    ck.check(gel_is_zero(X.group, walk_degree(X, closed)), "roundtrips have degree zero");
  }
}

void partition_properties(Checker& ck, std::mt19937& rng) {
  Field F = Field::rationals();
  std::uniform_int_distribution<int> ent(-3, 3);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + int(rng() % 5u);  // 2..6 coordinates
    int r0 = int(rng() % unsigned(n));
    QMat A(r0, n);
    for (auto& v : A.a) v = Rat(ent(rng));
    std::vector<int> pivots = rref(A, F);
    int r = A.rows;
    auto core = partition_core(n, A, pivots, F);

    // dim of the ideal's intersection with each coordinate subspace
    std::vector<int> capdim(size_t(1) << n, 0);
    for (unsigned S = 0; S < (1u << n); ++S) {
      int pc = std::popcount(S);
      QMat st(r + pc, n);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) st.at(i, j) = A.at(i, j);
      int row = r;
      for (int j = 0; j < n; ++j)
        if (S >> j & 1u) st.at(row++, j) = 1;
      capdim[S] = r + pc - rank(st, F);
    }
    auto mask_of = [](const std::vector<int>& block) {
      unsigned m = 0;
      for (int j : block) m |= 1u << j;
      return m;
    };
    auto splitting = [&](const std::vector<std::vector<int>>& blocks) {
      int total = 0;
      for (const auto& B : blocks) total += capdim[mask_of(B)];
      return total == r;
    };
    ck.check(splitting(core), "computed partition splits the ideal");
    std::vector<unsigned> core_masks;
    for (const auto& B : core) core_masks.push_back(mask_of(B));

    // every splitting partition is refined by the computed one; enumerate all
    // partitions of {0..n-1} as restricted growth strings
    std::vector<int> a(size_t(n), 0);
    bool finest = true;
    while (true) {
      int nb = 0;
      for (int v : a) nb = std::max(nb, v + 1);
      std::vector<std::vector<int>> blocks{size_t(nb)};
      for (int j = 0; j < n; ++j) blocks[size_t(a[size_t(j)])].push_back(j);
      if (splitting(blocks)) {
        for (unsigned cm : core_masks) {
          bool inside = false;
          for (const auto& B : blocks) {
            unsigned bm = mask_of(B);
            if ((cm & bm) == cm) inside = true;
          }
          if (!inside) finest = false;
        }
      }
      // next restricted growth string
      int i = n - 1;
      while (i > 0) {
        int mx = 0;
        for (int k = 0; k < i; ++k) mx = std::max(mx, a[size_t(k)]);
        if (a[size_t(i)] <= mx) break;
        --i;
      }
      if (i == 0) break;
      a[size_t(i)]++;
      for (int k = i + 1; k < n; ++k) a[size_t(k)] = 0;
    }
    ck.check(finest, "computed partition refines every splitting partition");
  }
}

void rerooting_properties(Checker& ck) {
  ModelFile m = load_example("kronecker");
  const Grading* V = m.grading("V");
  for (int b0 = 0; b0 < m.category->nv(); ++b0) {
    bool ok = true;
    try {
      verify_grading_morphism(*V, *V, *m.hom("negate"), *m.functor("swap"), b0);
    } catch (const Error&) {
      ok = false;
    }
    ck.check(ok, "morphism verdict at root " + std::to_string(b0));
    bool rejected = false;
    try {
      verify_grading_morphism(*V, *V, GroupHom::identity(V->group), *m.functor("swap"), b0);
    } catch (const Error&) {
      rejected = true;
    }
    ck.check(rejected, "non-morphism verdict at root " + std::to_string(b0));
  }
}

void randomized_properties(Checker& ck) {
  std::mt19937 rng(20260817u);
  smith_properties(ck, rng);
  walk_properties(ck, rng);
  partition_properties(ck, rng);
  rerooting_properties(ck);
}

}  // namespace

int main() {
  struct Criterion {
    std::string name;
    double limit_s;
    std::function<void(Checker&)> fn;
  };
  std::vector<Criterion> cs = {
      {"parameterized two-path family", 1.0,
       [](Checker& ck) { run_suite(ck, "bq", std::nullopt); }},
      {"parallel-pair gradings and quotient family", 2.0,
       [](Checker& ck) { run_suite(ck, "kronecker", std::nullopt); }},
      {"nilpotent loop gradings and their limit", 1.0,
       [](Checker& ck) {
         run_suite(ck, "kcp2", std::nullopt);
         run_suite(ck, "kcp3", std::nullopt);
       }},
      {"largest connected gradings vs exhaustive search", 10.0,
       [](Checker& ck) {
         run_suite(ck, "square", std::nullopt);
         run_suite(ck, "roundtrip", std::nullopt);
         run_suite(ck, "a3", std::nullopt);
       }},
      {"smash product coverings", 2.0, smash_properties},
      {"randomized exact-arithmetic properties", 15.0,
       [](Checker& ck) { randomized_properties(ck); }},
  };

  bool all_ok = true;
  double total = 0.0;
  for (size_t i = 0; i < cs.size(); ++i) {
    Checker ck;
    auto t0 = std::chrono::steady_clock::now();
    try {
      cs[i].fn(ck);
    } catch (const std::exception& e) {
      ck.fails.push_back(std::string("unexpected error: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    total += secs;
    if (secs > cs[i].limit_s)
      ck.fails.push_back("exceeded the " + std::to_string(cs[i].limit_s) + "s budget");
    bool ok = ck.fails.empty();
    all_ok = all_ok && ok;
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << cs[i].name
              << " (" << int(secs * 1000) << " ms)";
    if (!ok) std::cout << " -- " << ck.fails.size() << " failed; first: " << ck.fails.front();
    std::cout << "\n";
  }
  if (total > 30.0) {
    std::cout << "[FAIL] total runtime " << int(total * 1000) << " ms exceeds the 30s budget\n";
    all_ok = false;
  }
  return all_ok ? 0 : 1;
}
