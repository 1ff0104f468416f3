#include "gradecat/quiver.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gradecat {

int Quiver::vertex_index(const std::string& name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return int(i);
  fail(ErrCode::UnknownBasisRef, "unknown vertex '" + name + "'");
}

bool Quiver::has_cycle() const {
  int n = int(vertices.size());
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (const Arrow& a : arrows)
      if (a.src == v) {
        if (state[a.tgt] == 1) return true;
        if (state[a.tgt] == 0 && dfs(a.tgt)) return true;
      }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

int Quiver::longest_path() const {
  if (has_cycle()) fail(ErrCode::BadBound, "longest path undefined on a cyclic quiver");
  int n = int(vertices.size());
  std::vector<int> memo(n, -1);
  std::function<int(int)> dfs = [&](int v) {
    if (memo[v] >= 0) return memo[v];
    int best = 0;
    for (const Arrow& a : arrows)
      if (a.src == v) best = std::max(best, 1 + dfs(a.tgt));
    return memo[v] = best;
  };
  int best = 0;
  for (int v = 0; v < n; ++v) best = std::max(best, dfs(v));
  return best;
}

Path path_concat(const Quiver& qv, const Path& p, const Path& q) {
  if (p.target(qv) != q.source(qv))
    fail(ErrCode::NotComposable, "path endpoints do not chain");
  Path r;
  r.base = p.source(qv);
  r.seq = p.seq;
  r.seq.insert(r.seq.end(), q.seq.begin(), q.seq.end());
  return r;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.seq.empty()) return "e_" + q.vertices[p.base];
  std::string s;  // written right-to-left, outermost arrow first
  for (auto it = p.seq.rbegin(); it != p.seq.rend(); ++it) {
    if (!s.empty()) s += ".";
    s += q.arrows[*it].id;
  }
  return s;
}

bool path_less(const Quiver& q, const Path& a, const Path& b) {
  if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
  for (size_t i = 0; i < a.seq.size(); ++i) {
    const std::string& x = q.arrows[a.seq[i]].id;
    const std::string& y = q.arrows[b.seq[i]].id;
    if (x != y) return x < y;
  }
  return false;
}

std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_len) {
  // grow by length; within a length, extension order follows the canonical
  // path order, so the result is already sorted
  std::vector<int> arrow_order(q.arrows.size());
  for (size_t i = 0; i < arrow_order.size(); ++i) arrow_order[i] = int(i);
  std::stable_sort(arrow_order.begin(), arrow_order.end(),
                   [&](int a, int b) { return q.arrows[a].id < q.arrows[b].id; });
  std::vector<Path> out;
  std::vector<Path> frontier;
  Path e;
  e.base = from;
  frontier.push_back(e);
  for (int len = 0; len < max_len; ++len) {
    for (const Path& p : frontier)
      if (p.target(q) == to) out.push_back(p);
    if (len + 1 >= max_len) break;
    std::vector<Path> next;
    for (const Path& p : frontier)
      for (int ai : arrow_order)
        if (q.arrows[ai].src == p.target(q)) {
          Path np = p;
          np.seq.push_back(ai);
          next.push_back(np);
        }
    // re-sort: extending lexicographically smaller prefixes first is not
    // enough because the new arrow sits at the END of the sequence
    std::stable_sort(next.begin(), next.end(),
                     [&](const Path& a, const Path& b) { return path_less(q, a, b); });
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

}  // namespace gradecat
