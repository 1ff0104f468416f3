#ifndef GRADECAT_QUIVER_HPP
#define GRADECAT_QUIVER_HPP

#include <string>
#include <vector>

#include "gradecat/errors.hpp"

namespace gradecat {

struct Arrow {
  std::string id;
  int src = 0, tgt = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string& name) const;  // throws UnknownBasisRef
  bool has_cycle() const;
  /* longest path length in an acyclic quiver */
  int longest_path() const;
};

/* Path a_k ... a_1 stored first-applied-first: seq[0] = a_1.  The empty
 * sequence is the identity path at `base`. */
struct Path {
  int base = 0;                 // source vertex (only used when seq is empty)
  std::vector<int> seq;         // arrow indices, order of application

  int length() const { return int(seq.size()); }
  int source(const Quiver& q) const { return seq.empty() ? base : q.arrows[seq.front()].src; }
  int target(const Quiver& q) const { return seq.empty() ? base : q.arrows[seq.back()].tgt; }
  bool operator==(const Path&) const = default;
};

/* first applied p, then q (so the result represents q o p) */
Path path_concat(const Quiver& qv, const Path& p, const Path& q);

std::string path_str(const Quiver& q, const Path& p);

/* Deterministic path order: by length, then lexicographically by the arrow
 * id strings in order of application. */
bool path_less(const Quiver& q, const Path& a, const Path& b);

/* All paths from `from` to `to` of length < max_len, in canonical order. */
std::vector<Path> enumerate_paths(const Quiver& q, int from, int to, int max_len);

}  // namespace gradecat

#endif
