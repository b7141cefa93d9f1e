#ifndef TWOCYCLES_DIGRAPH_HPP
#define TWOCYCLES_DIGRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twocycles/sequence.hpp"

namespace twocycles {

// Vertex subsets are 64-bit masks; bit v stands for vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline VertexMask all_vertices(int n) {
  return n >= kMaxVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

// Labeled digraph on vertices 0..n-1. Loops and antiparallel pairs are
// allowed, parallel arcs are not (the arc set is a set). Each vertex's
// out-neighbourhood is stored as one bit row.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int order() const noexcept { return static_cast<int>(rows_.size()); }

  bool has_arc(int u, int v) const { return (rows_[u] >> v) & 1U; }
  VertexMask out_row(int u) const { return rows_[u]; }
  int out_degree(int u) const { return std::popcount(rows_[u]); }
  bool has_loop(int u) const { return has_arc(u, u); }

  // Throws ErrorKind::DuplicateArc if present, VertexOutOfRange if u or v
  // is not a vertex.
  void add_arc(int u, int v);
  // Returns false if the arc was absent.
  bool remove_arc(int u, int v);
  // Replaces u's out-neighbourhood; bits outside the vertex set are rejected.
  void set_out_row(int u, VertexMask row);

  std::size_t arc_count() const;
  // Arcs in lexicographic order.
  std::vector<std::pair<int, int>> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexMask> rows_;
};

// A list of directed cycles. Each cycle lists its vertices in traversal
// order; a 1-element cycle is a loop.
struct CycleWitness {
  std::vector<std::vector<int>> cycles;

  std::size_t k() const noexcept { return cycles.size(); }
  VertexMask vertex_mask() const;

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

// True iff every cycle is nonempty and closed in `d`, and the cycles are
// pairwise vertex-disjoint (a vertex may not repeat inside a cycle either).
bool is_valid_witness(const Digraph& d, const CycleWitness& w);

DegreeSequence outdegree_sequence(const Digraph& d);

// Survivors are relabeled in increasing order of their old labels.
Digraph delete_vertices(const Digraph& d, std::span<const int> removed);

// No cycle of any length, loops included.
bool is_acyclic(const Digraph& d);
bool is_acyclic(const Digraph& d, VertexMask within);

// ---- text formats --------------------------------------------------------

enum class Format { EdgeList, Dot, Json };

Format parse_format(std::string_view name);

// Edge list: first line n, then one `u v` line per arc; `#` lines are
// comments and blank lines are skipped. Errors carry the 1-based line.
Digraph parse_digraph(std::string_view text);

std::string render_digraph(const Digraph& d, Format format);
std::string render_edge_list(const Digraph& d);
std::string render_dot(const Digraph& d);
std::string render_json(const Digraph& d);
std::string render_witness_json(const CycleWitness& w);

}  // namespace twocycles

#endif
