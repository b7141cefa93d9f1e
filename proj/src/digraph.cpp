#include "twocycles/digraph.hpp"

#include <algorithm>

#include "twocycles/error.hpp"

namespace twocycles {

Digraph::Digraph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorKind::TooManyVertices,
                "vertex count " + std::to_string(n) + " outside [0," +
                    std::to_string(kMaxVertices) + "]");
  }
  rows_.assign(static_cast<std::size_t>(n), 0);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " outside [0," + std::to_string(order()) + ")");
  }
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  const VertexMask bit = VertexMask{1} << v;
  if (rows_[u] & bit) {
    throw Error(ErrorKind::DuplicateArc,
                "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
  }
  rows_[u] |= bit;
}

bool Digraph::remove_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  const VertexMask bit = VertexMask{1} << v;
  const bool present = rows_[u] & bit;
  rows_[u] &= ~bit;
  return present;
}

void Digraph::set_out_row(int u, VertexMask row) {
  check_vertex(u);
  if (row & ~all_vertices(order())) {
    throw Error(ErrorKind::VertexOutOfRange, "out-row names a vertex outside the digraph");
  }
  rows_[u] = row;
}

std::size_t Digraph::arc_count() const {
  std::size_t total = 0;
  for (VertexMask row : rows_) total += static_cast<std::size_t>(std::popcount(row));
  return total;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(arc_count());
  for (int u = 0; u < order(); ++u) {
    for (VertexMask row = rows_[u]; row; row &= row - 1) {
      out.emplace_back(u, std::countr_zero(row));
    }
  }
  return out;
}

VertexMask CycleWitness::vertex_mask() const {
  VertexMask mask = 0;
  for (const auto& cycle : cycles) {
    for (int v : cycle) mask |= VertexMask{1} << v;
  }
  return mask;
}

bool is_valid_witness(const Digraph& d, const CycleWitness& w) {
  VertexMask used = 0;
  for (const auto& cycle : w.cycles) {
    if (cycle.empty()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int u = cycle[i];
      const int v = cycle[(i + 1) % cycle.size()];
      if (u < 0 || u >= d.order()) return false;
      const VertexMask bit = VertexMask{1} << u;
      if (used & bit) return false;
      used |= bit;
      if (!d.has_arc(u, v)) return false;
    }
  }
  return true;
}

DegreeSequence outdegree_sequence(const Digraph& d) {
  std::vector<int> degrees(static_cast<std::size_t>(d.order()));
  for (int u = 0; u < d.order(); ++u) degrees[u] = d.out_degree(u);
  std::ranges::sort(degrees);
  if (degrees.empty()) {
    throw Error(ErrorKind::InvalidSequence, "the empty digraph has no outdegree sequence");
  }
  return DegreeSequence(std::move(degrees));
}

Digraph delete_vertices(const Digraph& d, std::span<const int> removed) {
  VertexMask gone = 0;
  for (int v : removed) {
    if (v < 0 || v >= d.order()) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "vertex " + std::to_string(v) + " outside [0," + std::to_string(d.order()) + ")");
    }
    gone |= VertexMask{1} << v;
  }
  std::vector<int> new_label(static_cast<std::size_t>(d.order()), -1);
  int next = 0;
  for (int v = 0; v < d.order(); ++v) {
    if (!((gone >> v) & 1U)) new_label[v] = next++;
  }
  Digraph out(next);
  for (auto [u, v] : d.arcs()) {
    if (new_label[u] >= 0 && new_label[v] >= 0) out.add_arc(new_label[u], new_label[v]);
  }
  return out;
}

bool is_acyclic(const Digraph& d, VertexMask within) {
  // Peel sinks of the induced subgraph until nothing changes.
  VertexMask alive = within & all_vertices(d.order());
  bool changed = true;
  while (alive && changed) {
    changed = false;
    for (VertexMask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!(d.out_row(v) & alive)) {
        alive &= ~(VertexMask{1} << v);
        changed = true;
      }
    }
  }
  return alive == 0;
}

bool is_acyclic(const Digraph& d) { return is_acyclic(d, all_vertices(d.order())); }

}  // namespace twocycles
