#include "twocycles/cycle_search.hpp"

#include <algorithm>

#include "twocycles/error.hpp"

namespace twocycles {

namespace {

inline VertexMask bit(int v) { return VertexMask{1} << v; }

// Masks strictly above v.
inline VertexMask above(int v) { return v >= 63 ? 0 : ~VertexMask{0} << (v + 1); }

// Vertices of D[within] lying on a cycle or leading into one: the residue
// after repeatedly peeling sinks.
VertexMask cyclic_core(const Digraph& d, VertexMask within) {
  VertexMask alive = within;
  bool changed = true;
  while (alive && changed) {
    changed = false;
    for (VertexMask rest = alive; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!(d.out_row(v) & alive)) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

// Depth-first extension of induced paths rooted at `start`. `path` holds the
// current path, `forbidden` the vertices a new path vertex must not touch.
class ChordlessWalker {
 public:
  ChordlessWalker(const Digraph& d, VertexMask within,
                  const std::function<bool(const std::vector<int>&)>& visit)
      : d_(d), within_(within), visit_(visit) {
    // Reverse rows so "w -> p" tests are single mask lookups.
    in_rows_.assign(static_cast<std::size_t>(d.order()), 0);
    for (int u = 0; u < d.order(); ++u) {
      for (VertexMask row = d.out_row(u) & within; row; row &= row - 1) {
        in_rows_[std::countr_zero(row)] |= bit(u);
      }
    }
  }

  bool run() {
    for (VertexMask rest = within_; rest; rest &= rest - 1) {
      const int start = std::countr_zero(rest);
      if (d_.has_loop(start)) {
        path_.assign(1, start);
        if (!visit_(path_)) return false;
        continue;  // every longer cycle through start has the loop as chord
      }
      path_.assign(1, start);
      if (!extend(start, within_ & above(start), 0)) return false;
    }
    return true;
  }

 private:
  // `candidates`: vertices still usable. `interior`: path vertices other
  // than the start and the current end.
  bool extend(int start, VertexMask candidates, VertexMask interior) {
    const int end = path_.back();
    VertexMask next = d_.out_row(end) & candidates;
    for (; next; next &= next - 1) {
      const int w = std::countr_zero(next);
      if (d_.has_loop(w)) continue;
      // w must not receive an arc from the start (unless it follows it
      // directly) or from any interior vertex, and must not point back into
      // the path except, possibly, to close at the start.
      const VertexMask path_no_start = interior | (path_.size() > 1 ? bit(end) : 0);
      if (d_.out_row(w) & path_no_start) continue;
      if (in_rows_[w] & interior) continue;
      if (path_.size() > 1 && d_.has_arc(start, w)) continue;

      path_.push_back(w);
      bool keep_going = true;
      if (d_.has_arc(w, start)) {
        keep_going = visit_(path_);
      } else {
        const VertexMask grown_interior = path_.size() > 2 ? interior | bit(end) : interior;
        keep_going = extend(start, candidates & ~bit(w), grown_interior);
      }
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Digraph& d_;
  VertexMask within_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<VertexMask> in_rows_;
  std::vector<int> path_;
};

std::vector<int> walk_to_cycle(const Digraph& d, VertexMask core) {
  // Every core vertex has an out-neighbour in the core; walk until a repeat.
  std::vector<int> order_seen(static_cast<std::size_t>(d.order()), -1);
  std::vector<int> walk;
  int v = std::countr_zero(core);
  while (order_seen[v] < 0) {
    order_seen[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = std::countr_zero(d.out_row(v) & core);
  }
  std::vector<int> cycle(walk.begin() + order_seen[v], walk.end());
  std::ranges::rotate(cycle, std::ranges::min_element(cycle));
  return cycle;
}

bool search(const Digraph& d, int k, VertexMask within, CycleWitness* out) {
  within = cyclic_core(d, within);
  if (!within) return false;
  if (k == 1) {
    if (out) out->cycles.push_back(walk_to_cycle(d, within));
    return true;
  }
  bool found = false;
  for_each_chordless_cycle(d, within, [&](const std::vector<int>& cycle) {
    VertexMask used = 0;
    for (int v : cycle) used |= bit(v);
    const VertexMask rest = within & ~used & above(cycle.front());
    if (std::popcount(rest) < k - 1) return true;
    if (search(d, k - 1, rest, out)) {
      if (out) out->cycles.insert(out->cycles.begin(), cycle);
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace

std::optional<std::vector<int>> find_cycle_in(const Digraph& d, VertexMask within) {
  const VertexMask core = cyclic_core(d, within & all_vertices(d.order()));
  if (!core) return std::nullopt;
  return walk_to_cycle(d, core);
}

std::optional<CycleWitness> find_cycle(const Digraph& d) {
  auto cycle = find_cycle_in(d, all_vertices(d.order()));
  if (!cycle) return std::nullopt;
  return CycleWitness{{std::move(*cycle)}};
}

bool for_each_chordless_cycle(const Digraph& d, VertexMask within,
                              const std::function<bool(const std::vector<int>&)>& visit) {
  ChordlessWalker walker(d, within & all_vertices(d.order()), visit);
  return walker.run();
}

std::vector<std::vector<int>> enumerate_chordless_cycles(const Digraph& d) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> keyed;
  for_each_chordless_cycle(d, all_vertices(d.order()), [&](const std::vector<int>& c) {
    std::vector<int> key = c;
    std::ranges::sort(key);
    keyed.emplace_back(std::move(key), c);
    return true;
  });
  std::ranges::sort(keyed);
  std::vector<std::vector<int>> out;
  out.reserve(keyed.size());
  for (auto& [key, cycle] : keyed) out.push_back(std::move(cycle));
  return out;
}

std::optional<CycleWitness> find_disjoint_cycles(const Digraph& d, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidK, "k must be at least 1, got " + std::to_string(k));
  CycleWitness witness;
  if (!search(d, k, all_vertices(d.order()), &witness)) return std::nullopt;
  return witness;
}

bool has_disjoint_cycles(const Digraph& d, int k, VertexMask within) {
  if (k < 1) throw Error(ErrorKind::InvalidK, "k must be at least 1, got " + std::to_string(k));
  return search(d, k, within & all_vertices(d.order()), nullptr);
}

}  // namespace twocycles
