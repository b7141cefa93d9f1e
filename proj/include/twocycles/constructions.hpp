#ifndef TWOCYCLES_CONSTRUCTIONS_HPP
#define TWOCYCLES_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "twocycles/digraph.hpp"
#include "twocycles/sequence.hpp"

namespace twocycles {

// T_n on labels 0..n-1 with i -> j for all i > j.
Digraph transitive_tournament(int n);

// T_{n-1} on labels 0..n-2 plus a looped hub n-1 joined to every tournament
// vertex by a 2-cycle. Outdegree sequence (1, 2, ..., n); every cycle passes
// through the hub. Requires n >= 1.
Digraph fig1(int n);

enum class Role { Green, Blue, RedCycle, Hub, Black };

const char* to_string(Role role);

// Vertex roles of the three-tournament construction. Labels are assigned
// block by block in the order green, blue, red cycle, hub, black, which
// also sorts the vertices by outdegree.
struct Fig2Layout {
  int n = 0;
  int r = 0;
  int s = 0;
  std::vector<Role> roles;

  int green_begin() const { return 0; }
  int blue_begin() const { return r - 1; }
  int red_begin() const { return s - 1; }
  int hub() const { return 2 * s - r + 1; }
  int black_begin() const { return 2 * s - r + 2; }
  int red_size() const { return s - r + 2; }
};

struct Fig2 {
  Digraph digraph;
  Fig2Layout layout;
};

// Requires 1 <= r <= s and n >= 2s-r+2; throws InvalidParameters otherwise.
//
//   green  T_{r-1}:      tournament arcs only
//   blue   T_{s-r}:      tournament arcs, -> green, -> hub
//   red    C_{s-r+2}:    cycle successor, -> blue, -> green, -> hub
//   hub    v:            -> red, -> green
//   black  T_{n-2s+r-2}: tournament arcs, -> green, blue, red and hub
//
// The outdegree sequence is (0..r-2, r..s-1, s+1 repeated s-r+3 times,
// 2s-r+2..n-1), and every cycle other than the red one meets both the red
// cycle and the hub.
Fig2 fig2(int n, int r, int s);

// The outdegree sequence fig2(n, r, s) is built to have, from the closed
// formula.
DegreeSequence fig2_sequence(int n, int r, int s);

std::string render_roles_json(const Fig2Layout& layout);

enum class WitnessCase { Fig1Trim, Fig2Trim };

struct NonlargeWitness {
  Digraph digraph;
  WitnessCase construction = WitnessCase::Fig1Trim;
  // Canonical (r*, s*) for the fig2 case; zero for fig1.
  int r = 0;
  int s = 0;
};

// A digraph realizing d with no two disjoint cycles. Throws
// ErrorKind::SequenceIsLarge if d is large and UnrealizableDegree if some
// d_i > n.
//
// If no s has d_s >= s+1 then d_i <= i throughout and fig1(n) dominates d
// position by position. Otherwise the canonical (r*, s*) pins
// d_{2s*-r*+2} = s*+1 and fig2(n, r*, s*) dominates d. Vertex i of the
// dominating construction is trimmed to d_{i+1} out-arcs; removing arcs
// cannot create cycles.
NonlargeWitness realize_nonlarge(const DegreeSequence& d);

}  // namespace twocycles

#endif
