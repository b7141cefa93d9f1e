#include "twocycles/constructions.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>

#include "twocycles/error.hpp"

namespace twocycles {

namespace {

void add_tournament(Digraph& d, int begin, int size) {
  for (int i = 1; i < size; ++i) {
    for (int j = 0; j < i; ++j) d.add_arc(begin + i, begin + j);
  }
}

void add_block(Digraph& d, int tail, int begin, int size) {
  for (int j = 0; j < size; ++j) d.add_arc(tail, begin + j);
}

// Removal order for trimming: lower class first, higher head label first
// within a class.
enum TrimClass {
  kIntoBlack = 0,
  kIntoGreen = 1,
  kIntoBlue = 2,
  kIntoRedOther = 3,
  kLoop = 4,
  kSuccessorOrHub = 5,
};

template <typename ClassOf>
void trim_to(Digraph& d, const DegreeSequence& target, ClassOf class_of) {
  for (int u = 0; u < d.order(); ++u) {
    int surplus = d.out_degree(u) - target[static_cast<std::size_t>(u) + 1];
    if (surplus <= 0) continue;
    std::vector<std::pair<int, int>> ranked;  // (class, -head)
    for (VertexMask row = d.out_row(u); row; row &= row - 1) {
      const int head = std::countr_zero(row);
      ranked.emplace_back(class_of(u, head), -head);
    }
    std::ranges::sort(ranked);
    for (int i = 0; i < surplus; ++i) d.remove_arc(u, -ranked[i].second);
  }
}

}  // namespace

Digraph transitive_tournament(int n) {
  if (n < 0) throw Error(ErrorKind::InvalidParameters, "tournament order must be >= 0");
  Digraph d(n);
  add_tournament(d, 0, n);
  return d;
}

Digraph fig1(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidParameters, "fig1 needs n >= 1");
  Digraph d(n);
  const int hub = n - 1;
  add_tournament(d, 0, n - 1);
  d.add_arc(hub, hub);
  for (int u = 0; u < hub; ++u) {
    d.add_arc(u, hub);
    d.add_arc(hub, u);
  }
  return d;
}

const char* to_string(Role role) {
  switch (role) {
    case Role::Green: return "green";
    case Role::Blue: return "blue";
    case Role::RedCycle: return "red-cycle";
    case Role::Hub: return "hub";
    case Role::Black: return "black";
  }
  return "unknown";
}

Fig2 fig2(int n, int r, int s) {
  if (r < 1 || r > s || n < 2 * s - r + 2) {
    throw Error(ErrorKind::InvalidParameters,
                "fig2 needs 1 <= r <= s and n >= 2s-r+2, got n=" + std::to_string(n) +
                    ", r=" + std::to_string(r) + ", s=" + std::to_string(s));
  }
  Fig2Layout layout{n, r, s, {}};
  const int green = r - 1;
  const int blue = s - r;
  const int red = layout.red_size();
  const int black = n - layout.black_begin();

  layout.roles.reserve(static_cast<std::size_t>(n));
  layout.roles.insert(layout.roles.end(), green, Role::Green);
  layout.roles.insert(layout.roles.end(), blue, Role::Blue);
  layout.roles.insert(layout.roles.end(), red, Role::RedCycle);
  layout.roles.push_back(Role::Hub);
  layout.roles.insert(layout.roles.end(), black, Role::Black);

  Digraph d(n);
  const int hub = layout.hub();

  add_tournament(d, layout.green_begin(), green);

  add_tournament(d, layout.blue_begin(), blue);
  for (int u = layout.blue_begin(); u < layout.blue_begin() + blue; ++u) {
    add_block(d, u, layout.green_begin(), green);
    d.add_arc(u, hub);
  }

  for (int i = 0; i < red; ++i) {
    const int u = layout.red_begin() + i;
    d.add_arc(u, layout.red_begin() + (i + 1) % red);
    add_block(d, u, layout.blue_begin(), blue);
    add_block(d, u, layout.green_begin(), green);
    d.add_arc(u, hub);
  }

  add_block(d, hub, layout.red_begin(), red);
  add_block(d, hub, layout.green_begin(), green);

  add_tournament(d, layout.black_begin(), black);
  for (int u = layout.black_begin(); u < n; ++u) {
    add_block(d, u, 0, layout.black_begin());
  }

  return {std::move(d), std::move(layout)};
}

DegreeSequence fig2_sequence(int n, int r, int s) {
  std::vector<int> terms;
  for (int x = 0; x <= r - 2; ++x) terms.push_back(x);
  for (int x = r; x <= s - 1; ++x) terms.push_back(x);
  terms.insert(terms.end(), static_cast<std::size_t>(s - r + 3), s + 1);
  for (int x = 2 * s - r + 2; x <= n - 1; ++x) terms.push_back(x);
  return DegreeSequence(std::move(terms));
}

std::string render_roles_json(const Fig2Layout& layout) {
  nlohmann::ordered_json doc;
  doc["n"] = layout.n;
  doc["r"] = layout.r;
  doc["s"] = layout.s;
  doc["hub"] = layout.hub();
  nlohmann::json roles = nlohmann::json::array();
  for (Role role : layout.roles) roles.push_back(to_string(role));
  doc["roles"] = std::move(roles);
  return doc.dump() + "\n";
}

NonlargeWitness realize_nonlarge(const DegreeSequence& d) {
  const int n = static_cast<int>(d.size());
  if (!is_realizable(d, true)) {
    throw Error(ErrorKind::UnrealizableDegree,
                "term " + std::to_string(d[d.size()]) + " exceeds n=" + std::to_string(n));
  }
  if (auto cert = is_large(d)) {
    throw Error(ErrorKind::SequenceIsLarge,
                "sequence is (" + std::to_string(cert->r) + "," + std::to_string(cert->s) +
                    ")-large; every realization has two disjoint cycles");
  }

  std::size_t s = 1;
  while (s <= d.size() && d[s] < static_cast<int>(s + 1)) ++s;

  if (s > d.size()) {
    Digraph g = fig1(n);
    const int hub = n - 1;
    trim_to(g, d, [hub](int tail, int head) {
      if (tail == head) return kLoop;
      if (head == hub) return kSuccessorOrHub;
      return kIntoBlack;
    });
    return {std::move(g), WitnessCase::Fig1Trim, 0, 0};
  }

  std::size_t r = 1;
  while (d[r] < static_cast<int>(r)) ++r;
  auto [g, layout] = fig2(n, static_cast<int>(r), static_cast<int>(s));
  const auto& roles = layout.roles;
  const int red_begin = layout.red_begin();
  const int red_size = layout.red_size();
  trim_to(g, d, [&](int tail, int head) {
    switch (roles[head]) {
      case Role::Black: return kIntoBlack;
      case Role::Green: return kIntoGreen;
      case Role::Blue: return kIntoBlue;
      case Role::Hub: return kSuccessorOrHub;
      case Role::RedCycle:
        if (roles[tail] == Role::RedCycle &&
            head == red_begin + (tail - red_begin + 1) % red_size) {
          return kSuccessorOrHub;
        }
        return kIntoRedOther;
    }
    return kIntoBlack;
  });
  return {std::move(g), WitnessCase::Fig2Trim, static_cast<int>(r), static_cast<int>(s)};
}

}  // namespace twocycles
