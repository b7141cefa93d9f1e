// Acceptance run: one line per criterion, exact verdicts, wall-clock limits
// enforced. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "twocycles/constructions.hpp"
#include "twocycles/cycle_search.hpp"
#include "twocycles/verifier.hpp"

using namespace twocycles;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::string summary_text(const VerificationReport& r) {
  return "checked=" + std::to_string(r.summary.checked) +
         " disagree=" + std::to_string(r.summary.disagree) +
         " partial=" + std::to_string(r.summary.partial) +
         " vacuous=" + std::to_string(r.summary.vacuous);
}

Outcome characterization_check(int n_max, int k) {
  const auto report = verify_theorem(n_max, k, true);
  return {report.summary.disagree == 0 && report.summary.partial == 0 &&
              report.summary.vacuous == 0,
          summary_text(report)};
}

Outcome construction_fidelity() {
  int instances = 0;
  for (int n = 1; n <= 9; ++n) {
    std::vector<int> expected(n);
    for (int i = 0; i < n; ++i) expected[i] = i + 1;
    const Digraph d = fig1(n);
    if (outdegree_sequence(d) != DegreeSequence(expected) || find_disjoint_cycles(d, 2)) {
      return {false, "fig1(" + std::to_string(n) + ") failed"};
    }
    ++instances;
  }
  for (int n = 1; n <= 9; ++n) {
    for (int s = 1; s <= n; ++s) {
      for (int r = 1; r <= s; ++r) {
        if (n < 2 * s - r + 2) continue;
        // The displayed sequence, spelled out block by block.
        std::vector<int> expected;
        for (int x = 0; x <= r - 2; ++x) expected.push_back(x);
        for (int x = r; x <= s - 1; ++x) expected.push_back(x);
        for (int c = 0; c < s - r + 3; ++c) expected.push_back(s + 1);
        for (int x = 2 * s - r + 2; x <= n - 1; ++x) expected.push_back(x);
        const Digraph d = fig2(n, r, s).digraph;
        if (outdegree_sequence(d) != DegreeSequence(expected) || find_disjoint_cycles(d, 2)) {
          return {false, "fig2(" + std::to_string(n) + "," + std::to_string(r) + "," +
                             std::to_string(s) + ") failed"};
        }
        ++instances;
      }
    }
  }
  return {true, "instances=" + std::to_string(instances)};
}

Outcome witness_soundness() {
  int witnesses = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& d : all_sequences(n, static_cast<int>(n))) {
      if (is_large(d)) continue;
      const auto w = realize_nonlarge(d);
      if (outdegree_sequence(w.digraph) != d || find_disjoint_cycles(w.digraph, 2)) {
        return {false, "witness for " + d.to_string() + " failed"};
      }
      ++witnesses;
    }
  }
  return {true, "non-large sequences=" + std::to_string(witnesses)};
}

Outcome oracle_equivalence() {
  constexpr int n = 4;
  int with_pair = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
    const Digraph d = oracle::from_code(n, code);
    const auto w = find_disjoint_cycles(d, 2);
    if (w.has_value() != oracle::has_k_disjoint(oracle::to_matrix(d), 2) ||
        (w && !is_valid_witness(d, *w))) {
      return {false, "mismatch on digraph code " + std::to_string(code)};
    }
    with_pair += w.has_value();
  }
  return {true, "digraphs=65536 with-two-disjoint=" + std::to_string(with_pair)};
}

Outcome fact_deletion() {
  const auto report = verify_fact_deletion(8);
  return {report.summary.violations == 0 && report.summary.checked > 0,
          "deletions=" + std::to_string(report.summary.checked) +
              " violations=" + std::to_string(report.summary.violations)};
}

Outcome predicate_consistency() {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& d : all_sequences(n, static_cast<int>(n))) {
      if (is_large(d).has_value() != is_large_exhaustive(d).has_value()) {
        return {false, "disagree on " + d.to_string()};
      }
      ++checked;
    }
  }
  return {true, "sequences=" + std::to_string(checked)};
}

Outcome intro_examples() {
  const auto report = adjudicate_intro_examples(true);
  if (report.records.size() != 2) return {false, "expected two records"};
  const auto& forcing = report.records[0];
  const auto& nonforcing = report.records[1];
  const bool pass = forcing.sequence == DegreeSequence{1, 3, 3, 3, 4, 4} &&
                    forcing.predicted_forces && forcing.enumeration_forces &&
                    !forcing.partial && nonforcing.sequence == DegreeSequence{1, 3, 3, 3, 3, 4} &&
                    !nonforcing.predicted_forces && nonforcing.counterexample &&
                    !nonforcing.partial && report.summary.disagree == 0;
  auto verdict = [](const SequenceRecord& r) {
    return r.sequence.to_string() + (r.predicted_forces ? " large" : " not-large") + "/" +
           (r.counterexample ? "counterexample" : "forces");
  };
  return {pass, verdict(forcing) + "; " + verdict(nonforcing)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "k=2 characterization, n<=4, loops", 60, [] { return characterization_check(4, 2); }},
      {"1s", "k=2 characterization stretch, n<=5, loops", 1800, [] { return characterization_check(5, 2); }},
      {"2", "k=1 characterization, n<=5, loops", 300, [] { return characterization_check(5, 1); }},
      {"3", "construction fidelity, n<=9", 60, construction_fidelity},
      {"4", "witness soundness, n<=7", 600, witness_soundness},
      {"5", "oracle equivalence on all 2^16 digraphs, n=4", 120, oracle_equivalence},
      {"6", "term deletion keeps largeness, n<=8", 10, fact_deletion},
      {"7", "canonical vs exhaustive largeness, n<=8", 10, predicate_consistency},
      {"8", "intro examples at n=6", 600, intro_examples},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = outcome.pass && in_time;
    failures += !pass;
    std::printf("[%s] criterion %-2s %-46s %8.3fs (limit %.0fs)  %s%s\n", pass ? "PASS" : "FAIL",
                c.id.c_str(), c.name.c_str(), seconds, c.limit_seconds, outcome.detail.c_str(),
                in_time ? "" : "  TIME LIMIT EXCEEDED");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
