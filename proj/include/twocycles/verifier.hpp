#ifndef TWOCYCLES_VERIFIER_HPP
#define TWOCYCLES_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twocycles/digraph.hpp"
#include "twocycles/sequence.hpp"

namespace twocycles {

// Visits every labeled digraph in which vertex i has outdegree d_{i+1},
// each exactly once, until `visit` returns false. Out-neighbourhoods range
// over all subsets of the allowed heads (every vertex with loops, every
// other vertex without). Throws ErrorKind::UnrealizableDegree.
void enumerate_realizations(const DegreeSequence& d, bool loops,
                            const std::function<bool(const Digraph&)>& visit);

// prod_i C(m, d_i) with m = n (loops) or n-1.
std::uint64_t count_realizations(const DegreeSequence& d, bool loops);

struct SearchOptions {
  // Cut a branch as soon as the partial digraph already has k disjoint
  // cycles. Sound because completions only add arcs.
  bool prune = true;
  // Abort after this many search nodes; 0 means unlimited.
  std::uint64_t node_limit = 0;
};

struct SearchStats {
  std::uint64_t nodes = 0;        // partial assignments visited
  std::uint64_t enumerated = 0;   // complete realizations examined
  std::uint64_t pruned = 0;       // subtrees cut by the monotone test
  bool truncated = false;         // node_limit hit; verdict unknown
};

struct SearchResult {
  std::optional<Digraph> counterexample;
  SearchStats stats;
};

// A realization of d without k disjoint cycles, if one exists. Vertices are
// assigned from the highest label (largest outdegree) down.
SearchResult search_counterexample(const DegreeSequence& d, int k, bool loops,
                                   const SearchOptions& options = {});

struct SequenceRecord {
  DegreeSequence sequence{0};
  bool realizable = true;
  // Unrealizable sequences force anything vacuously; they are listed but
  // excluded from the agreement tally.
  bool vacuous = false;
  bool predicted_forces = false;
  std::optional<std::size_t> forces_one_index;
  std::optional<LargenessCertificate> certificate;
  // Meaningful only when !vacuous && !stats.truncated.
  bool enumeration_forces = false;
  std::optional<Digraph> counterexample;
  SearchStats stats;
  bool disagree = false;
  bool partial = false;
};

struct DeletionViolation {
  DegreeSequence sequence{0};
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t deleted = 0;
};

struct ReportSummary {
  std::size_t checked = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t vacuous = 0;
  std::size_t partial = 0;
  std::size_t violations = 0;
};

struct VerificationReport {
  std::string kind;  // "theorem", "fact-deletion" or "intro-examples"
  int n_max = 0;
  int k = 0;
  bool loops = true;
  std::vector<SequenceRecord> records;
  std::vector<DeletionViolation> violations;
  // Fact-deletion runs count (sequence, r, s, i) triples in summary.checked.
  ReportSummary summary;
  double wall_seconds = 0.0;

  bool ok() const { return summary.disagree == 0 && summary.violations == 0; }
  bool complete() const { return summary.partial == 0; }
};

struct VerifyOptions {
  SearchOptions search;
  unsigned jobs = 1;
};

// Checks one sequence: the predicate for k (forces_one / forces_two)
// against the counterexample search.
SequenceRecord check_sequence(const DegreeSequence& d, int k, bool loops,
                              const SearchOptions& options = {});

// Every nondecreasing sequence of length 1..n_max with terms in [0, n].
// Records are ordered by length, then lexicographically.
VerificationReport verify_theorem(int n_max, int k, bool loops,
                                  const VerifyOptions& options = {});

// Deleting any term keeps an (r,s)-large sequence (r,s)-large whenever
// s < n and d_n < n. Pure arithmetic over all lengths 2..n_max.
VerificationReport verify_fact_deletion(int n_max);

// Two n = 6 sequences one term apart, checked for k = 2: (1,3,3,3,4,4) is
// large, (1,3,3,3,3,4) is not.
VerificationReport adjudicate_intro_examples(bool loops, const SearchOptions& options = {});

std::string report_to_json(const VerificationReport& report);
// Rows are listed for disagreements and partial results only, unless
// `all_rows` is set.
std::string report_to_table(const VerificationReport& report, bool color, bool all_rows);

}  // namespace twocycles

#endif
