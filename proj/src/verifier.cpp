#include "twocycles/verifier.hpp"

#include <atomic>
#include <algorithm>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "twocycles/cycle_search.hpp"
#include "twocycles/error.hpp"

namespace twocycles {

namespace {

inline VertexMask bit(int v) { return VertexMask{1} << v; }

void require_realizable(const DegreeSequence& d, bool loops) {
  if (d.size() > 62) {
    throw Error(ErrorKind::TooManyVertices, "enumeration supports at most 62 vertices");
  }
  if (!is_realizable(d, loops)) {
    throw Error(ErrorKind::UnrealizableDegree,
                "term " + std::to_string(d[d.size()]) + " exceeds the " +
                    (loops ? "n" : "n-1") + " cap for n=" + std::to_string(d.size()));
  }
}

// Iterates the `size`-element subsets of {0..width-1} in increasing order
// (Gosper's hack).
class SubsetCursor {
 public:
  SubsetCursor(int width, int size)
      : limit_(VertexMask{1} << width), current_((VertexMask{1} << size) - 1) {}

  bool valid() const { return current_ < limit_; }
  VertexMask value() const { return current_; }

  void advance() {
    if (current_ == 0) {
      current_ = limit_;
      return;
    }
    const VertexMask t = current_ | (current_ - 1);
    current_ = (t + 1) | (((~t & (0 - ~t)) - 1) >> (std::countr_zero(current_) + 1));
  }

 private:
  VertexMask limit_;
  VertexMask current_;
};

// Maps an (n-1)-bit subset onto the heads other than `self`.
inline VertexMask skip_self(VertexMask subset, int self) {
  const VertexMask low = subset & (bit(self) - 1);
  const VertexMask high = (subset >> self) << (self + 1);
  return low | high;
}

class CounterexampleSearch {
 public:
  CounterexampleSearch(const DegreeSequence& d, int k, bool loops, const SearchOptions& options)
      : d_(d), k_(k), loops_(loops), options_(options), graph_(static_cast<int>(d.size())) {}

  SearchResult run() {
    const int n = graph_.order();
    descend(n - 1, 0);
    SearchResult result;
    result.stats = stats_;
    if (found_) result.counterexample = graph_;
    return result;
  }

 private:
  // Assigns out-neighbourhoods to vertices v, v-1, ..., 0. Returns false to
  // unwind (found or truncated).
  bool descend(int v, VertexMask assigned) {
    if (v < 0) {
      ++stats_.enumerated;
      if (!has_disjoint_cycles(graph_, k_, assigned)) {
        found_ = true;
        return false;
      }
      return true;
    }
    const int n = graph_.order();
    const int width = loops_ ? n : n - 1;
    const VertexMask now_assigned = assigned | bit(v);
    for (SubsetCursor cursor(width, d_[static_cast<std::size_t>(v) + 1]); cursor.valid();
         cursor.advance()) {
      if (options_.node_limit && stats_.nodes >= options_.node_limit) {
        stats_.truncated = true;
        graph_.set_out_row(v, 0);
        return false;
      }
      ++stats_.nodes;
      graph_.set_out_row(v, loops_ ? cursor.value() : skip_self(cursor.value(), v));
      if (options_.prune && v > 0 && has_disjoint_cycles(graph_, k_, now_assigned)) {
        ++stats_.pruned;
        continue;
      }
      if (!descend(v - 1, now_assigned)) return false;
    }
    graph_.set_out_row(v, 0);
    return true;
  }

  const DegreeSequence& d_;
  int k_;
  bool loops_;
  SearchOptions options_;
  Digraph graph_;
  SearchStats stats_;
  bool found_ = false;
};

bool predicted_forcing(const DegreeSequence& d, int k, SequenceRecord& record) {
  record.forces_one_index = forces_one(d);
  record.certificate = is_large(d);
  if (k == 1) return record.forces_one_index.has_value();
  if (k == 2) return record.certificate.has_value();
  throw Error(ErrorKind::InvalidK, "predicates exist for k = 1 and k = 2 only");
}

void tally(VerificationReport& report) {
  ReportSummary& sum = report.summary;
  for (const SequenceRecord& rec : report.records) {
    ++sum.checked;
    if (rec.vacuous) {
      ++sum.vacuous;
    } else if (rec.partial) {
      ++sum.partial;
    } else if (rec.disagree) {
      ++sum.disagree;
    } else {
      ++sum.agree;
    }
  }
}

}  // namespace

void enumerate_realizations(const DegreeSequence& d, bool loops,
                            const std::function<bool(const Digraph&)>& visit) {
  require_realizable(d, loops);
  const int n = static_cast<int>(d.size());
  const int width = loops ? n : n - 1;
  Digraph g(n);
  std::function<bool(int)> fill = [&](int v) {
    if (v == n) return visit(g);
    for (SubsetCursor cursor(width, d[static_cast<std::size_t>(v) + 1]); cursor.valid();
         cursor.advance()) {
      g.set_out_row(v, loops ? cursor.value() : skip_self(cursor.value(), v));
      if (!fill(v + 1)) return false;
    }
    g.set_out_row(v, 0);
    return true;
  };
  fill(0);
}

std::uint64_t count_realizations(const DegreeSequence& d, bool loops) {
  require_realizable(d, loops);
  const std::uint64_t m = d.size() - (loops ? 0 : 1);
  std::uint64_t total = 1;
  for (int term : d.terms()) {
    std::uint64_t choose = 1;
    for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(term); ++i) {
      choose = choose * (m - i) / (i + 1);
    }
    total *= choose;
  }
  return total;
}

SearchResult search_counterexample(const DegreeSequence& d, int k, bool loops,
                                   const SearchOptions& options) {
  if (k < 1) throw Error(ErrorKind::InvalidK, "k must be at least 1, got " + std::to_string(k));
  require_realizable(d, loops);
  return CounterexampleSearch(d, k, loops, options).run();
}

SequenceRecord check_sequence(const DegreeSequence& d, int k, bool loops,
                              const SearchOptions& options) {
  SequenceRecord record;
  record.sequence = d;
  record.predicted_forces = predicted_forcing(d, k, record);
  record.realizable = is_realizable(d, loops);
  if (!record.realizable) {
    record.vacuous = true;
    record.enumeration_forces = true;
    return record;
  }
  SearchResult result = search_counterexample(d, k, loops, options);
  record.stats = result.stats;
  if (result.stats.truncated) {
    record.partial = true;
    return record;
  }
  if (result.counterexample) {
    const Digraph& g = *result.counterexample;
    if (outdegree_sequence(g) != d || find_disjoint_cycles(g, k)) {
      throw std::logic_error("counterexample for " + d.to_string() + " fails revalidation");
    }
  }
  record.counterexample = std::move(result.counterexample);
  record.enumeration_forces = !record.counterexample.has_value();
  record.disagree = record.enumeration_forces != record.predicted_forces;
  return record;
}

VerificationReport verify_theorem(int n_max, int k, bool loops, const VerifyOptions& options) {
  if (n_max < 1) throw Error(ErrorKind::InvalidParameters, "n_max must be at least 1");
  if (k != 1 && k != 2) throw Error(ErrorKind::InvalidK, "verification covers k = 1 and k = 2");
  const auto started = std::chrono::steady_clock::now();

  std::vector<DegreeSequence> work;
  for (int n = 1; n <= n_max; ++n) {
    auto batch = all_sequences(static_cast<std::size_t>(n), n);
    work.insert(work.end(), batch.begin(), batch.end());
  }

  VerificationReport report;
  report.kind = "theorem";
  report.n_max = n_max;
  report.k = k;
  report.loops = loops;
  report.records.resize(work.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      try {
        report.records[i] = check_sequence(work[i], k, loops, options.search);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  tally(report);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

VerificationReport verify_fact_deletion(int n_max) {
  if (n_max < 2) throw Error(ErrorKind::InvalidParameters, "n_max must be at least 2");
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.kind = "fact-deletion";
  report.n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    const auto un = static_cast<std::size_t>(n);
    for (const DegreeSequence& d : all_sequences(un, n - 1)) {
      for (std::size_t s = 1; s < un; ++s) {
        for (std::size_t r = 1; r <= s; ++r) {
          if (!is_rs_large(d, r, s)) continue;
          for (std::size_t i = 1; i <= un; ++i) {
            ++report.summary.checked;
            if (!is_rs_large(delete_term(d, i), r, s)) {
              report.violations.push_back({d, r, s, i});
            }
          }
        }
      }
    }
  }
  report.summary.violations = report.violations.size();
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

VerificationReport adjudicate_intro_examples(bool loops, const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report;
  report.kind = "intro-examples";
  report.n_max = 6;
  report.k = 2;
  report.loops = loops;
  for (const DegreeSequence& d : {DegreeSequence{1, 3, 3, 3, 4, 4},
                                  DegreeSequence{1, 3, 3, 3, 3, 4}}) {
    report.records.push_back(check_sequence(d, 2, loops, options));
  }
  tally(report);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace twocycles
