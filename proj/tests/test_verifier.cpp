#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "twocycles/constructions.hpp"
#include "twocycles/cycle_search.hpp"
#include "twocycles/error.hpp"
#include "twocycles/verifier.hpp"

using namespace twocycles;

namespace {

std::vector<Digraph> collect(const DegreeSequence& d, bool loops) {
  std::vector<Digraph> out;
  enumerate_realizations(d, loops, [&](const Digraph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<std::string> sorted_renderings(const std::vector<Digraph>& graphs) {
  std::vector<std::string> out;
  for (const auto& g : graphs) out.push_back(render_edge_list(g));
  std::ranges::sort(out);
  return out;
}

}  // namespace

TEST_CASE("enumerate_realizations worked examples") {
  CHECK(collect({1, 1}, true).size() == 4);
  const auto empty = collect({0, 0, 0}, true);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0] == Digraph(3));
  const auto full = collect({2, 2}, true);
  REQUIRE(full.size() == 1);
  CHECK(full[0].arc_count() == 4);

  CHECK(collect({1, 1}, false).size() == 1);
  CHECK_THROWS_AS(collect({0, 2}, false), Error);
  CHECK_THROWS_AS(collect({0, 3}, true), Error);
  CHECK_THROWS_AS(count_realizations({0, 3}, true), Error);
}

TEST_CASE("enumerate_realizations matches the filter oracle and the product formula") {
  for (bool loops : {true, false}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (const auto& d : all_sequences(n, static_cast<int>(n))) {
        if (!is_realizable(d, loops)) continue;
        const auto mine = collect(d, loops);
        const auto theirs =
            oracle::realizations_by_filter({d.terms().begin(), d.terms().end()}, loops);
        REQUIRE(sorted_renderings(mine) == sorted_renderings(theirs));
        REQUIRE(mine.size() == count_realizations(d, loops));
        const auto rendered = sorted_renderings(mine);
        const std::set<std::string> distinct(rendered.begin(), rendered.end());
        REQUIRE(distinct.size() == mine.size());
      }
    }
  }
  CHECK(count_realizations({1, 3, 3, 3, 3}, true) == 5ULL * 10 * 10 * 10 * 10);
}

TEST_CASE("search_counterexample worked examples") {
  CHECK_FALSE(search_counterexample({1, 1}, 1, true).counterexample);

  const auto t3 = search_counterexample({0, 1, 2}, 1, false);
  REQUIRE(t3.counterexample);
  CHECK(*t3.counterexample == transitive_tournament(3));

  const auto fig = search_counterexample({1, 3, 3, 3, 3}, 2, true);
  REQUIRE(fig.counterexample);
  CHECK(outdegree_sequence(*fig.counterexample) == DegreeSequence{1, 3, 3, 3, 3});
  CHECK_FALSE(find_disjoint_cycles(*fig.counterexample, 2));

  CHECK_THROWS_AS(search_counterexample({0, 3}, 2, true), Error);
  CHECK_THROWS_AS(search_counterexample({0, 1}, 0, true), Error);
}

TEST_CASE("(0,2,2) forces a cycle in every realization") {
  CHECK(forces_one({0, 2, 2}) == 2U);
  for (const auto& g : collect({0, 2, 2}, true)) CHECK(find_cycle(g));
  CHECK_FALSE(search_counterexample({0, 2, 2}, 1, true).counterexample);
}

TEST_CASE("pruned and unpruned searches agree for n <= 3") {
  SearchOptions plain;
  plain.prune = false;
  for (int k = 1; k <= 2; ++k) {
    for (bool loops : {true, false}) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (const auto& d : all_sequences(n, static_cast<int>(n))) {
          if (!is_realizable(d, loops)) continue;
          const auto pruned = search_counterexample(d, k, loops);
          const auto full = search_counterexample(d, k, loops, plain);
          REQUIRE(pruned.counterexample.has_value() == full.counterexample.has_value());
          REQUIRE(full.stats.pruned == 0);
          if (!full.counterexample) REQUIRE(full.stats.enumerated == count_realizations(d, loops));
        }
      }
    }
  }
}

TEST_CASE("search verdicts match the brute-force oracle for n <= 4") {
  for (int k = 1; k <= 2; ++k) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const auto& d : all_sequences(n, static_cast<int>(n))) {
        bool forced = true;
        for (const auto& g :
             oracle::realizations_by_filter({d.terms().begin(), d.terms().end()}, true)) {
          forced = forced && oracle::has_k_disjoint(oracle::to_matrix(g), k);
        }
        REQUIRE(search_counterexample(d, k, true).counterexample.has_value() == !forced);
      }
    }
  }
}

TEST_CASE("node budget marks the result partial") {
  SearchOptions tight;
  tight.node_limit = 3;
  const auto result = search_counterexample({3, 3, 3, 3}, 2, true, tight);
  CHECK(result.stats.truncated);
  CHECK_FALSE(result.counterexample);
  const auto record = check_sequence({3, 3, 3, 3}, 2, true, tight);
  CHECK(record.partial);
  CHECK_FALSE(record.disagree);
}

TEST_CASE("verify_theorem small scopes") {
  const auto k1 = verify_theorem(3, 1, true);
  CHECK(k1.summary.checked == 28);
  CHECK(k1.summary.disagree == 0);
  CHECK(k1.summary.agree == 28);
  CHECK(k1.ok());

  const auto tiny = verify_theorem(1, 1, true);
  REQUIRE(tiny.records.size() == 2);
  CHECK(tiny.records[0].sequence == DegreeSequence{0});
  CHECK_FALSE(tiny.records[0].enumeration_forces);
  REQUIRE(tiny.records[0].counterexample);
  CHECK(tiny.records[0].counterexample->arc_count() == 0);
  CHECK(tiny.records[1].sequence == DegreeSequence{1});
  CHECK(tiny.records[1].enumeration_forces);
  CHECK(tiny.records[1].predicted_forces);

  const auto k2 = verify_theorem(4, 2, true);
  CHECK(k2.summary.disagree == 0);
  CHECK(k2.summary.partial == 0);
  for (const auto& rec : k2.records) {
    if (!rec.counterexample) continue;
    CHECK(outdegree_sequence(*rec.counterexample) == rec.sequence);
    CHECK_FALSE(find_disjoint_cycles(*rec.counterexample, 2));
  }
  CHECK_THROWS_AS(verify_theorem(0, 2, true), Error);
  CHECK_THROWS_AS(verify_theorem(3, 3, true), Error);
}

TEST_CASE("verify_theorem records are ordered and independent of job count") {
  VerifyOptions parallel;
  parallel.jobs = 3;
  const auto a = verify_theorem(4, 2, true);
  const auto b = verify_theorem(4, 2, true, parallel);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].sequence == b.records[i].sequence);
    CHECK(a.records[i].counterexample == b.records[i].counterexample);
  }
  for (std::size_t i = 1; i < a.records.size(); ++i) {
    const auto& prev = a.records[i - 1].sequence;
    const auto& cur = a.records[i].sequence;
    CHECK((prev.size() < cur.size() || (prev.size() == cur.size() && prev < cur)));
  }
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("no-loops regime flags unrealizable sequences as vacuous") {
  const auto report = verify_theorem(3, 2, false);
  CHECK(report.summary.vacuous > 0);
  for (const auto& rec : report.records) {
    CHECK(rec.vacuous == !is_realizable(rec.sequence, false));
    if (rec.vacuous) CHECK_FALSE(rec.disagree);
  }
}

TEST_CASE("verify_fact_deletion") {
  const auto report = verify_fact_deletion(5);
  CHECK(report.summary.violations == 0);
  CHECK(report.summary.checked > 0);
  CHECK(report.ok());
  CHECK_THROWS_AS(verify_fact_deletion(1), Error);
}

TEST_CASE("report rendering") {
  const auto report = verify_theorem(1, 1, true);
  const std::string json = report_to_json(report);
  CHECK(json.find("\"kind\": \"theorem\"") != std::string::npos);
  CHECK(json.find("wall") == std::string::npos);
  const std::string table = report_to_table(report, false, true);
  CHECK(table.find("PASS") != std::string::npos);
  CHECK(table.find("\033[") == std::string::npos);
}
