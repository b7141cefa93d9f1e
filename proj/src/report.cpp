#include <cstdio>
#include <json.hpp>

#include "twocycles/verifier.hpp"

namespace twocycles {

namespace {

using Json = nlohmann::ordered_json;

Json digraph_json(const Digraph& g) {
  Json arcs = Json::array();
  for (auto [u, v] : g.arcs()) arcs.push_back({u, v});
  return Json{{"n", g.order()}, {"arcs", std::move(arcs)}};
}

Json record_json(const SequenceRecord& rec) {
  Json out;
  out["sequence"] = std::vector<int>(rec.sequence.terms().begin(), rec.sequence.terms().end());
  out["realizable"] = rec.realizable;
  out["vacuous"] = rec.vacuous;
  out["predicted_forces"] = rec.predicted_forces;
  out["forces_one_j"] = rec.forces_one_index ? Json(*rec.forces_one_index) : Json(nullptr);
  if (rec.certificate) {
    Json cert{{"r", rec.certificate->r}, {"s", rec.certificate->s}};
    cert["j"] = rec.certificate->j ? Json(*rec.certificate->j) : Json(nullptr);
    out["certificate"] = std::move(cert);
  } else {
    out["certificate"] = nullptr;
  }
  if (rec.vacuous || rec.partial) {
    out["enumeration_forces"] = nullptr;
  } else {
    out["enumeration_forces"] = rec.enumeration_forces;
  }
  out["counterexample"] = rec.counterexample ? digraph_json(*rec.counterexample) : Json(nullptr);
  out["stats"] = Json{{"nodes", rec.stats.nodes},
                      {"enumerated", rec.stats.enumerated},
                      {"pruned", rec.stats.pruned},
                      {"truncated", rec.stats.truncated}};
  out["disagree"] = rec.disagree;
  out["partial"] = rec.partial;
  return out;
}

std::string verdict(bool forces) { return forces ? "forces" : "not"; }

}  // namespace

std::string report_to_json(const VerificationReport& report) {
  Json doc;
  doc["kind"] = report.kind;
  doc["scope"] = Json{{"n_max", report.n_max}, {"k", report.k}, {"loops", report.loops}};
  doc["summary"] = Json{{"checked", report.summary.checked},
                        {"agree", report.summary.agree},
                        {"disagree", report.summary.disagree},
                        {"vacuous", report.summary.vacuous},
                        {"partial", report.summary.partial},
                        {"violations", report.summary.violations}};
  Json records = Json::array();
  for (const auto& rec : report.records) records.push_back(record_json(rec));
  doc["records"] = std::move(records);
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    violations.push_back(Json{{"sequence", v.sequence.to_string()},
                              {"r", v.r},
                              {"s", v.s},
                              {"deleted", v.deleted}});
  }
  doc["violations"] = std::move(violations);
  doc["ok"] = report.ok();
  doc["complete"] = report.complete();
  return doc.dump(2) + "\n";
}

std::string report_to_table(const VerificationReport& report, bool color, bool all_rows) {
  const char* green = color ? "\033[32m" : "";
  const char* red = color ? "\033[31m" : "";
  const char* yellow = color ? "\033[33m" : "";
  const char* reset = color ? "\033[0m" : "";

  std::string out;
  char line[256];
  const bool deletion = report.kind == "fact-deletion";
  if (deletion) {
    std::snprintf(line, sizeof line, "%s  n<=%d\n", report.kind.c_str(), report.n_max);
  } else {
    std::snprintf(line, sizeof line, "%s  n<=%d  k=%d  %s\n", report.kind.c_str(), report.n_max,
                  report.k, report.loops ? "loops" : "no-loops");
  }
  out += line;

  if (!report.records.empty()) {
    std::snprintf(line, sizeof line, "%-22s %-9s %-9s %-12s %12s %10s  %s\n", "sequence",
                  "predicate", "search", "certificate", "nodes", "pruned", "status");
    out += line;
    for (const auto& rec : report.records) {
      if (!all_rows && !rec.disagree && !rec.partial) continue;
      std::string cert = "-";
      if (rec.certificate) {
        cert = "(" + std::to_string(rec.certificate->r) + "," +
               std::to_string(rec.certificate->s) +
               (rec.certificate->j ? "," + std::to_string(*rec.certificate->j) : "") + ")";
      }
      std::string search = rec.vacuous ? "vacuous" : rec.partial ? "partial"
                                                                 : verdict(rec.enumeration_forces);
      std::string status;
      if (rec.vacuous) {
        status = std::string(yellow) + "unrealizable" + reset;
      } else if (rec.partial) {
        status = std::string(yellow) + "PARTIAL" + reset;
      } else if (rec.disagree) {
        status = std::string(red) + "DISAGREE" + reset;
      } else {
        status = std::string(green) + "ok" + reset;
      }
      std::snprintf(line, sizeof line, "%-22s %-9s %-9s %-12s %12llu %10llu  %s\n",
                    rec.sequence.to_string().c_str(), verdict(rec.predicted_forces).c_str(),
                    search.c_str(), cert.c_str(),
                    static_cast<unsigned long long>(rec.stats.nodes),
                    static_cast<unsigned long long>(rec.stats.pruned), status.c_str());
      out += line;
    }
  }
  for (const auto& v : report.violations) {
    std::snprintf(line, sizeof line, "%sVIOLATION%s %s is (%zu,%zu)-large but deleting term %zu is not\n",
                  red, reset, v.sequence.to_string().c_str(), v.r, v.s, v.deleted);
    out += line;
  }
  const auto& s = report.summary;
  const char* outcome = report.ok() ? (report.complete() ? "PASS" : "INCOMPLETE") : "FAIL";
  const char* tone = report.ok() && report.complete() ? green : red;
  if (deletion) {
    std::snprintf(line, sizeof line, "checked %zu deletions  violations %zu  (%.2fs)  %s%s%s\n",
                  s.checked, s.violations, report.wall_seconds, tone, outcome, reset);
    return out + line;
  }
  std::snprintf(line, sizeof line,
                "checked %zu  agree %zu  disagree %zu  vacuous %zu  partial %zu  violations %zu  "
                "(%.2fs)  %s%s%s\n",
                s.checked, s.agree, s.disagree, s.vacuous, s.partial, s.violations,
                report.wall_seconds, tone, outcome, reset);
  out += line;
  return out;
}

}  // namespace twocycles
