#include "twocycles/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

#include "twocycles/error.hpp"

namespace twocycles {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::IndexOutOfRange: return "index-out-of-range";
    case ErrorKind::CannotDeleteFromSingleton: return "cannot-delete-from-singleton";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::InvalidSequence: return "invalid-sequence";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::DuplicateArc: return "duplicate-arc";
    case ErrorKind::VertexOutOfRange: return "vertex-out-of-range";
    case ErrorKind::MalformedLine: return "malformed-line";
    case ErrorKind::TooManyVertices: return "too-many-vertices";
    case ErrorKind::InvalidParameters: return "invalid-parameters";
    case ErrorKind::SequenceIsLarge: return "sequence-is-large";
    case ErrorKind::UnrealizableDegree: return "unrealizable-degree";
    case ErrorKind::InvalidK: return "invalid-k";
  }
  return "unknown";
}

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) {
    throw Error(ErrorKind::InvalidSequence, "degree sequence must be nonempty");
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i] < 0) {
      throw Error(ErrorKind::InvalidSequence,
                  "negative term at position " + std::to_string(i + 1));
    }
    if (i > 0 && terms_[i] < terms_[i - 1]) {
      throw Error(ErrorKind::InvalidSequence,
                  "sequence decreases at position " + std::to_string(i + 1));
    }
  }
}

int DegreeSequence::at(std::size_t i) const {
  if (i < 1 || i > terms_.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(i) + " outside [1," +
                    std::to_string(terms_.size()) + "]");
  }
  return terms_[i - 1];
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(terms_[i]);
  }
  return out;
}

DegreeSequence parse_sequence(std::string_view text) {
  std::vector<int> terms;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
    const auto first = field.find_first_not_of(" \t\r\n");
    const auto last = field.find_last_not_of(" \t\r\n");
    const std::size_t position = terms.size() + 1;
    if (first == std::string_view::npos) {
      throw Error(ErrorKind::Parse,
                  "empty term at position " + std::to_string(position));
    }
    field = field.substr(first, last - first + 1);
    int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size() || value < 0) {
      throw Error(ErrorKind::Parse, "term '" + std::string(field) + "' at position " +
                                        std::to_string(position) +
                                        " is not a nonnegative integer");
    }
    if (!terms.empty() && value < terms.back()) {
      throw Error(ErrorKind::Parse,
                  "sequence decreases at position " + std::to_string(position) + " (" +
                      std::to_string(terms.back()) + " > " + std::to_string(value) + ")");
    }
    terms.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return DegreeSequence(std::move(terms));
}

bool is_realizable(const DegreeSequence& d, bool loops) {
  const long cap = static_cast<long>(d.size()) - (loops ? 0 : 1);
  return d[d.size()] <= cap;
}

namespace {

enum class ClauseB { Vacuous, Witnessed, Failed };

struct ClauseBResult {
  ClauseB status;
  std::size_t j = 0;
};

// Clause (b): if n >= 2s-r+2 and d_{2s-r+2} = s+1 then some j in [2s-r+3, n]
// has d_j >= j.
ClauseBResult evaluate_clause_b(const DegreeSequence& d, std::size_t r, std::size_t s) {
  const std::size_t n = d.size();
  const std::size_t pivot = 2 * s - r + 2;
  if (n < pivot || d[pivot] != static_cast<int>(s + 1)) return {ClauseB::Vacuous};
  for (std::size_t j = pivot + 1; j <= n; ++j) {
    if (d[j] >= static_cast<int>(j)) return {ClauseB::Witnessed, j};
  }
  return {ClauseB::Failed};
}

void check_pair(const DegreeSequence& d, std::size_t r, std::size_t s) {
  if (r < 1 || s > d.size() || r > s) {
    throw Error(ErrorKind::IndexOutOfRange,
                "need 1 <= r <= s <= n, got r=" + std::to_string(r) +
                    ", s=" + std::to_string(s) + ", n=" + std::to_string(d.size()));
  }
}

std::optional<LargenessCertificate> certify(const DegreeSequence& d, std::size_t r,
                                            std::size_t s) {
  if (d[r] < static_cast<int>(r) || d[s] < static_cast<int>(s + 1)) return std::nullopt;
  const ClauseBResult b = evaluate_clause_b(d, r, s);
  switch (b.status) {
    case ClauseB::Vacuous: return LargenessCertificate{r, s, std::nullopt};
    case ClauseB::Witnessed: return LargenessCertificate{r, s, b.j};
    case ClauseB::Failed: break;
  }
  return std::nullopt;
}

}  // namespace

bool is_rs_large(const DegreeSequence& d, std::size_t r, std::size_t s) {
  check_pair(d, r, s);
  return certify(d, r, s).has_value();
}

std::optional<LargenessCertificate> is_large(const DegreeSequence& d) {
  const std::size_t n = d.size();
  std::size_t s = 1;
  while (s <= n && d[s] < static_cast<int>(s + 1)) ++s;
  if (s > n) return std::nullopt;
  std::size_t r = 1;
  while (d[r] < static_cast<int>(r)) ++r;  // terminates: d_s >= s+1 > s
  return certify(d, r, s);
}

std::optional<LargenessCertificate> is_large_exhaustive(const DegreeSequence& d) {
  const std::size_t n = d.size();
  for (std::size_t s = 1; s <= n; ++s) {
    for (std::size_t r = 1; r <= s; ++r) {
      if (auto cert = certify(d, r, s)) return cert;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> forces_one(const DegreeSequence& d) {
  for (std::size_t j = 1; j <= d.size(); ++j) {
    if (d[j] >= static_cast<int>(j)) return j;
  }
  return std::nullopt;
}

ForcesTwo forces_two(const DegreeSequence& d) {
  auto cert = is_large(d);
  return {cert.has_value(), cert};
}

DegreeSequence delete_term(const DegreeSequence& d, std::size_t i) {
  if (d.size() < 2) {
    throw Error(ErrorKind::CannotDeleteFromSingleton,
                "cannot delete a term from a sequence of length 1");
  }
  if (i < 1 || i > d.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(i) + " outside [1," + std::to_string(d.size()) + "]");
  }
  std::vector<int> terms(d.terms().begin(), d.terms().end());
  terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return DegreeSequence(std::move(terms));
}

bool pointwise_leq(const DegreeSequence& d, const DegreeSequence& e) {
  if (d.size() != e.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "lengths differ: " + std::to_string(d.size()) + " vs " +
                    std::to_string(e.size()));
  }
  return std::ranges::equal(d.terms(), e.terms(), std::less_equal<>{});
}

std::vector<DegreeSequence> all_sequences(std::size_t n, int max_term) {
  std::vector<DegreeSequence> out;
  if (n == 0 || max_term < 0) return out;
  std::vector<int> terms(n, 0);
  while (true) {
    out.emplace_back(terms);
    // Odometer step keeping the sequence nondecreasing.
    std::size_t i = n;
    while (i > 0 && terms[i - 1] == max_term) --i;
    if (i == 0) break;
    const int next = terms[i - 1] + 1;
    std::fill(terms.begin() + static_cast<std::ptrdiff_t>(i - 1), terms.end(), next);
  }
  return out;
}

}  // namespace twocycles
