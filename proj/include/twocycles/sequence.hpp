#ifndef TWOCYCLES_SEQUENCE_HPP
#define TWOCYCLES_SEQUENCE_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twocycles {

// A nonempty, nondecreasing sequence of nonnegative integers d_1 <= ... <= d_n.
//
// Indices on this type's API are 1-based so that the boundary positions of
// the largeness definition (r, s, 2s-r+2, ...) read the same in code as in the
// mathematics. Terms are not bounded above; whether a digraph on n vertices
// can realize the sequence is a separate question (see is_realizable).
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> terms);
  DegreeSequence(std::initializer_list<int> terms)
      : DegreeSequence(std::vector<int>(terms)) {}

  std::size_t size() const noexcept { return terms_.size(); }

  // 1-based access; throws ErrorKind::IndexOutOfRange.
  int at(std::size_t i) const;
  // 1-based access without checking.
  int operator[](std::size_t i) const noexcept { return terms_[i - 1]; }

  std::span<const int> terms() const noexcept { return terms_; }

  std::string to_string() const;

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> terms_;
};

// Certifies (r,s)-largeness. `j` is present exactly when the conditional
// clause (b) was triggered, i.e. n >= 2s-r+2 and d_{2s-r+2} = s+1; it is then
// the smallest index in [2s-r+3, n] with d_j >= j.
struct LargenessCertificate {
  std::size_t r = 0;
  std::size_t s = 0;
  std::optional<std::size_t> j;

  friend bool operator==(const LargenessCertificate&,
                         const LargenessCertificate&) = default;
};

// Parses `1,3,3,3,3,5`. Whitespace around terms is ignored. Throws
// ErrorKind::Parse naming the offending (1-based) position.
DegreeSequence parse_sequence(std::string_view text);

// Every term fits in a digraph on n vertices: d_i <= n with loops, d_i <= n-1
// without.
bool is_realizable(const DegreeSequence& d, bool loops);

bool is_rs_large(const DegreeSequence& d, std::size_t r, std::size_t s);

// Canonical certificate: minimal s with d_s >= s+1, then minimal r <= s with
// d_r >= r, then minimal j.
std::optional<LargenessCertificate> is_large(const DegreeSequence& d);

// Ground truth over all O(n^2) pairs; returns the lexicographically smallest
// passing (s, r).
std::optional<LargenessCertificate> is_large_exhaustive(const DegreeSequence& d);

// Smallest j with d_j >= j. Present iff every realization contains a cycle.
std::optional<std::size_t> forces_one(const DegreeSequence& d);

struct ForcesTwo {
  bool forces = false;
  std::optional<LargenessCertificate> certificate;
};

// Present certificate iff every realization contains two disjoint cycles.
ForcesTwo forces_two(const DegreeSequence& d);

// Removes the 1-based term i.
DegreeSequence delete_term(const DegreeSequence& d, std::size_t i);

bool pointwise_leq(const DegreeSequence& d, const DegreeSequence& e);

// All nondecreasing sequences of length n with terms in [0, max_term], in
// lexicographic order.
std::vector<DegreeSequence> all_sequences(std::size_t n, int max_term);

}  // namespace twocycles

#endif
