#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moonforge/rational.hpp"

namespace moonforge {

// Number of unordered pairs in a k-set, k(k-1)/2.
constexpr std::uint64_t binom2(std::uint64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

// Ordered list of rationals. Non-negativity is only enforced where the
// sequence is used as a score sequence (see require_nonnegative).
class ScoreSequence {
 public:
  ScoreSequence() = default;
  explicit ScoreSequence(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  ScoreSequence(std::initializer_list<Rational> entries) : entries_(entries) {}

  static ScoreSequence from_integers(std::span<const std::int64_t> values);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational sum() const;
  bool all_integers() const;

  // Throws ValidationError naming the first negative entry.
  void require_nonnegative() const;

  // Comma-separated rational tokens, e.g. "1/2,1/2,2". Empty text is the
  // empty sequence.
  static ScoreSequence parse_list(std::string_view text);
  std::string str() const;

  friend bool operator==(const ScoreSequence&, const ScoreSequence&) = default;

 private:
  std::vector<Rational> entries_;
};

// lcm of the entry denominators; 1 for the empty sequence.
BigInt lcm_denominators(const ScoreSequence& seq);

// Orientation of the complete graph on n vertices, stored as one bit per
// ordered pair. Vertices are 0-based.
class Tournament {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t n);
    // Orients the pair {u, v} as u -> v, replacing any earlier orientation.
    void orient(std::size_t u, std::size_t v);
    // Validates and freezes. Throws ValidationError if some pair is unset.
    Tournament build() &&;

   private:
    friend class Tournament;
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
  };

  Tournament() = default;

  // Each unordered pair must appear exactly once, in either direction.
  static Tournament from_edges(std::size_t n,
                               std::span<const std::pair<std::size_t, std::size_t>> edges);
  // adjacency[u][v] == true means u -> v. Validated.
  static Tournament from_matrix(const std::vector<std::vector<bool>>& adjacency);

  std::size_t n() const { return n_; }
  bool has_edge(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }
  std::size_t out_degree(std::size_t u) const;
  // Count of edges from vertices in [a_begin, a_end) to [b_begin, b_end).
  std::size_t count_edges(std::size_t a_begin, std::size_t a_end, std::size_t b_begin,
                          std::size_t b_end) const;

  // All edges u -> v, enumerated by u < v pair order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(Builder&& b);
  void validate() const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Score sequence of a tournament: row popcounts.
ScoreSequence scores_of(const Tournament& t);

// n x n matrix of rational weights with a zero diagonal, entries in [0, 1]
// and w(i,j) + w(j,i) = 1 off the diagonal.
class GeneralizedTournament {
 public:
  GeneralizedTournament() = default;
  // Row-major weights; validated.
  GeneralizedTournament(std::size_t n, std::vector<Rational> weights);

  static GeneralizedTournament from_tournament(const Tournament& t);

  std::size_t n() const { return n_; }
  const Rational& weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  const std::vector<Rational>& weights() const { return w_; }

  // Row sums.
  ScoreSequence scores() const;

  friend bool operator==(const GeneralizedTournament&, const GeneralizedTournament&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> w_;
};

enum class WitnessKind { kSubsetDeficit, kFullSumMismatch };

// Certificate that a sequence violates the score-sequence condition.
// indices are 0-based and sorted. For kSubsetDeficit the deficit is
// binom2(|indices|) - sum > 0; for kFullSumMismatch indices cover the whole
// sequence and deficit = binom2(n) - sum != 0.
struct Witness {
  std::vector<std::size_t> indices;
  Rational deficit;
  WitnessKind kind = WitnessKind::kSubsetDeficit;

  friend bool operator==(const Witness&, const Witness&) = default;
};

std::string to_string(WitnessKind kind);

}  // namespace moonforge
