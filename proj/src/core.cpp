#include "moonforge/core.hpp"

#include <bit>
#include <sstream>

#include <boost/integer/common_factor_rt.hpp>

#include "moonforge/errors.hpp"

namespace moonforge {

ScoreSequence ScoreSequence::from_integers(std::span<const std::int64_t> values) {
  std::vector<Rational> entries;
  entries.reserve(values.size());
  for (auto v : values) entries.emplace_back(v);
  return ScoreSequence(std::move(entries));
}

Rational ScoreSequence::sum() const {
  Rational total;
  for (const auto& e : entries_) total += e;
  return total;
}

bool ScoreSequence::all_integers() const {
  for (const auto& e : entries_) {
    if (!e.is_integer()) return false;
  }
  return true;
}

void ScoreSequence::require_nonnegative() const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].sign() < 0) {
      throw ValidationError("score " + std::to_string(i + 1) + " is negative (" +
                            entries_[i].str() + ")");
    }
  }
}

ScoreSequence ScoreSequence::parse_list(std::string_view text) {
  std::vector<Rational> entries;
  if (text.empty()) return ScoreSequence();
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    entries.push_back(Rational::parse(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ScoreSequence(std::move(entries));
}

std::string ScoreSequence::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ", ";
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

BigInt lcm_denominators(const ScoreSequence& seq) {
  BigInt m = 1;
  for (const auto& e : seq) m = boost::multiprecision::lcm(m, e.den());
  return m;
}

// --- Tournament -------------------------------------------------------------

Tournament::Builder::Builder(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

void Tournament::Builder::orient(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_ || u == v) {
    throw ValidationError("invalid edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                          ") for " + std::to_string(n_) + " vertices");
  }
  bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

Tournament Tournament::Builder::build() && { return Tournament(std::move(*this)); }

Tournament::Tournament(Builder&& b) : n_(b.n_), words_(b.words_), bits_(std::move(b.bits_)) {
  validate();
}

void Tournament::validate() const {
  for (std::size_t u = 0; u < n_; ++u) {
    if (has_edge(u, u)) throw ValidationError("tournament has a loop at vertex " + std::to_string(u + 1));
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (has_edge(u, v) == has_edge(v, u)) {
        throw ValidationError("pair {" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                              "} must carry exactly one orientation");
      }
    }
  }
}

Tournament Tournament::from_edges(std::size_t n,
                                  std::span<const std::pair<std::size_t, std::size_t>> edges) {
  if (edges.size() != binom2(n)) {
    throw ValidationError("expected " + std::to_string(binom2(n)) + " edges, got " +
                          std::to_string(edges.size()));
  }
  Builder b(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n || u == v) {
      throw ValidationError("invalid edge (" + std::to_string(u + 1) + ", " +
                            std::to_string(v + 1) + ")");
    }
    // A repeated pair would be silently re-oriented by orient().
    if ((b.bits_[u * b.words_ + v / 64] >> (v % 64)) & 1u ||
        (b.bits_[v * b.words_ + u / 64] >> (u % 64)) & 1u) {
      throw ValidationError("pair {" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                            "} listed twice");
    }
    b.orient(u, v);
  }
  return std::move(b).build();
}

Tournament Tournament::from_matrix(const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t n = adjacency.size();
  Builder b(n);
  for (std::size_t u = 0; u < n; ++u) {
    if (adjacency[u].size() != n) throw ValidationError("adjacency matrix is not square");
    for (std::size_t v = 0; v < n; ++v) {
      if (adjacency[u][v]) b.bits_[u * b.words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  return std::move(b).build();
}

std::size_t Tournament::out_degree(std::size_t u) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[u * words_ + w]);
  return d;
}

std::size_t Tournament::count_edges(std::size_t a_begin, std::size_t a_end, std::size_t b_begin,
                                    std::size_t b_end) const {
  std::size_t count = 0;
  for (std::size_t u = a_begin; u < a_end; ++u) {
    for (std::size_t v = b_begin; v < b_end; ++v) count += has_edge(u, v);
  }
  return count;
}

std::vector<std::pair<std::size_t, std::size_t>> Tournament::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(binom2(n_));
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) {
        out.emplace_back(u, v);
      } else {
        out.emplace_back(v, u);
      }
    }
  }
  return out;
}

ScoreSequence scores_of(const Tournament& t) {
  std::vector<Rational> s;
  s.reserve(t.n());
  for (std::size_t u = 0; u < t.n(); ++u) s.emplace_back(static_cast<std::int64_t>(t.out_degree(u)));
  return ScoreSequence(std::move(s));
}

// --- GeneralizedTournament -------------------------------------------------

GeneralizedTournament::GeneralizedTournament(std::size_t n, std::vector<Rational> weights)
    : n_(n), w_(std::move(weights)) {
  if (w_.size() != n_ * n_) {
    throw ValidationError("weight matrix has " + std::to_string(w_.size()) + " entries, expected " +
                          std::to_string(n_ * n_));
  }
  const Rational one(1);
  for (std::size_t i = 0; i < n_; ++i) {
    if (!weight(i, i).is_zero()) {
      throw ValidationError("diagonal weight at " + std::to_string(i + 1) + " is not zero");
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& w = weight(i, j);
      if (w.sign() < 0 || w > one) {
        throw ValidationError("weight (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                              ") = " + w.str() + " outside [0, 1]");
      }
      if (j > i && w + weight(j, i) != one) {
        throw ValidationError("weights of pair {" + std::to_string(i + 1) + ", " +
                              std::to_string(j + 1) + "} do not sum to 1");
      }
    }
  }
}

GeneralizedTournament GeneralizedTournament::from_tournament(const Tournament& t) {
  const std::size_t n = t.n();
  std::vector<Rational> w(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.has_edge(i, j)) w[i * n + j] = Rational(1);
    }
  }
  return GeneralizedTournament(n, std::move(w));
}

ScoreSequence GeneralizedTournament::scores() const {
  std::vector<Rational> s(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) s[i] += weight(i, j);
  }
  return ScoreSequence(std::move(s));
}

std::string to_string(WitnessKind kind) {
  return kind == WitnessKind::kSubsetDeficit ? "subset-deficit" : "full-sum-mismatch";
}

// --- errors ----------------------------------------------------------------

namespace {

std::string describe(const Witness& w) {
  std::ostringstream os;
  os << "sequence is not a score sequence: ";
  if (w.kind == WitnessKind::kFullSumMismatch) {
    os << "total differs from C(n,2) by " << w.deficit;
  } else {
    os << "indices {";
    for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i] + 1;
    os << "} fall short by " << w.deficit;
  }
  return os.str();
}

}  // namespace

InfeasibleError::InfeasibleError(Witness witness)
    : Error(describe(witness)), witness_(std::move(witness)) {}

BlowupTooLargeError::BlowupTooLargeError(BigInt vertices, std::size_t cap)
    : Error("blow-up needs " + vertices.str() + " vertices, cap is " +
            std::to_string(cap) + "; run perturb first to shrink denominators, or raise --cap"),
      vertices_(std::move(vertices)),
      cap_(cap) {}

}  // namespace moonforge
