#pragma once

// Words in the free group on {a, b}, subgroup membership by Stallings
// folding, and the SL_2(Z) counterexamples built from a -> e_12(1),
// b -> e_21(N).

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "trueelem/matrix.hpp"

namespace trueelem {

struct Syllable {
  char letter;  // 'a' or 'b'
  long long exponent;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word stored as exponent runs: no zero exponents and no two
/// adjacent syllables on the same letter.
class FreeWord {
 public:
  FreeWord() = default;

  /// Parses "a b^4 a^-1" (whitespace-separated letters with optional ^exponent);
  /// "1" stands for the identity.
  static FreeWord parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  /// Total number of letters, sum of |exponent|.
  long long length() const;

  FreeWord inverse() const;
  std::string to_string() const;

  friend FreeWord operator*(const FreeWord& u, const FreeWord& v);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  friend FreeWord free_reduce(const std::vector<Syllable>& raw);
  std::vector<Syllable> syllables_;
};

/// Canonical reduced form of an arbitrary syllable sequence.
FreeWord free_reduce(const std::vector<Syllable>& raw);

/// Finite labeled graph with a basepoint. After fold() no vertex has two
/// outgoing or two incoming edges with the same label.
class SubgroupAutomaton {
 public:
  struct Edge {
    int from;
    char letter;
    int to;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  /// One loop at the basepoint per nonempty generator.
  static SubgroupAutomaton petal(const std::vector<FreeWord>& generators);

  /// Folds to completion. With a generator the edges are processed in a
  /// shuffled order; the result is the same up to isomorphism.
  void fold(std::mt19937_64* shuffle = nullptr);

  bool is_folded() const;
  bool accepts(const FreeWord& w) const;

  int basepoint() const { return 0; }
  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Basepoint-rooted breadth-first relabeling, rendered as a string; equal
  /// for isomorphic folded automata.
  std::string canonical_form() const;

 private:
  int vertex_count_ = 1;
  std::vector<Edge> edges_;
};

/// Decides whether w lies in the subgroup generated by `generators`.
bool stallings_member(const FreeWord& w, const std::vector<FreeWord>& generators);

/// a -> [[1,1],[0,1]], b -> [[1,0],[N,1]] over Z.
SqMatrix matrix_of_word(const FreeWord& w, const Integer& modulus_n);

struct CounterexampleReport {
  long long N;
  SqMatrix omega;
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks;
  std::string hypothesis;
  bool all_pass() const;
};

/// The two SL_2(Z) failures for N >= 4: E_2(N^2) is not inside F_2(N), and
/// F_2(N) is not normal in Delta_2(N).
CounterexampleReport counterexample_report(long long N);

}  // namespace trueelem
