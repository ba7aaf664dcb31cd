#pragma once

// Exhaustive searches over sign sequences packed one bit per entry (bit set
// means -1). NAF at lag k of a mask m of length v is
//   (v-k) - 2 popcount(((m >> k) ^ m) & low(v-k))
//     - (k - 2 popcount(((m >> (v-k)) ^ m) & low(k))).
// Work is split into fixed-prefix shards; shard results are merged in shard
// order so reports do not depend on the thread count.

#include <cstdint>
#include <string>
#include <vector>

#include "negadesigns/seqcore.hpp"

namespace negadesigns {

enum class SearchMode { Exists, All, Canonical };
enum class SearchVerdict { Found, Exhausted, BudgetExceeded };

std::string_view to_string(SearchMode m);
std::string_view to_string(SearchVerdict v);

struct SearchOptions {
  SearchMode mode = SearchMode::All;
  /// Candidate budget; 0 means unlimited. Whole shards are admitted in order
  /// while the running total stays within budget.
  std::uint64_t node_budget = 0;
  /// 0 means NEGADESIGNS_THREADS, else all cores.
  unsigned threads = 0;
  /// log2 of the shard count, clamped to the free bits.
  unsigned shard_bits = 8;
};

struct SearchReport {
  std::string target;
  SearchVerdict verdict = SearchVerdict::Exhausted;
  /// Each witness is a list of sequences: one row, or a pair.
  std::vector<std::vector<TernarySeq>> witnesses;
  std::uint64_t nodes = 0;
  std::uint64_t shards_run = 0;
  std::uint64_t shards_total = 0;
  double seconds = 0;

  std::string str() const;
};

unsigned default_thread_count();

/// Bit-parallel NAF of a packed sign mask.
long naf_mask(std::uint64_t mask, unsigned v, unsigned k);

/// NG-pairs (a, b) of length v, joining on NAF signatures over lags
/// 1..v/2-1. All and Exists report ordered pairs; Canonical reports one
/// canonical form per equivalence class.
SearchReport search_ng(std::size_t v, const SearchOptions& opt = {});

/// Rows a with NAF_a(k) = 0 for 0 < k < n. Rows with a_0 = -1 are the
/// negatives of rows with a_0 = +1 and are reported alongside them.
SearchReport search_negacyclic_hadamard(std::size_t n, const SearchOptions& opt = {});

/// Rows (0, c_1, ..., c_{n-1}) of negacyclic conference matrices, with
/// c_{n/2+1..n-1} fixed by the Belevitch symmetry.
SearchReport search_negacyclic_conference(std::size_t n, const SearchOptions& opt = {});

/// Ternary pairs of length n/2 and total weight w whose [A B; -B^T A^T]
/// with negacyclic blocks is a W(n, w).
SearchReport search_2n_weighing(std::size_t n, int w, const SearchOptions& opt = {});

}  // namespace negadesigns
