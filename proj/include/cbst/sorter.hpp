#pragma once

// Chain merge sort: a forward-only cursor merges two sorted chains with at
// most |X|+|Y| comparisons and one splice per moved element; the sort driver
// runs pairwise merge rounds over a table of run heads, carrying the odd
// tail into the next round. Stable: on equal keys X elements precede Y.

#include <cstdint>
#include <vector>

#include "cbst/chain.hpp"

namespace cbst {

struct MergeStats {
  std::uint64_t comparisons = 0;  // key order tests
  std::uint64_t splices = 0;      // node splice operations
};

enum class RunMode { natural_runs, singleton };

// Run table: each entry heads a sorted chain; entries partition the input.
using RunTable = std::vector<Chain>;

// Both inputs must be ascending (checked with assert in debug builds only).
// Consumes both chains; every node ends up in the result.
Chain merge_chains(Chain x, Chain y, MergeStats* stats = nullptr);

// One pass; splits into maximal non-descending runs whose concatenation in
// order is the input.
RunTable detect_runs(Chain input);

struct SortStats {
  std::uint64_t comparisons = 0;           // merge-phase key order tests
  std::uint64_t splices = 0;
  std::uint64_t run_scan_comparisons = 0;  // adjacent tests in run detection
  std::size_t initial_runs = 0;
  std::size_t rounds = 0;
};

// Pairwise merge rounds until one chain remains. Exposed because tree
// merging feeds its own run table through the same driver.
Chain merge_rounds(RunTable runs, SortStats* stats = nullptr);

Chain sort_chain(Chain input, RunMode mode = RunMode::natural_runs,
                 SortStats* stats = nullptr);

}  // namespace cbst
