#pragma once

// Batch membership queries: a sorted query sequence is merged against the
// tree's axis in one forward co-walk (at most n + kappa comparisons), versus
// the traditional descent per query, versus a range-locked co-walk that
// first narrows the axis to the queries' key range with two descents.
// Also: k-way tree merging via chain extraction, merge rounds and a rebuild.

#include <cstdint>
#include <span>
#include <vector>

#include "cbst/tree.hpp"

namespace cbst {

enum class QueryMode { batch, traditional, range_locked };

struct QueryReport {
  QueryMode mode{};
  std::vector<bool> outcomes;  // per query, in input order; true = hit
  std::uint64_t comparisons = 0;
  std::uint64_t nodes_visited = 0;

  std::size_t hit_count() const {
    std::size_t h = 0;
    for (bool b : outcomes) h += b;
    return h;
  }
};

// queries must be non-descending (duplicates allowed; each occurrence
// reports independently). NotSortedError otherwise.
QueryReport batch_query(const Cbst& tree, std::span<const Key> queries);

// Independent root descent per query; input order is free.
QueryReport traditional_query(const Cbst& tree, std::span<const Key> queries);

// Two descents locate the axis span covering [min(queries), max(queries)];
// the co-walk then runs inside that span only.
QueryReport range_locked_batch(const Cbst& tree, std::span<const Key> queries);

struct TreeMergeStats {
  std::uint64_t comparisons = 0;  // merge rounds + disjointness scan
  std::size_t rounds = 0;
};

// Key sets must be pairwise disjoint (DuplicateKeyError otherwise). Consumes
// the inputs; the result is a freshly built pyramid over the union, in the
// first input's mode.
Cbst merge_trees(std::vector<Cbst> trees, TreeMergeStats* stats = nullptr);

}  // namespace cbst
