#pragma once

// Crossover boundary calculators for batch vs per-query work. All
// logarithms are base 2.

#include <cstdint>
#include <optional>

#include "cbst/errors.hpp"

namespace cbst {

// Smallest k with 2^k >= n. n >= 1.
unsigned ceil_log2(std::uint64_t n);

// Query fraction above which a batch co-walk is predicted worthwhile:
// 1 / ceil(log2 n). DomainError for n < 2.
double crossover_lambda(std::size_t n);

// Tree-depth index: batch plus sorting the queries is predicted cheaper on
// trees at least this deep. hbar = 1/lambda + log2(2*lambda*n).
// DomainError unless 0 < lambda <= 1 and n >= 2.
double depth_index(std::size_t n, double lambda);

// Excess of the depth index over log2 n: 1 + 1/lambda - log2(1/lambda).
// Positive on all of (0,1], so the index always exceeds log2 n.
double depth_index_gap(double lambda);

// Locked-subqueue fraction boundary: lambda * log2(1/(2*lambda)) when
// positive; absent when <= 0 (range locking cannot pay off).
std::optional<double> theta_boundary(double lambda);

struct BoundaryParams {
  std::size_t n = 0;
  std::size_t kappa = 0;
  double lambda = 0.0;  // kappa / n
  double hbar = 0.0;
  std::optional<double> theta;
};

// Evaluates the boundary formulas for a concrete (tree size, query count)
// pair. Requires n >= 2 and 1 <= kappa <= n.
BoundaryParams boundary_params(std::size_t n, std::size_t kappa);

}  // namespace cbst
